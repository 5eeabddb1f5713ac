#pragma once

#include <numeric>
#include <vector>

namespace gemkit::detail {

// Union by size with path halving.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), sets_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  int set_count() const { return sets_; }

  // Dense labels ordered by smallest member.
  std::vector<int> labels() {
    const int n = static_cast<int>(parent_.size());
    std::vector<int> root_label(n, -1), out(n);
    int next = 0;
    for (int v = 0; v < n; ++v) {
      int r = find(v);
      if (root_label[r] < 0) root_label[r] = next++;
      out[v] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

}  // namespace gemkit::detail
