#include "gemkit/genus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gemkit/error.hpp"

namespace gemkit {

CyclicPermutation::CyclicPermutation(std::vector<Color> order) : order_(std::move(order)) {
  const int d = static_cast<int>(order_.size()) - 1;
  if (d < 1) throw GemError(ErrorCode::invalid_argument, "permutation needs at least two colors");
  std::vector<Color> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= d; ++i)
    if (sorted[i] != i) throw GemError(ErrorCode::invalid_argument, "not a permutation of 0.." + std::to_string(d));
  if (order_.back() != d)
    throw GemError(ErrorCode::invalid_argument, "the last entry must be the color " + std::to_string(d));
}

std::vector<CyclicPermutation> CyclicPermutation::enumerate(int dim) {
  std::vector<Color> head(dim);
  std::iota(head.begin(), head.end(), 0);
  std::vector<CyclicPermutation> out;
  do {
    auto order = head;
    order.push_back(dim);
    out.emplace_back(std::move(order));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

CyclicPermutation CyclicPermutation::reversed() const {
  std::vector<Color> order(order_.rbegin() + 1, order_.rend());
  order.push_back(order_.back());
  return CyclicPermutation(std::move(order));
}

namespace {

void check_dims(const ColoredGraph& g, const CyclicPermutation& eps) {
  if (g.dim() < 2) throw GemError(ErrorCode::dimension, "regular genus needs dim >= 2");
  if (eps.dim() != g.dim())
    throw GemError(ErrorCode::dimension, "permutation of " + std::to_string(eps.dim() + 1) +
                                             " colors for a gem with " + std::to_string(g.color_count()));
}

long chi_from(const ColoredGraph& g, const CyclicPermutation& eps, const VertexStats& s) {
  const int d = g.dim();
  long sum = 0;
  for (int i = 0; i <= d; ++i) sum += cycle_count(g, eps[i], eps[(i + 1) % (d + 1)]);
  return sum + static_cast<long>(1 - d) * s.p_dot + static_cast<long>(2 - d) * s.p_bar;
}

int holes_from(const std::optional<BoundaryGraph>& boundary, const CyclicPermutation& eps) {
  if (!boundary) return 0;
  return boundary->cycles(eps[0], eps[eps.dim() - 1]);
}

}  // namespace

long euler_characteristic(const ColoredGraph& g, const CyclicPermutation& eps) {
  check_dims(g, eps);
  return chi_from(g, eps, vertex_stats(g));
}

int holes(const ColoredGraph& g, const CyclicPermutation& eps) {
  check_dims(g, eps);
  if (!g.has_boundary()) return 0;
  return holes_from(boundary_graph(g), eps);
}

HalfInteger regular_genus_for(const ColoredGraph& g, const CyclicPermutation& eps) {
  return HalfInteger::from_twice(2 - euler_characteristic(g, eps) - holes(g, eps));
}

std::vector<GenusRow> GenusReport::distinct_rows() const {
  std::vector<GenusRow> out;
  for (const auto& row : rows) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const GenusRow& r) {
      return r.chi == row.chi && r.holes == row.holes;
    });
    if (!seen) out.push_back(row);
  }
  std::stable_sort(out.begin(), out.end(), [](const GenusRow& a, const GenusRow& b) { return a.rho < b.rho; });
  return out;
}

GenusReport regular_genus(const ColoredGraph& g) {
  if (g.dim() < 2) throw GemError(ErrorCode::dimension, "regular genus needs dim >= 2");
  const VertexStats stats = vertex_stats(g);
  std::optional<BoundaryGraph> boundary;
  if (g.has_boundary()) boundary = boundary_graph(g);
  auto perms = CyclicPermutation::enumerate(g.dim());
  std::vector<GenusRow> rows;
  rows.reserve(perms.size());
  for (auto& eps : perms) {
    GenusRow row{eps, chi_from(g, eps, stats), holes_from(boundary, eps), {}};
    row.rho = HalfInteger::from_twice(2 - row.chi - row.holes);
    rows.push_back(std::move(row));
  }
  // Rows are lexicographic, so the first strict minimum is the tie-break.
  auto best = std::min_element(rows.begin(), rows.end(),
                               [](const GenusRow& a, const GenusRow& b) { return a.rho < b.rho; });
  return GenusReport{rows, best->rho, best->eps};
}

}  // namespace gemkit
