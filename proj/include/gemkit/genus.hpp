#pragma once

#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/half_integer.hpp"

namespace gemkit {

/// An ordering (e_0, ..., e_d) of all colors whose last entry is d, read
/// cyclically.
class CyclicPermutation {
 public:
  /// Throws INVALID_ARGUMENT unless `order` is a permutation of 0..d ending
  /// in d.
  explicit CyclicPermutation(std::vector<Color> order);

  /// All d! permutations with e_d = d, lexicographic.
  static std::vector<CyclicPermutation> enumerate(int dim);

  int dim() const { return static_cast<int>(order_.size()) - 1; }
  Color operator[](int i) const { return order_[i]; }
  const std::vector<Color>& order() const { return order_; }
  CyclicPermutation reversed() const;

  friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
  friend auto operator<=>(const CyclicPermutation&, const CyclicPermutation&) = default;

 private:
  std::vector<Color> order_;
};

/// Euler characteristic of the surface F_e of the regular embedding:
/// sum of C over cyclically consecutive color pairs + (1-d) p_dot + (2-d) p_bar.
long euler_characteristic(const ColoredGraph& g, const CyclicPermutation& eps);

/// Number of {e_0, e_{d-1}}-colored cycles of the boundary graph (0 when closed).
int holes(const ColoredGraph& g, const CyclicPermutation& eps);

/// 1 - chi_e / 2 - lambda_e / 2.
HalfInteger regular_genus_for(const ColoredGraph& g, const CyclicPermutation& eps);

struct GenusRow {
  CyclicPermutation eps;
  long chi = 0;
  int holes = 0;
  HalfInteger rho;
};

struct GenusReport {
  std::vector<GenusRow> rows;  // one per permutation, lexicographic
  HalfInteger rho;             // minimum over rows
  CyclicPermutation argmin;    // lexicographically first minimizer

  /// Distinct (chi, holes, rho) values in ascending rho order.
  std::vector<GenusRow> distinct_rows() const;
};

/// Evaluates every permutation with e_d = d. Requires dim >= 2.
GenusReport regular_genus(const ColoredGraph& g);

}  // namespace gemkit
