#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gemkit {

using Vertex = std::int32_t;
using Color = int;

inline constexpr Vertex kNoPartner = -1;
inline constexpr int kMaxDim = 15;

using VertexPair = std::pair<Vertex, Vertex>;
using EdgeList = std::vector<VertexPair>;

/// Subset of the color set {0, ..., d}, stored as a bit mask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<Color> colors);

  /// {0, ..., dim}.
  static constexpr ColorSet all(int dim) { return ColorSet((1u << (dim + 1)) - 1u); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Color c) const { return (bits_ >> c) & 1u; }
  constexpr ColorSet with(Color c) const { return ColorSet(bits_ | (1u << c)); }
  constexpr ColorSet without(Color c) const { return ColorSet(bits_ & ~(1u << c)); }
  int size() const;
  std::vector<Color> colors() const;
  /// Concatenated digits for small color sets ("013"), comma-separated when
  /// a color exceeds 9.
  std::string label() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class Connectivity { required, allow_disconnected };

/// A (d+1)-colored multigraph that is regular with respect to color d:
/// colors 0..d-1 are perfect matchings, color d is a partial matching whose
/// uncovered vertices are the boundary vertices. Immutable once built.
class ColoredGraph {
 public:
  /// Validates and builds a gem from per-color edge lists. Throws GemError
  /// naming the first violated invariant.
  static ColoredGraph from_matchings(int dim, int vertex_count, const std::vector<EdgeList>& matchings,
                                     Connectivity connectivity = Connectivity::required);

  /// Same contract, from partner tables (`partners[c][v]`, kNoPartner when v
  /// has no c-edge).
  static ColoredGraph from_partners(int dim, std::vector<std::vector<Vertex>> partners,
                                    Connectivity connectivity = Connectivity::required);

  int dim() const { return dim_; }
  int color_count() const { return dim_ + 1; }
  int vertex_count() const { return static_cast<int>(partners_.empty() ? 0 : partners_[0].size()); }

  Vertex partner(Color c, Vertex v) const { return partners_[c][v]; }
  bool has_edge(Color c, Vertex v) const { return partners_[c][v] != kNoPartner; }
  bool is_boundary_vertex(Vertex v) const { return partners_[dim_][v] == kNoPartner; }
  bool has_boundary() const;
  bool is_connected() const { return connected_; }

  /// Edges of one color as (a, b) with a < b, sorted.
  EdgeList edges(Color c) const;
  std::vector<EdgeList> matchings() const;
  const std::vector<std::vector<Vertex>>& partner_table() const { return partners_; }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.dim_ == b.dim_ && a.partners_ == b.partners_;
  }

 private:
  ColoredGraph(int dim, std::vector<std::vector<Vertex>> partners, bool connected)
      : dim_(dim), partners_(std::move(partners)), connected_(connected) {}

  int dim_ = 0;
  std::vector<std::vector<Vertex>> partners_;
  bool connected_ = true;
};

struct VertexStats {
  int p = 0;      // half the vertex count
  int p_bar = 0;  // half the number of boundary vertices
  int p_dot = 0;  // p - p_bar
};

VertexStats vertex_stats(const ColoredGraph& g);

/// Component label per vertex of the residue keeping only `colors`.
/// Components are numbered in order of their smallest vertex.
std::vector<int> residue_components(const ColoredGraph& g, ColorSet colors);

/// Number of connected components of the residue on `colors`; isolated
/// vertices count as components.
int residue_count(const ColoredGraph& g, ColorSet colors);

/// Number of {i,j}-residues that are closed alternating cycles.
int cycle_count(const ColoredGraph& g, Color i, Color j);

bool is_bipartite(const ColoredGraph& g);

/// Every residue on all colors but one is connected.
bool is_contracted(const ColoredGraph& g);

/// Residue without color d is connected and every residue without color
/// c < d has exactly h components, h the boundary component count.
/// Throws CLOSED_GRAPH on a closed gem.
bool is_boundary_contracted(const ColoredGraph& g);

struct Census {
  int dim = 0;
  VertexStats stats;
  std::map<ColorSet, int> residue_counts;            // every subset of {0..d}
  std::map<std::pair<Color, Color>, int> cycle_counts;  // i < j

  int g(std::initializer_list<Color> colors) const { return residue_counts.at(ColorSet(colors)); }
  int cycles(Color i, Color j) const {
    return cycle_counts.at(i < j ? std::pair{i, j} : std::pair{j, i});
  }
};

Census census(const ColoredGraph& g);

struct BoundaryGraph {
  ColoredGraph graph;                // dim d-1, possibly disconnected
  std::vector<Vertex> parent_vertex;  // boundary index -> vertex of the parent gem
  std::vector<int> component_ids;     // boundary index -> component
  int h = 0;
  std::map<std::pair<Color, Color>, int> cycle_counts;  // ∂g_ij, i < j < d

  int cycles(Color i, Color j) const {
    return cycle_counts.at(i < j ? std::pair{i, j} : std::pair{j, i});
  }
  /// Vertices of component k, ascending (boundary indices).
  std::vector<Vertex> component_vertices(int k) const;
  /// Component k as a standalone closed gem, vertices relabeled densely.
  ColoredGraph component_graph(int k) const;
};

/// Throws CLOSED_GRAPH when there are no boundary vertices and DIMENSION
/// when d < 2.
BoundaryGraph boundary_graph(const ColoredGraph& g);

/// Number of boundary components, 0 for a closed gem.
int boundary_component_count(const ColoredGraph& g);

struct ComplexSummary {
  std::vector<long> f_vector;  // f_0 .. f_d
  long euler_characteristic = 0;
  long vertex_count_of_complex = 0;
  int h = 0;
  long crystallization_vertex_target = 0;  // d * max(1, h) + 1
  bool crystallization_vertex_condition = false;
};

ComplexSummary complex_summary(const ColoredGraph& g);

}  // namespace gemkit
