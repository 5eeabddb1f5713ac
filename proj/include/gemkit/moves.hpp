#pragma once

#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

/// How connected_sum treats a color carried by exactly one of the two
/// removed vertices (only the boundary color d can be missing).
enum class WeldMode {
  strict,         // COLOR_MISMATCH
  open_boundary,  // the lone partner becomes a boundary vertex
};

struct SumResult {
  ColoredGraph graph;
  std::vector<Vertex> first_map;   // vertex of g1 -> vertex of the sum, kNoPartner for v1
  std::vector<Vertex> second_map;  // vertex of g2 -> vertex of the sum, kNoPartner for v2
  std::vector<Color> unwelded_colors;
  std::vector<std::string> warnings;
};

/// Removes v1 and v2 and joins their former c-partners by a c-edge for every
/// color c both carry. Vertices of g1 come first, then those of g2, each in
/// their original order. Throws DISCONNECTED when a neighbour joined to v1 or
/// v2 by d colors gets welded into a block of its own.
SumResult connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2,
                        WeldMode mode = WeldMode::strict);

struct DipoleSite {
  Vertex x = 0;
  Vertex y = 0;
  Color color = 0;

  friend bool operator==(const DipoleSite&, const DipoleSite&) = default;
};

/// All 1-dipoles, ordered by (color, smaller endpoint).
std::vector<DipoleSite> find_1_dipoles(const ColoredGraph& g);

struct MoveResult {
  ColoredGraph graph;
  std::vector<Vertex> relabel;  // old vertex -> new vertex, kNoPartner when removed
  std::vector<Color> unwelded_colors;
};

/// Deletes the dipole and welds equally colored hanging edges. Throws
/// INVALID_SITE unless x, y are joined by `color` and lie in different
/// residues without that color.
MoveResult cancel_1_dipole(const ColoredGraph& g, const DipoleSite& site);

/// Inverse move: splits every edge at v except the `color` one, inserting a
/// 1-dipole {x, y} of that color. The new vertices get indices n and n+1;
/// cancelling DipoleSite{n, n+1, color} restores g exactly.
MoveResult insert_1_dipole(const ColoredGraph& g, Vertex v, Color color);

struct ReductionResult {
  ColoredGraph graph;
  std::vector<DipoleSite> cancelled;  // each in the labels of the graph it was cancelled in
  std::vector<Vertex> relabel;        // original vertex -> final vertex
};

/// Cancels the first reported 1-dipole until none remain.
ReductionResult cancel_all_1_dipoles(const ColoredGraph& g);

struct JoinResult {
  ColoredGraph graph;
  EdgeList added_edges;  // color-3 edges
};

/// Adds h - 1 color-3 edges so that the boundary becomes connected: the
/// smallest unused boundary vertex of the first component is joined to the
/// smallest boundary vertex of each other component. Throws DIMENSION,
/// CLOSED_GRAPH, or CONNECTED_BOUNDARY when h = 1.
JoinResult join_boundary_components(const ColoredGraph& g);

}  // namespace gemkit
