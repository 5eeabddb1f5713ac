#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/half_integer.hpp"

namespace gemkit {

/// Outcome of the three-condition characterization of crystallizations of
/// compact 3-manifolds with h >= 1 boundary components.
struct VerificationReport {
  // (i) connected, boundary-contracted, boundary graph with h components
  bool connected = false;
  bool boundary_contracted = false;
  int h = 0;
  std::array<int, 3> residues_without_color{};  // components of the residue missing color c, c = 0,1,2
  bool condition_i = false;

  // (ii) g03 - g12 = g13 - g02 = g23 - g01 = p_bar/2 + h/2 - 1
  std::array<int, 3> differences{};
  HalfInteger expected_difference;
  bool condition_ii = false;

  // (iii) g01 + g02 + g12 = 2 + p
  int residue_sum = 0;
  int expected_sum = 0;
  bool condition_iii = false;

  bool verdict = false;
  std::vector<std::string> diagnostics;
};

/// Throws DIMENSION when d != 3 and CLOSED_GRAPH when there is no boundary.
VerificationReport verify_boundary3(const ColoredGraph& g);

struct ClosedVerification {
  bool manifold = false;    // every 3-residue is a sphere gem
  bool contracted = false;  // every 3-residue is connected
  bool verdict = false;     // manifold && contracted: a crystallization
  std::vector<std::string> diagnostics;
};

/// Closed 4-colored gems. Throws DIMENSION when d != 3 and BOUNDARY_GRAPH
/// when the gem has boundary vertices.
ClosedVerification verify_closed3(const ColoredGraph& g);

struct BoundaryComponentGenus {
  int vertex_count = 0;
  bool orientable = false;
  long euler_characteristic = 0;
  HalfInteger regular_genus;  // (2 - chi) / 2
  bool odd_crosscap = false;  // non-orientable with odd chi: genus is not an integer
};

struct BoundaryGenusReport {
  std::vector<BoundaryComponentGenus> components;
  HalfInteger total;
  int boundary_vertex_count = 0;
  /// For a single component: boundary vertex count equals 2 + 4n.
  std::optional<bool> vertex_count_matches;
};

/// Throws CLOSED_GRAPH, or SURFACE_CHECK_FAILED when a component's census is
/// not that of a closed surface.
BoundaryGenusReport boundary_regular_genus(const ColoredGraph& g);

struct GRelationRow {
  Color i = 0, j = 0, k = 0;  // {i,j,k} = {0,1,2}
  int g_i3 = 0;
  int g_jk = 0;
  int c_i3 = 0;
  bool i_holds = false;    // g_i3 = 1 + 2n + C_i3
  bool ii_holds = false;   // g_i3 = n + g_jk
  bool iii_holds = false;  // g_jk = 1 + n + C_i3
  bool g_i3_lower = false;  // g_i3 >= 1 + 2n
  bool g_jk_lower = false;  // g_jk >= 1 + n
};

struct GRelationReport {
  HalfInteger n;
  std::array<GRelationRow, 3> rows{};
  bool all_hold = false;
};

/// Requires a verified crystallization with connected boundary; throws
/// NOT_A_CRYSTALLIZATION or DISCONNECTED_BOUNDARY otherwise.
GRelationReport check_g_relations(const ColoredGraph& g);

struct HandlebodyVerdict {
  bool handlebody = false;
  HalfInteger n;                       // regular genus of the boundary
  std::array<int, 3> g_pairs{};        // g01, g02, g12
  int minimum = 0;
  std::pair<Color, Color> witness{};   // pair attaining the minimum
};

/// A crystallization with connected boundary of genus n represents a
/// handlebody iff min(g01, g02, g12) = 1 + n.
HandlebodyVerdict is_handlebody(const ColoredGraph& g);

enum class BoundKind { from_rho, from_boundary, non_handlebody };

std::string_view bound_kind_name(BoundKind kind);

struct BoundCertificate {
  BoundKind kind = BoundKind::from_rho;
  HalfInteger genus_used;
  int h = 0;
  HalfInteger lower_bound;
  int complexity_of_graph = 0;  // p - 1 for this crystallization
  HalfInteger slack;            // (p - 1) - lower_bound
  bool holds = false;           // slack >= 0
  std::string statement;
};

/// Lower-bound certificates for the gem-complexity of the represented
/// manifold, each checked against p - 1 of the given crystallization.
std::vector<BoundCertificate> gem_complexity_bounds(const ColoredGraph& g);

}  // namespace gemkit
