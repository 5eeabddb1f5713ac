#include "gemkit/recognition.hpp"

#include <algorithm>

#include "gemkit/error.hpp"
#include "gemkit/genus.hpp"

namespace gemkit {

namespace {

void require_dim3(const ColoredGraph& g) {
  if (g.dim() != 3) throw GemError(ErrorCode::dimension, "expected a 4-colored gem, got dim " + std::to_string(g.dim()));
}

int g_of(const ColoredGraph& g, std::initializer_list<Color> colors) { return residue_count(g, ColorSet(colors)); }

// Sum of the three pair-residue counts minus half the vertex count: the Euler
// characteristic of the surface a 3-colored closed gem represents.
long surface_chi(const ColoredGraph& s) {
  return static_cast<long>(g_of(s, {0, 1})) + g_of(s, {0, 2}) + g_of(s, {1, 2}) - s.vertex_count() / 2;
}

}  // namespace

VerificationReport verify_boundary3(const ColoredGraph& g) {
  require_dim3(g);
  if (!g.has_boundary()) throw GemError(ErrorCode::closed_graph, "use the closed-gem check for gems without boundary");
  VerificationReport r;
  const VertexStats s = vertex_stats(g);
  const BoundaryGraph boundary = boundary_graph(g);
  r.h = boundary.h;
  r.connected = g.is_connected();

  const ColorSet all = ColorSet::all(3);
  const bool without_d_connected = residue_count(g, all.without(3)) == 1;
  bool each_has_h = true;
  for (Color c = 0; c < 3; ++c) {
    r.residues_without_color[c] = residue_count(g, all.without(c));
    if (r.residues_without_color[c] != r.h) each_has_h = false;
  }
  r.boundary_contracted = without_d_connected && each_has_h;
  r.condition_i = r.connected && r.boundary_contracted;
  if (!r.connected) r.diagnostics.push_back("condition (i): graph is disconnected");
  if (!without_d_connected) r.diagnostics.push_back("condition (i): residue without color 3 is disconnected");
  if (!each_has_h) {
    std::string msg = "condition (i): residues without colors 0,1,2 have " +
                      std::to_string(r.residues_without_color[0]) + "," +
                      std::to_string(r.residues_without_color[1]) + "," +
                      std::to_string(r.residues_without_color[2]) + " components, boundary graph has " +
                      std::to_string(r.h);
    r.diagnostics.push_back(msg);
  }

  const int g01 = g_of(g, {0, 1}), g02 = g_of(g, {0, 2}), g12 = g_of(g, {1, 2});
  const int g03 = g_of(g, {0, 3}), g13 = g_of(g, {1, 3}), g23 = g_of(g, {2, 3});
  r.differences = {g03 - g12, g13 - g02, g23 - g01};
  r.expected_difference = HalfInteger::from_twice(s.p_bar + r.h - 2);
  r.condition_ii = std::all_of(r.differences.begin(), r.differences.end(),
                               [&](int diff) { return HalfInteger(diff) == r.expected_difference; });
  if (!r.condition_ii)
    r.diagnostics.push_back("condition (ii): differences " + std::to_string(r.differences[0]) + "," +
                            std::to_string(r.differences[1]) + "," + std::to_string(r.differences[2]) +
                            " but p_bar/2 + h/2 - 1 = " + r.expected_difference.to_string());

  r.residue_sum = g01 + g02 + g12;
  r.expected_sum = 2 + s.p;
  r.condition_iii = r.residue_sum == r.expected_sum;
  if (!r.condition_iii)
    r.diagnostics.push_back("condition (iii): g01 + g02 + g12 = " + std::to_string(r.residue_sum) + " but 2 + p = " +
                            std::to_string(r.expected_sum));

  r.verdict = r.condition_i && r.condition_ii && r.condition_iii;
  return r;
}

ClosedVerification verify_closed3(const ColoredGraph& g) {
  require_dim3(g);
  if (g.has_boundary()) throw GemError(ErrorCode::boundary_graph, "the gem has boundary vertices");
  ClosedVerification r;
  r.manifold = true;
  r.contracted = true;
  const ColorSet all = ColorSet::all(3);
  for (Color c = 0; c <= 3; ++c) {
    const ColorSet kept = all.without(c);
    const auto labels = residue_components(g, kept);
    const int count = *std::max_element(labels.begin(), labels.end()) + 1;
    if (count != 1) {
      r.contracted = false;
      r.diagnostics.push_back("residue without color " + std::to_string(c) + " has " + std::to_string(count) +
                              " components");
    }
    const auto cs = kept.colors();
    // Per component: pair residues and vertices.
    std::vector<long> pair_sum(count, 0), vertices(count, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) ++vertices[labels[v]];
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const auto pair_labels = residue_components(g, ColorSet{cs[a], cs[b]});
        std::vector<char> seen(g.vertex_count(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (!seen[pair_labels[v]]) {
            seen[pair_labels[v]] = 1;
            ++pair_sum[labels[v]];
          }
        }
      }
    }
    for (int k = 0; k < count; ++k) {
      if (pair_sum[k] != vertices[k] / 2 + 2) {
        r.manifold = false;
        r.diagnostics.push_back("residue " + std::to_string(k) + " without color " + std::to_string(c) +
                                " is not a sphere (pair residues " + std::to_string(pair_sum[k]) + ", expected " +
                                std::to_string(vertices[k] / 2 + 2) + ")");
      }
    }
  }
  r.verdict = r.manifold && r.contracted;
  return r;
}

BoundaryGenusReport boundary_regular_genus(const ColoredGraph& g) {
  if (!g.has_boundary()) throw GemError(ErrorCode::closed_graph, "the gem has no boundary vertices");
  const BoundaryGraph boundary = boundary_graph(g);
  if (boundary.graph.dim() != 2)
    throw GemError(ErrorCode::dimension, "boundary genus is defined for 4-colored gems (surface boundaries)");
  BoundaryGenusReport out;
  out.boundary_vertex_count = boundary.graph.vertex_count();
  for (int k = 0; k < boundary.h; ++k) {
    const ColoredGraph comp = boundary.component_graph(k);
    BoundaryComponentGenus row;
    row.vertex_count = comp.vertex_count();
    row.orientable = is_bipartite(comp);
    row.euler_characteristic = surface_chi(comp);
    if (row.euler_characteristic > 2 || (row.orientable && row.euler_characteristic % 2 != 0))
      throw GemError(ErrorCode::surface_check_failed,
                     "boundary component " + std::to_string(k) + " has Euler characteristic " +
                         std::to_string(row.euler_characteristic) +
                         (row.orientable ? " (orientable)" : " (non-orientable)"));
    row.regular_genus = HalfInteger::from_twice(2 - row.euler_characteristic);
    row.odd_crosscap = !row.orientable && row.euler_characteristic % 2 != 0;
    out.total += row.regular_genus;
    out.components.push_back(row);
  }
  if (boundary.h == 1)
    out.vertex_count_matches = HalfInteger(out.boundary_vertex_count) == HalfInteger(2) + 4 * out.total;
  return out;
}

namespace {

void require_connected_boundary_crystallization(const ColoredGraph& g) {
  const VerificationReport v = verify_boundary3(g);
  if (!v.verdict) throw GemError(ErrorCode::not_a_crystallization, v.diagnostics.empty() ? "" : v.diagnostics.front());
  if (v.h != 1)
    throw GemError(ErrorCode::disconnected_boundary, "boundary has " + std::to_string(v.h) + " components");
}

}  // namespace

GRelationReport check_g_relations(const ColoredGraph& g) {
  require_connected_boundary_crystallization(g);
  GRelationReport out;
  out.n = boundary_regular_genus(g).total;
  const HalfInteger one(1);
  out.all_hold = true;
  for (Color i = 0; i < 3; ++i) {
    GRelationRow& row = out.rows[i];
    row.i = i;
    row.j = (i + 1) % 3;
    row.k = (i + 2) % 3;
    if (row.j > row.k) std::swap(row.j, row.k);
    row.g_i3 = residue_count(g, ColorSet{i, 3});
    row.g_jk = residue_count(g, ColorSet{row.j, row.k});
    row.c_i3 = cycle_count(g, i, 3);
    const HalfInteger gi3(row.g_i3), gjk(row.g_jk), ci3(row.c_i3);
    row.i_holds = gi3 == one + 2 * out.n + ci3;
    row.ii_holds = gi3 == out.n + gjk;
    row.iii_holds = gjk == one + out.n + ci3;
    row.g_i3_lower = gi3 >= one + 2 * out.n;
    row.g_jk_lower = gjk >= one + out.n;
    out.all_hold = out.all_hold && row.i_holds && row.ii_holds && row.iii_holds && row.g_i3_lower && row.g_jk_lower;
  }
  return out;
}

HandlebodyVerdict is_handlebody(const ColoredGraph& g) {
  require_connected_boundary_crystallization(g);
  HandlebodyVerdict out;
  out.n = boundary_regular_genus(g).total;
  const std::array<std::pair<Color, Color>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int t = 0; t < 3; ++t) out.g_pairs[t] = residue_count(g, ColorSet{pairs[t].first, pairs[t].second});
  const auto it = std::min_element(out.g_pairs.begin(), out.g_pairs.end());
  out.minimum = *it;
  out.witness = pairs[it - out.g_pairs.begin()];
  out.handlebody = HalfInteger(out.minimum) == HalfInteger(1) + out.n;
  return out;
}

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::from_rho: return "FROM_RHO";
    case BoundKind::from_boundary: return "FROM_BOUNDARY";
    case BoundKind::non_handlebody: return "NON_HANDLEBODY";
  }
  return "UNKNOWN";
}

std::vector<BoundCertificate> gem_complexity_bounds(const ColoredGraph& g) {
  const VerificationReport v = verify_boundary3(g);
  if (!v.verdict) throw GemError(ErrorCode::not_a_crystallization, v.diagnostics.empty() ? "" : v.diagnostics.front());
  const int complexity = vertex_stats(g).p - 1;
  const HalfInteger rho = regular_genus(g).rho;
  const HalfInteger boundary_genus = boundary_regular_genus(g).total;

  auto make = [&](BoundKind kind, HalfInteger genus, HalfInteger bound, std::string statement) {
    BoundCertificate c;
    c.kind = kind;
    c.genus_used = genus;
    c.h = v.h;
    c.lower_bound = bound;
    c.complexity_of_graph = complexity;
    c.slack = HalfInteger(complexity) - bound;
    c.holds = c.slack >= HalfInteger(0);
    c.statement = std::move(statement);
    return c;
  };

  const HalfInteger h_minus_one(v.h - 1);
  std::vector<BoundCertificate> out;
  out.push_back(make(BoundKind::from_rho, rho, 3 * (rho + h_minus_one),
                     "bound evaluated at rho(graph): p - 1 >= 3(rho + h - 1) checked for this crystallization"));
  out.push_back(make(BoundKind::from_boundary, boundary_genus, 3 * (boundary_genus + h_minus_one),
                     "k(M) >= 3(G(boundary) + h - 1)"));
  if (v.h == 1 && !is_handlebody(g).handlebody)
    out.push_back(make(BoundKind::non_handlebody, boundary_genus, 3 * (boundary_genus + HalfInteger(1)),
                       "M is not a handlebody: k(M) >= 3(G(boundary) + 1)"));
  return out;
}

}  // namespace gemkit
