#include "gemkit/moves.hpp"

#include <algorithm>
#include <string>

#include "gemkit/error.hpp"

namespace gemkit {

namespace {

using Table = std::vector<std::vector<Vertex>>;

void check_vertex(const ColoredGraph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.vertex_count())
    throw GemError(ErrorCode::vertex_out_of_range,
                   std::string(what) + " " + std::to_string(v) + " outside 0.." + std::to_string(g.vertex_count() - 1));
}

// Drops the vertices flagged in `removed` from a partner table whose entries
// for surviving vertices never point at removed ones.
MoveResult compact(int dim, const Table& partners, const std::vector<char>& removed, std::vector<Color> unwelded) {
  const int n = static_cast<int>(removed.size());
  std::vector<Vertex> relabel(n, kNoPartner);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) relabel[v] = next++;
  Table out(dim + 1, std::vector<Vertex>(next, kNoPartner));
  for (Color c = 0; c <= dim; ++c)
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && partners[c][v] != kNoPartner) out[c][relabel[v]] = relabel[partners[c][v]];
  return MoveResult{ColoredGraph::from_partners(dim, std::move(out)), std::move(relabel), std::move(unwelded)};
}

}  // namespace

SumResult connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2, WeldMode mode) {
  if (g1.dim() != g2.dim())
    throw GemError(ErrorCode::dimension, "summands have dims " + std::to_string(g1.dim()) + " and " +
                                             std::to_string(g2.dim()));
  check_vertex(g1, v1, "vertex");
  check_vertex(g2, v2, "vertex");
  const int d = g1.dim();
  const int n1 = g1.vertex_count();
  const int n = n1 + g2.vertex_count();

  // Disjoint union, g2 shifted by n1.
  Table partners(d + 1, std::vector<Vertex>(n, kNoPartner));
  for (Color c = 0; c <= d; ++c) {
    for (Vertex v = 0; v < n1; ++v) partners[c][v] = g1.partner(c, v);
    for (Vertex v = 0; v < g2.vertex_count(); ++v) {
      const Vertex w = g2.partner(c, v);
      partners[c][n1 + v] = w == kNoPartner ? kNoPartner : n1 + w;
    }
  }
  SumResult result{g1, {}, {}, {}, {}};
  const Vertex a = v1, b = n1 + v2;
  for (Color c = 0; c <= d; ++c) {
    const Vertex u1 = partners[c][a], u2 = partners[c][b];
    if (u1 != kNoPartner) partners[c][u1] = kNoPartner;
    if (u2 != kNoPartner) partners[c][u2] = kNoPartner;
    partners[c][a] = partners[c][b] = kNoPartner;
    if (u1 != kNoPartner && u2 != kNoPartner) {
      partners[c][u1] = u2;
      partners[c][u2] = u1;
    } else if (u1 != kNoPartner || u2 != kNoPartner) {
      if (mode == WeldMode::strict)
        throw GemError(ErrorCode::color_mismatch, "exactly one of the two vertices carries color " + std::to_string(c));
      result.unwelded_colors.push_back(c);
    } else {
      result.unwelded_colors.push_back(c);
    }
  }
  if (g1.has_edge(d, v1) == false && g2.has_edge(d, v2) == false)
    result.warnings.push_back("both vertices are boundary vertices; the sum need not represent the connected sum");

  std::vector<char> removed(n, 0);
  removed[a] = removed[b] = 1;
  MoveResult compacted = compact(d, partners, removed, {});
  result.graph = std::move(compacted.graph);
  result.first_map.assign(compacted.relabel.begin(), compacted.relabel.begin() + n1);
  result.second_map.assign(compacted.relabel.begin() + n1, compacted.relabel.end());
  return result;
}

// Exactly one endpoint missing color d: cancelling would leave the other
// endpoint's d-partner hanging and can split the graph. Both endpoints on the
// boundary needs no extra test, since boundary residues avoiding j sit inside
// residues of the whole graph avoiding j.
bool mixed_boundary(const ColoredGraph& g, Vertex x, Vertex y, Color j) {
  return j != g.dim() && g.is_boundary_vertex(x) != g.is_boundary_vertex(y);
}

std::vector<DipoleSite> find_1_dipoles(const ColoredGraph& g) {
  std::vector<DipoleSite> out;
  const ColorSet all = ColorSet::all(g.dim());
  for (Color j = 0; j <= g.dim(); ++j) {
    const auto labels = residue_components(g, all.without(j));
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      const Vertex y = g.partner(j, x);
      if (y > x && labels[x] != labels[y] && !mixed_boundary(g, x, y, j)) out.push_back({x, y, j});
    }
  }
  return out;
}

MoveResult cancel_1_dipole(const ColoredGraph& g, const DipoleSite& site) {
  const auto [x, y, j] = site;
  if (j < 0 || j > g.dim()) throw GemError(ErrorCode::invalid_site, "color " + std::to_string(j) + " out of range");
  if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count() || x == y || g.partner(j, x) != y)
    throw GemError(ErrorCode::invalid_site, std::to_string(x) + " and " + std::to_string(y) +
                                                " are not joined by color " + std::to_string(j));
  const auto labels = residue_components(g, ColorSet::all(g.dim()).without(j));
  if (labels[x] == labels[y])
    throw GemError(ErrorCode::invalid_site, std::to_string(x) + " and " + std::to_string(y) +
                                                " lie in the same residue without color " + std::to_string(j));
  if (mixed_boundary(g, x, y, j))
    throw GemError(ErrorCode::invalid_site, "exactly one of " + std::to_string(x) + " and " + std::to_string(y) +
                                                " is a boundary vertex");
  Table partners = g.partner_table();
  std::vector<Color> unwelded;
  for (Color c = 0; c <= g.dim(); ++c) {
    if (c == j) continue;
    const Vertex a = partners[c][x], b = partners[c][y];
    if (a != kNoPartner) partners[c][a] = kNoPartner;
    if (b != kNoPartner) partners[c][b] = kNoPartner;
    if (a != kNoPartner && b != kNoPartner) {
      partners[c][a] = b;
      partners[c][b] = a;
    } else {
      unwelded.push_back(c);
    }
  }
  std::vector<char> removed(g.vertex_count(), 0);
  removed[x] = removed[y] = 1;
  return compact(g.dim(), partners, removed, std::move(unwelded));
}

MoveResult insert_1_dipole(const ColoredGraph& g, Vertex v, Color color) {
  check_vertex(g, v, "vertex");
  if (color < 0 || color > g.dim()) throw GemError(ErrorCode::invalid_color, "color " + std::to_string(color));
  const int n = g.vertex_count();
  const Vertex x = n, y = n + 1;
  Table partners = g.partner_table();
  for (auto& row : partners) row.resize(n + 2, kNoPartner);
  std::vector<Color> unwelded;
  for (Color c = 0; c <= g.dim(); ++c) {
    if (c == color) continue;
    const Vertex w = partners[c][v];
    if (w == kNoPartner) {
      unwelded.push_back(c);
      continue;
    }
    // v -c- w becomes v -c- x and y -c- w.
    partners[c][v] = x;
    partners[c][x] = v;
    partners[c][y] = w;
    partners[c][w] = y;
  }
  partners[color][x] = y;
  partners[color][y] = x;
  std::vector<Vertex> relabel(n);
  for (Vertex u = 0; u < n; ++u) relabel[u] = u;
  return MoveResult{ColoredGraph::from_partners(g.dim(), std::move(partners)), std::move(relabel),
                    std::move(unwelded)};
}

ReductionResult cancel_all_1_dipoles(const ColoredGraph& g) {
  ReductionResult out{g, {}, {}};
  out.relabel.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.relabel[v] = v;
  for (;;) {
    const auto sites = find_1_dipoles(out.graph);
    if (sites.empty()) break;
    MoveResult step = cancel_1_dipole(out.graph, sites.front());
    out.cancelled.push_back(sites.front());
    for (Vertex& v : out.relabel)
      if (v != kNoPartner) v = step.relabel[v];
    out.graph = std::move(step.graph);
  }
  return out;
}

JoinResult join_boundary_components(const ColoredGraph& g) {
  if (g.dim() != 3) throw GemError(ErrorCode::dimension, "joining boundary components needs a 4-colored gem");
  if (!g.has_boundary()) throw GemError(ErrorCode::closed_graph, "the gem has no boundary vertices");
  const BoundaryGraph boundary = boundary_graph(g);
  if (boundary.h == 1) throw GemError(ErrorCode::connected_boundary, "the boundary is already connected");

  Table partners = g.partner_table();
  JoinResult out{g, {}};
  std::vector<Vertex> first = boundary.component_vertices(0);
  std::size_t next_unused = 0;
  for (int k = 1; k < boundary.h; ++k) {
    if (next_unused >= first.size())
      throw GemError(ErrorCode::invalid_argument, "first boundary component has too few vertices to join all others");
    const Vertex a = boundary.parent_vertex[first[next_unused++]];
    const Vertex b = boundary.parent_vertex[boundary.component_vertices(k).front()];
    partners[3][a] = b;
    partners[3][b] = a;
    out.added_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  out.graph = ColoredGraph::from_partners(3, std::move(partners));
  return out;
}

}  // namespace gemkit
