#include <algorithm>

#include "gemkit/colored_graph.hpp"
#include "gemkit/error.hpp"
#include "union_find.hpp"

namespace gemkit {

namespace {

void check_colors(const ColoredGraph& g, ColorSet colors) {
  if (colors.bits() >> g.color_count())
    throw GemError(ErrorCode::invalid_color, "color set {" + colors.label() + "} exceeds 0.." +
                                                 std::to_string(g.dim()));
}

void check_color(const ColoredGraph& g, Color c) {
  if (c < 0 || c > g.dim())
    throw GemError(ErrorCode::invalid_color, "color " + std::to_string(c) + " outside 0.." + std::to_string(g.dim()));
}

detail::UnionFind residue_union(const ColoredGraph& g, ColorSet colors) {
  detail::UnionFind uf(g.vertex_count());
  for (Color c : colors.colors())
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.has_edge(c, v)) uf.unite(v, g.partner(c, v));
  return uf;
}

}  // namespace

VertexStats vertex_stats(const ColoredGraph& g) {
  int boundary = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.is_boundary_vertex(v)) ++boundary;
  VertexStats s;
  s.p = g.vertex_count() / 2;
  s.p_bar = boundary / 2;
  s.p_dot = s.p - s.p_bar;
  return s;
}

std::vector<int> residue_components(const ColoredGraph& g, ColorSet colors) {
  check_colors(g, colors);
  return residue_union(g, colors).labels();
}

int residue_count(const ColoredGraph& g, ColorSet colors) {
  check_colors(g, colors);
  return residue_union(g, colors).set_count();
}

int cycle_count(const ColoredGraph& g, Color i, Color j) {
  check_color(g, i);
  check_color(g, j);
  if (i == j) throw GemError(ErrorCode::invalid_color, "cycle colors must differ");
  // A component of the {i,j}-residue is a cycle iff none of its vertices
  // misses one of the two colors.
  const auto labels = residue_components(g, ColorSet{i, j});
  const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<char> open(count, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.has_edge(i, v) || !g.has_edge(j, v)) open[labels[v]] = 1;
  return static_cast<int>(std::count(open.begin(), open.end(), 0));
}

bool is_bipartite(const ColoredGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Color c = 0; c <= g.dim(); ++c) {
        const Vertex w = g.partner(c, u);
        if (w == kNoPartner) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_contracted(const ColoredGraph& g) {
  const ColorSet all = ColorSet::all(g.dim());
  for (Color c = 0; c <= g.dim(); ++c)
    if (residue_count(g, all.without(c)) != 1) return false;
  return true;
}

bool is_boundary_contracted(const ColoredGraph& g) {
  if (!g.has_boundary()) throw GemError(ErrorCode::closed_graph, "the gem has no boundary vertices");
  const int h = boundary_component_count(g);
  const ColorSet all = ColorSet::all(g.dim());
  if (residue_count(g, all.without(g.dim())) != 1) return false;
  for (Color c = 0; c < g.dim(); ++c)
    if (residue_count(g, all.without(c)) != h) return false;
  return true;
}

Census census(const ColoredGraph& g) {
  Census out;
  out.dim = g.dim();
  out.stats = vertex_stats(g);
  const std::uint32_t subsets = 1u << g.color_count();
  for (std::uint32_t bits = 0; bits < subsets; ++bits) out.residue_counts[ColorSet(bits)] = residue_count(g, ColorSet(bits));
  for (Color i = 0; i <= g.dim(); ++i)
    for (Color j = i + 1; j <= g.dim(); ++j) out.cycle_counts[{i, j}] = cycle_count(g, i, j);
  return out;
}

std::vector<Vertex> BoundaryGraph::component_vertices(int k) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(component_ids.size()); ++v)
    if (component_ids[v] == k) out.push_back(v);
  return out;
}

ColoredGraph BoundaryGraph::component_graph(int k) const {
  if (k < 0 || k >= h) throw GemError(ErrorCode::invalid_argument, "no boundary component " + std::to_string(k));
  const auto members = component_vertices(k);
  std::vector<Vertex> local(graph.vertex_count(), kNoPartner);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> partners(graph.color_count(),
                                            std::vector<Vertex>(members.size(), kNoPartner));
  for (Color c = 0; c <= graph.dim(); ++c)
    for (std::size_t i = 0; i < members.size(); ++i) partners[c][i] = local[graph.partner(c, members[i])];
  return ColoredGraph::from_partners(graph.dim(), std::move(partners));
}

BoundaryGraph boundary_graph(const ColoredGraph& g) {
  if (g.dim() < 2) throw GemError(ErrorCode::dimension, "boundary graphs need dim >= 2");
  if (!g.has_boundary()) throw GemError(ErrorCode::closed_graph, "the gem has no boundary vertices");
  const Color d = g.dim();
  std::vector<Vertex> index(g.vertex_count(), kNoPartner);
  std::vector<Vertex> parent;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary_vertex(v)) {
      index[v] = static_cast<Vertex>(parent.size());
      parent.push_back(v);
    }
  }
  const int m = static_cast<int>(parent.size());
  std::vector<std::vector<Vertex>> partners(d, std::vector<Vertex>(m, kNoPartner));
  for (Color j = 0; j < d; ++j) {
    for (Vertex b = 0; b < m; ++b) {
      // Follow the alternating (j,d)-path to its other end.
      Vertex w = g.partner(j, parent[b]);
      while (!g.is_boundary_vertex(w)) w = g.partner(j, g.partner(d, w));
      partners[j][b] = index[w];
    }
  }
  BoundaryGraph out{ColoredGraph::from_partners(d - 1, std::move(partners), Connectivity::allow_disconnected),
                    std::move(parent), {}, 0, {}};
  out.component_ids = residue_components(out.graph, ColorSet::all(d - 1));
  out.h = *std::max_element(out.component_ids.begin(), out.component_ids.end()) + 1;
  for (Color i = 0; i < d; ++i)
    for (Color j = i + 1; j < d; ++j) out.cycle_counts[{i, j}] = cycle_count(out.graph, i, j);
  return out;
}

int boundary_component_count(const ColoredGraph& g) {
  if (!g.has_boundary()) return 0;
  return boundary_graph(g).h;
}

ComplexSummary complex_summary(const ColoredGraph& g) {
  const int d = g.dim();
  ComplexSummary out;
  out.f_vector.assign(d + 1, 0);
  const ColorSet all = ColorSet::all(d);
  const std::uint32_t subsets = 1u << g.color_count();
  // A k-simplex labeled by B (|B| = k+1) is one component of the residue on
  // the complementary colors.
  for (std::uint32_t bits = 1; bits < subsets; ++bits) {
    const ColorSet labels(bits);
    out.f_vector[labels.size() - 1] += residue_count(g, ColorSet(all.bits() & ~bits));
  }
  for (int k = 0; k <= d; ++k) out.euler_characteristic += (k % 2 == 0 ? 1 : -1) * out.f_vector[k];
  out.vertex_count_of_complex = out.f_vector[0];
  out.h = g.has_boundary() && d >= 2 ? boundary_graph(g).h : 0;
  out.crystallization_vertex_target = static_cast<long>(d) * std::max(1, out.h) + 1;
  out.crystallization_vertex_condition = out.vertex_count_of_complex == out.crystallization_vertex_target;
  return out;
}

}  // namespace gemkit
