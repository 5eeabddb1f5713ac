#include "gemkit/colored_graph.hpp"

#include <algorithm>
#include <bit>

#include "gemkit/error.hpp"
#include "union_find.hpp"

namespace gemkit {

ColorSet::ColorSet(std::initializer_list<Color> colors) {
  for (Color c : colors) bits_ |= 1u << c;
}

int ColorSet::size() const { return std::popcount(bits_); }

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (Color c = 0; c < 32; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string ColorSet::label() const {
  const auto cs = colors();
  const bool wide = !cs.empty() && cs.back() > 9;
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(cs[i]);
  }
  return out;
}

namespace {

void check_shape(int dim, int vertex_count) {
  if (dim < 1 || dim > kMaxDim)
    throw GemError(ErrorCode::dimension, "dim must lie in 1.." + std::to_string(kMaxDim) + ", got " +
                                             std::to_string(dim));
  if (vertex_count <= 0 || vertex_count % 2 != 0)
    throw GemError(ErrorCode::invalid_argument,
                   "vertex count must be even and positive, got " + std::to_string(vertex_count));
}

bool connected(const std::vector<std::vector<Vertex>>& partners) {
  const int n = static_cast<int>(partners[0].size());
  detail::UnionFind uf(n);
  for (const auto& color : partners)
    for (Vertex v = 0; v < n; ++v)
      if (color[v] != kNoPartner) uf.unite(v, color[v]);
  return uf.set_count() == 1;
}

}  // namespace

ColoredGraph ColoredGraph::from_matchings(int dim, int vertex_count, const std::vector<EdgeList>& matchings,
                                          Connectivity connectivity) {
  check_shape(dim, vertex_count);
  if (static_cast<int>(matchings.size()) != dim + 1)
    throw GemError(ErrorCode::invalid_argument, "expected " + std::to_string(dim + 1) + " color classes, got " +
                                                    std::to_string(matchings.size()));
  std::vector<std::vector<Vertex>> partners(dim + 1, std::vector<Vertex>(vertex_count, kNoPartner));
  for (Color c = 0; c <= dim; ++c) {
    for (auto [a, b] : matchings[c]) {
      if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
        throw GemError(ErrorCode::vertex_out_of_range, "color " + std::to_string(c) + " edge " + std::to_string(a) +
                                                           "-" + std::to_string(b) + " outside 0.." +
                                                           std::to_string(vertex_count - 1));
      if (a == b)
        throw GemError(ErrorCode::loop_edge, "color " + std::to_string(c) + " edge " + std::to_string(a) + "-" +
                                                 std::to_string(b));
      for (Vertex v : {a, b})
        if (partners[c][v] != kNoPartner)
          throw GemError(ErrorCode::duplicate_vertex,
                         "vertex " + std::to_string(v) + " appears twice in color " + std::to_string(c));
      partners[c][a] = b;
      partners[c][b] = a;
    }
  }
  return from_partners(dim, std::move(partners), connectivity);
}

ColoredGraph ColoredGraph::from_partners(int dim, std::vector<std::vector<Vertex>> partners,
                                         Connectivity connectivity) {
  if (partners.empty()) throw GemError(ErrorCode::invalid_argument, "no color classes");
  const int n = static_cast<int>(partners[0].size());
  check_shape(dim, n);
  if (static_cast<int>(partners.size()) != dim + 1)
    throw GemError(ErrorCode::invalid_argument, "expected " + std::to_string(dim + 1) + " color classes, got " +
                                                    std::to_string(partners.size()));
  for (Color c = 0; c <= dim; ++c) {
    const auto& color = partners[c];
    if (static_cast<int>(color.size()) != n)
      throw GemError(ErrorCode::invalid_argument, "color " + std::to_string(c) + " table has wrong length");
    for (Vertex v = 0; v < n; ++v) {
      const Vertex w = color[v];
      if (w == kNoPartner) {
        if (c < dim)
          throw GemError(ErrorCode::non_perfect_matching,
                         "color " + std::to_string(c) + " misses vertex " + std::to_string(v));
        continue;
      }
      if (w < 0 || w >= n)
        throw GemError(ErrorCode::vertex_out_of_range,
                       "color " + std::to_string(c) + " partner " + std::to_string(w) + " of vertex " +
                           std::to_string(v));
      if (w == v)
        throw GemError(ErrorCode::loop_edge, "color " + std::to_string(c) + " at vertex " + std::to_string(v));
      if (color[w] != v)
        throw GemError(ErrorCode::duplicate_vertex,
                       "color " + std::to_string(c) + " is not a matching at vertex " + std::to_string(w));
    }
  }
  const bool is_conn = connected(partners);
  if (!is_conn && connectivity == Connectivity::required)
    throw GemError(ErrorCode::disconnected, "the graph has more than one component");
  return ColoredGraph(dim, std::move(partners), is_conn);
}

bool ColoredGraph::has_boundary() const {
  return std::any_of(partners_[dim_].begin(), partners_[dim_].end(), [](Vertex w) { return w == kNoPartner; });
}

EdgeList ColoredGraph::edges(Color c) const {
  EdgeList out;
  const auto& color = partners_.at(c);
  for (Vertex v = 0; v < static_cast<Vertex>(color.size()); ++v)
    if (color[v] > v) out.emplace_back(v, color[v]);
  return out;
}

std::vector<EdgeList> ColoredGraph::matchings() const {
  std::vector<EdgeList> out;
  for (Color c = 0; c <= dim_; ++c) out.push_back(edges(c));
  return out;
}

}  // namespace gemkit
