#include "gemkit/constructions.hpp"

#include "gemkit/error.hpp"
#include "gemkit/gem_format.hpp"
#include "gemkit/moves.hpp"
#include "seed_data.hpp"

namespace gemkit {

ColoredGraph sphere_gem(int dim) {
  return ColoredGraph::from_matchings(dim, 2, std::vector<EdgeList>(dim + 1, EdgeList{{0, 1}}));
}

ColoredGraph ball_gem(int dim) {
  std::vector<EdgeList> m(dim + 1, EdgeList{{0, 1}});
  m[dim].clear();
  return ColoredGraph::from_matchings(dim, 2, m);
}

namespace {

ColoredGraph handlebody(int n, bool orientable) {
  if (n < 0 || (!orientable && n < 1) || n > 100000)
    throw GemError(ErrorCode::invalid_argument, "handlebody genus out of range: " + std::to_string(n));
  std::vector<EdgeList> m(4);
  // Top chain v1 -0- v2 -1- v6 -0- v8 ... v_{6n} -0- v0 and bottom chain
  // v1 -1- v3 -0- v7 -1- v9 ... v_{6n+1} -1- v0.
  Vertex top = 1, bottom = 1;
  for (int k = 0; k < n; ++k) {
    const Vertex b = 6 * k;
    m[0].emplace_back(top, b + 2);
    m[1].emplace_back(b + 2, b + 6);
    m[1].emplace_back(bottom, b + 3);
    m[0].emplace_back(b + 3, b + 7);
    // Pendant pair joined by colors 0 and 1.
    m[0].emplace_back(b + 4, b + 5);
    m[1].emplace_back(b + 4, b + 5);
    m[3].emplace_back(b + 3, b + 4);
    m[2].emplace_back(b + 3, b + 7);
    if (orientable) {
      m[2].emplace_back(b + 2, b + 4);
      m[2].emplace_back(b + 6, b + 5);
    } else {
      m[2].emplace_back(b + 2, b + 5);
      m[2].emplace_back(b + 6, b + 4);
    }
    top = b + 6;
    bottom = b + 7;
  }
  m[0].emplace_back(top, 0);
  m[1].emplace_back(bottom, 0);
  m[2].emplace_back(0, 1);
  return ColoredGraph::from_matchings(3, 6 * n + 2, m);
}

ColoredGraph torus_block() {
  return ColoredGraph::from_matchings(2, 6, {{{0, 1}, {2, 3}, {4, 5}}, {{1, 2}, {3, 4}, {5, 0}}, {{0, 3}, {1, 4}, {2, 5}}});
}

ColoredGraph projective_block() {
  return ColoredGraph::from_matchings(2, 4, {{{0, 1}, {2, 3}}, {{1, 2}, {3, 0}}, {{0, 2}, {1, 3}}});
}

}  // namespace

ColoredGraph handlebody_orientable(int n) { return handlebody(n, true); }

ColoredGraph handlebody_nonorientable(int n) { return handlebody(n, false); }

ColoredGraph surface_gem(SurfaceSpec spec) {
  const bool orientable = spec.kind == SurfaceKind::orientable;
  if (spec.parameter < (orientable ? 0 : 1) || spec.parameter > 100000)
    throw GemError(ErrorCode::invalid_argument, "surface parameter out of range: " + std::to_string(spec.parameter));
  if (orientable && spec.parameter == 0) return sphere_gem(2);
  const ColoredGraph block = orientable ? torus_block() : projective_block();
  ColoredGraph out = block;
  for (int i = 1; i < spec.parameter; ++i) out = connected_sum(out, 0, block, 0).graph;
  return out;
}

ColoredGraph product_with_interval(const ColoredGraph& surface) {
  if (surface.dim() != 2) throw GemError(ErrorCode::invalid_surface, "expected a 3-colored gem");
  if (surface.has_boundary()) throw GemError(ErrorCode::invalid_surface, "the surface gem has boundary vertices");
  if (!surface.is_connected() || !is_contracted(surface))
    throw GemError(ErrorCode::invalid_surface, "the surface gem is not contracted");
  constexpr int kDrop = -1;
  // Image of surface colors (0,1,2) in each copy.
  constexpr int recolor[4][3] = {{0, 1, kDrop}, {kDrop, 1, 3}, {2, kDrop, 3}, {2, 0, kDrop}};
  // Color joining copy m to copy m+1.
  constexpr Color joins[3] = {2, 0, 1};
  const int n = surface.vertex_count();
  std::vector<std::vector<Vertex>> partners(4, std::vector<Vertex>(4 * n, kNoPartner));
  for (int m = 0; m < 4; ++m) {
    for (Color c = 0; c < 3; ++c) {
      if (recolor[m][c] == kDrop) continue;
      for (Vertex v = 0; v < n; ++v) partners[recolor[m][c]][m * n + v] = m * n + surface.partner(c, v);
    }
  }
  for (int m = 0; m < 3; ++m) {
    for (Vertex v = 0; v < n; ++v) {
      partners[joins[m]][m * n + v] = (m + 1) * n + v;
      partners[joins[m]][(m + 1) * n + v] = m * n + v;
    }
  }
  return ColoredGraph::from_partners(3, std::move(partners));
}

std::string_view seed_text(ClosedSeed seed) {
  switch (seed) {
    case ClosedSeed::s2xs1: return detail::kSeedS2xS1;
    case ClosedSeed::rp3: return detail::kSeedRP3;
    case ClosedSeed::twisted_s2xs1: return detail::kSeedTwistedS2xS1;
  }
  return {};
}

ColoredGraph closed_seed(ClosedSeed seed) { return parse_gem(seed_text(seed)); }

std::string_view seed_name(ClosedSeed seed) {
  switch (seed) {
    case ClosedSeed::s2xs1: return "S2xS1";
    case ClosedSeed::rp3: return "RP3";
    case ClosedSeed::twisted_s2xs1: return "TWISTED_S2xS1";
  }
  return {};
}

std::optional<ClosedSeed> parse_seed_name(std::string_view name) {
  for (ClosedSeed s : {ClosedSeed::s2xs1, ClosedSeed::rp3, ClosedSeed::twisted_s2xs1})
    if (seed_name(s) == name) return s;
  return std::nullopt;
}

ColoredGraph non_handlebody_sum(int n, bool nonorientable, ClosedSeed seed) {
  const ColoredGraph h = nonorientable && n > 0 ? handlebody_nonorientable(n) : handlebody_orientable(n);
  const ColoredGraph s = closed_seed(seed);
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!h.is_boundary_vertex(v)) return connected_sum(h, v, s, 0).graph;
  return connected_sum(h, 0, s, 0, WeldMode::open_boundary).graph;
}

}  // namespace gemkit
