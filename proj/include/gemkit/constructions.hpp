#pragma once

#include <optional>
#include <string_view>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

/// The 2-vertex gem with every color joining the two vertices: S^dim.
ColoredGraph sphere_gem(int dim);

/// The 2-vertex gem with colors 0..dim-1 and no color-dim edge: the dim-ball.
ColoredGraph ball_gem(int dim);

/// Crystallizations of the genus-n handlebodies on 6n + 2 vertices. Vertex i
/// is v_i of the block pattern: v_1 and v_0 are joined by two {0,1}-chains
/// through n six-vertex blocks v_{6k+2} .. v_{6k+7}. The two variants differ
/// in the color-2 edges at v_{6k+4}, v_{6k+5}. n = 0 yields ball_gem(3).
ColoredGraph handlebody_orientable(int n);
ColoredGraph handlebody_nonorientable(int n);

enum class SurfaceKind { orientable, nonorientable };

struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::orientable;
  int parameter = 0;  // genus, or crosscap count (>= 1)
};

/// Surface crystallization built by iterated connected sum of the 6-vertex
/// torus block or the 4-vertex projective-plane block: 4g + 2 or 2k + 2
/// vertices.
ColoredGraph surface_gem(SurfaceSpec spec);

/// Crystallization of S x [0,1] on four copies of a surface crystallization
/// with recolorings (0,1,-), (-,1,3), (2,-,3), (2,0,-) joined by color 2
/// (copies 1-2), color 0 (2-3) and color 1 (3-4). Copy m vertex l gets index
/// (m-1)*|V| + l. Throws INVALID_SURFACE unless the input is a closed,
/// connected, contracted 3-colored gem.
ColoredGraph product_with_interval(const ColoredGraph& surface);

enum class ClosedSeed { s2xs1, rp3, twisted_s2xs1 };

/// The 8-vertex crystallizations of S^2 x S^1, RP^3 and the twisted S^2-bundle.
ColoredGraph closed_seed(ClosedSeed seed);
std::string_view seed_name(ClosedSeed seed);
std::optional<ClosedSeed> parse_seed_name(std::string_view name);
/// Gem text of the seed, including its comment header.
std::string_view seed_text(ClosedSeed seed);

/// Handlebody of genus n summed with a closed seed at the smallest interior
/// vertex of the handlebody gem: 6n + 8 vertices, boundary of genus n, not a
/// handlebody. For n = 0 the ball gem has no interior vertex, so the sum is
/// taken at vertex 0 and the seed's color-3 partner becomes a boundary vertex.
ColoredGraph non_handlebody_sum(int n, bool nonorientable, ClosedSeed seed);

}  // namespace gemkit
