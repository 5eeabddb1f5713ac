#include "gemkit/gemkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gemkit/constructions.hpp"
#include "gemkit/error.hpp"
#include "gemkit/gem_format.hpp"
#include "reports.hpp"

struct gemkit_graph {
  gemkit::ColoredGraph graph;
};

namespace {

using gemkit::ColoredGraph;
using gemkit::ErrorCode;
using gemkit::GemError;
using gemkit::reports::json;

thread_local std::string last_error;

int status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return GEMKIT_E_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return GEMKIT_E_PARSE;
    case ErrorCode::duplicate_vertex: return GEMKIT_E_DUPLICATE_VERTEX;
    case ErrorCode::non_perfect_matching: return GEMKIT_E_NON_PERFECT_MATCHING;
    case ErrorCode::loop_edge: return GEMKIT_E_LOOP_EDGE;
    case ErrorCode::vertex_out_of_range: return GEMKIT_E_VERTEX_OUT_OF_RANGE;
    case ErrorCode::disconnected: return GEMKIT_E_DISCONNECTED;
    case ErrorCode::invalid_color: return GEMKIT_E_INVALID_COLOR;
    case ErrorCode::closed_graph: return GEMKIT_E_CLOSED_GRAPH;
    case ErrorCode::dimension: return GEMKIT_E_DIMENSION;
    case ErrorCode::boundary_graph: return GEMKIT_E_BOUNDARY_GRAPH;
    case ErrorCode::surface_check_failed: return GEMKIT_E_SURFACE_CHECK_FAILED;
    case ErrorCode::not_a_crystallization: return GEMKIT_E_NOT_A_CRYSTALLIZATION;
    case ErrorCode::disconnected_boundary: return GEMKIT_E_DISCONNECTED_BOUNDARY;
    case ErrorCode::color_mismatch: return GEMKIT_E_COLOR_MISMATCH;
    case ErrorCode::invalid_site: return GEMKIT_E_INVALID_SITE;
    case ErrorCode::connected_boundary: return GEMKIT_E_CONNECTED_BOUNDARY;
    case ErrorCode::invalid_surface: return GEMKIT_E_INVALID_SURFACE;
  }
  return GEMKIT_E_INTERNAL;
}

int fail(int status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
int guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return GEMKIT_OK;
  } catch (const GemError& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GEMKIT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GEMKIT_E_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw GemError(ErrorCode::invalid_argument, std::string(name) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  if (out != nullptr) *out = copy_string(j.dump(2));
}

gemkit_graph* wrap(ColoredGraph g) { return new gemkit_graph{std::move(g)}; }

const ColoredGraph& unwrap(const gemkit_graph* g) {
  require(g, "graph");
  return g->graph;
}

gemkit::ClosedSeed seed_of(int seed) {
  switch (seed) {
    case GEMKIT_SEED_S2XS1: return gemkit::ClosedSeed::s2xs1;
    case GEMKIT_SEED_RP3: return gemkit::ClosedSeed::rp3;
    case GEMKIT_SEED_TWISTED_S2XS1: return gemkit::ClosedSeed::twisted_s2xs1;
    default: throw GemError(ErrorCode::invalid_argument, "unknown seed " + std::to_string(seed));
  }
}

json relabel_json(const std::vector<gemkit::Vertex>& relabel) {
  json out = json::array();
  for (auto v : relabel) out.push_back(v == gemkit::kNoPartner ? json(nullptr) : json(v));
  return out;
}

}  // namespace

extern "C" {

const char* gemkit_last_error(void) { return last_error.c_str(); }

const char* gemkit_status_name(int status) {
  switch (status) {
    case GEMKIT_OK: return "OK";
    case GEMKIT_E_INTERNAL: return "INTERNAL";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(ErrorCode::invalid_surface); ++c)
    if (status_of(static_cast<ErrorCode>(c)) == status) return gemkit::error_name(static_cast<ErrorCode>(c)).data();
  return "UNKNOWN";
}

const char* gemkit_version(void) { return "1.0.0"; }

void gemkit_string_free(char* s) { std::free(s); }

int gemkit_graph_parse(const char* text, size_t length, gemkit_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(gemkit::parse_gem(std::string_view(text, length)));
  });
}

int gemkit_graph_from_edges(int dim, int vertex_count, const int* edges, const size_t* counts, gemkit_graph** out) {
  return guarded([&] {
    require(counts, "counts");
    require(out, "out");
    if (dim < 1 || dim > gemkit::kMaxDim) throw GemError(ErrorCode::dimension, "dim " + std::to_string(dim));
    std::vector<gemkit::EdgeList> m(dim + 1);
    std::size_t offset = 0;
    for (int c = 0; c <= dim; ++c) {
      if (counts[c] > 0) require(edges, "edges");
      for (std::size_t e = 0; e < counts[c]; ++e, ++offset) m[c].emplace_back(edges[2 * offset], edges[2 * offset + 1]);
    }
    *out = wrap(ColoredGraph::from_matchings(dim, vertex_count, m));
  });
}

int gemkit_graph_serialize(const gemkit_graph* g, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(gemkit::serialize_gem(unwrap(g)));
  });
}

int gemkit_graph_clone(const gemkit_graph* g, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(unwrap(g));
  });
}

int gemkit_graph_equal(const gemkit_graph* a, const gemkit_graph* b, int* equal) {
  return guarded([&] {
    require(equal, "equal");
    *equal = unwrap(a) == unwrap(b) ? 1 : 0;
  });
}

void gemkit_graph_free(gemkit_graph* g) { delete g; }

int gemkit_graph_dim(const gemkit_graph* g, int* dim) {
  return guarded([&] {
    require(dim, "dim");
    *dim = unwrap(g).dim();
  });
}

int gemkit_graph_vertex_count(const gemkit_graph* g, int* count) {
  return guarded([&] {
    require(count, "count");
    *count = unwrap(g).vertex_count();
  });
}

int gemkit_graph_partner(const gemkit_graph* g, int color, int v, int* partner) {
  return guarded([&] {
    require(partner, "partner");
    const ColoredGraph& graph = unwrap(g);
    if (color < 0 || color > graph.dim()) throw GemError(ErrorCode::invalid_color, "color " + std::to_string(color));
    if (v < 0 || v >= graph.vertex_count()) throw GemError(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(v));
    *partner = graph.partner(color, v);
  });
}

int gemkit_graph_has_boundary(const gemkit_graph* g, int* has_boundary) {
  return guarded([&] {
    require(has_boundary, "has_boundary");
    *has_boundary = unwrap(g).has_boundary() ? 1 : 0;
  });
}

int gemkit_residue_count(const gemkit_graph* g, unsigned color_mask, int* count) {
  return guarded([&] {
    require(count, "count");
    *count = gemkit::residue_count(unwrap(g), gemkit::ColorSet(color_mask));
  });
}

int gemkit_cycle_count(const gemkit_graph* g, int i, int j, int* count) {
  return guarded([&] {
    require(count, "count");
    *count = gemkit::cycle_count(unwrap(g), i, j);
  });
}

int gemkit_report_gem(const gemkit_graph* g, char** json_out) {
  return guarded([&] { emit(gemkit::reports::gem(unwrap(g)), json_out); });
}

int gemkit_report_census(const gemkit_graph* g, char** json_out) {
  return guarded([&] { emit(gemkit::reports::census(unwrap(g)), json_out); });
}

int gemkit_report_genus(const gemkit_graph* g, char** json_out) {
  return guarded([&] { emit(gemkit::reports::genus(gemkit::regular_genus(unwrap(g))), json_out); });
}

int gemkit_report_verify(const gemkit_graph* g, int mode, int* verdict, char** json_out) {
  return guarded([&] {
    const ColoredGraph& graph = unwrap(g);
    bool closed = false;
    switch (mode) {
      case GEMKIT_VERIFY_AUTO: closed = !graph.has_boundary(); break;
      case GEMKIT_VERIFY_CLOSED: closed = true; break;
      case GEMKIT_VERIFY_BOUNDARY: closed = false; break;
      default: throw GemError(ErrorCode::invalid_argument, "unknown verify mode " + std::to_string(mode));
    }
    if (closed) {
      const auto r = gemkit::verify_closed3(graph);
      if (verdict != nullptr) *verdict = r.verdict ? 1 : 0;
      emit(gemkit::reports::verify_closed(r), json_out);
    } else {
      const auto r = gemkit::verify_boundary3(graph);
      if (verdict != nullptr) *verdict = r.verdict ? 1 : 0;
      emit(gemkit::reports::verify_boundary(r), json_out);
    }
  });
}

int gemkit_report_boundary_genus(const gemkit_graph* g, char** json_out) {
  return guarded([&] { emit(gemkit::reports::boundary_genus(gemkit::boundary_regular_genus(unwrap(g))), json_out); });
}

int gemkit_report_relations(const gemkit_graph* g, int* all_hold, char** json_out) {
  return guarded([&] {
    const auto r = gemkit::check_g_relations(unwrap(g));
    if (all_hold != nullptr) *all_hold = r.all_hold ? 1 : 0;
    emit(gemkit::reports::relations(r), json_out);
  });
}

int gemkit_report_handlebody(const gemkit_graph* g, int* handlebody, char** json_out) {
  return guarded([&] {
    const auto r = gemkit::is_handlebody(unwrap(g));
    if (handlebody != nullptr) *handlebody = r.handlebody ? 1 : 0;
    emit(gemkit::reports::handlebody(r), json_out);
  });
}

int gemkit_report_bounds(const gemkit_graph* g, char** json_out) {
  return guarded([&] { emit(gemkit::reports::bounds(gemkit::gem_complexity_bounds(unwrap(g))), json_out); });
}

int gemkit_report_dipoles(const gemkit_graph* g, char** json_out) {
  return guarded([&] { emit(gemkit::reports::dipoles(gemkit::find_1_dipoles(unwrap(g))), json_out); });
}

int gemkit_boundary_component_count(const gemkit_graph* g, int* h) {
  return guarded([&] {
    require(h, "h");
    *h = gemkit::boundary_component_count(unwrap(g));
  });
}

int gemkit_boundary_component(const gemkit_graph* g, int index, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(gemkit::boundary_graph(unwrap(g)).component_graph(index));
  });
}

int gemkit_report_boundary(const gemkit_graph* g, char** json_out) {
  return guarded([&] { emit(gemkit::reports::boundary(gemkit::boundary_graph(unwrap(g))), json_out); });
}

int gemkit_generate_handlebody(int genus, int nonorientable, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(nonorientable ? gemkit::handlebody_nonorientable(genus) : gemkit::handlebody_orientable(genus));
  });
}

int gemkit_generate_surface(int parameter, int nonorientable, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    const auto kind = nonorientable ? gemkit::SurfaceKind::nonorientable : gemkit::SurfaceKind::orientable;
    *out = wrap(gemkit::surface_gem({kind, parameter}));
  });
}

int gemkit_generate_product(const gemkit_graph* surface, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(gemkit::product_with_interval(unwrap(surface)));
  });
}

int gemkit_generate_seed(int seed, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(gemkit::closed_seed(seed_of(seed)));
  });
}

int gemkit_seed_from_name(const char* name, int* seed) {
  return guarded([&] {
    require(name, "name");
    require(seed, "seed");
    const auto parsed = gemkit::parse_seed_name(name);
    if (!parsed) throw GemError(ErrorCode::invalid_argument, std::string("unknown seed '") + name + "'");
    *seed = static_cast<int>(*parsed);
  });
}

int gemkit_generate_non_handlebody(int genus, int nonorientable, int seed, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(gemkit::non_handlebody_sum(genus, nonorientable != 0, seed_of(seed)));
  });
}

int gemkit_connected_sum(const gemkit_graph* g1, int v1, const gemkit_graph* g2, int v2, int open_boundary_weld,
                         gemkit_graph** out, char** json_out) {
  return guarded([&] {
    require(out, "out");
    auto r = gemkit::connected_sum(unwrap(g1), v1, unwrap(g2), v2,
                                   open_boundary_weld ? gemkit::WeldMode::open_boundary : gemkit::WeldMode::strict);
    json j = gemkit::reports::gem(r.graph);
    j["first_map"] = relabel_json(r.first_map);
    j["second_map"] = relabel_json(r.second_map);
    j["unwelded_colors"] = r.unwelded_colors;
    j["warnings"] = r.warnings;
    emit(j, json_out);
    *out = wrap(std::move(r.graph));
  });
}

int gemkit_cancel_dipole(const gemkit_graph* g, int x, int y, int color, gemkit_graph** out, char** json_out) {
  return guarded([&] {
    require(out, "out");
    auto r = gemkit::cancel_1_dipole(unwrap(g), {x, y, color});
    json j = gemkit::reports::gem(r.graph);
    j["relabel"] = relabel_json(r.relabel);
    j["unwelded_colors"] = r.unwelded_colors;
    emit(j, json_out);
    *out = wrap(std::move(r.graph));
  });
}

int gemkit_insert_dipole(const gemkit_graph* g, int v, int color, gemkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(gemkit::insert_1_dipole(unwrap(g), v, color).graph);
  });
}

int gemkit_reduce_dipoles(const gemkit_graph* g, gemkit_graph** out, char** json_out) {
  return guarded([&] {
    require(out, "out");
    auto r = gemkit::cancel_all_1_dipoles(unwrap(g));
    json j = gemkit::reports::gem(r.graph);
    json cancelled = json::array();
    for (const auto& s : r.cancelled) cancelled.push_back(gemkit::reports::site(s));
    j["cancelled"] = std::move(cancelled);
    j["relabel"] = relabel_json(r.relabel);
    emit(j, json_out);
    *out = wrap(std::move(r.graph));
  });
}

int gemkit_join_boundary(const gemkit_graph* g, gemkit_graph** out, char** json_out) {
  return guarded([&] {
    require(out, "out");
    auto r = gemkit::join_boundary_components(unwrap(g));
    json j = gemkit::reports::gem(r.graph);
    json added = json::array();
    for (auto [a, b] : r.added_edges) added.push_back({a, b});
    j["added_edges"] = std::move(added);
    emit(j, json_out);
    *out = wrap(std::move(r.graph));
  });
}

}  // extern "C"
