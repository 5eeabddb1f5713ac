#include "gemkit/error.hpp"

namespace gemkit {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::duplicate_vertex: return "DUPLICATE_VERTEX";
    case ErrorCode::non_perfect_matching: return "NON_PERFECT_MATCHING";
    case ErrorCode::loop_edge: return "LOOP_EDGE";
    case ErrorCode::vertex_out_of_range: return "VERTEX_OUT_OF_RANGE";
    case ErrorCode::disconnected: return "DISCONNECTED";
    case ErrorCode::invalid_color: return "INVALID_COLOR";
    case ErrorCode::closed_graph: return "CLOSED_GRAPH";
    case ErrorCode::dimension: return "DIMENSION";
    case ErrorCode::boundary_graph: return "BOUNDARY_GRAPH";
    case ErrorCode::surface_check_failed: return "SURFACE_CHECK_FAILED";
    case ErrorCode::not_a_crystallization: return "NOT_A_CRYSTALLIZATION";
    case ErrorCode::disconnected_boundary: return "DISCONNECTED_BOUNDARY";
    case ErrorCode::color_mismatch: return "COLOR_MISMATCH";
    case ErrorCode::invalid_site: return "INVALID_SITE";
    case ErrorCode::connected_boundary: return "CONNECTED_BOUNDARY";
    case ErrorCode::invalid_surface: return "INVALID_SURFACE";
  }
  return "UNKNOWN";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message, int line) {
  std::string out;
  if (line > 0) out = "line " + std::to_string(line) + ": ";
  out += error_name(code);
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

GemError::GemError(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line), detail_(message) {}

}  // namespace gemkit
