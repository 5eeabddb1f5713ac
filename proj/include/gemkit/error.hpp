#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gemkit {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  duplicate_vertex,
  non_perfect_matching,
  loop_edge,
  vertex_out_of_range,
  disconnected,
  invalid_color,
  closed_graph,
  dimension,
  boundary_graph,
  surface_check_failed,
  not_a_crystallization,
  disconnected_boundary,
  color_mismatch,
  invalid_site,
  connected_boundary,
  invalid_surface,
};

/// Upper-case diagnostic name, e.g. "LOOP_EDGE".
std::string_view error_name(ErrorCode code) noexcept;

/// Every library failure is reported through this type. `line()` is non-zero
/// only for errors raised while parsing gem text.
class GemError : public std::runtime_error {
 public:
  GemError(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  int line_;
  std::string detail_;
};

}  // namespace gemkit
