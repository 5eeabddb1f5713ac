#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

/// Parses the gem text format:
///
///   gem 1
///   dim <d>
///   vertices <2p>
///   color 0: <a>-<b> <a>-<b> ...
///   ...
///   color <d>: ...
///
/// `#` starts a comment, blank lines are ignored, whitespace runs are
/// equivalent. Errors carry the 1-based line number.
ColoredGraph parse_gem(std::string_view text);

/// Canonical text: colors ascending, edges sorted by smaller endpoint. Each
/// comment line is emitted as "# <line>" after the format tag.
std::string serialize_gem(const ColoredGraph& g, const std::vector<std::string>& comments = {});

}  // namespace gemkit
