#include "gemkit/gem_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "gemkit/error.hpp"

namespace gemkit {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

int parse_int(std::string_view token, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw GemError(ErrorCode::parse_error, std::string("expected ") + what + ", got '" + std::string(token) + "'",
                   line);
  return value;
}

int keyword_value(const Line& line, std::string_view keyword) {
  if (line.tokens.size() != 2 || line.tokens[0] != keyword)
    throw GemError(ErrorCode::parse_error, "expected '" + std::string(keyword) + " <n>'", line.number);
  return parse_int(line.tokens[1], line.number, "an integer");
}

}  // namespace

ColoredGraph parse_gem(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() < 3) throw GemError(ErrorCode::parse_error, "missing header", lines.empty() ? 1 : lines.back().number);
  const int version = keyword_value(lines[0], "gem");
  if (version != 1) throw GemError(ErrorCode::parse_error, "unsupported format version " + std::to_string(version),
                                   lines[0].number);
  const int dim = keyword_value(lines[1], "dim");
  if (dim < 1 || dim > kMaxDim)
    throw GemError(ErrorCode::dimension, "dim must lie in 1.." + std::to_string(kMaxDim), lines[1].number);
  const int n = keyword_value(lines[2], "vertices");
  if (n <= 0 || n % 2 != 0)
    throw GemError(ErrorCode::invalid_argument, "vertex count must be even and positive", lines[2].number);

  std::vector<EdgeList> matchings;
  std::vector<std::vector<char>> used;
  std::size_t li = 3;
  for (Color c = 0; c <= dim; ++c, ++li) {
    if (li >= lines.size())
      throw GemError(ErrorCode::parse_error, "missing 'color " + std::to_string(c) + ":' line", lines.back().number);
    const Line& line = lines[li];
    const std::string expected = std::to_string(c) + ":";
    std::size_t first_pair = 2;
    if (line.tokens[0] != "color") throw GemError(ErrorCode::parse_error, "expected 'color " + expected + "'", line.number);
    if (line.tokens.size() >= 2 && line.tokens[1] == expected) {
      first_pair = 2;
    } else if (line.tokens.size() >= 3 && line.tokens[1] == std::to_string(c) && line.tokens[2] == ":") {
      first_pair = 3;
    } else {
      throw GemError(ErrorCode::parse_error, "expected 'color " + expected + "'", line.number);
    }
    EdgeList edges;
    std::vector<char> seen(n, 0);
    for (std::size_t t = first_pair; t < line.tokens.size(); ++t) {
      const std::string_view tok = line.tokens[t];
      const auto dash = tok.find('-');
      if (dash == std::string_view::npos || dash == 0)
        throw GemError(ErrorCode::parse_error, "expected '<a>-<b>', got '" + std::string(tok) + "'", line.number);
      const int a = parse_int(tok.substr(0, dash), line.number, "a vertex index");
      const int b = parse_int(tok.substr(dash + 1), line.number, "a vertex index");
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw GemError(ErrorCode::vertex_out_of_range,
                       "edge " + std::string(tok) + " outside 0.." + std::to_string(n - 1), line.number);
      if (a == b) throw GemError(ErrorCode::loop_edge, "edge " + std::string(tok), line.number);
      for (int v : {a, b}) {
        if (seen[v])
          throw GemError(ErrorCode::duplicate_vertex,
                         "vertex " + std::to_string(v) + " appears twice in color " + std::to_string(c), line.number);
        seen[v] = 1;
      }
      edges.emplace_back(a, b);
    }
    if (c < dim && static_cast<int>(2 * edges.size()) != n)
      throw GemError(ErrorCode::non_perfect_matching,
                     "color " + std::to_string(c) + " covers " + std::to_string(2 * edges.size()) + " of " +
                         std::to_string(n) + " vertices",
                     line.number);
    matchings.push_back(std::move(edges));
  }
  if (li < lines.size()) throw GemError(ErrorCode::parse_error, "unexpected content after the last color", lines[li].number);
  try {
    return ColoredGraph::from_matchings(dim, n, matchings);
  } catch (const GemError& e) {
    throw GemError(e.code(), e.detail(), lines.back().number);
  }
}

std::string serialize_gem(const ColoredGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "gem 1\n";
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "dim " << g.dim() << '\n' << "vertices " << g.vertex_count() << '\n';
  for (Color c = 0; c <= g.dim(); ++c) {
    out << "color " << c << ':';
    for (auto [a, b] : g.edges(c)) out << ' ' << a << '-' << b;
    out << '\n';
  }
  return out.str();
}

}  // namespace gemkit
