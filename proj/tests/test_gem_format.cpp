#include <gtest/gtest.h>

#include "corpus.hpp"
#include "gemkit/constructions.hpp"
#include "gemkit/error.hpp"
#include "gemkit/gem_format.hpp"

using namespace gemkit;

namespace {

GemError parse_error_of(const std::string& text) {
  try {
    parse_gem(text);
  } catch (const GemError& e) {
    return e;
  }
  ADD_FAILURE() << "parse succeeded:\n" << text;
  return GemError(ErrorCode::invalid_argument, "");
}

}  // namespace

TEST(Serialize, CanonicalSphere) {
  EXPECT_EQ(serialize_gem(fixtures::s3_gem()), "gem 1\ndim 3\nvertices 2\ncolor 0: 0-1\ncolor 1: 0-1\ncolor 2: 0-1\ncolor 3: 0-1\n");
  EXPECT_EQ(serialize_gem(fixtures::d3_gem()), "gem 1\ndim 3\nvertices 2\ncolor 0: 0-1\ncolor 1: 0-1\ncolor 2: 0-1\ncolor 3:\n");
  EXPECT_EQ(serialize_gem(fixtures::d3_gem(), {"ball"}),
            "gem 1\n# ball\ndim 3\nvertices 2\ncolor 0: 0-1\ncolor 1: 0-1\ncolor 2: 0-1\ncolor 3:\n");
}

TEST(Parse, AcceptsCommentsAndWhitespace) {
  auto g = parse_gem("# leading comment\ngem 1\n\ndim   3 # trailing\nvertices 2\ncolor 0 : 0-1\ncolor 1:\t0-1\n"
                     "color 2:  1-0  \ncolor 3:\n");
  EXPECT_EQ(g, fixtures::d3_gem());
}

TEST(Parse, LineNumberedErrors) {
  auto e = parse_error_of("gem 1\ndim 3\nvertices 2\ncolor 0: 0-0\ncolor 1: 0-1\ncolor 2: 0-1\ncolor 3:\n");
  EXPECT_EQ(e.code(), ErrorCode::loop_edge);
  EXPECT_EQ(e.line(), 4);

  e = parse_error_of("gem 1\ndim 3\nvertices 2\ncolor 0: 0-1\ncolor 1: 0-7\ncolor 2: 0-1\ncolor 3:\n");
  EXPECT_EQ(e.code(), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(e.line(), 5);

  e = parse_error_of("gem 1\ndim 1\nvertices 4\ncolor 0: 0-1 1-2\ncolor 1:\n");
  EXPECT_EQ(e.code(), ErrorCode::duplicate_vertex);
  EXPECT_EQ(e.line(), 4);

  e = parse_error_of("gem 1\ndim 1\nvertices 4\ncolor 0: 0-1\ncolor 1:\n");
  EXPECT_EQ(e.code(), ErrorCode::non_perfect_matching);
  EXPECT_EQ(e.line(), 4);

  e = parse_error_of("gem 2\ndim 1\nvertices 2\ncolor 0: 0-1\ncolor 1:\n");
  EXPECT_EQ(e.code(), ErrorCode::parse_error);
  EXPECT_EQ(e.line(), 1);

  e = parse_error_of("gem 1\ndim 1\nvertices 2\ncolor 1: 0-1\ncolor 0:\n");
  EXPECT_EQ(e.code(), ErrorCode::parse_error);
  EXPECT_EQ(e.line(), 4);

  e = parse_error_of("gem 1\ndim 1\nvertices 2\ncolor 0: 0-1\ncolor 1:\nextra\n");
  EXPECT_EQ(e.code(), ErrorCode::parse_error);
  EXPECT_EQ(e.line(), 6);

  e = parse_error_of("gem 1\ndim 1\nvertices 2\ncolor 0: 0 1\ncolor 1:\n");
  EXPECT_EQ(e.code(), ErrorCode::parse_error);

  e = parse_error_of("gem 1\ndim 1\nvertices 4\ncolor 0: 0-1 2-3\ncolor 1:\n");
  EXPECT_EQ(e.code(), ErrorCode::disconnected);
  EXPECT_GT(e.line(), 0);
  EXPECT_NE(std::string(e.what()).find("DISCONNECTED"), std::string::npos);
}

TEST(Format, RoundTripOnCorpus) {
  for (const auto& [name, g] : fixtures::full_corpus()) {
    SCOPED_TRACE(name);
    const auto text = serialize_gem(g);
    auto back = parse_gem(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.matchings(), g.matchings());
    EXPECT_EQ(serialize_gem(back), text);
  }
  auto prod = product_with_interval(fixtures::rp2_gem());
  EXPECT_EQ(parse_gem(serialize_gem(prod)).matchings(), prod.matchings());
}
