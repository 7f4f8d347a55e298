#include <algorithm>
#include <random>

#include <doctest.h>

#include "rx3/construct.hpp"
#include "rx3/core.hpp"
#include "rx3/serialize.hpp"

using namespace rx3;

TEST_CASE("make_coloring accepts valid inputs") {
  const BipartiteColoring a = make_coloring(3, 3, {{1, 2}, {2, 1}, {1, 3}});
  CHECK(a.t() == 3);
  CHECK(a.k() == 3);
  CHECK(a.code(1) == ColorCode{1, 2});
  CHECK(a.code(3) == ColorCode{1, 3});

  const BipartiteColoring b = make_coloring(1, 2, {{1, 2}});
  CHECK(b.t() == 1);
}

TEST_CASE("make_coloring rejects malformed inputs") {
  // Both defects at once: announced length is wrong and color 4 exceeds k.
  CHECK_THROWS_AS(make_coloring(2, 3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(make_coloring(1, 3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(make_coloring(2, 3, {{1, 2}}), InputError);
  CHECK_THROWS_AS(make_coloring(1, 3, {{0, 2}}), InputError);
  CHECK_THROWS_AS(BipartiteColoring(0, {{1, 1}}), InputError);
  CHECK_THROWS_AS(BipartiteColoring(2, {}), InputError);
}

TEST_CASE("colors_used reports the distinct colors on edges") {
  CHECK(colors_used(make_coloring(2, 2, {{1, 2}, {2, 1}})) == std::vector<Color>{1, 2});
  CHECK(colors_used(make_coloring(1, 1, {{1, 1}})) == std::vector<Color>{1});

  const auto block = five_color_block();
  const BipartiteColoring ten(5, {block.begin(), block.end()});
  CHECK(colors_used(ten) == std::vector<Color>{1, 2, 3, 4, 5});

  // Declared palette may exceed what appears.
  CHECK(colors_used(make_coloring(1, 9, {{3, 7}})) == std::vector<Color>{3, 7});
}

TEST_CASE("colors_used is invariant under reordering the codes") {
  std::vector<ColorCode> codes = {{1, 2}, {3, 1}, {2, 4}, {4, 4}};
  const auto baseline = colors_used(BipartiteColoring(4, codes));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(codes.begin(), codes.end(), rng);
    CHECK(colors_used(BipartiteColoring(4, codes)) == baseline);
  }
}

TEST_CASE("vertex ordering puts W before U") {
  CHECK(Vertex::w(5) < Vertex::u(1));
  CHECK(Vertex::u(1) < Vertex::u(2));
  CHECK(Vertex::w(1) < Vertex::w(2));
  CHECK(Vertex::w(3).name() == "w3");
  CHECK(Vertex::u(2).name() == "u2");
  CHECK_THROWS_AS(Vertex::w(0), InputError);
  CHECK_THROWS_AS(Vertex::u(3), InputError);
}

TEST_CASE("vertex triples sort canonically and classify by W membership") {
  const VertexTriple s(Vertex::u(1), Vertex::w(2), Vertex::w(1));
  CHECK(s.members()[0] == Vertex::w(1));
  CHECK(s.members()[1] == Vertex::w(2));
  CHECK(s.members()[2] == Vertex::u(1));
  CHECK(s.w_count() == 2);
  CHECK(VertexTriple(Vertex::w(1), Vertex::u(1), Vertex::u(2)).w_count() == 1);
  CHECK(VertexTriple(Vertex::w(3), Vertex::w(1), Vertex::w(2)).w_count() == 3);
  CHECK_THROWS_AS(VertexTriple(Vertex::w(1), Vertex::w(1), Vertex::u(1)), InputError);
}

TEST_CASE("witness validation enforces the tree invariants") {
  const BipartiteColoring col(4, {{1, 2}, {3, 4}});
  const VertexTriple s(Vertex::w(1), Vertex::u(1), Vertex::u(2));
  auto w = [](int i) { return Vertex::w(i); };
  auto u = [](int i) { return Vertex::u(i); };

  // A valid 2-edge path witness.
  CHECK(is_valid_witness({{{w(1), u(1), 1}, {w(1), u(2), 2}}}, col, s));
  // Wrong color on an edge.
  CHECK_FALSE(is_valid_witness({{{w(1), u(1), 2}, {w(1), u(2), 2}}}, col, s));
  // Repeated color across edges.
  const BipartiteColoring rep(4, {{1, 1}, {3, 4}});
  CHECK_FALSE(is_valid_witness({{{w(1), u(1), 1}, {w(1), u(2), 1}}}, rep, s));
  // Cycle: all four edges of K_{2,2}.
  CHECK_FALSE(is_valid_witness(
      {{{w(1), u(1), 1}, {w(1), u(2), 2}, {w(2), u(1), 3}, {w(2), u(2), 4}}}, col, s));
  // Does not contain S.
  CHECK_FALSE(is_valid_witness({{{w(2), u(1), 3}, {w(2), u(2), 4}}}, col, s));
  // Extra W-vertex with degree 1 is not minimal.
  CHECK_FALSE(is_valid_witness(
      {{{w(1), u(1), 1}, {w(1), u(2), 2}, {w(2), u(1), 3}}}, col, s));
  // Disconnected edge set is not a tree.
  const BipartiteColoring three(9, {{1, 2}, {3, 4}, {5, 6}});
  const VertexTriple s3(Vertex::w(1), Vertex::w(2), Vertex::w(3));
  CHECK_FALSE(is_valid_witness(
      {{{w(1), u(1), 1}, {w(2), u(1), 3}, {w(3), u(2), 6}}}, three, s3));
}

TEST_CASE("generic graph validation") {
  CHECK_NOTHROW(GenericColoredGraph(3, {{0, 1, 1}, {1, 2, 2}}));
  CHECK_THROWS_AS(GenericColoredGraph(2, {{0, 0, 1}}), InputError);      // loop
  CHECK_THROWS_AS(GenericColoredGraph(2, {{0, 3, 1}}), InputError);      // range
  CHECK_THROWS_AS(GenericColoredGraph(2, {{0, 1, 0}}), InputError);      // color
  CHECK_THROWS_AS(GenericColoredGraph(2, {{0, 1, 1}, {1, 0, 2}}), InputError);  // dup
}

TEST_CASE("JSON round-trip preserves colorings exactly") {
  auto same = [](const BipartiteColoring& a, const BipartiteColoring& b) {
    return a.t() == b.t() && a.k() == b.k() &&
           std::equal(a.codes().begin(), a.codes().end(), b.codes().begin(),
                      b.codes().end());
  };
  for (long long t = 1; t <= 25; ++t) {
    const BipartiteColoring c = construct_coloring(t);
    CHECK(same(c, parse_coloring(to_json(c))));
  }
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<ColorCode> codes;
    for (int i = 0; i < t; ++i)
      codes.push_back({1 + static_cast<int>(rng() % k), 1 + static_cast<int>(rng() % k)});
    const BipartiteColoring c(k, std::move(codes));
    CHECK(same(c, parse_coloring(to_json(c))));
  }
}

TEST_CASE("parse_coloring rejects malformed documents") {
  CHECK_THROWS_AS(parse_coloring("not json"), InputError);
  CHECK_THROWS_AS(parse_coloring("[1,2]"), InputError);
  CHECK_THROWS_AS(parse_coloring(R"({"t":1,"k":2})"), InputError);
  CHECK_THROWS_AS(parse_coloring(R"({"t":1,"k":2,"codes":[[1]]})"), InputError);
  CHECK_THROWS_AS(parse_coloring(R"({"t":2,"k":2,"codes":[[1,2]]})"), InputError);
  CHECK_THROWS_AS(parse_coloring(R"({"t":1,"k":2,"codes":[[1,3]]})"), InputError);
  CHECK_THROWS_AS(parse_coloring(R"({"t":1.5,"k":2,"codes":[[1,2]]})"), InputError);
}

TEST_CASE("JSON serialization is byte-stable") {
  const BipartiteColoring c = make_coloring(2, 3, {{1, 2}, {2, 1}});
  CHECK(to_json(c) == R"({"t":2,"k":3,"codes":[[1,2],[2,1]]})");
}
