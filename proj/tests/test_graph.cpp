#include "ekr/error.hpp"
#include "ekr/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace ekr;

namespace {

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("expected an ekr::Error");
  return ErrorKind::PreconditionViolated;
}

} // namespace

TEST_CASE("graph6 decodes the 5-vertex example and re-emits it byte-exactly") {
  Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  int n = 0;
  auto expected = oracle::graph6_decode("D?{", n);
  CHECK(n == 5);
  CHECK(g.edges() == expected);
  // vertex 4 joined to everything else
  CHECK(g.degree(4) == 4);
  CHECK(g.edge_count() == 4);
  CHECK(emit_graph6(g) == "D?{");
}

TEST_CASE("graph6 smallest code and error kinds") {
  Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(emit_graph6(one) == "@");

  CHECK(kind_of([] { parse_graph6(std::string("D?") + char(30)); }) == ErrorKind::Graph6MalformedByte);
  CHECK(kind_of([] { parse_graph6("D?{?"); }) == ErrorKind::Graph6TrailingGarbage);
  CHECK(kind_of([] { parse_graph6("D?"); }) == ErrorKind::Graph6Truncated);
  CHECK(kind_of([] { parse_graph6("~?"); }) == ErrorKind::Graph6MalformedHeader);
  CHECK(kind_of([] { parse_graph6(""); }) == ErrorKind::Graph6MalformedHeader);
  // n = 129 in the 4-byte header form
  CHECK(kind_of([] { parse_graph6("~?BB"); }) == ErrorKind::TooManyVertices);
  CHECK(parse_graph6("D?{\n").order() == 5);
}

TEST_CASE("graph6 agrees with the independent encoder and round-trips") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 40;
    Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string code = emit_graph6(g);
    CHECK(code == oracle::graph6_encode(n, g.edges()));
    Graph back = parse_graph6(code);
    CHECK(back == g);
    CHECK(emit_graph6(back) == code);
  }
  // long header for n >= 63
  for (int n : {63, 100, 128}) {
    Graph g = oracle::random_graph(n, 0.1, rng);
    const std::string code = emit_graph6(g);
    CHECK(code[0] == '~');
    CHECK(parse_graph6(code) == g);
  }
}

TEST_CASE("edge-list files") {
  Graph g = parse_edge_list("# comment\n0 1\n1 2\n\n5\n");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 2);
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK(kind_of([] { parse_edge_list("0 1 2\n"); }) == ErrorKind::BadEdgeList);
  CHECK(kind_of([] { parse_edge_list("0 x\n"); }) == ErrorKind::BadEdgeList);
  CHECK(kind_of([] { parse_edge_list("1 1\n"); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("graph construction rejects loops, duplicates and bad endpoints") {
  CHECK(kind_of([] { Graph(3, {{0, 0}}); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { Graph(129, std::vector<Edge>{}); }) == ErrorKind::TooManyVertices);
}

TEST_CASE("generators") {
  Graph t = generate("tristar:1");
  CHECK(t.order() == 10);
  CHECK(t.degree(0) == 3);
  t.neighbors(0).for_each([&](int root) { CHECK(t.degree(root) == 3); });
  CHECK(t.is_tree());

  Graph s = generate("spider:2,2,2");
  CHECK(s.order() == 7);
  CHECK(s.degree(0) == 3);
  CHECK(s.split_vertices().size() == 1);
  CHECK(kind_of([] { generate("spider:1,1"); }) == ErrorKind::BadGeneratorArgument);

  CHECK(generate("empty:4").edge_count() == 0);
  CHECK(generate("path:5").edge_count() == 4);
  CHECK(generate("cycle:5").edge_count() == 5);
  CHECK(generate("star:3").degree(0) == 3);
  Graph k33 = generate("kpartite:3,3");
  CHECK(k33.edge_count() == 9);
  CHECK(generate("kpartite:2,2,2").edge_count() == 12);

  CHECK(kind_of([] { generate("wheel:5"); }) == ErrorKind::UnknownGenerator);
  CHECK(kind_of([] { generate("path"); }) == ErrorKind::UnknownGenerator);
  CHECK(kind_of([] { generate("path:x"); }) == ErrorKind::BadGeneratorArgument);
  CHECK(kind_of([] { generate("path:129"); }) == ErrorKind::TooManyVertices);
  CHECK(kind_of([] { generate("tristar:5"); }) == ErrorKind::TooManyVertices);
  CHECK(kind_of([] { generate("kpartite:64,65"); }) == ErrorKind::TooManyVertices);
}

TEST_CASE("tristar split census") {
  for (int h = 0; h <= 4; ++h) {
    Graph t = generate("tristar:" + std::to_string(h));
    CHECK(t.order() == 1 + 3 * ((1 << (h + 1)) - 1));
    int census = 0;
    for (int v = 0; v < t.order(); ++v)
      census += t.degree(v) >= 3;
    CHECK(t.split_vertices().size() == census);
    // w, the three roots (h >= 1) and every non-root internal node
    CHECK(census == 3 * (1 << h) - 2);
  }
}

TEST_CASE("spider numbering convention") {
  SpiderSpec s({3, 1, 2});
  CHECK(s.order_count() == 7);
  CHECK(s.first_on_leg(0) == 1);
  CHECK(s.leaf(0) == 3);
  CHECK(s.leaf(1) == 4);
  CHECK(s.first_on_leg(2) == 5);
  CHECK(s.leaf(2) == 6);
  Graph g = s.graph();
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 3));
  CHECK(g.adjacent(0, 5));
  CHECK(g.adjacent(5, 6));
  CHECK(*distance(g, 0, 3) == 3);
}

TEST_CASE("spider order") {
  auto apply = [](std::vector<int> legs) {
    std::vector<int> out;
    for (int i : spider_order(legs))
      out.push_back(legs[i]);
    return out;
  };
  CHECK(apply({2, 1, 3}) == std::vector<int>{1, 3, 2});
  CHECK(apply({4, 2, 6}) == std::vector<int>{6, 4, 2});
  CHECK(apply({1, 1, 1}) == std::vector<int>{1, 1, 1});
  CHECK(spider_order(std::vector<int>{1, 1, 1}) == std::vector<int>{0, 1, 2});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> legs(3 + trial % 6);
    for (auto &l : legs)
      l = std::uniform_int_distribution<int>(1, 7)(rng);
    auto sorted = apply(legs);
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = 0; j < sorted.size(); ++j) {
        const int a = sorted[i], b = sorted[j];
        if (a % 2 == 1 && b % 2 == 1 && a < b)
          CHECK(i < j);
        if (a % 2 == 0 && b % 2 == 0 && a < b)
          CHECK(i > j);
        if (a % 2 == 1 && b % 2 == 0)
          CHECK(i < j);
      }
  }
}

TEST_CASE("distance") {
  Graph p5 = generate("path:5");
  CHECK(*distance(p5, 0, 4) == 4);
  CHECK(*distance(p5, 2, 2) == 0);
  CHECK_FALSE(distance(generate("empty:3"), 0, 1).has_value());
  CHECK(kind_of([&] { distance(p5, 0, 5); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([&] { distance(p5, -1, 0); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("params on named graphs") {
  GraphParams p6 = params(generate("path:6"));
  CHECK(p6.mu == 2);
  CHECK(p6.alpha == 3);

  GraphParams sp = params(generate("spider:2,2,2"));
  CHECK(sp.mu == 3);
  CHECK(sp.alpha == 4);
  CHECK(3 * sp.mu >= 7 - 1);
  CHECK(sp.split_count == 1);

  GraphParams k33 = params(generate("kpartite:3,3"));
  CHECK(k33.mu == 3);
  CHECK(k33.alpha == 3);
  CHECK(k33.max_degree == 3);
  CHECK(k33.edge_count == 9);

  CHECK(kind_of([] { params(generate("path:41")); }) == ErrorKind::SearchLimitExceeded);
}

TEST_CASE("paths: mu = ceil(n/3), alpha = ceil(n/2), against brute force") {
  for (int n = 1; n <= 20; ++n) {
    Graph p = generate("path:" + std::to_string(n));
    GraphParams gp = params(p);
    CHECK(gp.mu == (n + 2) / 3);
    CHECK(gp.alpha == (n + 1) / 2);
    if (n <= 14) {
      CHECK(gp.mu == oracle::mu(p));
      CHECK(gp.alpha == oracle::alpha(p));
    }
  }
}

TEST_CASE("params match brute force on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 14;
    Graph g = oracle::random_graph(n, 0.15 + 0.1 * (trial % 5), rng);
    GraphParams gp = params(g);
    CHECK(gp.alpha == oracle::alpha(g));
    CHECK(gp.mu == oracle::mu(g));
    CHECK(gp.mu <= gp.alpha);
  }
}

TEST_CASE("spider mu against (n-1)/3 over every leg multiset up to n = 12") {
  // The bound needs long legs: a star K_{1,k} has mu = 1.
  CHECK(params(generate("star:5")).mu == 1);
  std::vector<int> legs;
  std::function<void(int, int)> rec = [&](int left, int max_leg) {
    if (left == 0 && legs.size() >= 3) {
      Graph g = SpiderSpec(legs).graph();
      GraphParams gp = params(g);
      CHECK(gp.split_count == 1);
      CHECK(gp.mu == oracle::mu(g));
      if (legs.back() >= 2)
        CHECK(3 * gp.mu >= g.order() - 1);
      return;
    }
    for (int l = std::min(left, max_leg); l >= 1; --l) {
      legs.push_back(l);
      rec(left - l, l);
      legs.pop_back();
    }
  };
  for (int n = 4; n <= 12; ++n)
    rec(n - 1, n - 1);
}

TEST_CASE("automorphism group orders") {
  auto order = [](const char *spec) {
    auto group = automorphisms(generate(spec), 1'000'000, 50'000'000);
    REQUIRE(group.has_value());
    return group->size();
  };
  CHECK(order("cycle:7") == 14);
  CHECK(order("path:6") == 2);
  CHECK(order("empty:6") == 720);
  CHECK(order("kpartite:3,3") == 72);
  CHECK(order("kpartite:2,3") == 12);
  CHECK(order("spider:2,2,2") == 6);
  CHECK(order("spider:1,2,3") == 1);
  CHECK(order("tristar:1") == 48);

  Graph c5 = generate("cycle:5");
  const auto c5_group = automorphisms(c5, 100, 1000);
  REQUIRE(c5_group.has_value());
  for (const auto &perm : *c5_group)
    for (auto [u, v] : c5.edges())
      CHECK(c5.adjacent(perm[u], perm[v]));

  CHECK_FALSE(automorphisms(generate("empty:8"), 1000, 1'000'000).has_value());
  CHECK_FALSE(automorphisms(generate("empty:8"), 1'000'000, 100).has_value());
}
