#include "ekr/error.hpp"
#include "ekr/families.hpp"
#include "ekr/trees.hpp"
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

std::vector<std::vector<int>> all_spider_legs(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> legs;
  std::function<void(int, int)> rec = [&](int left, int max_leg) {
    if (left == 0) {
      if (legs.size() >= 3)
        out.push_back(legs);
      return;
    }
    for (int l = std::min(left, max_leg); l >= 1; --l) {
      legs.push_back(l);
      rec(left - l, l);
      legs.pop_back();
    }
  };
  rec(n - 1, n - 1);
  return out;
}

} // namespace

TEST_CASE("enumeration of P4, r = 2") {
  Graph p4 = generate("path:4");
  Family f = enum_independent_rsets(FamilyQuery(p4, 2));
  CHECK(f == Family{VertexSet::of({0, 2}), VertexSet::of({0, 3}), VertexSet::of({1, 3})});
  CHECK(count_independent_rsets(FamilyQuery(p4, 2)) == 3);
}

TEST_CASE("r = 0 yields the empty set") {
  for (const char *spec : {"path:5", "kpartite:3,3", "empty:1"}) {
    Family f = enum_independent_rsets(FamilyQuery(generate(spec), 0));
    REQUIRE(f.size() == 1);
    CHECK(f[0].empty());
  }
}

TEST_CASE("anchored and forbidden queries") {
  Graph k33 = generate("kpartite:3,3");
  Family f = enum_independent_rsets(FamilyQuery(k33, 2, 0));
  CHECK(f == Family{VertexSet::of({0, 1}), VertexSet::of({0, 2})});

  Family g = enum_independent_rsets(FamilyQuery(k33, 2, 0, VertexSet::single(1)));
  CHECK(g == Family{VertexSet::of({0, 2})});

  CHECK(kind_of([&] { FamilyQuery(k33, 2, 0, VertexSet::single(0)); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { FamilyQuery(k33, 7); }) == ErrorKind::InvalidSetSize);
  CHECK(kind_of([&] { FamilyQuery(k33, -1); }) == ErrorKind::InvalidSetSize);
  CHECK(kind_of([&] { FamilyQuery(k33, 2, 6); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("enumeration matches brute force, is sorted and duplicate-free") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 16;
    Graph g = oracle::random_graph(n, 0.25, rng);
    for (int r = 0; r <= n; ++r) {
      Family f = enum_independent_rsets(FamilyQuery(g, r));
      auto expected = oracle::independent_rsets(g, r);
      std::sort(expected.begin(), expected.end());
      CHECK(f == expected);
      CHECK(std::is_sorted(f.begin(), f.end()));
      CHECK(count_independent_rsets(FamilyQuery(g, r)) == f.size());
    }
    std::vector<VertexSet> all = oracle::all_independent_sets(g);
    std::sort(all.begin(), all.end());
    CHECK(enum_independent_sets(g) == all);
  }
}

TEST_CASE("early stop") {
  int seen = 0;
  for_each_independent_rset(FamilyQuery(generate("empty:10"), 3), [&](const VertexSet &) {
    return ++seen < 5;
  });
  CHECK(seen == 5);
}

TEST_CASE("path closed form") {
  CHECK(count_path_rsets(4, 2) == 3);
  CHECK(count_path_rsets(5, 2) == 6);
  for (int m = 0; m <= 18; ++m)
    CHECK(count_path_rsets(m, 0) == 1);
  for (int m = 1; m <= 18; ++m) {
    Graph p = generate("path:" + std::to_string(m));
    for (int r = 0; r <= m + 1; ++r) {
      const std::size_t enumerated =
          r <= m ? enum_independent_rsets(FamilyQuery(p, r)).size() : 0;
      CHECK(count_path_rsets(m, r) == enumerated);
    }
  }
  // P_0 only has the empty set
  CHECK(count_path_rsets(0, 1) == 0);
}

TEST_CASE("star sizes from the worked examples") {
  Graph k13 = generate("star:3");
  CHECK(star_size(k13, 1, 2).count == 2);
  CHECK(star_size(k13, 1, 2).count == binom(4 - 2, 2 - 1));

  Graph sp = generate("spider:2,2,2");
  CHECK(star_size(sp, SpiderSpec({2, 2, 2}).leaf(0), 2).count == 5);
  const std::vector<int> s2{3, 4, 5, 4, 5, 4, 5};
  for (int v = 0; v < 7; ++v)
    CHECK(star_size(sp, v, 2).count == s2[v]);

  Graph sp122 = generate("spider:1,2,2");
  const std::vector<int> s2b{2, 4, 3, 4, 3, 4};
  for (int v = 0; v < 6; ++v)
    CHECK(star_size(sp122, v, 2).count == s2b[v]);

  Graph p10 = generate("path:10");
  CHECK(star_size(p10, 0, 3).count == 21);
  CHECK(star_size(p10, 0, 3).count == count_path_rsets(8, 2));

  Graph p4 = generate("path:4");
  CHECK(star_size_tree_dp(p4, 0, 2).count == 2);
  CHECK(star_size_tree_dp(p4, 0, 2).method == CountMethod::TreeDp);

  Graph tri = generate("tristar:1");
  CHECK(star_size_tree_dp(tri, 0, 2).count == 6);
  for (int v = 0; v < tri.order(); ++v)
    CHECK(star_size_tree_dp(tri, v, 1).count == 1);

  CHECK(star_size(generate("cycle:5"), 0, 2).method == CountMethod::Enumeration);
  CHECK(star_size(p10, 0, 2).method == CountMethod::TreeDp);
  CHECK(kind_of([&] { star_size(p10, 10, 2); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { star_size_tree_dp(generate("cycle:5"), 0, 2); }) == ErrorKind::NotAForest);
}

TEST_CASE("tree DP agrees with enumeration and brute force on every tree up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph &t : free_trees(n)) {
      const int a = forest_independence_number(t);
      CHECK(a == oracle::alpha(t));
      for (int r = 0; r <= a; ++r) {
        std::vector<BigCount> all = star_sizes_tree_dp(t, r);
        for (int v = 0; v < n; ++v) {
          const BigCount dp = star_size_tree_dp(t, v, r).count;
          CHECK(dp == star_size_enumerated(t, v, r).count);
          CHECK(dp == all[v]);
          if (n <= 8)
            CHECK(dp == oracle::star_count(t, v, r));
        }
      }
    }
  }
}

TEST_CASE("tree DP agrees with enumeration on random trees and forests up to n = 16") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 11 + trial % 6;
    Graph t = oracle::random_tree(n, rng);
    if (trial % 3 == 0) {
      // drop a couple of edges to get a forest
      auto edges = t.edges();
      edges.erase(edges.begin() + trial % edges.size());
      edges.erase(edges.begin() + (trial / 3) % edges.size());
      t = Graph(n, edges);
    }
    const int a = forest_independence_number(t);
    CHECK(a == independence_number(t));
    for (int r = 0; r <= a; ++r)
      for (int v = 0; v < n; ++v)
        CHECK(star_size_tree_dp(t, v, r).count == star_size_enumerated(t, v, r).count);
  }
}

TEST_CASE("tree DP on large trees stays exact past 64 bits") {
  Graph e = generate("star:120");
  // a leaf of K_{1,120}: the other 119 leaves are free
  CHECK(star_size_tree_dp(e, 1, 40).count == binom(119, 39));
  CHECK(binom(119, 39) > BigCount(std::numeric_limits<std::uint64_t>::max()));
  Graph p = generate("path:128");
  CHECK(star_size_tree_dp(p, 0, 30).count == count_path_rsets(126, 29));
}

TEST_CASE("double counting: sum of star sizes is r |I^r|") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 14;
    Graph g = trial % 2 ? oracle::random_graph(n, 0.3, rng) : oracle::random_tree(n, rng);
    for (int r = 0; r <= n; ++r) {
      BigCount sum = 0;
      for (int v = 0; v < n; ++v)
        sum += star_size(g, v, r).count;
      CHECK(sum == r * count_independent_rsets(FamilyQuery(g, r)));
    }
  }
}

TEST_CASE("merge_paths examples") {
  SpiderSpec s({2, 2, 2});
  MergedPath a = merge_paths(s, MergeMode::WithoutCenter);
  CHECK(a.graph.order() == 6);
  CHECK(a.graph.is_tree());
  CHECK(a.graph.max_degree() <= 2);
  CHECK(a.joining_edges.size() == 2);
  CHECK(a.path_order.size() == 6);

  MergedPath b = merge_paths(s, MergeMode::WithCenter);
  CHECK(b.graph.order() == 3);
  CHECK(b.graph.max_degree() <= 2);
  CHECK(b.graph.is_tree());
  for (int v : b.original)
    CHECK(s.graph().degree(v) == 1);

  CHECK(kind_of([] { merge_paths(SpiderSpec({1, 1, 2}), MergeMode::WithCenter); }) ==
        ErrorKind::PreconditionViolated);
}

TEST_CASE("merge_paths gives one path and the surgery inequalities hold for every spider up to n = 14") {
  for (int n = 4; n <= 14; ++n) {
    for (const auto &legs : all_spider_legs(n)) {
      SpiderSpec s(legs);
      Graph sg = s.graph();
      const int k = s.leg_count();
      const int a = forest_independence_number(sg);
      const int v = s.leaf(s.order().back());

      MergedPath m = merge_paths(s, MergeMode::WithoutCenter);
      REQUIRE(m.graph.order() == n - 1);
      CHECK(m.graph.is_tree());
      CHECK(m.graph.max_degree() <= 2);
      CHECK(m.joining_edges.size() == std::size_t(k - 1));
      CHECK(s.graph().degree(m.original[m.last_leaf]) == 1);
      CHECK(m.original[m.last_leaf] == v);

      std::vector<int> w_removed_index;
      Graph minus_w = sg.induced(sg.vertices() - VertexSet::single(0), &w_removed_index);
      const int vi = int(std::find(w_removed_index.begin(), w_removed_index.end(), v) -
                         w_removed_index.begin());

      const bool long_last = legs[s.order().back()] >= 2;
      for (int r = 1; r <= a; ++r) {
        const BigCount lhs = star_size_tree_dp(minus_w, vi, r).count;
        CHECK(lhs >= star_size_tree_dp(m.graph, m.last_leaf, r).count);
        CHECK(lhs >= count_path_rsets(n - 3, r - 1));
      }
      if (!long_last)
        continue;
      bool all_long = std::all_of(legs.begin(), legs.end(), [](int l) { return l >= 2; });
      if (!all_long)
        continue;
      MergedPath mc = merge_paths(s, MergeMode::WithCenter);
      REQUIRE(mc.graph.order() == n - 1 - k);
      CHECK(mc.graph.max_degree() <= 2);
      CHECK(mc.graph.is_tree());
      std::vector<int> nw_index;
      Graph minus_nw = sg.induced(sg.vertices() - sg.closed_neighbors(0), &nw_index);
      const int vj =
          int(std::find(nw_index.begin(), nw_index.end(), v) - nw_index.begin());
      for (int r = 2; r <= a; ++r) {
        const BigCount lhs = star_size_tree_dp(minus_nw, vj, r - 1).count;
        CHECK(lhs >= star_size_tree_dp(mc.graph, mc.last_leaf, r - 1).count);
        CHECK(lhs >= count_path_rsets(n - 3 - k, r - 2));
      }
    }
  }
}

TEST_CASE("splitstar_witness on the H-tree") {
  // w1 = 0, w2 = 1, leaves a = 2, b = 3 on w1 and c = 4, d = 5 on w2
  Graph h(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  SplitMerge sm = merge_split_paths(h);
  CHECK(sm.split == VertexSet::of({0, 1}));
  CHECK(sm.joining_edges.size() == 3);
  const auto [u1, u2] = sm.joining_edges.front();
  for (const VertexSet &a : enum_independent_rsets(FamilyQuery(sm.merged, 2, std::nullopt, sm.split))) {
    VertexSet out = splitstar_witness(h, sm.split, sm.merged, a);
    CHECK(out == VertexSet::of({u1, u2}));
  }
  // fixed point
  VertexSet fixed = VertexSet::of({u1, u2});
  CHECK_FALSE(sm.merged.is_independent(fixed));
  CHECK(kind_of([&] { splitstar_witness(h, sm.split, sm.merged, fixed); }) ==
        ErrorKind::PreconditionViolated);
}

TEST_CASE("splitstar_witness preconditions") {
  Graph sp = generate("spider:2,2,2");
  SplitMerge sm = merge_split_paths(generate("tristar:1"));
  CHECK(kind_of([&] { splitstar_witness(sp, sp.split_vertices(), sp, VertexSet::of({1, 3})); }) ==
        ErrorKind::PreconditionViolated);
  Graph tri = generate("tristar:1");
  CHECK(kind_of([&] { splitstar_witness(tri, sm.split, sm.merged, VertexSet::of({4})); }) ==
        ErrorKind::InvalidSetSize);
}

TEST_CASE("splitstar_witness: independent in T - W, same size, hits the joining pair") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 2000; ++trial) {
    const int n = 6 + trial % 11;
    Graph t = oracle::random_tree(n, rng);
    if (t.split_vertices().size() < 2)
      continue;
    SplitMerge sm = merge_split_paths(t);
    const VertexSet rest = t.vertices() - sm.split;
    CHECK(sm.merged.induced(rest).is_tree());
    CHECK(sm.merged.induced(rest).max_degree() <= 2);
    const auto [u1, u2] = sm.joining_edges.front();
    CHECK_FALSE(t.adjacent(u1, u2));
    for (int r = 2; r <= 4; ++r) {
      for (const VertexSet &a :
           enum_independent_rsets(FamilyQuery(sm.merged, r, std::nullopt, sm.split))) {
        VertexSet out = splitstar_witness(t, sm.split, sm.merged, a);
        CHECK(out.size() == r);
        CHECK(t.is_independent(out));
        CHECK_FALSE(out.intersects(sm.split));
        CHECK(out.contains(u1));
        CHECK(out.contains(u2));
        CHECK_FALSE(sm.merged.is_independent(out));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("family text format round-trips") {
  Family f{VertexSet::of({0, 2, 5}), VertexSet(), VertexSet::of({127})};
  const std::string text = format_family(f);
  CHECK(text == "{0,2,5}\n{}\n{127}\n");
  CHECK(parse_family(text) == f);
}
