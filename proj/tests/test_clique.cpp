#include "ekr/clique.hpp"
#include "ekr/families.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ekr;

namespace {

CliqueProblem random_problem(int m, double p, std::mt19937_64 &rng) {
  CliqueProblem pr;
  pr.adj.assign(m, Bits(m));
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (coin(rng)) {
        pr.adj[i].set(j);
        pr.adj[j].set(i);
      }
  return pr;
}

int brute_clique(const CliqueProblem &pr) {
  const int m = pr.size();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (mask >> i & 1U)
        for (int j = i + 1; j < m && ok; ++j)
          if ((mask >> j & 1U) && !pr.adj[i].test(j))
            ok = false;
    if (ok)
      best = std::max(best, std::popcount(mask));
  }
  return best;
}

CliqueProblem intersection_problem(const Family &f) {
  CliqueProblem pr;
  const int m = static_cast<int>(f.size());
  pr.adj.assign(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && f[i].intersects(f[j]))
        pr.adj[i].set(j);
  return pr;
}

} // namespace

TEST_CASE("Bits basics") {
  Bits b(130);
  CHECK(b.none());
  CHECK(b.first() == -1);
  b.set(3);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == 3);
  CHECK(b.indices() == std::vector<int>{3, 64, 129});
  Bits c(130);
  c.set(64);
  CHECK(b.intersects(c));
  b.and_not(c);
  CHECK_FALSE(b.intersects(c));
  b.and_with(c);
  CHECK(b.none());
}

TEST_CASE("max clique matches brute force on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 18;
    CliqueProblem pr = random_problem(m, 0.2 + 0.1 * (trial % 7), rng);
    CliqueResult res = max_clique(pr, {});
    CHECK(res.complete);
    CHECK(int(res.clique.size()) == brute_clique(pr));
    CHECK(std::is_sorted(res.clique.begin(), res.clique.end()));
    for (std::size_t i = 0; i < res.clique.size(); ++i)
      for (std::size_t j = i + 1; j < res.clique.size(); ++j)
        CHECK(pr.adj[res.clique[i]].test(res.clique[j]));
  }
}

TEST_CASE("must_exceed filters out small cliques") {
  std::mt19937_64 rng(43);
  CliqueProblem pr = random_problem(15, 0.5, rng);
  const int best = brute_clique(pr);
  CliqueOptions opt;
  opt.must_exceed = best;
  CHECK(max_clique(pr, opt).clique.empty());
  opt.must_exceed = best - 1;
  CHECK(int(max_clique(pr, opt).clique.size()) == best);
}

TEST_CASE("node budget is reported as incomplete") {
  std::mt19937_64 rng(47);
  CliqueProblem pr = random_problem(120, 0.9, rng);
  CliqueOptions opt;
  opt.max_nodes = 50;
  CliqueResult res = max_clique(pr, opt);
  CHECK_FALSE(res.complete);
  CHECK(res.nodes >= 50);
}

TEST_CASE("empty-intersection constraint matches the naive subfamily oracle") {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 120; ++trial) {
    const int n = 4 + trial % 6;
    Graph g = oracle::random_graph(n, 0.25, rng);
    for (int r = 2; r <= 3; ++r) {
      Family f = enum_independent_rsets(FamilyQuery(g, r));
      if (f.empty() || f.size() > 20)
        continue;
      CliqueProblem pr = intersection_problem(f);
      CliqueOptions opt;
      opt.require_empty_intersection = true;
      opt.members = &f;
      CliqueResult res = max_clique(pr, opt);
      CHECK(res.complete);
      CHECK(int(res.clique.size()) == oracle::max_intersecting_subfamily(f, true));
      if (!res.clique.empty()) {
        VertexSet common = f[res.clique[0]];
        for (int i : res.clique)
          common &= f[i];
        CHECK(common.empty());
      }
      CHECK(int(max_clique(pr, {}).clique.size()) == oracle::max_intersecting_subfamily(f));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

namespace {

class TableSymmetry final : public CandidateSymmetry {
public:
  explicit TableSymmetry(std::vector<std::vector<int>> perms) : perms_(std::move(perms)) {}
  std::size_t order() const override { return perms_.size(); }
  int apply(std::size_t e, int c) const override { return perms_[e][c]; }

private:
  std::vector<std::vector<int>> perms_;
};

} // namespace

TEST_CASE("orbital branching gives the same optimum as plain search") {
  std::mt19937_64 rng(59);
  for (const char *spec : {"empty:7", "cycle:8", "kpartite:3,3", "kpartite:2,2,3", "tristar:1",
                           "spider:2,2,2,1", "empty:8"}) {
    Graph g = generate(spec);
    auto group = automorphisms(g, 100'000, 10'000'000);
    REQUIRE(group.has_value());
    for (int r = 2; r <= 4; ++r) {
      Family f = enum_independent_rsets(FamilyQuery(g, r));
      if (f.size() < 2)
        continue;
      std::vector<std::vector<int>> table;
      for (const auto &perm : *group) {
        std::vector<int> row(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
          VertexSet img;
          f[i].for_each([&](int v) { img.insert(perm[v]); });
          row[i] = int(std::lower_bound(f.begin(), f.end(), img) - f.begin());
        }
        table.push_back(std::move(row));
      }
      TableSymmetry sym(std::move(table));
      CliqueProblem pr = intersection_problem(f);
      for (bool nonstar : {false, true}) {
        CliqueOptions plain;
        plain.require_empty_intersection = nonstar;
        plain.members = &f;
        CliqueOptions orbital = plain;
        orbital.symmetry = &sym;
        CliqueResult a = max_clique(pr, plain);
        CliqueResult b = max_clique(pr, orbital);
        CHECK(a.complete);
        CHECK(b.complete);
        CHECK(a.clique.size() == b.clique.size());
        for (std::size_t i = 0; i < b.clique.size(); ++i)
          for (std::size_t j = i + 1; j < b.clique.size(); ++j)
            CHECK(f[b.clique[i]].intersects(f[b.clique[j]]));
        if (f.size() <= 24)
          CHECK(int(b.clique.size()) == oracle::max_intersecting_subfamily(f, nonstar));
      }
    }
  }
}
