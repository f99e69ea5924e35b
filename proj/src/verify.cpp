#include "ekr/verify.hpp"
#include "ekr/clique.hpp"
#include "ekr/error.hpp"
#include "ekr/families.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

namespace ekr {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::Ekr: return "ekr";
  case Verdict::NotEkr: return "not_ekr";
  case Verdict::StrictlyEkr: return "strictly_ekr";
  case Verdict::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

StarCenter is_star(const Family &f) {
  if (f.empty())
    return {std::nullopt, true};
  VertexSet common = f.front();
  for (const auto &s : f)
    common &= s;
  if (common.empty())
    return {std::nullopt, false};
  return {common.first(), false};
}

bool is_intersecting(const Family &f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!f[i].intersects(f[j]))
        return false;
  return true;
}

namespace {

CliqueProblem intersection_graph(const Family &candidates) {
  const int m = static_cast<int>(candidates.size());
  CliqueProblem p;
  p.adj.assign(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (candidates[i].intersects(candidates[j])) {
        p.adj[i].set(j);
        p.adj[j].set(i);
      }
  return p;
}

/// Vertex automorphisms of G acting on the candidate sets.
class VertexSymmetry final : public CandidateSymmetry {
public:
  VertexSymmetry(std::vector<std::vector<std::uint8_t>> perms, const Family &candidates)
      : perms_(std::move(perms)), candidates_(candidates) {
    index_.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
      index_.emplace(candidates[i], static_cast<int>(i));
  }
  std::size_t order() const override { return perms_.size(); }
  int apply(std::size_t element, int candidate) const override {
    const auto &perm = perms_[element];
    VertexSet img;
    candidates_[candidate].for_each([&](int v) { img.insert(perm[v]); });
    return index_.at(img);
  }

private:
  std::vector<std::vector<std::uint8_t>> perms_;
  const Family &candidates_;
  std::unordered_map<VertexSet, int, VertexSetHash> index_;
};

constexpr std::size_t kMaxGroupElements = 400'000;
constexpr std::uint64_t kMaxAutomorphismSteps = 4'000'000;

struct Universe {
  Family candidates;
  std::vector<std::uint64_t> star; // per-vertex full-star size
  int best_vertex = -1;
  std::uint64_t best_star = 0;
  CliqueProblem problem;
  std::unique_ptr<VertexSymmetry> symmetry;
};

Universe make_universe(const Graph &g, Family candidates) {
  Universe u;
  u.candidates = std::move(candidates);
  u.star.assign(g.order(), 0);
  for (const auto &s : u.candidates)
    s.for_each([&](int v) { ++u.star[v]; });
  for (int v = 0; v < g.order(); ++v)
    if (u.best_vertex < 0 || u.star[v] > u.best_star) {
      u.best_vertex = v;
      u.best_star = u.star[v];
    }
  u.problem = intersection_graph(u.candidates);
  const std::size_t cap = std::min<std::size_t>(kMaxGroupElements, 20'000'000 / g.order());
  if (auto group = automorphisms(g, cap, kMaxAutomorphismSteps); group && group->size() > 1)
    u.symmetry = std::make_unique<VertexSymmetry>(std::move(*group), u.candidates);
  return u;
}

Universe uniform_universe(const Graph &g, int r) {
  if (r < 1 || r > g.order())
    throw Error(ErrorKind::InvalidSetSize,
                "r must satisfy 1 <= r <= alpha(G), got r = " + std::to_string(r));
  Family cands = enum_independent_rsets(FamilyQuery(g, r));
  if (cands.empty())
    throw Error(ErrorKind::InvalidSetSize,
                "r = " + std::to_string(r) + " exceeds the independence number");
  return make_universe(g, std::move(cands));
}

Family full_star(const Universe &u, int x) {
  Family out;
  for (const auto &s : u.candidates)
    if (s.contains(x))
      out.push_back(s);
  return out;
}

Family pick(const Universe &u, const std::vector<int> &indices) {
  Family out;
  for (int i : indices)
    out.push_back(u.candidates[i]);
  std::sort(out.begin(), out.end());
  return out;
}

CliqueResult search_nonstar(const Universe &u, int must_exceed, std::uint64_t max_nodes) {
  CliqueOptions opt;
  opt.max_nodes = max_nodes;
  opt.must_exceed = std::max(must_exceed, 0);
  opt.require_empty_intersection = true;
  opt.members = &u.candidates;
  opt.symmetry = u.symmetry.get();
  return max_clique(u.problem, opt);
}

/// Largest nonstar family above `floor`, first trying above the size hint.
CliqueResult search_with_hint(const Universe &u, int floor, const SearchBudget &budget) {
  const auto &hint = budget.max_family_size_hint;
  if (!hint || static_cast<std::int64_t>(*hint) - 1 <= floor)
    return search_nonstar(u, floor, budget.max_nodes);
  CliqueResult res = search_nonstar(u, static_cast<int>(*hint - 1), budget.max_nodes);
  if (res.complete && res.clique.empty()) {
    const std::uint64_t spent = res.nodes;
    const std::uint64_t left = budget.max_nodes > spent ? budget.max_nodes - spent : 0;
    res = left == 0 ? CliqueResult{{}, false, 0} : search_nonstar(u, floor, left);
    res.nodes += spent;
  }
  return res;
}

EkrReport base_report(const Universe &u, int r) {
  EkrReport rep;
  rep.r = r;
  rep.max_star_vertex = u.best_vertex;
  rep.max_star_size = u.best_star;
  return rep;
}

// A family with a common element x lies inside the full star I_x, so a
// family larger than every full star has empty total intersection. The
// searches below therefore only look at nonstar families.
EkrReport search_unrestricted(const Universe &u, int r, const SearchBudget &budget) {
  EkrReport rep = base_report(u, r);
  CliqueResult res = search_with_hint(u, static_cast<int>(u.best_star), budget);
  rep.nodes_explored = res.nodes;
  rep.witness = res.clique.empty() ? full_star(u, u.best_vertex) : pick(u, res.clique);
  rep.max_intersecting_size = rep.witness.size();
  if (!res.complete)
    rep.verdict = Verdict::BudgetExceeded;
  else
    rep.verdict = rep.max_intersecting_size == rep.max_star_size ? Verdict::Ekr : Verdict::NotEkr;
  return rep;
}

} // namespace

EkrReport max_intersecting_family(const Graph &g, int r, const SearchBudget &budget) {
  return search_unrestricted(uniform_universe(g, r), r, budget);
}

EkrReport max_nonstar_intersecting(const Graph &g, int r, const SearchBudget &budget) {
  const Universe u = uniform_universe(g, r);
  EkrReport rep = base_report(u, r);
  CliqueResult res = search_with_hint(u, 0, budget);
  rep.nodes_explored = res.nodes;
  rep.witness = pick(u, res.clique);
  rep.max_intersecting_size = rep.witness.size();
  if (!res.complete)
    rep.verdict = Verdict::BudgetExceeded;
  else
    rep.verdict = rep.max_intersecting_size <= rep.max_star_size ? Verdict::Ekr : Verdict::NotEkr;
  return rep;
}

EkrReport is_r_ekr(const Graph &g, int r, const SearchBudget &budget) {
  return max_intersecting_family(g, r, budget);
}

EkrReport is_strictly_r_ekr(const Graph &g, int r, const SearchBudget &budget) {
  const Universe u = uniform_universe(g, r);
  EkrReport rep = base_report(u, r);
  // A maximum family with a center x lies inside I_x and is at least as
  // large, so it is I_x itself. G fails to be strictly EKR exactly when some
  // nonstar family reaches the largest full star.
  CliqueResult res = search_with_hint(u, static_cast<int>(u.best_star) - 1, budget);
  rep.nodes_explored = res.nodes;
  if (res.clique.empty()) {
    rep.witness = full_star(u, u.best_vertex);
    rep.verdict = Verdict::StrictlyEkr;
  } else {
    rep.witness = pick(u, res.clique);
    rep.verdict = res.clique.size() == u.best_star ? Verdict::Ekr : Verdict::NotEkr;
  }
  rep.max_intersecting_size = rep.witness.size();
  if (!res.complete)
    rep.verdict = Verdict::BudgetExceeded;
  return rep;
}

EkrReport nonuniform_ekr(const Graph &g, const SearchBudget &budget) {
  Family all = enum_independent_sets(g);
  all.erase(std::remove_if(all.begin(), all.end(), [](const VertexSet &s) { return s.empty(); }),
            all.end());
  const Universe u = make_universe(g, std::move(all));
  EkrReport rep = search_unrestricted(u, 0, budget);
  rep.r = 0;
  return rep;
}

HkReport is_r_hk(const Graph &tree, int r) {
  if (!tree.is_tree())
    throw Error(ErrorKind::NotATree, "HK check needs a tree");
  if (r < 1 || r > forest_independence_number(tree))
    throw Error(ErrorKind::InvalidSetSize, "r must satisfy 1 <= r <= alpha(T)");
  HkReport rep;
  rep.r = r;
  rep.per_vertex = star_sizes_tree_dp(tree, r);
  const BigCount top = *std::max_element(rep.per_vertex.begin(), rep.per_vertex.end());
  for (int v = 0; v < tree.order(); ++v)
    if (rep.per_vertex[v] == top && tree.degree(v) <= 1) {
      rep.best_vertex = v;
      rep.best_is_leaf = true;
      break;
    }
  if (rep.best_vertex < 0)
    for (int v = 0; v < tree.order(); ++v)
      if (rep.per_vertex[v] == top) {
        rep.best_vertex = v;
        break;
      }
  return rep;
}

SpiderOrderReport spider_order_check(const SpiderSpec &spider, int r) {
  const Graph g = spider.graph();
  if (r < 1 || r > forest_independence_number(g))
    throw Error(ErrorKind::InvalidSetSize, "r must satisfy 1 <= r <= alpha(S)");
  SpiderOrderReport rep;
  rep.r = r;
  rep.per_vertex = star_sizes_tree_dp(g, r);
  const auto &s = rep.per_vertex;
  const auto &order = spider.order();
  const int w = spider.center();

  auto violate = [&](SpiderOrderPart part, int i, int vertex, int leaf) {
    rep.violations.push_back({part, i, vertex, leaf, s[vertex], s[leaf]});
  };
  for (int i = 0; i < spider.leg_count(); ++i) {
    const int leg = order[i];
    const int leaf = spider.leaf(leg);
    if (s[w] > s[leaf])
      violate(SpiderOrderPart::CenterBelowLeaf, i, w, leaf);
    for (int off = 1; off < spider.legs()[leg]; ++off) {
      const int u = spider.leg_vertex(leg, off);
      if (s[u] > s[leaf])
        violate(SpiderOrderPart::LegBelowLeaf, i, u, leaf);
    }
    for (int j = i + 1; j < spider.leg_count(); ++j) {
      const int later = spider.leaf(order[j]);
      if (s[later] > s[leaf])
        violate(SpiderOrderPart::LeafChain, i, later, leaf);
    }
  }
  return rep;
}

} // namespace ekr
