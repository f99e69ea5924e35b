#include "ekr/families.hpp"
#include "ekr/error.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

namespace ekr {

FamilyQuery::FamilyQuery(const Graph &g, int r_, std::optional<int> anchor_, VertexSet forbidden_)
    : graph(&g), r(r_), anchor(anchor_), forbidden(forbidden_) {
  if (r < 0 || r > g.order())
    throw Error(ErrorKind::InvalidSetSize, "r = " + std::to_string(r) + " with n = " +
                                               std::to_string(g.order()));
  if (anchor && (*anchor < 0 || *anchor >= g.order()))
    throw Error(ErrorKind::VertexOutOfRange, "anchor " + std::to_string(*anchor));
  if (anchor && forbidden.contains(*anchor))
    throw Error(ErrorKind::PreconditionViolated, "anchor is forbidden");
}

std::string_view to_string(CountMethod m) {
  switch (m) {
  case CountMethod::Enumeration: return "enumeration";
  case CountMethod::TreeDp: return "tree-dp";
  case CountMethod::ClosedForm: return "closed-form";
  }
  return "?";
}

namespace {

// Colex generation: the largest element is chosen in the outermost loop,
// ascending, and the remaining elements recursively below it.
class RsetWalker {
public:
  RsetWalker(const Graph &g, const std::function<bool(const VertexSet &)> &visit)
      : g_(g), visit_(visit) {}

  bool run(int r, VertexSet allowed, VertexSet current) {
    if (r == 0)
      return visit_(current);
    return walk(r, kMaxVertices, allowed, current);
  }

private:
  bool walk(int r, int limit, VertexSet allowed, VertexSet current) {
    allowed &= VertexSet::range(limit);
    if (allowed.size() < r)
      return true;
    bool keep_going = true;
    int seen = 0;
    allowed.for_each([&](int t) {
      if (!keep_going)
        return;
      ++seen;
      // t must have r - 1 allowed vertices below it
      if (seen < r)
        return;
      VertexSet next = current;
      next.insert(t);
      if (r == 1)
        keep_going = visit_(next);
      else
        keep_going = walk(r - 1, t, allowed - g_.closed_neighbors(t), next);
    });
    return keep_going;
  }

  const Graph &g_;
  const std::function<bool(const VertexSet &)> &visit_;
};

std::uint64_t count_walk(const Graph &g, int r, int limit, VertexSet allowed) {
  allowed &= VertexSet::range(limit);
  if (r == 0)
    return 1;
  if (allowed.size() < r)
    return 0;
  if (r == 1)
    return static_cast<std::uint64_t>(allowed.size());
  std::uint64_t total = 0;
  allowed.for_each([&](int t) { total += count_walk(g, r - 1, t, allowed - g.closed_neighbors(t)); });
  return total;
}

} // namespace

void for_each_independent_rset(const FamilyQuery &q,
                               const std::function<bool(const VertexSet &)> &visit) {
  const Graph &g = *q.graph;
  VertexSet allowed = g.vertices() - q.forbidden;
  VertexSet current;
  int r = q.r;
  if (q.anchor) {
    if (r == 0)
      return;
    current.insert(*q.anchor);
    allowed -= g.closed_neighbors(*q.anchor);
    --r;
  }
  RsetWalker(g, visit).run(r, allowed, current);
}

Family enum_independent_rsets(const FamilyQuery &q) {
  Family out;
  for_each_independent_rset(q, [&](const VertexSet &s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Family enum_independent_sets(const Graph &g) {
  Family out;
  for (int r = 0; r <= g.order(); ++r) {
    std::size_t before = out.size();
    for_each_independent_rset(FamilyQuery(g, r), [&](const VertexSet &s) {
      out.push_back(s);
      return true;
    });
    if (r > 0 && out.size() == before)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigCount count_independent_rsets(const FamilyQuery &q) {
  const Graph &g = *q.graph;
  VertexSet allowed = g.vertices() - q.forbidden;
  int r = q.r;
  if (q.anchor) {
    if (r == 0)
      return 0;
    allowed -= g.closed_neighbors(*q.anchor);
    --r;
  }
  return BigCount(count_walk(g, r, kMaxVertices, allowed));
}

BigCount count_path_rsets(int m, int r) {
  if (m < 0 || r < 0)
    throw Error(ErrorKind::PreconditionViolated, "count_path_rsets needs m, r >= 0");
  return binom(static_cast<std::int64_t>(m) - r + 1, r);
}

CountResult star_size_enumerated(const Graph &g, int v, int r) {
  if (v < 0 || v >= g.order())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  return {count_independent_rsets(FamilyQuery(g, r, v)), CountMethod::Enumeration};
}

// ---------------------------------------------------------------- tree DP

namespace {

// Per-node polynomials in the set size, truncated at degree r:
// inc[k] counts independent k-sets of the subtree containing the node,
// exc[k] those avoiding it.
template <typename Count> struct TreeDp {
  using Poly = std::vector<Count>;

  const Graph &g;
  int r;

  Poly multiply(const Poly &a, const Poly &b) const {
    Poly out(r + 1, Count(0));
    for (int i = 0; i <= r; ++i) {
      if (a[i] == 0)
        continue;
      for (int j = 0; i + j <= r; ++j)
        out[i + j] += a[i] * b[j];
    }
    return out;
  }

  // Iterative post-order to keep deep paths off the call stack.
  std::pair<Poly, Poly> rooted(int root, VertexSet &unvisited) const {
    std::vector<int> order, parent(g.order(), -1);
    std::vector<int> stack{root};
    unvisited.erase(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      (g.neighbors(u) & unvisited).for_each([&](int c) {
        unvisited.erase(c);
        parent[c] = u;
        stack.push_back(c);
      });
    }
    std::vector<Poly> inc(g.order()), exc(g.order());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int u = *it;
      Poly in(r + 1, Count(0)), ex(r + 1, Count(0));
      if (r >= 1)
        in[1] = 1;
      ex[0] = 1;
      for (int c : order) {
        if (parent[c] != u)
          continue;
        Poly both = exc[c];
        for (int k = 0; k <= r; ++k)
          both[k] += inc[c][k];
        in = multiply(in, exc[c]);
        ex = multiply(ex, both);
      }
      inc[u] = std::move(in);
      exc[u] = std::move(ex);
    }
    return {inc[root], exc[root]};
  }

  Count star(int v) const {
    VertexSet unvisited = g.vertices();
    auto [in, ex] = rooted(v, unvisited);
    Poly total = in;
    while (!unvisited.empty()) {
      auto [oi, oe] = rooted(unvisited.first(), unvisited);
      for (int k = 0; k <= r; ++k)
        oi[k] += oe[k];
      total = multiply(total, oi);
    }
    return total[r];
  }
};

void require_forest(const Graph &g) {
  if (!g.is_forest())
    throw Error(ErrorKind::NotAForest, "tree DP needs a forest");
}

} // namespace

CountResult star_size_tree_dp(const Graph &forest, int v, int r) {
  require_forest(forest);
  if (v < 0 || v >= forest.order())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  if (r < 0 || r > forest.order())
    throw Error(ErrorKind::InvalidSetSize, "r = " + std::to_string(r));
  if (r == 0)
    return {0, CountMethod::TreeDp};
  // Independent set counts are below 2^n, so 64 bits suffice up to n = 63.
  if (forest.order() <= 63)
    return {BigCount(TreeDp<std::uint64_t>{forest, r}.star(v)), CountMethod::TreeDp};
  return {TreeDp<BigCount>{forest, r}.star(v), CountMethod::TreeDp};
}

std::vector<BigCount> star_sizes_tree_dp(const Graph &forest, int r) {
  require_forest(forest);
  std::vector<BigCount> out;
  out.reserve(forest.order());
  for (int v = 0; v < forest.order(); ++v)
    out.push_back(star_size_tree_dp(forest, v, r).count);
  return out;
}

CountResult star_size(const Graph &g, int v, int r) {
  if (v < 0 || v >= g.order())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  if (g.is_forest())
    return star_size_tree_dp(g, v, r);
  return star_size_enumerated(g, v, r);
}

int forest_independence_number(const Graph &forest) {
  require_forest(forest);
  // Taking a vertex of degree <= 1 is always safe in a forest.
  VertexSet left = forest.vertices();
  int alpha = 0;
  while (!left.empty()) {
    int pick = -1;
    left.for_each([&](int v) {
      if (pick < 0 && (forest.neighbors(v) & left).size() <= 1)
        pick = v;
    });
    ++alpha;
    left -= forest.closed_neighbors(pick);
  }
  return alpha;
}

// ----------------------------------------------------------- path merging

MergedPath merge_paths(const SpiderSpec &spider, MergeMode mode) {
  const auto &legs = spider.legs();
  const auto &order = spider.order();
  const int k = spider.leg_count();
  // first vertex kept on each leg: u_i without the center, u'_i with it
  const int start_offset = mode == MergeMode::WithoutCenter ? 1 : 2;
  if (mode == MergeMode::WithCenter)
    for (int l : legs)
      if (l < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    "merging S - N[w] needs every leg of length >= 2");

  Graph s = spider.graph();
  VertexSet removed = mode == MergeMode::WithoutCenter ? VertexSet::single(spider.center())
                                                       : s.closed_neighbors(spider.center());
  std::vector<int> original;
  Graph reduced = s.induced(s.vertices() - removed, &original);
  std::vector<int> to_new(s.order(), -1);
  for (std::size_t i = 0; i < original.size(); ++i)
    to_new[original[i]] = static_cast<int>(i);

  MergedPath out{reduced, original, -1, -1, {}, {}};
  std::vector<Edge> joins;
  for (int i = 0; i + 1 < k; ++i) {
    int a = spider.leg_vertex(order[i], start_offset);
    int b = spider.leaf(order[i + 1]);
    joins.emplace_back(to_new[a], to_new[b]);
    out.joining_edges.emplace_back(to_new[a], to_new[b]);
  }
  out.graph = reduced.with_edges(joins);

  // v_1 ... (first kept) then v_2 ... and so on
  for (int i = 0; i < k; ++i) {
    int leg = order[i];
    for (int off = legs[leg]; off >= start_offset; --off)
      out.path_order.push_back(to_new[spider.leg_vertex(leg, off)]);
  }

  const int last = order[k - 1];
  out.last_leaf = to_new[spider.leaf(last)];
  if (legs[last] - 1 >= start_offset)
    out.last_leaf_spider_neighbor = to_new[spider.leg_vertex(last, legs[last] - 1)];
  return out;
}

SplitMerge merge_split_paths(const Graph &tree) {
  if (!tree.is_tree())
    throw Error(ErrorKind::NotATree, "merge_split_paths needs a tree");
  SplitMerge out{tree, tree.split_vertices(), {}, {}};
  const VertexSet rest = tree.vertices() - out.split;

  std::vector<std::vector<int>> pieces;
  VertexSet unseen = rest;
  while (!unseen.empty()) {
    // collect the component, then walk it from its smaller endpoint
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= tree.neighbors(v) & rest; });
      frontier = next - comp;
      comp |= frontier;
    }
    unseen -= comp;
    int start = -1;
    comp.for_each([&](int v) {
      if (start < 0 && (tree.neighbors(v) & comp).size() <= 1)
        start = v;
    });
    std::vector<int> piece{start};
    VertexSet used = VertexSet::single(start);
    for (;;) {
      VertexSet step = tree.neighbors(piece.back()) & comp;
      step -= used;
      if (step.empty())
        break;
      piece.push_back(step.first());
      used.insert(step.first());
    }
    pieces.push_back(std::move(piece));
  }

  std::vector<Edge> joins;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    joins.emplace_back(pieces[i].back(), pieces[i + 1].front());
  out.joining_edges = joins;
  for (const auto &p : pieces)
    out.path_order.insert(out.path_order.end(), p.begin(), p.end());

  std::vector<Edge> path_edges;
  for (std::size_t i = 0; i + 1 < out.path_order.size(); ++i)
    path_edges.emplace_back(out.path_order[i], out.path_order[i + 1]);
  out.merged = Graph(tree.order(), path_edges, tree.label() + " [merged]");
  return out;
}

VertexSet splitstar_witness(const Graph &tree, const VertexSet &split, const Graph &merged,
                            const VertexSet &a) {
  if (split.size() < 2)
    throw Error(ErrorKind::PreconditionViolated,
                "the split-vertex injection needs at least two split vertices");
  if (a.size() < 2)
    throw Error(ErrorKind::InvalidSetSize, "the injection needs |A| >= 2");
  if (!merged.is_independent(a) || a.intersects(split))
    throw Error(ErrorKind::PreconditionViolated, "A must be independent in the merged path");
  if (merged.order() != tree.order())
    throw Error(ErrorKind::PreconditionViolated, "merged path must share the tree's vertices");

  // Walk the merged path from its smaller endpoint.
  const VertexSet on_path = tree.vertices() - split;
  int start = -1;
  on_path.for_each([&](int v) {
    if (start < 0 && merged.degree(v) <= 1)
      start = v;
  });
  std::vector<int> walk{start}, pos(tree.order(), -1);
  pos[start] = 0;
  for (;;) {
    VertexSet step = merged.neighbors(walk.back());
    if (walk.size() >= 2)
      step.erase(walk[walk.size() - 2]);
    if (step.empty())
      break;
    pos[step.first()] = static_cast<int>(walk.size());
    walk.push_back(step.first());
  }
  if (static_cast<int>(walk.size()) != on_path.size())
    throw Error(ErrorKind::PreconditionViolated, "merged graph is not a path on T - W");

  int join = -1;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (!tree.adjacent(walk[i], walk[i + 1])) {
      join = static_cast<int>(i);
      break;
    }
  if (join < 0)
    throw Error(ErrorKind::PreconditionViolated, "merged path has no joining edge");
  const int u1 = walk[join], u2 = walk[join + 1];

  // Nearest member of `from` to `target`; at equal distance the member on
  // the preferred side of `target` wins.
  auto nearest = [&](const VertexSet &from, int target, bool prefer_before) {
    int best = -1;
    std::pair<int, int> best_key{};
    from.for_each([&](int x) {
      bool before = pos[x] <= pos[target];
      std::pair<int, int> key{std::abs(pos[x] - pos[target]), before == prefer_before ? 0 : 1};
      if (best < 0 || key < best_key) {
        best = x;
        best_key = key;
      }
    });
    return best;
  };
  const int a1 = nearest(a, u1, true);
  VertexSet rest = a;
  rest.erase(a1);
  const int a2 = nearest(rest, u2, false);
  rest.erase(a2);
  rest.insert(u1);
  rest.insert(u2);
  return rest;
}

// ---------------------------------------------------------- family dumps

std::string format_family(const Family &f) {
  std::string out;
  for (const auto &s : f)
    out += s.to_string() + "\n";
  return out;
}

Family parse_family(std::string_view text) {
  Family out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto open = line.find('{');
    auto close = line.find('}');
    if (open == std::string::npos && line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw Error(ErrorKind::PreconditionViolated, "bad family line '" + line + "'");
    VertexSet s;
    std::string body = line.substr(open + 1, close - open - 1);
    std::size_t p = 0;
    while (p < body.size()) {
      auto comma = body.find(',', p);
      std::string tok = body.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
      int v = -1;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0 || v >= kMaxVertices)
        throw Error(ErrorKind::PreconditionViolated, "bad vertex '" + tok + "'");
      s.insert(v);
      if (comma == std::string::npos)
        break;
      p = comma + 1;
    }
    out.push_back(s);
  }
  return out;
}

} // namespace ekr
