#include "ekr/trees.hpp"
#include "ekr/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ekr {

Graph tree_from_prufer(int n, std::span<const int> sequence) {
  if (n < 1 || n > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices, "tree order " + std::to_string(n));
  if (n == 1)
    return Graph(1, std::span<const Edge>{});
  if (static_cast<int>(sequence.size()) != n - 2)
    throw Error(ErrorKind::PreconditionViolated, "Prüfer sequence must have n - 2 entries");
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n)
      throw Error(ErrorKind::VertexOutOfRange, "Prüfer entry " + std::to_string(x));
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decoding: `leaf` tracks the smallest current leaf.
  int ptr = 0;
  while (degree[ptr] != 1)
    ++ptr;
  int leaf = ptr;
  for (int x : sequence) {
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1)
        ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return Graph(n, edges);
}

std::vector<int> prufer_of(const Graph &tree) {
  if (!tree.is_tree())
    throw Error(ErrorKind::NotATree, "prufer_of needs a tree");
  const int n = tree.order();
  std::vector<int> out;
  VertexSet alive = tree.vertices();
  for (int step = 0; step + 2 < n; ++step) {
    int leaf = -1;
    alive.for_each([&](int v) {
      if (leaf < 0 && (tree.neighbors(v) & alive).size() == 1)
        leaf = v;
    });
    out.push_back((tree.neighbors(leaf) & alive).first());
    alive.erase(leaf);
  }
  return out;
}

std::uint64_t labeled_tree_count(int n) {
  std::uint64_t total = 1;
  for (int i = 0; i + 2 < n; ++i)
    total *= static_cast<std::uint64_t>(n);
  return total;
}

void for_each_prufer_tree(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Graph &)> &visit) {
  if (n <= 2) {
    if (first == 0 && last > 0)
      visit(tree_from_prufer(n, std::span<const int>{}));
    return;
  }
  last = std::min(last, labeled_tree_count(n));
  std::vector<int> seq(n - 2, 0);
  // most significant digit first
  std::uint64_t idx = first;
  for (int i = n - 3; i >= 0; --i) {
    seq[i] = static_cast<int>(idx % n);
    idx /= n;
  }
  for (std::uint64_t i = first; i < last; ++i) {
    visit(tree_from_prufer(n, seq));
    for (int pos = n - 3; pos >= 0; --pos) {
      if (++seq[pos] < n)
        break;
      seq[pos] = 0;
    }
  }
}

void for_each_rooted_tree(int n, const std::function<void(const Graph &)> &visit) {
  if (n < 1 || n > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices, "tree order " + std::to_string(n));
  // Level sequences with the root at level 1, starting from the path.
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i)
    level[i] = i + 1;
  std::vector<Edge> edges;
  for (;;) {
    edges.clear();
    std::vector<int> last_at(n + 2, -1);
    for (int i = 0; i < n; ++i) {
      if (i > 0)
        edges.emplace_back(last_at[level[i] - 1], i);
      last_at[level[i]] = i;
    }
    visit(Graph(n, edges));

    int p = -1;
    for (int i = n - 1; i >= 1; --i)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p < 0)
      return;
    int q = p - 1;
    while (level[q] != level[p] - 1)
      --q;
    for (int i = p; i < n; ++i)
      level[i] = level[i - (p - q)];
  }
}

namespace {

std::string ahu(const Graph &t, int v, int parent) {
  std::vector<std::string> kids;
  t.neighbors(v).for_each([&](int c) {
    if (c != parent)
      kids.push_back(ahu(t, c, v));
  });
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto &k : kids)
    out += k;
  out += ')';
  return out;
}

} // namespace

std::string tree_certificate(const Graph &tree) {
  if (!tree.is_tree())
    throw Error(ErrorKind::NotATree, "certificate needs a tree");
  // Peel leaves layer by layer to find the centre (one or two vertices).
  VertexSet alive = tree.vertices();
  while (alive.size() > 2) {
    VertexSet layer;
    alive.for_each([&](int v) {
      if ((tree.neighbors(v) & alive).size() <= 1)
        layer.insert(v);
    });
    alive -= layer;
  }
  std::string best;
  alive.for_each([&](int c) {
    std::string code = ahu(tree, c, -1);
    if (best.empty() || code < best)
      best = code;
  });
  return std::to_string(tree.order()) + ":" + best;
}

std::vector<Graph> free_trees(int n) {
  std::map<std::string, Graph> seen;
  for_each_rooted_tree(n, [&](const Graph &t) { seen.try_emplace(tree_certificate(t), t); });
  std::vector<Graph> out;
  for (auto &[cert, g] : seen)
    out.push_back(g);
  return out;
}

} // namespace ekr
