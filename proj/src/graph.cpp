#include "ekr/graph.hpp"
#include "ekr/error.hpp"

#include <charconv>
#include <deque>
#include <sstream>

namespace ekr {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first)
      out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges, std::string label)
    : n_(n), label_(std::move(label)) {
  if (n < 1 || n > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices,
                "graph order " + std::to_string(n) + " outside [1, 128]");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v)
      throw Error(ErrorKind::PreconditionViolated, "loop at " + std::to_string(u));
    if (adj_[u].contains(v))
      throw Error(ErrorKind::PreconditionViolated,
                  "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v)
    best = std::max(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v)
    twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v)
        out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_independent(const VertexSet &s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (v >= n_ || adj_[v].intersects(s))
      ok = false;
  });
  return ok;
}

bool Graph::is_connected() const {
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= adj_[v]; });
    frontier = next - seen;
    seen |= frontier;
  }
  return seen.size() == n_;
}

bool Graph::is_forest() const {
  // A forest has exactly n - (#components) edges.
  VertexSet unseen = vertices();
  int components = 0;
  while (!unseen.empty()) {
    ++components;
    VertexSet frontier = VertexSet::single(unseen.first());
    unseen -= frontier;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= adj_[v]; });
      frontier = next & unseen;
      unseen -= frontier;
    }
  }
  return edge_count() == n_ - components;
}

bool Graph::is_tree() const { return edge_count() == n_ - 1 && is_connected(); }

std::vector<int> Graph::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1)
      out.push_back(v);
  return out;
}

VertexSet Graph::split_vertices() const {
  VertexSet out;
  for (int v = 0; v < n_; ++v)
    if (degree(v) >= 3)
      out.insert(v);
  return out;
}

Graph Graph::induced(const VertexSet &keep, std::vector<int> *old_index) const {
  std::vector<int> remap(n_, -1);
  std::vector<int> olds;
  keep.for_each([&](int v) {
    if (v < n_) {
      remap[v] = static_cast<int>(olds.size());
      olds.push_back(v);
    }
  });
  std::vector<Edge> kept;
  for (auto [u, v] : edges())
    if (remap[u] >= 0 && remap[v] >= 0)
      kept.emplace_back(remap[u], remap[v]);
  if (old_index)
    *old_index = olds;
  return Graph(static_cast<int>(olds.size()), kept, label_);
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges();
  for (auto [u, v] : extra) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw Error(ErrorKind::VertexOutOfRange, "extra edge endpoint");
    if (!adjacent(u, v) && u != v &&
        std::find(all.begin(), all.end(), Edge{std::min(u, v), std::max(u, v)}) == all.end())
      all.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(n_, all, label_);
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kGraph6Bias = 63;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view text) {
  if (text.size() >= 2 && text.substr(text.size() - 2) == "\r\n")
    text.remove_suffix(2);
  else if (!text.empty() && text.back() == '\n')
    text.remove_suffix(1);
  if (text.empty())
    throw Error(ErrorKind::Graph6MalformedHeader, "empty input");

  for (std::size_t i = 0; i < text.size(); ++i)
    if (!printable(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::Graph6MalformedByte,
                  "byte " + std::to_string(static_cast<unsigned char>(text[i])) +
                      " at offset " + std::to_string(i));

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - kGraph6Bias;
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8)
      throw Error(ErrorKind::Graph6MalformedHeader, "truncated 8-byte size field");
    for (std::size_t i = 2; i < 8; ++i)
      n = (n << 6) | (text[i] - kGraph6Bias);
    pos = 8;
  } else {
    if (text.size() < 4)
      throw Error(ErrorKind::Graph6MalformedHeader, "truncated 4-byte size field");
    for (std::size_t i = 1; i < 4; ++i)
      n = (n << 6) | (text[i] - kGraph6Bias);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices, "graph6 order " + std::to_string(n));
  if (n < 1)
    throw Error(ErrorKind::Graph6MalformedHeader, "graph6 order 0 is not supported");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need)
    throw Error(ErrorKind::Graph6Truncated,
                "expected " + std::to_string(need) + " data bytes, got " + std::to_string(have));
  if (have > need)
    throw Error(ErrorKind::Graph6TrailingGarbage,
                std::to_string(have - need) + " extra bytes after data");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1)
        edges.emplace_back(i, j);
    }
  return Graph(static_cast<int>(n), edges, "graph6:" + std::string(text));
}

std::string emit_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kGraph6Bias);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + kGraph6Bias);
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kGraph6Bias);
        acc = filled = 0;
      }
    }
  if (filled > 0)
    out += static_cast<char>((acc << (6 - filled)) + kGraph6Bias);
  return out;
}

// ------------------------------------------------------------- edge lists

Graph parse_edge_list(std::string_view text, std::string label) {
  std::vector<Edge> edges;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<long> nums;
    std::string tok;
    while (fields >> tok) {
      if (tok[0] == '#')
        break;
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw Error(ErrorKind::BadEdgeList,
                    "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      nums.push_back(value);
    }
    if (nums.empty())
      continue;
    if (nums.size() == 1) {
      n = std::max<long>(n, nums[0]);
    } else if (nums.size() == 2) {
      if (nums[0] >= kMaxVertices || nums[1] >= kMaxVertices)
        throw Error(ErrorKind::TooManyVertices, "line " + std::to_string(lineno));
      edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
      n = std::max<long>(n, std::max(nums[0], nums[1]) + 1);
    } else {
      throw Error(ErrorKind::BadEdgeList,
                  "line " + std::to_string(lineno) + ": expected `u v`");
    }
  }
  if (n > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices, "edge list declares " + std::to_string(n));
  if (n == 0)
    throw Error(ErrorKind::BadEdgeList, "no vertices");
  return Graph(n, edges, std::move(label));
}

std::string emit_edge_list(const Graph &g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// --------------------------------------------------------------- distance

std::vector<int> bfs_distances(const Graph &g, int source) {
  if (source < 0 || source >= g.order())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(source));
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](int v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

std::optional<int> distance(const Graph &g, int u, int v) {
  if (v < 0 || v >= g.order())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  int d = bfs_distances(g, u)[v];
  if (d < 0)
    return std::nullopt;
  return d;
}


namespace {

class AutomorphismSearch {
public:
  AutomorphismSearch(const Graph &g, std::size_t max_elements, std::uint64_t max_steps)
      : g_(g), max_elements_(max_elements), max_steps_(max_steps), image_(g.order(), -1) {
    // Components in BFS order, so each vertex after a component's first has
    // an already-mapped neighbour constraining its image.
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
      if (seen[s])
        continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        const int v = order_[head++];
        g.neighbors(v).for_each([&](int w) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        });
      }
    }
  }

  bool run() { return extend(0); }
  std::vector<std::vector<std::uint8_t>> take() { return std::move(found_); }

private:
  bool extend(std::size_t k) {
    if (++steps_ > max_steps_)
      return false;
    const int n = g_.order();
    if (static_cast<int>(k) == n) {
      if (found_.size() >= max_elements_)
        return false;
      std::vector<std::uint8_t> perm(n);
      for (int v = 0; v < n; ++v)
        perm[v] = static_cast<std::uint8_t>(image_[v]);
      found_.push_back(std::move(perm));
      return true;
    }
    const int v = order_[k];
    VertexSet mapped_neighbours;
    g_.neighbors(v).for_each([&](int u) {
      if (image_[u] >= 0)
        mapped_neighbours.insert(image_[u]);
    });
    for (int w = 0; w < n; ++w) {
      if (used_.contains(w) || g_.degree(w) != g_.degree(v))
        continue;
      if ((g_.neighbors(w) & used_) != mapped_neighbours)
        continue;
      image_[v] = w;
      used_.insert(w);
      const bool ok = extend(k + 1);
      used_.erase(w);
      image_[v] = -1;
      if (!ok)
        return false;
    }
    return true;
  }

  const Graph &g_;
  std::size_t max_elements_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  std::vector<int> order_;
  std::vector<int> image_;
  VertexSet used_;
  std::vector<std::vector<std::uint8_t>> found_;
};

} // namespace

std::optional<std::vector<std::vector<std::uint8_t>>>
automorphisms(const Graph &g, std::size_t max_elements, std::uint64_t max_steps) {
  AutomorphismSearch search(g, max_elements, max_steps);
  if (!search.run())
    return std::nullopt;
  return search.take();
}

} // namespace ekr
