#pragma once

#include "ekr/vertex_set.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ekr {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 128 vertices.
class Graph {
public:
  /// Builds from an edge list. Loops, duplicate edges and out-of-range
  /// endpoints are rejected.
  Graph(int n, std::span<const Edge> edges, std::string label = {});
  Graph(int n, std::initializer_list<Edge> edges, std::string label = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label)) {}

  int order() const { return n_; }
  const VertexSet &neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int max_degree() const;
  int edge_count() const;
  std::vector<Edge> edges() const;
  const std::string &label() const { return label_; }

  bool is_independent(const VertexSet &s) const;
  bool is_forest() const;
  bool is_tree() const;
  bool is_connected() const;
  std::vector<int> leaves() const;
  VertexSet split_vertices() const;

  /// Subgraph induced by `keep`, relabelled in increasing index order.
  /// `old_index` (when given) receives new -> old vertex mapping.
  Graph induced(const VertexSet &keep, std::vector<int> *old_index = nullptr) const;
  /// Same vertex set with extra edges; existing edges are skipped.
  Graph with_edges(std::span<const Edge> extra) const;

  bool operator==(const Graph &o) const {
    return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
  }

private:
  int n_;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::string label_;
};

// Decoding and encoding of the graph6 format. Trailing '\n' / "\r\n" is
// accepted; anything else after the last data byte is an error.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

/// `u v` per line, 0-indexed. Blank lines and lines starting with '#' are
/// skipped; a line holding a single integer N declares at least N vertices.
Graph parse_edge_list(std::string_view text, std::string label = {});
std::string emit_edge_list(const Graph &g);

/// Graph from a generator string such as `spider:2,2,2` or `tristar:1`.
Graph generate(std::string_view spec);

/// A spider S(l_1, ..., l_k): legs of the given lengths joined at one split
/// vertex. Vertex 0 is the split vertex w; leg i (input order) follows,
/// numbered from its neighbour of w (u_i) outward to the leaf (v_i).
class SpiderSpec {
public:
  explicit SpiderSpec(std::vector<int> legs);

  const std::vector<int> &legs() const { return legs_; }
  int leg_count() const { return static_cast<int>(legs_.size()); }
  /// Legs in spider order: order()[i] is the input index of the i-th leg.
  const std::vector<int> &order() const { return order_; }
  int order_count() const { return n_; }

  int center() const { return 0; }
  /// Vertex at distance `offset` (1-based) from w along input leg `leg`.
  int leg_vertex(int leg, int offset) const;
  int first_on_leg(int leg) const { return leg_vertex(leg, 1); }
  int leaf(int leg) const { return leg_vertex(leg, legs_[leg]); }

  Graph graph() const;

private:
  std::vector<int> legs_;
  std::vector<int> order_;
  std::vector<int> leg_start_;
  int n_;
};

/// Permutation putting leg lengths in spider order: odd lengths ascending,
/// then even lengths descending, stable among equal lengths.
std::vector<int> spider_order(std::span<const int> legs);

/// Independent-set and degree statistics.
struct GraphParams {
  int alpha = 0;
  int mu = 0;
  int max_degree = 0;
  int split_count = 0;
  int edge_count = 0;
};

/// Largest graph order accepted by the exact alpha / mu searches.
inline constexpr int kExactSearchLimit = 40;

int independence_number(const Graph &g);
int min_maximal_independent_set(const Graph &g);
GraphParams params(const Graph &g);

/// Every vertex automorphism of g, each listed as the images of 0..n-1.
/// Returns nullopt when the group has more than `max_elements` elements or
/// the backtracking search takes more than `max_steps` steps.
std::optional<std::vector<std::vector<std::uint8_t>>>
automorphisms(const Graph &g, std::size_t max_elements, std::uint64_t max_steps);

/// Hop distance, or nullopt when u and v lie in different components.
std::optional<int> distance(const Graph &g, int u, int v);
std::vector<int> bfs_distances(const Graph &g, int source);

} // namespace ekr
