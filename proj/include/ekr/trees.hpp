#pragma once

#include "ekr/graph.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ekr {

/// Labelled tree on n vertices from a Prüfer sequence of length n - 2.
Graph tree_from_prufer(int n, std::span<const int> sequence);
/// Inverse of tree_from_prufer.
std::vector<int> prufer_of(const Graph &tree);

/// n^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t labeled_tree_count(int n);

/// Visits every labelled tree on n vertices, indexed by its Prüfer sequence
/// read as a base-n number; [first, last) restricts to a slice of indices.
void for_each_prufer_tree(int n, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Graph &)> &visit);

/// Visits every rooted tree on n vertices once (canonical level sequences,
/// constant amortised time per tree). Each free tree shows up at least once.
void for_each_rooted_tree(int n, const std::function<void(const Graph &)> &visit);

/// One representative per isomorphism class of trees on n vertices.
std::vector<Graph> free_trees(int n);

/// Isomorphism-invariant string for a tree (AHU encoding from its centre).
std::string tree_certificate(const Graph &tree);

} // namespace ekr
