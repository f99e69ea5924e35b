#pragma once

#include "ekr/graph.hpp"
#include "ekr/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ekr {

enum class SearchKind { Hk, Ekr };

struct TreeSearchOptions {
  SearchKind kind = SearchKind::Hk;
  int n_min = 1;
  int n_max = 8;
  int r_min = 1;
  /// Upper end of the r range; each instance is further capped at alpha.
  int r_max = 4;
  SearchBudget budget;
  /// Worker threads for the sweep; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// A graph violating the requested property at one r.
struct Finding {
  int n = 0;
  int r = 0;
  std::string graph6;
  /// Isomorphism certificate for trees, graph6 otherwise.
  std::string certificate;
  /// HK: best vertex overall and best leaf value; EKR: the report.
  HkReport hk;
  EkrReport ekr;
};

struct SearchSummary {
  std::vector<Finding> findings;
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  std::uint64_t budget_skipped = 0;
};

/// Largest n accepted by the labelled-tree sweep.
inline constexpr int kPruferSweepLimit = 10;

/// Sweeps every labelled tree (Prüfer sequences) with n_min <= n <= n_max.
/// Findings are deduplicated by (certificate, r) and sorted.
SearchSummary search_trees(const TreeSearchOptions &options);

/// Same checks over an explicit catalog; HK requires trees.
SearchSummary search_catalog(const std::vector<Graph> &catalog, const TreeSearchOptions &options);

} // namespace ekr
