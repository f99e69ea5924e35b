#pragma once

#include "ekr/bigcount.hpp"
#include "ekr/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ekr {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchBudget {
  std::uint64_t max_nodes = kDefaultNodeBudget;
  /// A size some intersecting family is known to reach; used to seed pruning.
  std::optional<std::uint64_t> max_family_size_hint;
};

enum class Verdict { Ekr, NotEkr, StrictlyEkr, BudgetExceeded };
std::string_view to_string(Verdict v);

/// Outcome of an exact intersecting-family search.
///
/// For max_intersecting_family, `max_intersecting_size` is the overall
/// maximum and is never below `max_star_size`. For max_nonstar_intersecting
/// it is the maximum over families with empty total intersection, and the
/// verdict compares that maximum against the largest full star (the overall
/// maximum is the larger of the two). `r == 0` marks the non-uniform search.
struct EkrReport {
  int r = 0;
  int max_star_vertex = -1;
  BigCount max_star_size;
  BigCount max_intersecting_size;
  Family witness;
  Verdict verdict = Verdict::BudgetExceeded;
  std::uint64_t nodes_explored = 0;
};

struct HkReport {
  int r = 0;
  int best_vertex = -1;
  bool best_is_leaf = false;
  std::vector<BigCount> per_vertex;
};

struct StarCenter {
  /// Smallest common element, when the family is a star.
  std::optional<int> center;
  bool empty_family = false;
};

StarCenter is_star(const Family &f);
bool is_intersecting(const Family &f);

EkrReport max_intersecting_family(const Graph &g, int r, const SearchBudget &budget = {});
EkrReport max_nonstar_intersecting(const Graph &g, int r, const SearchBudget &budget = {});
EkrReport is_r_ekr(const Graph &g, int r, const SearchBudget &budget = {});
/// Verdict is StrictlyEkr, Ekr (some maximum family is not a full star; it
/// is returned as the witness), NotEkr or BudgetExceeded.
EkrReport is_strictly_r_ekr(const Graph &g, int r, const SearchBudget &budget = {});
/// Maximum intersecting subfamily of all independent sets, against the
/// largest full star I_x(G).
EkrReport nonuniform_ekr(const Graph &g, const SearchBudget &budget = {});

HkReport is_r_hk(const Graph &tree, int r);

enum class SpiderOrderPart { CenterBelowLeaf = 1, LegBelowLeaf = 2, LeafChain = 3 };

struct SpiderOrderViolation {
  SpiderOrderPart part;
  /// Positions in spider order (0-based); `vertex` is the smaller-side
  /// vertex for parts 1 and 2, the later leaf for part 3.
  int leg_position = 0;
  int vertex = -1;
  int leaf = -1;
  BigCount lhs, rhs;
};

struct SpiderOrderReport {
  int r = 0;
  std::vector<BigCount> per_vertex;
  std::vector<SpiderOrderViolation> violations;
  bool holds() const { return violations.empty(); }
};

SpiderOrderReport spider_order_check(const SpiderSpec &spider, int r);

} // namespace ekr
