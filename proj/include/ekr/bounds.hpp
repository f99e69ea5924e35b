#pragma once

#include "ekr/bigcount.hpp"
#include "ekr/graph.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ekr {

/// 50 decimal digits (166-bit mantissa).
using Real = boost::multiprecision::cpp_bin_float_50;

/// Real-valued thresholds closer than this to the boundary count as not met.
inline const Real kThresholdMargin{"1e-9"};

/// Parameter bundle for the closed-form bounds and hypothesis checks. Each
/// operation reads only the fields it needs.
struct BoundQuery {
  std::optional<long> n, r, d, s, k;
  std::optional<Real> c_density, x, y;
};

// ------------------------------------------------------------ closed forms

struct FlaggedCount {
  BigCount value;
  /// False when the query lies outside the range the bound is stated for.
  bool in_range = true;
};

FlaggedCount ekr_bound(long n, long r);
FlaggedCount hm_bound(long n, long r);
FlaggedCount frankl_bound(long n, long r);

/// C(n-1,r-1) - C(n-r-1,r-1) + 1 == 1 + sum_{j=2}^{r+1} C(n-j, r-2).
bool hm_identity_check(long n, long r);

struct StarLower {
  /// prod_{i=1}^{r-1} (n - i d) / (r-1)!, or 0 once a factor is <= 0.
  Rational exact;
  BigCount ceiling;
};
StarLower claim_star_lower(long n, long d, long r);

BigCount spider_star_lower(long n, long k, long r);
BigCount split_star_lower(long n, long s, long r);

// ------------------------------------------------------- estimate checks

enum class CheckStatus { Holds, BoundaryEquality, Fails, DomainViolation };
std::string_view to_string(CheckStatus s);

struct EstimateCheck {
  std::string name;
  CheckStatus status = CheckStatus::DomainViolation;
  Real lhs, rhs;
  std::string detail;
};

/// e^{-x} < 1 - (k/(k+1)) x on 0 <= x <= 2k/(k+1)^2.
EstimateCheck check_exp_upper(const Real &x, long k);
/// 1 - y > e^{-((k+1)/k) y} on 0 <= y <= 2k^2/(k+1)^3.
EstimateCheck check_exp_lower(const Real &y, long k);
/// prod_{i=1}^{r-1} (1 - (r + i d)/n) > r/n for r, d >= 2, n >= 27 d r^2 / 8,
/// evaluated in exact rational arithmetic.
EstimateCheck check_product_estimate(long r, long d, long n);

struct BigStarBound {
  bool domain_ok = false;
  /// n^{r-1}/(r-1)! * e^{-(r-1) 2k/(k+1)^2}
  Real value;
  /// n (1 - 1/(3r)), the vertex count the residual graph must reach
  Rational min_vertices;
};
/// Requires 1/(3r) + r d / n <= 2k^2/(k+1)^3 (checked exactly).
BigStarBound big_star_bound(long n, long r, long d, long k);

/// Runs every check whose inputs are present in `q`.
std::vector<EstimateCheck> estimate_checks(const BoundQuery &q);

// ------------------------------------------------- theorem hypotheses

enum class TheoremId { T3, T2Avg, T5, T6, T8 };
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view s);

struct Applicability {
  TheoremId theorem;
  bool applicable = false;
  /// Named evaluated quantities, e.g. {"r_threshold", 2.983...}.
  std::vector<std::pair<std::string, Real>> values;
  std::string reason;
};

/// Throws MissingField when the theorem needs a field `q` lacks.
Applicability hypothesis(TheoremId id, const BoundQuery &q);
/// Every r >= 1 for which hypothesis(id, q with r) is applicable.
std::vector<long> rmax(TheoremId id, const BoundQuery &q);

// ------------------------------------------------------------- inequalities

struct InequalityCheck {
  bool hypothesis_ok = false;
  bool holds = false;
  BigCount lhs, rhs;
};

/// C(n-1, r-1) < 2 C(n-r-1, r-1), under r <= sqrt(n ln 2) - (ln 2)/2.
InequalityCheck binoms_ineq_check(long n, long r);
/// C(n-1, r-1) <= C(n-r-1, r-1) + C(n-r-s, r-1), under 1 < s < r/2 and the
/// split-tree r bound.
InequalityCheck binoms2_ineq_check(long n, long r, long s);

// --------------------------------------------------------------- peeling

struct PeelReport {
  int t = 0;
  std::vector<int> removed;
  /// Degree of each removed vertex at its removal time.
  std::vector<int> removal_degrees;
  Graph residual;
  /// residual vertex -> vertex of the input graph
  std::vector<int> residual_original;
  int threshold = 0;
};

/// Repeatedly deletes a vertex of current degree >= threshold (largest
/// degree first, lowest index on ties) until none remains.
PeelReport peel(const Graph &g, int threshold);

/// Checks the certificate of a peel run: removal-time degrees, residual
/// maximum degree, and -- when |E| <= c n with threshold 3 c r -- that
/// 3 r t <= n.
struct PeelAudit {
  bool degrees_ok = false;
  bool residual_ok = false;
  bool count_applies = false;
  bool count_ok = true;
};
PeelAudit audit_peel(const Graph &g, const PeelReport &rep, long c, long r);

// ------------------------------------------------------------ grid checks

struct GridRow {
  std::string theorem_id;
  std::string parameters;
  std::string lhs, rhs;
  bool holds = false;
};

struct GridSummary {
  std::vector<GridRow> rows;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// Boundary equalities (Prop/Cor at 0) are tallied apart from failures.
  std::size_t boundary = 0;
};

/// Product estimate for 2 <= r, d <= max_rd and 200 consecutive n
/// starting at ceil(27 d r^2 / 8).
GridSummary grid_product_estimate(long max_rd = 8, long n_span = 200, bool keep_rows = false);
/// C(n-1,r-1) < 2 C(n-r-1,r-1) for 4 <= n <= n_max, r in rmax(T5, n).
GridSummary grid_binoms(long n_max = 5000, bool keep_rows = false);
/// Split-tree inequality for 2 <= s <= s_max, s < r/2, r <= r_max, and
/// every n <= n_max with r in rmax(T6, n, s).
GridSummary grid_binoms2(long s_max = 5, long r_max = 16, long n_max = 5000,
                         bool keep_rows = false);
GridSummary grid_hm_identity(long n_max = 60, bool keep_rows = false);
/// `samples` points per k in (1e-6, domain max] plus the boundary point 0.
GridSummary grid_exp_estimates(long k_max = 10, int samples = 100, bool keep_rows = false);

// Grid functions keep every row when `keep_rows` is set, otherwise only
// failures and boundary cases.
std::string grid_csv(const GridSummary &g);

} // namespace ekr
