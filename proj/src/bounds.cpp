#include "ekr/bounds.hpp"
#include "ekr/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>

namespace ekr {

namespace mp = boost::multiprecision;

namespace {

std::string real_str(const Real &x, int digits = 17) { return x.str(digits); }

Rational ratio(long num, long den) { return Rational(num) / Rational(den); }

long need(const std::optional<long> &field, std::string_view name, TheoremId id) {
  if (!field)
    throw Error(ErrorKind::MissingField,
                std::string(to_string(id)) + " needs field '" + std::string(name) + "'");
  return *field;
}

} // namespace

// ------------------------------------------------------------ closed forms

FlaggedCount ekr_bound(long n, long r) { return {binom(n - 1, r - 1), 2 * r <= n}; }

FlaggedCount hm_bound(long n, long r) {
  return {binom(n - 1, r - 1) - binom(n - r - 1, r - 1) + 1, 2 * r <= n};
}

FlaggedCount frankl_bound(long n, long r) { return {binom(n - 3, r - 2), 72 * r < n}; }

bool hm_identity_check(long n, long r) {
  if (r < 1 || n < r + 1)
    throw Error(ErrorKind::PreconditionViolated, "identity needs n >= r + 1 >= 2");
  BigCount lhs = binom(n - 1, r - 1) - binom(n - r - 1, r - 1) + 1;
  BigCount rhs = 1;
  for (long j = 2; j <= r + 1; ++j)
    rhs += binom(n - j, r - 2);
  return lhs == rhs;
}

StarLower claim_star_lower(long n, long d, long r) {
  if (r < 1)
    throw Error(ErrorKind::InvalidSetSize, "claim_star_lower needs r >= 1");
  BigCount product = 1;
  for (long i = 1; i <= r - 1; ++i) {
    long factor = n - i * d;
    if (factor <= 0)
      return {Rational(0), BigCount(0)};
    product *= factor;
  }
  const BigCount den = factorial(r - 1);
  Rational exact(product, den);
  BigCount ceiling = product / den;
  if (ceiling * den != product)
    ceiling += 1;
  return {exact, ceiling};
}

BigCount spider_star_lower(long n, long k, long r) {
  if (n < 1 || k < 1 || r < 1)
    throw Error(ErrorKind::PreconditionViolated, "spider_star_lower needs n, k, r >= 1");
  return binom(n - r - 1, r - 1) + binom(n - k - r - 2, r - 2);
}

BigCount split_star_lower(long n, long s, long r) {
  if (n < 1 || s < 1 || r < 1)
    throw Error(ErrorKind::PreconditionViolated, "split_star_lower needs n, s, r >= 1");
  return binom(n - r - s, r - 1) + 1;
}

// ------------------------------------------------------- estimate checks

std::string_view to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Holds: return "holds";
  case CheckStatus::BoundaryEquality: return "boundary-equality";
  case CheckStatus::Fails: return "fails";
  case CheckStatus::DomainViolation: return "domain-violation";
  }
  return "?";
}

EstimateCheck check_exp_upper(const Real &x, long k) {
  EstimateCheck c{"exp-upper", CheckStatus::DomainViolation, 0, 0, {}};
  const Real top = Real(2 * k) / Real((k + 1) * (k + 1));
  if (k < 1 || x < 0 || x > top) {
    c.detail = "needs k >= 1 and 0 <= x <= 2k/(k+1)^2";
    return c;
  }
  c.lhs = mp::exp(-x);
  c.rhs = 1 - Real(k) / Real(k + 1) * x;
  if (x == 0)
    c.status = CheckStatus::BoundaryEquality;
  else
    c.status = c.lhs < c.rhs ? CheckStatus::Holds : CheckStatus::Fails;
  return c;
}

EstimateCheck check_exp_lower(const Real &y, long k) {
  EstimateCheck c{"exp-lower", CheckStatus::DomainViolation, 0, 0, {}};
  const Real top = Real(2 * k * k) / Real((k + 1) * (k + 1) * (k + 1));
  if (k < 1 || y < 0 || y > top) {
    c.detail = "needs k >= 1 and 0 <= y <= 2k^2/(k+1)^3";
    return c;
  }
  c.lhs = 1 - y;
  c.rhs = mp::exp(-Real(k + 1) / Real(k) * y);
  if (y == 0)
    c.status = CheckStatus::BoundaryEquality;
  else
    c.status = c.lhs > c.rhs ? CheckStatus::Holds : CheckStatus::Fails;
  return c;
}

EstimateCheck check_product_estimate(long r, long d, long n) {
  EstimateCheck c{"product-estimate", CheckStatus::DomainViolation, 0, 0, {}};
  // n >= 27 d r^2 / 8  <=>  8 n >= 27 d r^2
  if (r < 2 || d < 2 || 8 * n < 27 * d * r * r) {
    c.detail = "needs r >= 2, d >= 2, n >= 27 d r^2 / 8";
    return c;
  }
  Rational product = 1;
  for (long i = 1; i <= r - 1; ++i)
    product *= Rational(n - r - i * d, n);
  const Rational right = ratio(r, n);
  c.lhs = Real(product);
  c.rhs = Real(right);
  c.status = product > right ? CheckStatus::Holds : CheckStatus::Fails;
  c.detail = "exact rational comparison";
  return c;
}

BigStarBound big_star_bound(long n, long r, long d, long k) {
  BigStarBound b;
  if (n < 1 || r < 1 || d < 0 || k < 1)
    return b;
  const Rational lhs = ratio(1, 3 * r) + ratio(r * d, n);
  const Rational rhs = Rational(2 * k * k, (k + 1) * (k + 1) * (k + 1));
  b.domain_ok = lhs <= rhs;
  b.min_vertices = Rational(n) * (1 - ratio(1, 3 * r));
  Real value = mp::pow(Real(n), r - 1) / Real(factorial(r - 1));
  value *= mp::exp(-Real(r - 1) * Real(2 * k) / Real((k + 1) * (k + 1)));
  b.value = value;
  return b;
}

std::vector<EstimateCheck> estimate_checks(const BoundQuery &q) {
  std::vector<EstimateCheck> out;
  if (q.x && q.k)
    out.push_back(check_exp_upper(*q.x, *q.k));
  if (q.y && q.k)
    out.push_back(check_exp_lower(*q.y, *q.k));
  if (q.r && q.d && q.n)
    out.push_back(check_product_estimate(*q.r, *q.d, *q.n));
  if (q.r && q.d && q.n && q.k) {
    BigStarBound b = big_star_bound(*q.n, *q.r, *q.d, *q.k);
    EstimateCheck c{"big-star-bound", b.domain_ok ? CheckStatus::Holds : CheckStatus::DomainViolation,
                    b.value, Real(b.min_vertices), "lhs = star lower bound, rhs = n(1 - 1/3r)"};
    out.push_back(c);
  }
  return out;
}

// ------------------------------------------------- theorem hypotheses

std::string_view to_string(TheoremId id) {
  switch (id) {
  case TheoremId::T3: return "T3";
  case TheoremId::T2Avg: return "T2-avg";
  case TheoremId::T5: return "T5";
  case TheoremId::T6: return "T6";
  case TheoremId::T8: return "T8";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view s) {
  for (auto id : {TheoremId::T3, TheoremId::T2Avg, TheoremId::T5, TheoremId::T6, TheoremId::T8})
    if (s == to_string(id))
      return id;
  return std::nullopt;
}

namespace {

// r <= sqrt(n ln c) - (ln c)/2 with the conservative margin.
bool sqrt_log_bound(long n, long r, const Real &c, Applicability &a) {
  const Real lc = mp::log(c);
  const Real threshold = mp::sqrt(Real(n) * lc) - lc / 2;
  a.values.emplace_back("r_threshold", threshold);
  return threshold - Real(r) >= kThresholdMargin;
}

} // namespace

Applicability hypothesis(TheoremId id, const BoundQuery &q) {
  Applicability a{id, false, {}, {}};
  const long n = need(q.n, "n", id);
  const long r = need(q.r, "r", id);
  if (r < 1) {
    a.reason = "r must be positive";
    return a;
  }
  switch (id) {
  case TheoremId::T3: {
    const long d = need(q.d, "d", id);
    a.values.emplace_back("n_threshold", Real(27 * d * r * r) / 8);
    a.applicable = d >= 1 && 8 * n > 27 * d * r * r;
    a.reason = a.applicable ? "n > 27 d r^2 / 8" : "needs d >= 1 and n > 27 d r^2 / 8";
    break;
  }
  case TheoremId::T2Avg: {
    if (!q.c_density)
      throw Error(ErrorKind::MissingField, "T2-avg needs field 'c'");
    const Real c = *q.c_density;
    const Real c_min = boost::math::constants::e<Real>() / 36;
    const Real n_threshold = 18 * c * mp::pow(Real(r), 3);
    a.values.emplace_back("c_min", c_min);
    a.values.emplace_back("n_threshold", n_threshold);
    a.applicable = c - c_min >= 0 && Real(n) - n_threshold > kThresholdMargin;
    a.reason = a.applicable ? "c >= e/36 and n > 18 c r^3" : "needs c >= e/36 and n > 18 c r^3";
    break;
  }
  case TheoremId::T5: {
    a.applicable = sqrt_log_bound(n, r, 2, a);
    a.reason = a.applicable ? "r <= sqrt(n ln 2) - (ln 2)/2" : "r above sqrt(n ln 2) - (ln 2)/2";
    break;
  }
  case TheoremId::T6: {
    const long s = need(q.s, "s", id);
    if (s <= 1 || 2 * s >= r) {
      a.reason = "needs 1 < s < r/2";
      break;
    }
    // c = 2 - 2s/r, exact before the logarithm
    const Rational c = 2 - ratio(2 * s, r);
    a.values.emplace_back("c", Real(c));
    a.applicable = sqrt_log_bound(n, r, Real(c), a);
    a.reason = a.applicable ? "1 < s < r/2 and r <= sqrt(n ln c) - (ln c)/2"
                            : "r above sqrt(n ln c) - (ln c)/2";
    break;
  }
  case TheoremId::T8: {
    a.values.emplace_back("r_limit", Real(n) / 72);
    a.applicable = 72 * r < n;
    a.reason = a.applicable ? "r < n/72" : "needs r < n/72";
    break;
  }
  }
  return a;
}

std::vector<long> rmax(TheoremId id, const BoundQuery &q) {
  const long n = need(q.n, "n", id);
  // Every theorem's range lies below max(sqrt(n), n/72) + 1.
  const long limit = std::max(static_cast<long>(std::sqrt(static_cast<double>(n))), n / 72) + 2;
  std::vector<long> out;
  BoundQuery probe = q;
  for (long r = 1; r <= limit; ++r) {
    probe.r = r;
    if (hypothesis(id, probe).applicable)
      out.push_back(r);
  }
  return out;
}

// ------------------------------------------------------------- inequalities

InequalityCheck binoms_ineq_check(long n, long r) {
  InequalityCheck c;
  BoundQuery q;
  q.n = n;
  q.r = r;
  c.hypothesis_ok = hypothesis(TheoremId::T5, q).applicable;
  c.lhs = binom(n - 1, r - 1);
  c.rhs = 2 * binom(n - r - 1, r - 1);
  c.holds = c.lhs < c.rhs;
  return c;
}

InequalityCheck binoms2_ineq_check(long n, long r, long s) {
  InequalityCheck c;
  BoundQuery q;
  q.n = n;
  q.r = r;
  q.s = s;
  c.hypothesis_ok = hypothesis(TheoremId::T6, q).applicable;
  c.lhs = binom(n - 1, r - 1);
  c.rhs = binom(n - r - 1, r - 1) + binom(n - r - s, r - 1);
  c.holds = c.lhs <= c.rhs;
  return c;
}

// --------------------------------------------------------------- peeling

PeelReport peel(const Graph &g, int threshold) {
  if (threshold < 1)
    throw Error(ErrorKind::PreconditionViolated, "peel threshold must be >= 1");
  VertexSet alive = g.vertices();
  PeelReport rep{0, {}, {}, g, {}, threshold};
  for (;;) {
    int pick = -1, pick_deg = -1;
    alive.for_each([&](int v) {
      int d = (g.neighbors(v) & alive).size();
      if (d >= threshold && d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    if (pick < 0)
      break;
    rep.removed.push_back(pick);
    rep.removal_degrees.push_back(pick_deg);
    alive.erase(pick);
  }
  rep.t = static_cast<int>(rep.removed.size());
  rep.residual = g.induced(alive, &rep.residual_original);
  return rep;
}

PeelAudit audit_peel(const Graph &g, const PeelReport &rep, long c, long r) {
  PeelAudit audit;
  VertexSet alive = g.vertices();
  audit.degrees_ok = rep.removed.size() == rep.removal_degrees.size();
  for (std::size_t i = 0; audit.degrees_ok && i < rep.removed.size(); ++i) {
    const int v = rep.removed[i];
    const int d = (g.neighbors(v) & alive).size();
    if (!alive.contains(v) || d != rep.removal_degrees[i] || d < rep.threshold)
      audit.degrees_ok = false;
    alive.erase(v);
  }
  audit.residual_ok = rep.residual.max_degree() < rep.threshold &&
                      rep.residual.order() == alive.size();
  audit.count_applies = g.edge_count() <= c * g.order() && rep.threshold == 3 * c * r;
  if (audit.count_applies)
    audit.count_ok = 3 * r * rep.t <= g.order();
  return audit;
}

// ------------------------------------------------------------ grid checks

namespace {

void record(GridSummary &g, GridRow row, bool keep_rows, bool boundary = false) {
  ++g.checked;
  if (boundary)
    ++g.boundary;
  else if (!row.holds)
    ++g.failures;
  if (keep_rows || !row.holds || boundary)
    g.rows.push_back(std::move(row));
}

std::string params(std::initializer_list<std::pair<const char *, long>> kv) {
  std::string out;
  for (auto [k, v] : kv) {
    if (!out.empty())
      out += ';';
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

} // namespace

GridSummary grid_product_estimate(long max_rd, long n_span, bool keep_rows) {
  GridSummary g;
  for (long r = 2; r <= max_rd; ++r)
    for (long d = 2; d <= max_rd; ++d) {
      const long n0 = (27 * d * r * r + 7) / 8;
      for (long n = n0; n < n0 + n_span; ++n) {
        EstimateCheck c = check_product_estimate(r, d, n);
        record(g,
               {"product-estimate", params({{"r", r}, {"d", d}, {"n", n}}), real_str(c.lhs),
                real_str(c.rhs), c.status == CheckStatus::Holds},
               keep_rows);
      }
    }
  return g;
}

GridSummary grid_binoms(long n_max, bool keep_rows) {
  GridSummary g;
  for (long n = 4; n <= n_max; ++n) {
    BoundQuery q;
    q.n = n;
    for (long r : rmax(TheoremId::T5, q)) {
      InequalityCheck c = binoms_ineq_check(n, r);
      record(g,
             {"binoms", params({{"n", n}, {"r", r}}), to_string(c.lhs), to_string(c.rhs),
              c.hypothesis_ok && c.holds},
             keep_rows);
    }
  }
  return g;
}

GridSummary grid_binoms2(long s_max, long r_max, long n_max, bool keep_rows) {
  GridSummary g;
  for (long s = 2; s <= s_max; ++s)
    for (long r = 2 * s + 1; r <= r_max; ++r) {
      BoundQuery q;
      q.r = r;
      q.s = s;
      for (long n = r + s; n <= n_max; ++n) {
        q.n = n;
        if (!hypothesis(TheoremId::T6, q).applicable)
          continue;
        InequalityCheck c = binoms2_ineq_check(n, r, s);
        record(g,
               {"binoms2", params({{"n", n}, {"r", r}, {"s", s}}), to_string(c.lhs),
                to_string(c.rhs), c.holds},
               keep_rows);
      }
    }
  return g;
}

GridSummary grid_hm_identity(long n_max, bool keep_rows) {
  GridSummary g;
  for (long n = 2; n <= n_max; ++n)
    for (long r = 1; r + 1 <= n; ++r) {
      bool ok = hm_identity_check(n, r);
      BigCount lhs = binom(n - 1, r - 1) - binom(n - r - 1, r - 1) + 1;
      record(g, {"hm-identity", params({{"n", n}, {"r", r}}), to_string(lhs), ok ? to_string(lhs) : "",
                 ok},
             keep_rows);
    }
  return g;
}

GridSummary grid_exp_estimates(long k_max, int samples, bool keep_rows) {
  GridSummary g;
  const Real lo{"1e-6"};
  for (long k = 1; k <= k_max; ++k) {
    const Real x_top = Real(2 * k) / Real((k + 1) * (k + 1));
    const Real y_top = Real(2 * k * k) / Real((k + 1) * (k + 1) * (k + 1));
    for (int j = 0; j <= samples; ++j) {
      // j == 0 is the boundary point 0; the rest sweep (1e-6, top]
      const Real t = j == 0 ? Real(0) : Real(j - 1) / Real(std::max(samples - 1, 1));
      const Real x = j == 0 ? Real(0) : lo + (x_top - lo) * t;
      const Real y = j == 0 ? Real(0) : lo + (y_top - lo) * t;
      for (const EstimateCheck &c : {check_exp_upper(x, k), check_exp_lower(y, k)}) {
        const bool boundary = c.status == CheckStatus::BoundaryEquality;
        record(g,
               {c.name, params({{"k", k}, {"sample", j}}), real_str(c.lhs), real_str(c.rhs),
                c.status == CheckStatus::Holds || boundary},
               keep_rows, boundary);
      }
    }
  }
  return g;
}

std::string grid_csv(const GridSummary &g) {
  std::ostringstream out;
  out << "theorem-id,parameters,lhs,rhs,holds\n";
  for (const auto &row : g.rows)
    out << row.theorem_id << ',' << row.parameters << ',' << row.lhs << ',' << row.rhs << ','
        << (row.holds ? "true" : "false") << '\n';
  return out.str();
}

} // namespace ekr
