// ekrtool: batch driver for the EKR toolkit.
//
// Exit status: 0 when the requested result was computed (whatever the
// verdict), 1 on input errors, 2 when a search ran out of node budget.

#include "ekr/bounds.hpp"
#include "ekr/error.hpp"
#include "ekr/families.hpp"
#include "ekr/graph.hpp"
#include "ekr/report_io.hpp"
#include "ekr/search.hpp"
#include "ekr/trees.hpp"
#include "ekr/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ekr::Graph;
using ekr::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string graph;
  std::optional<int> r, v;
  std::uint64_t budget = ekr::kDefaultNodeBudget;
  std::optional<std::uint64_t> hint;
  std::string format = "json";
  std::string output;
  bool list = false;
  bool nonstar = false;
  // bounds
  std::string theorem;
  std::optional<long> n, d, s, k, legs;
  std::optional<std::string> c, x, y;
  // peel
  std::optional<int> threshold;
  // grid
  std::string which = "all";
  bool keep_rows = false;
  // search
  int n_min = 1, n_max = 8, r_min = 1, r_max = 4;
  std::string catalog;
  unsigned workers = 0;
};

struct Outcome {
  Json body;
  int status = kExitOk;
  /// Set for commands with a dedicated CSV layout.
  std::optional<std::string> csv;
};

std::uint64_t default_budget() {
  const char *env = std::getenv("EKR_BUDGET");
  if (env == nullptr || *env == '\0')
    return ekr::kDefaultNodeBudget;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used == std::string(env).size() && value > 0)
      return value;
  } catch (const std::exception &) {
  }
  throw InputError("EKR_BUDGET must be a positive integer, got '" + std::string(env) + "'");
}

// ------------------------------------------------------------ graph input

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read input file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

bool blank_or_comment(const std::string &line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

/// graph6 lines start with a byte in 63..126; edge lists start with digits.
bool looks_like_graph6(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (blank_or_comment(line))
      continue;
    if (line.rfind(">>graph6<<", 0) == 0)
      return true;
    return static_cast<unsigned char>(line[0]) >= 63 && line[0] != 127;
  }
  return false;
}

std::vector<Graph> load_graphs(const std::string &source) {
  if (source.empty())
    throw InputError("--graph is required");
  if (!std::filesystem::is_regular_file(source)) {
    if (source.find(':') == std::string::npos)
      throw InputError("cannot read input file '" + source + "'");
    return {ekr::generate(source)};
  }
  const std::string text = read_file(source);
  if (!looks_like_graph6(text))
    return {ekr::parse_edge_list(text, source)};
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (blank_or_comment(line))
      continue;
    if (line.rfind(">>graph6<<", 0) == 0)
      line.erase(0, 10);
    out.push_back(ekr::parse_graph6(line));
  }
  if (out.empty())
    throw InputError("no graphs in '" + source + "'");
  return out;
}

Graph load_graph(const std::string &source) {
  auto graphs = load_graphs(source);
  if (graphs.size() != 1)
    throw InputError("'" + source + "' holds " + std::to_string(graphs.size()) +
                     " graphs; this command takes one");
  return graphs.front();
}

std::string graph_name(const Graph &g) {
  return g.label().empty() ? ekr::emit_graph6(g) : g.label();
}

Json header(const char *command, const Graph &g) {
  Json j;
  j["command"] = command;
  j["graph"] = graph_name(g);
  j["n"] = g.order();
  return j;
}

int need_r(const Job &job) {
  if (!job.r)
    throw InputError("--r is required");
  return *job.r;
}

void check_vertex(const Graph &g, int v) {
  if (v < 0 || v >= g.order())
    throw InputError("--v " + std::to_string(v) + " is not a vertex of a graph on " +
                     std::to_string(g.order()) + " vertices");
}

ekr::SearchBudget budget_of(const Job &job) {
  ekr::SearchBudget b;
  b.max_nodes = job.budget;
  b.max_family_size_hint = job.hint;
  return b;
}

void append(Json &into, const Json &fields) {
  for (const auto &[key, value] : fields.items())
    into[key] = value;
}

bool is_path(const Graph &g) {
  return g.is_tree() && g.max_degree() <= 2;
}

// --------------------------------------------------------------- commands

Outcome cmd_params(const Job &job) {
  const Graph g = load_graph(job.graph);
  const ekr::GraphParams p = ekr::params(g);
  Json j = header("params", g);
  j["edges"] = p.edge_count;
  j["alpha"] = p.alpha;
  j["mu"] = p.mu;
  j["max_degree"] = p.max_degree;
  j["split_vertices"] = p.split_count;
  j["is_tree"] = g.is_tree();
  return {j};
}

Outcome cmd_count(const Job &job) {
  const Graph g = load_graph(job.graph);
  const int r = need_r(job);
  if (job.v)
    check_vertex(g, *job.v);
  Json j = header("count", g);
  j["r"] = r;
  j["anchor"] = job.v ? Json(*job.v) : Json(nullptr);
  ekr::BigCount count;
  ekr::CountMethod method = ekr::CountMethod::Enumeration;
  if (job.v) {
    const ekr::CountResult res = ekr::star_size(g, *job.v, r);
    count = res.count;
    method = res.method;
  } else if (is_path(g) && g.order() > 0) {
    count = ekr::count_path_rsets(g.order(), r);
    method = ekr::CountMethod::ClosedForm;
  } else if (g.is_forest() && r >= 1) {
    // every r-set is counted once from each of its r members
    for (const auto &s : ekr::star_sizes_tree_dp(g, r))
      count += s;
    count /= r;
    method = ekr::CountMethod::TreeDp;
  } else {
    count = ekr::count_independent_rsets(ekr::FamilyQuery(g, r));
  }
  j["count"] = ekr::count_json(count);
  j["method"] = ekr::to_string(method);
  if (job.list)
    j["family"] = ekr::family_json(ekr::enum_independent_rsets(ekr::FamilyQuery(g, r, job.v)));
  return {j};
}

Outcome cmd_star(const Job &job) {
  const Graph g = load_graph(job.graph);
  const int r = need_r(job);
  Json j = header("star", g);
  j["r"] = r;
  if (job.v) {
    check_vertex(g, *job.v);
    const ekr::CountResult res = ekr::star_size(g, *job.v, r);
    j["vertex"] = *job.v;
    j["star_size"] = ekr::count_json(res.count);
    j["method"] = ekr::to_string(res.method);
    return {j};
  }
  std::vector<ekr::BigCount> sizes;
  ekr::CountMethod method = ekr::CountMethod::Enumeration;
  if (g.is_forest()) {
    sizes = ekr::star_sizes_tree_dp(g, r);
    method = ekr::CountMethod::TreeDp;
  } else {
    for (int v = 0; v < g.order(); ++v)
      sizes.push_back(ekr::star_size_enumerated(g, v, r).count);
  }
  int best = -1;
  Json per = Json::array();
  for (int v = 0; v < g.order(); ++v) {
    per.push_back(ekr::count_json(sizes[v]));
    if (best < 0 || sizes[v] > sizes[best])
      best = v;
  }
  j["per_vertex"] = per;
  j["best_vertex"] = best;
  j["method"] = ekr::to_string(method);
  return {j};
}

Outcome verdict_outcome(Json j, const ekr::EkrReport &rep) {
  append(j, ekr::to_json(rep));
  return {j, rep.verdict == ekr::Verdict::BudgetExceeded ? kExitBudget : kExitOk};
}

Outcome cmd_ekr(const Job &job) {
  const Graph g = load_graph(job.graph);
  const int r = need_r(job);
  Json j = header("ekr", g);
  j["search"] = job.nonstar ? "nonstar" : "all";
  return verdict_outcome(j, job.nonstar ? ekr::max_nonstar_intersecting(g, r, budget_of(job))
                                        : ekr::is_r_ekr(g, r, budget_of(job)));
}

Outcome cmd_strict_ekr(const Job &job) {
  const Graph g = load_graph(job.graph);
  return verdict_outcome(header("strict-ekr", g),
                         ekr::is_strictly_r_ekr(g, need_r(job), budget_of(job)));
}

Outcome cmd_nonuniform(const Job &job) {
  const Graph g = load_graph(job.graph);
  return verdict_outcome(header("nonuniform-ekr", g), ekr::nonuniform_ekr(g, budget_of(job)));
}

std::vector<int> r_values(const Job &job, int alpha) {
  if (job.r)
    return {*job.r};
  std::vector<int> out;
  for (int r = 1; r <= alpha; ++r)
    out.push_back(r);
  return out;
}

Outcome cmd_hk(const Job &job) {
  const Graph g = load_graph(job.graph);
  if (!g.is_tree())
    throw InputError("hk needs a tree");
  Json j = header("hk", g);
  Json reports = Json::array();
  bool all_hk = true;
  for (int r : r_values(job, ekr::forest_independence_number(g))) {
    const ekr::HkReport rep = ekr::is_r_hk(g, r);
    Json item = ekr::to_json(rep);
    item["hk"] = rep.best_is_leaf;
    all_hk = all_hk && rep.best_is_leaf;
    reports.push_back(item);
  }
  j["hk"] = all_hk;
  j["reports"] = reports;
  return {j};
}

std::vector<int> spider_legs(const Job &job) {
  const std::string prefix = "spider:";
  if (job.graph.rfind(prefix, 0) != 0)
    throw InputError("spider-order needs --graph spider:l1,l2,...");
  std::vector<int> legs;
  std::istringstream in(job.graph.substr(prefix.size()));
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      legs.push_back(std::stoi(part, &used));
      if (used != part.size())
        throw InputError("bad leg length '" + part + "'");
    } catch (const std::logic_error &) {
      throw InputError("bad leg length '" + part + "'");
    }
  }
  return legs;
}

Outcome cmd_spider_order(const Job &job) {
  const ekr::SpiderSpec spider(spider_legs(job));
  const Graph g = spider.graph();
  Json j;
  j["command"] = "spider-order";
  j["graph"] = job.graph;
  j["n"] = g.order();
  Json order = Json::array();
  for (int leg : spider.order())
    order.push_back(spider.legs()[leg]);
  j["leg_order"] = order;
  Json reports = Json::array();
  bool holds = true;
  for (int r : r_values(job, ekr::forest_independence_number(g))) {
    const ekr::SpiderOrderReport rep = ekr::spider_order_check(spider, r);
    holds = holds && rep.holds();
    reports.push_back(ekr::to_json(rep));
  }
  j["holds"] = holds;
  j["reports"] = reports;
  return {j};
}

ekr::Real parse_real(const std::optional<std::string> &text, const char *name) {
  try {
    return ekr::Real(*text);
  } catch (const std::exception &) {
    throw InputError(std::string("--") + name + " must be a number, got '" + *text + "'");
  }
}

Json check_json(const ekr::EstimateCheck &c) {
  Json j;
  j["name"] = c.name;
  j["status"] = ekr::to_string(c.status);
  j["lhs"] = c.lhs.convert_to<double>();
  j["rhs"] = c.rhs.convert_to<double>();
  j["detail"] = c.detail;
  return j;
}

Json inequality_json(const ekr::InequalityCheck &c) {
  return {{"hypothesis_ok", c.hypothesis_ok},
          {"holds", c.holds},
          {"lhs", ekr::count_json(c.lhs)},
          {"rhs", ekr::count_json(c.rhs)}};
}

Outcome cmd_bounds(const Job &job) {
  ekr::BoundQuery q;
  q.n = job.n;
  q.r = job.r ? std::optional<long>(*job.r) : std::nullopt;
  q.d = job.d;
  q.s = job.s;
  q.k = job.k;
  if (job.c)
    q.c_density = parse_real(job.c, "c");
  if (job.x)
    q.x = parse_real(job.x, "x");
  if (job.y)
    q.y = parse_real(job.y, "y");

  Json j;
  j["command"] = "bounds";
  if (!job.theorem.empty()) {
    const auto id = ekr::parse_theorem_id(job.theorem);
    if (!id)
      throw InputError("unknown theorem '" + job.theorem + "' (T3, T2-avg, T5, T6, T8)");
    Json t;
    t["theorem"] = ekr::to_string(*id);
    if (q.r) {
      append(t, ekr::to_json(ekr::hypothesis(*id, q)));
    } else {
      const std::vector<long> rs = ekr::rmax(*id, q);
      t["rmax"] = rs;
      t["r_max"] = rs.empty() ? Json(nullptr) : Json(rs.back());
      ekr::BoundQuery at = q;
      at.r = rs.empty() ? 1 : rs.back();
      t["at_r"] = *at.r;
      append(t, ekr::to_json(ekr::hypothesis(*id, at)));
      t.erase("applicable");
    }
    j["theorem"] = t;
  }
  if (q.n && q.r) {
    const long n = *q.n, r = *q.r;
    Json f;
    auto flagged = [](const ekr::FlaggedCount &c) {
      return Json{{"value", ekr::count_json(c.value)}, {"in_range", c.in_range}};
    };
    f["ekr"] = flagged(ekr::ekr_bound(n, r));
    f["hm"] = flagged(ekr::hm_bound(n, r));
    f["frankl"] = flagged(ekr::frankl_bound(n, r));
    f["hm_identity"] = ekr::hm_identity_check(n, r);
    f["binoms"] = inequality_json(ekr::binoms_ineq_check(n, r));
    if (q.s) {
      f["split_star_lower"] = ekr::count_json(ekr::split_star_lower(n, *q.s, r));
      f["binoms2"] = inequality_json(ekr::binoms2_ineq_check(n, r, *q.s));
    }
    if (job.legs)
      f["spider_star_lower"] = ekr::count_json(ekr::spider_star_lower(n, *job.legs, r));
    if (q.d) {
      const ekr::StarLower lower = ekr::claim_star_lower(n, *q.d, r);
      f["claim_star_lower"] = {{"exact", ekr::to_string(lower.exact)},
                               {"ceiling", ekr::count_json(lower.ceiling)}};
    }
    if (q.d && q.k) {
      const ekr::BigStarBound big = ekr::big_star_bound(n, r, *q.d, *q.k);
      f["big_star_bound"] = {{"domain_ok", big.domain_ok},
                             {"value", big.value.convert_to<double>()},
                             {"min_vertices", ekr::to_string(big.min_vertices)}};
    }
    j["closed_forms"] = f;
  }
  Json checks = Json::array();
  for (const auto &c : ekr::estimate_checks(q))
    checks.push_back(check_json(c));
  if (!checks.empty())
    j["estimates"] = checks;
  if (j.size() == 1)
    throw InputError("bounds needs --theorem, --n with --r, or estimate inputs (--x/--y with --k)");
  return {j};
}

Json grid_json(const char *name, const ekr::GridSummary &g) {
  Json j;
  j["grid"] = name;
  j["checked"] = g.checked;
  j["failures"] = g.failures;
  j["boundary"] = g.boundary;
  Json rows = Json::array();
  for (const auto &row : g.rows)
    rows.push_back({{"theorem_id", row.theorem_id},
                    {"parameters", row.parameters},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"holds", row.holds}});
  j["rows"] = rows;
  return j;
}

Outcome cmd_grid(const Job &job) {
  const std::vector<std::string> names = {"product", "binoms", "binoms2", "hm-identity", "exp"};
  if (job.which != "all" && std::find(names.begin(), names.end(), job.which) == names.end())
    throw InputError("unknown grid '" + job.which + "'");
  Json j;
  j["command"] = "grid";
  Json grids = Json::array();
  std::string csv;
  std::size_t failures = 0;
  auto run = [&](const char *name, const ekr::GridSummary &g) {
    grids.push_back(grid_json(name, g));
    failures += g.failures;
    std::string part = ekr::grid_csv(g);
    csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
  };
  const bool all = job.which == "all";
  if (all || job.which == "product")
    run("product", ekr::grid_product_estimate(8, 200, job.keep_rows));
  if (all || job.which == "binoms")
    run("binoms", ekr::grid_binoms(job.n ? *job.n : 5000, job.keep_rows));
  if (all || job.which == "binoms2")
    run("binoms2", ekr::grid_binoms2(5, 16, job.n ? *job.n : 5000, job.keep_rows));
  if (all || job.which == "hm-identity")
    run("hm-identity", ekr::grid_hm_identity(job.n ? *job.n : 60, job.keep_rows));
  if (all || job.which == "exp")
    run("exp", ekr::grid_exp_estimates(10, 100, job.keep_rows));
  j["failures"] = failures;
  j["grids"] = grids;
  return {j, kExitOk, csv};
}

Outcome cmd_peel(const Job &job) {
  const Graph g = load_graph(job.graph);
  long c = 0;
  if (job.c) {
    const ekr::Real value = parse_real(job.c, "c");
    if (value != ekr::Real(value.convert_to<long>()) || value < 1)
      throw InputError("--c must be a positive integer for peel");
    c = value.convert_to<long>();
  }
  int threshold = 0;
  if (job.threshold)
    threshold = *job.threshold;
  else if (c > 0 && job.r)
    threshold = static_cast<int>(3 * c * *job.r);
  else
    throw InputError("peel needs --threshold, or --c together with --r");
  const ekr::PeelReport rep = ekr::peel(g, threshold);
  Json j = header("peel", g);
  append(j, ekr::to_json(rep));
  if (c > 0 && job.r) {
    const ekr::PeelAudit audit = ekr::audit_peel(g, rep, c, *job.r);
    j["audit"] = {{"degrees_ok", audit.degrees_ok},
                  {"residual_ok", audit.residual_ok},
                  {"count_applies", audit.count_applies},
                  {"count_ok", audit.count_ok}};
  }
  return {j};
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s)
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

Outcome cmd_search(const Job &job, ekr::SearchKind kind) {
  ekr::TreeSearchOptions opt;
  opt.kind = kind;
  opt.n_min = job.n_min;
  opt.n_max = job.n_max;
  opt.r_min = job.r_min;
  opt.r_max = job.r_max;
  opt.budget = budget_of(job);
  opt.workers = job.workers;
  const ekr::SearchSummary summary =
      job.catalog.empty() ? ekr::search_trees(opt)
                          : ekr::search_catalog(load_graphs(job.catalog), opt);
  Json j;
  j["command"] = kind == ekr::SearchKind::Hk ? "search-hk" : "search-ekr";
  j["source"] = job.catalog.empty() ? std::string("prufer") : job.catalog;
  append(j, ekr::to_json(summary, kind));

  std::string csv = "n,r,graph6,certificate,report\n";
  for (const auto &f : j["findings"])
    csv += std::to_string(f["n"].get<int>()) + ',' + std::to_string(f["r"].get<int>()) + ',' +
           csv_field(f["graph6"]) + ',' + csv_field(f["certificate"]) + ',' +
           csv_field(f["report"].dump()) + '\n';
  return {j, summary.budget_skipped > 0 ? kExitBudget : kExitOk, csv};
}

// ----------------------------------------------------------------- output

std::string scalar_text(const Json &value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

bool holds_objects(const Json &array) {
  return std::any_of(array.begin(), array.end(), [](const Json &e) { return e.is_object(); });
}

/// Indented JSON with arrays of plain values (vertex sets, per-vertex
/// counts, witnesses) kept on one line.
void pretty(const Json &value, int indent, std::string &out) {
  const std::string pad(indent + 2, ' ');
  if (value.is_object() && !value.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto &[key, item] : value.items()) {
      out += pad + Json(key).dump() + ": ";
      pretty(item, indent + 2, out);
      out += ++i < value.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (value.is_array() && holds_objects(value)) {
    out += "[\n";
    for (std::size_t i = 0; i < value.size(); ++i) {
      out += pad;
      pretty(value[i], indent + 2, out);
      out += i + 1 < value.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += value.dump();
  }
}

std::string render(const Outcome &out, const std::string &format) {
  if (format == "json") {
    std::string text;
    pretty(out.body, 0, text);
    return text + "\n";
  }
  if (format == "csv") {
    if (out.csv)
      return *out.csv;
    std::string csv = "key,value\n";
    for (const auto &[key, value] : out.body.items())
      csv += csv_field(key) + ',' + csv_field(scalar_text(value)) + '\n';
    return csv;
  }
  std::string text;
  for (const auto &[key, value] : out.body.items())
    text += key + ": " + scalar_text(value) + "\n";
  return text;
}

void emit(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text))
    throw InputError("cannot write output file '" + path + "'");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Intersecting families of independent sets: verdicts, counts, bounds and searches"};
  app.require_subcommand(1);
  Job job;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--format", job.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", job.output, "write the report here instead of stdout");
  };
  auto graph_opt = [&](CLI::App *sub) {
    sub->add_option("-g,--graph", job.graph, "generator string or graph6 / edge-list file")
        ->required();
  };
  auto budget_opt = [&](CLI::App *sub) {
    sub->add_option("--budget", job.budget, "search node budget (default: $EKR_BUDGET or 1e7)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--hint", job.hint, "size some intersecting family is known to reach");
  };

  auto *params = app.add_subcommand("params", "alpha, mu, degree and split-vertex statistics");
  graph_opt(params);
  common(params);

  auto *count = app.add_subcommand("count", "number of independent r-sets");
  graph_opt(count);
  count->add_option("-r,--r", job.r)->required();
  count->add_option("-v,--v", job.v, "count only sets containing this vertex");
  count->add_flag("--list", job.list, "include the family itself");
  common(count);

  auto *star = app.add_subcommand("star", "star sizes s_r(v)");
  graph_opt(star);
  star->add_option("-r,--r", job.r)->required();
  star->add_option("-v,--v", job.v, "single vertex (default: all)");
  common(star);

  auto *ekr_cmd = app.add_subcommand("ekr", "exact maximum intersecting family of r-sets");
  graph_opt(ekr_cmd);
  ekr_cmd->add_option("-r,--r", job.r)->required();
  ekr_cmd->add_flag("--nonstar", job.nonstar, "restrict to families with empty intersection");
  budget_opt(ekr_cmd);
  common(ekr_cmd);

  auto *strict = app.add_subcommand("strict-ekr", "whether every maximum family is a full star");
  graph_opt(strict);
  strict->add_option("-r,--r", job.r)->required();
  budget_opt(strict);
  common(strict);

  auto *hk = app.add_subcommand("hk", "whether a leaf attains the largest star (trees)");
  graph_opt(hk);
  hk->add_option("-r,--r", job.r, "single r (default: every r up to alpha)");
  common(hk);

  auto *spider = app.add_subcommand("spider-order", "star-size ordering along a spider");
  graph_opt(spider);
  spider->add_option("-r,--r", job.r, "single r (default: every r up to alpha)");
  common(spider);

  auto *nonuniform = app.add_subcommand("nonuniform-ekr", "intersecting families of all sizes");
  graph_opt(nonuniform);
  budget_opt(nonuniform);
  common(nonuniform);

  auto *bounds = app.add_subcommand("bounds", "closed-form bounds and hypothesis checks");
  bounds->add_option("--theorem", job.theorem, "T3, T2-avg, T5, T6 or T8");
  bounds->add_option("--n", job.n);
  bounds->add_option("-r,--r", job.r);
  bounds->add_option("--d", job.d);
  bounds->add_option("--s", job.s);
  bounds->add_option("--k", job.k);
  bounds->add_option("--c", job.c, "edge density constant");
  bounds->add_option("--x", job.x);
  bounds->add_option("--y", job.y);
  bounds->add_option("--legs", job.legs, "leg count for the spider star lower bound");
  common(bounds);

  auto *grid = app.add_subcommand("grid", "inequality grid checks");
  grid->add_option("--which", job.which, "product, binoms, binoms2, hm-identity, exp or all");
  grid->add_option("--n-max", job.n, "largest n for the binomial grids");
  grid->add_flag("--keep-rows", job.keep_rows, "report passing rows too");
  common(grid);

  auto *peel = app.add_subcommand("peel", "delete high-degree vertices until none remain");
  graph_opt(peel);
  peel->add_option("--threshold", job.threshold);
  peel->add_option("--c", job.c, "edge density constant; threshold 3 c r");
  peel->add_option("-r,--r", job.r);
  common(peel);

  std::vector<CLI::App *> searches;
  for (const char *name : {"search-hk", "search-ekr"}) {
    auto *sub = app.add_subcommand(name, "counterexample search over trees or a catalog");
    sub->add_option("--n-min", job.n_min);
    sub->add_option("--n-max", job.n_max);
    sub->add_option("--r-min", job.r_min);
    sub->add_option("--r-max", job.r_max);
    sub->add_option("--catalog", job.catalog, "graph6 or edge-list file instead of the sweep");
    sub->add_option("--workers", job.workers, "worker threads (0: hardware concurrency)");
    budget_opt(sub);
    common(sub);
    searches.push_back(sub);
  }

  try {
    job.budget = default_budget();
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    Outcome out;
    if (params->parsed())
      out = cmd_params(job);
    else if (count->parsed())
      out = cmd_count(job);
    else if (star->parsed())
      out = cmd_star(job);
    else if (ekr_cmd->parsed())
      out = cmd_ekr(job);
    else if (strict->parsed())
      out = cmd_strict_ekr(job);
    else if (hk->parsed())
      out = cmd_hk(job);
    else if (spider->parsed())
      out = cmd_spider_order(job);
    else if (nonuniform->parsed())
      out = cmd_nonuniform(job);
    else if (bounds->parsed())
      out = cmd_bounds(job);
    else if (grid->parsed())
      out = cmd_grid(job);
    else if (peel->parsed())
      out = cmd_peel(job);
    else if (searches[0]->parsed())
      out = cmd_search(job, ekr::SearchKind::Hk);
    else
      out = cmd_search(job, ekr::SearchKind::Ekr);
    emit(render(out, job.format), job.output);
    if (out.status == kExitBudget)
      std::cerr << "budget exceeded (" << job.budget << " nodes)\n";
    return out.status;
  } catch (const ekr::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInput;
}
