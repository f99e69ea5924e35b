#include "ekr/search.hpp"
#include "ekr/error.hpp"
#include "ekr/families.hpp"
#include "ekr/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace ekr {

namespace {

struct Collector {
  std::mutex mu;
  std::map<std::pair<std::string, int>, Finding> findings;
  std::uint64_t instances = 0, checks = 0, skipped = 0;

  void merge(std::vector<Finding> &local, std::uint64_t inst, std::uint64_t chk, std::uint64_t skip) {
    std::lock_guard lock(mu);
    // Keep the smallest graph6 per class so output is schedule-independent.
    for (auto &f : local) {
      auto [it, inserted] = findings.try_emplace({f.certificate, f.r}, f);
      if (!inserted && f.graph6 < it->second.graph6)
        it->second = std::move(f);
    }
    instances += inst;
    checks += chk;
    skipped += skip;
    local.clear();
  }

  SearchSummary summary() {
    SearchSummary s;
    for (auto &[key, f] : findings)
      s.findings.push_back(std::move(f));
    std::sort(s.findings.begin(), s.findings.end(), [](const Finding &a, const Finding &b) {
      return std::tie(a.n, a.certificate, a.r) < std::tie(b.n, b.certificate, b.r);
    });
    s.instances = instances;
    s.checks = checks;
    s.budget_skipped = skipped;
    return s;
  }
};

struct Worker {
  const TreeSearchOptions &opt;
  std::vector<Finding> found;
  std::uint64_t instances = 0, checks = 0, skipped = 0;

  void examine(const Graph &g) {
    ++instances;
    const bool tree = g.is_tree();
    if (opt.kind == SearchKind::Hk && !tree)
      throw Error(ErrorKind::NotATree, "HK search needs trees; got " + emit_graph6(g));
    const int alpha = g.is_forest() ? forest_independence_number(g) : independence_number(g);
    const int top = std::min(opt.r_max, alpha);
    std::string cert;
    auto certificate = [&] {
      if (cert.empty())
        cert = tree ? tree_certificate(g) : emit_graph6(g);
      return cert;
    };
    for (int r = std::max(opt.r_min, 1); r <= top; ++r) {
      ++checks;
      if (opt.kind == SearchKind::Hk) {
        HkReport rep = is_r_hk(g, r);
        if (!rep.best_is_leaf)
          found.push_back({g.order(), r, emit_graph6(g), certificate(), std::move(rep), {}});
      } else {
        EkrReport rep = is_r_ekr(g, r, opt.budget);
        if (rep.verdict == Verdict::BudgetExceeded)
          ++skipped;
        else if (rep.verdict == Verdict::NotEkr)
          found.push_back({g.order(), r, emit_graph6(g), certificate(), {}, std::move(rep)});
      }
    }
  }
};

unsigned worker_count(unsigned requested) {
  if (requested)
    return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace

SearchSummary search_trees(const TreeSearchOptions &opt) {
  if (opt.n_max > kPruferSweepLimit)
    throw Error(ErrorKind::SearchLimitExceeded,
                "labelled-tree sweeps support n <= " + std::to_string(kPruferSweepLimit));
  Collector out;
  const unsigned workers = worker_count(opt.workers);
  for (int n = std::max(opt.n_min, 1); n <= opt.n_max; ++n) {
    const std::uint64_t total = labeled_tree_count(n);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = w * chunk, last = std::min(total, first + chunk);
      if (first >= last)
        break;
      pool.emplace_back([&, n, first, last] {
        try {
          Worker worker{opt, {}};
          for_each_prufer_tree(n, first, last, [&](const Graph &t) { worker.examine(t); });
          out.merge(worker.found, worker.instances, worker.checks, worker.skipped);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          failure = std::current_exception();
        }
      });
    }
    for (auto &t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);
  }
  return out.summary();
}

SearchSummary search_catalog(const std::vector<Graph> &catalog, const TreeSearchOptions &opt) {
  Collector out;
  Worker worker{opt, {}};
  for (const auto &g : catalog)
    worker.examine(g);
  out.merge(worker.found, worker.instances, worker.checks, worker.skipped);
  return out.summary();
}

} // namespace ekr
