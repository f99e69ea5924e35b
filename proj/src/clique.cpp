#include "ekr/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ekr {

bool Bits::none() const {
  for (auto w : words_)
    if (w)
      return false;
  return true;
}

int Bits::count() const {
  int c = 0;
  for (auto w : words_)
    c += std::popcount(w);
  return c;
}

int Bits::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i])
      return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  return -1;
}

bool Bits::intersects(const Bits &o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i])
      return true;
  return false;
}

void Bits::and_with(const Bits &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
}

void Bits::and_not(const Bits &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
}

std::vector<int> Bits::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (auto w = words_[i]; w; w &= w - 1)
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
  return out;
}

namespace {

struct Aborted {};

class Solver {
public:
  Solver(const CliqueProblem &p, const CliqueOptions &opt) : opt_(opt) {
    const int n = p.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> degree(n);
    for (int i = 0; i < n; ++i)
      degree[i] = p.adj[i].count();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    pos_.resize(n);
    for (int i = 0; i < n; ++i)
      pos_[order_[i]] = i;

    adj_.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
      for (int j : p.adj[order_[i]].indices())
        adj_[i].set(pos_[j]);

    if (opt_.require_empty_intersection) {
      const auto &m = *opt_.members;
      members_.resize(n);
      VertexSet ground;
      for (int i = 0; i < n; ++i) {
        members_[i] = m[order_[i]];
        ground |= members_[i];
      }
      avoid_.assign(kMaxVertices, Bits(n));
      ground.for_each([&](int x) {
        for (int i = 0; i < n; ++i)
          if (!members_[i].contains(x))
            avoid_[x].set(i);
      });
    }
    best_size_ = opt_.must_exceed;
  }

  CliqueResult run() {
    const int n = static_cast<int>(order_.size());
    CliqueResult result;
    Bits all(n);
    for (int i = 0; i < n; ++i)
      all.set(i);
    try {
      if (opt_.symmetry != nullptr && opt_.symmetry->order() > 1) {
        std::vector<std::uint32_t> group(opt_.symmetry->order());
        std::iota(group.begin(), group.end(), 0U);
        orbital(all, VertexSet{}, true, group);
      } else {
        expand(all, VertexSet{}, true);
      }
    } catch (const Aborted &) {
      result.complete = false;
    }
    result.nodes = nodes_;
    for (int i : best_)
      result.clique.push_back(order_[i]);
    std::sort(result.clique.begin(), result.clique.end());
    return result;
  }

private:
  bool acceptable(const VertexSet &common, bool nothing_chosen) const {
    if (!opt_.require_empty_intersection)
      return true;
    return !nothing_chosen && common.empty();
  }

  // Every element still common to the chosen sets needs some remaining
  // candidate that avoids it.
  bool feasible(const Bits &p, const VertexSet &common, bool nothing_chosen) const {
    if (!opt_.require_empty_intersection || nothing_chosen)
      return true;
    bool ok = true;
    common.for_each([&](int x) {
      if (ok && !p.intersects(avoid_[x]))
        ok = false;
    });
    return ok;
  }

  int image(std::uint32_t g, int v) const {
    return pos_[opt_.symmetry->apply(g, order_[v])];
  }

  int colour_bound(const Bits &p) const {
    Bits uncoloured = p;
    int colour = 0;
    while (!uncoloured.none()) {
      ++colour;
      Bits q = uncoloured;
      for (int v = q.first(); v >= 0; v = q.first()) {
        q.reset(v);
        q.and_not(adj_[v]);
        uncoloured.reset(v);
      }
    }
    return colour;
  }

  VertexSet add_member(const VertexSet &common, bool nothing_chosen, int v) const {
    if (!opt_.require_empty_intersection)
      return common;
    return nothing_chosen ? members_[v] : (common & members_[v]);
  }

  // `group` fixes every chosen candidate and maps every orbit excluded on
  // the way down onto itself, so it acts on the subproblem (p, common).
  void orbital(Bits p, VertexSet common, bool nothing_chosen,
               const std::vector<std::uint32_t> &group) {
    if (++nodes_ > opt_.max_nodes)
      throw Aborted{};
    const int depth = static_cast<int>(current_.size());
    if (depth > best_size_ && acceptable(common, nothing_chosen)) {
      best_size_ = depth;
      best_ = current_;
    }
    while (!p.none() && feasible(p, common, nothing_chosen)) {
      if (depth + colour_bound(p) <= best_size_)
        return;
      if (group.size() <= 1 || depth >= opt_.symmetry_depth) {
        expand(std::move(p), common, nothing_chosen);
        return;
      }
      const int v = p.first();
      Bits orbit(p.size());
      std::vector<std::uint32_t> stabiliser;
      for (std::uint32_t g : group) {
        const int w = image(g, v);
        orbit.set(w);
        if (w == v)
          stabiliser.push_back(g);
      }
      Bits next = p;
      next.and_with(adj_[v]);
      current_.push_back(v);
      orbital(std::move(next), add_member(common, nothing_chosen, v), false, stabiliser);
      current_.pop_back();
      p.and_not(orbit);
      if (++nodes_ > opt_.max_nodes)
        throw Aborted{};
    }
  }

  void expand(Bits p, VertexSet common, bool nothing_chosen) {
    if (++nodes_ > opt_.max_nodes)
      throw Aborted{};
    const int depth = static_cast<int>(current_.size());
    if (depth > best_size_ && acceptable(common, nothing_chosen)) {
      best_size_ = depth;
      best_ = current_;
    }
    if (p.none() || !feasible(p, common, nothing_chosen))
      return;

    // Greedy sequential colouring: colour classes are independent sets of
    // the compatibility graph, so a clique uses at most one per class.
    std::vector<int> vs, colours;
    Bits uncoloured = p;
    int colour = 0;
    while (!uncoloured.none()) {
      ++colour;
      Bits q = uncoloured;
      for (int v = q.first(); v >= 0; v = q.first()) {
        q.reset(v);
        q.and_not(adj_[v]);
        uncoloured.reset(v);
        vs.push_back(v);
        colours.push_back(colour);
      }
    }

    for (int i = static_cast<int>(vs.size()) - 1; i >= 0; --i) {
      if (depth + colours[i] <= best_size_)
        return;
      const int v = vs[i];
      Bits next = p;
      next.and_with(adj_[v]);
      current_.push_back(v);
      expand(std::move(next), add_member(common, nothing_chosen, v), false);
      current_.pop_back();
      p.reset(v);
    }
  }

  const CliqueOptions &opt_;
  std::vector<int> order_, pos_;
  std::vector<Bits> adj_;
  std::vector<VertexSet> members_;
  std::vector<Bits> avoid_;
  std::vector<int> current_, best_;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
};

} // namespace

CliqueResult max_clique(const CliqueProblem &problem, const CliqueOptions &options) {
  return Solver(problem, options).run();
}

} // namespace ekr
