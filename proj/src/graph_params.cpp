#include "ekr/error.hpp"
#include "ekr/graph.hpp"

namespace ekr {

namespace {

void require_exact_range(const Graph &g) {
  if (g.order() > kExactSearchLimit)
    throw Error(ErrorKind::SearchLimitExceeded,
                "exact alpha/mu search supports n <= " + std::to_string(kExactSearchLimit) +
                    ", got n = " + std::to_string(g.order()));
}

class MaxIndependent {
public:
  explicit MaxIndependent(const Graph &g) : g_(g) {}

  int solve() {
    best_ = 0;
    expand(g_.vertices(), 0);
    return best_;
  }

private:
  void expand(VertexSet avail, int size) {
    // Vertices with no neighbour left in `avail` can always be taken.
    int pick = -1, pick_deg = -1;
    VertexSet isolated;
    avail.for_each([&](int v) {
      int d = (g_.neighbors(v) & avail).size();
      if (d == 0)
        isolated.insert(v);
      else if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    size += isolated.size();
    avail -= isolated;
    if (avail.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + avail.size() <= best_)
      return;
    VertexSet without = avail;
    without.erase(pick);
    expand(avail - g_.closed_neighbors(pick), size + 1);
    expand(without, size);
  }

  const Graph &g_;
  int best_ = 0;
};

class MinIndependentDominating {
public:
  explicit MinIndependentDominating(const Graph &g) : g_(g), max_closed_(g.max_degree() + 1) {}

  int solve() {
    best_ = g_.order() + 1;
    expand(VertexSet{}, g_.vertices(), g_.vertices());
    return best_;
  }

private:
  // `allowed`: vertices that may still join the set (independent of the
  // chosen ones and not excluded by earlier branches).
  void expand(VertexSet chosen, VertexSet undominated, VertexSet allowed) {
    const int size = chosen.size();
    if (undominated.empty()) {
      best_ = std::min(best_, size);
      return;
    }
    const int lower = (undominated.size() + max_closed_ - 1) / max_closed_;
    if (size + lower >= best_)
      return;

    int target = -1, options = kMaxVertices + 1;
    bool dead = false;
    undominated.for_each([&](int u) {
      int c = (g_.closed_neighbors(u) & allowed).size();
      if (c == 0)
        dead = true;
      if (c < options) {
        options = c;
        target = u;
      }
    });
    if (dead)
      return;

    VertexSet candidates = g_.closed_neighbors(target) & allowed;
    candidates.for_each([&](int c) {
      VertexSet closed = g_.closed_neighbors(c);
      VertexSet next = chosen;
      next.insert(c);
      expand(next, undominated - closed, allowed - closed);
      allowed.erase(c);
    });
  }

  const Graph &g_;
  int max_closed_;
  int best_ = 0;
};

} // namespace

int independence_number(const Graph &g) {
  require_exact_range(g);
  return MaxIndependent(g).solve();
}

int min_maximal_independent_set(const Graph &g) {
  require_exact_range(g);
  return MinIndependentDominating(g).solve();
}

GraphParams params(const Graph &g) {
  GraphParams p;
  p.alpha = independence_number(g);
  p.mu = min_maximal_independent_set(g);
  p.max_degree = g.max_degree();
  p.split_count = g.split_vertices().size();
  p.edge_count = g.edge_count();
  return p;
}

} // namespace ekr
