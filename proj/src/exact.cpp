#include <algorithm>
#include <vector>

#include "isk4/detect.hpp"

namespace isk4 {

namespace {

class MaxClique {
public:
  MaxClique(const Graph& g, SearchLimits limits) : g_(g), counter_(limits) {}

  VertexSet run(const VertexSet& within) {
    expand({}, within);
    return best_;
  }

private:
  // Greedy sequential coloring of P; vertices come out in nondecreasing color order.
  void color_sort(const VertexSet& p, std::vector<Vertex>& order, std::vector<int>& bound) const {
    VertexSet uncolored = p;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet available = uncolored;
      while (!available.empty()) {
        const Vertex v = available.first();
        available.erase(v);
        available -= g_.adj(v);
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(const VertexSet& r, VertexSet p) {
    counter_.tick();
    if (p.empty()) {
      if (r.size() > best_.size()) best_ = r;
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> bound;
    color_sort(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (r.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      expand(r.with(v), p & g_.adj(v));
      p.erase(v);
    }
  }

  const Graph& g_;
  NodeCounter counter_;
  VertexSet best_;
};

struct SolvedEarly {};

// DSATUR branch and bound. A maximum clique is precolored 0..w-1.
class ExactColoring {
public:
  ExactColoring(const Graph& g, SearchLimits limits)
      : g_(g), n_(g.order()), counter_(limits), color_(n_, -1), count_(n_ * n_, 0), sat_(n_, 0) {}

  int run(const VertexSet& clique) {
    lower_ = clique.size();
    upper_ = greedy_dsatur();
    if (lower_ >= upper_) return upper_;
    int used = 0;
    for (Vertex v : clique) assign(v, used++);
    try {
      search(clique.size(), used);
    } catch (const SolvedEarly&) {
    }
    return upper_;
  }

private:
  int greedy_dsatur() {
    std::vector<int> color(n_, -1);
    std::vector<VertexSet> seen(n_);
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (color[v] >= 0) continue;
        if (best < 0 || seen[v].size() > seen[best].size() ||
            (seen[v].size() == seen[best].size() && g_.adj(v).size() > g_.adj(best).size()))
          best = v;
      }
      int c = 0;
      while (seen[best].contains(c)) ++c;
      color[best] = c;
      used = std::max(used, c + 1);
      for (Vertex u : g_.adj(best)) seen[u].insert(c);
    }
    return used;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex u : g_.adj(v))
      if (count_[u * n_ + c]++ == 0) ++sat_[u];
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex u : g_.adj(v))
      if (--count_[u * n_ + c] == 0) --sat_[u];
  }

  Vertex pick() const {
    Vertex best = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int deg = 0;
      for (Vertex u : g_.adj(v))
        if (color_[u] < 0) ++deg;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && deg > best_deg)) {
        best = v;
        best_deg = deg;
      }
    }
    return best;
  }

  void search(int colored, int used) {
    counter_.tick();
    if (used >= upper_) return;
    if (colored == n_) {
      upper_ = used;
      if (upper_ <= lower_) throw SolvedEarly{};
      return;
    }
    const Vertex v = pick();
    for (int c = 0; c <= used && c < upper_ - 1; ++c) {
      if (count_[v * n_ + c] > 0) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c + 1));
      unassign(v);
      if (used >= upper_) return;
    }
  }

  const Graph& g_;
  int n_;
  NodeCounter counter_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> sat_;
  int lower_ = 0;
  int upper_ = 0;
};

}  // namespace

SearchResult<VertexSet> maximum_clique(const Graph& g, const VertexSet& within, SearchLimits limits) {
  g.check_set(within);
  try {
    MaxClique mc(g, limits);
    return SearchResult<VertexSet>::found(mc.run(within));
  } catch (const BudgetExhausted&) {
    return SearchResult<VertexSet>::budget();
  }
}

SearchResult<int> clique_number(const Graph& g, SearchLimits limits) {
  auto c = maximum_clique(g, g.vertices(), limits);
  if (c.is_budget()) return SearchResult<int>::budget();
  return SearchResult<int>::found(c.value->size());
}

SearchResult<int> chromatic_number_exact(const Graph& g, SearchLimits limits) {
  try {
    MaxClique mc(g, limits);
    const VertexSet clique = mc.run(g.vertices());
    ExactColoring ec(g, limits);
    return SearchResult<int>::found(ec.run(clique));
  } catch (const BudgetExhausted&) {
    return SearchResult<int>::budget();
  }
}

}  // namespace isk4
