#include <algorithm>
#include <map>
#include <set>

#include "isk4/detect.hpp"

namespace isk4 {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget: return "budget";
  }
  return "?";
}

std::string verify_witness(const Graph& g, const SubdivisionWitness& w, int min_order) {
  const int n = g.order();
  std::set<Vertex> branch(w.branch.begin(), w.branch.end());
  if (branch.size() != 4) return "branch vertices are not distinct";
  for (Vertex b : w.branch)
    if (b < 0 || b >= n) return "branch vertex out of range";

  std::set<Vertex> seen(branch);
  std::set<std::pair<Vertex, Vertex>> path_edges;
  for (int k = 0; k < 6; ++k) {
    const auto& p = w.paths[k];
    const Vertex from = w.branch[kBranchPairs[k].first];
    const Vertex to = w.branch[kBranchPairs[k].second];
    if (p.size() < 2) return "path " + std::to_string(k) + " has fewer than two vertices";
    if (p.front() != from || p.back() != to) return "path " + std::to_string(k) + " has wrong endpoints";
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= n) return "path vertex out of range";
      if (!seen.insert(p[i]).second) return "path interiors are not disjoint";
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.adjacent(p[i], p[i + 1])) return "path " + std::to_string(k) + " uses a non-edge";
      path_edges.emplace(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
    }
  }

  std::set<Vertex> total;
  for (Vertex v : w.total) total.insert(v);
  if (total != seen) return "total does not match the union of the paths";
  if (static_cast<int>(total.size()) < min_order) return "witness has fewer than " + std::to_string(min_order) + " vertices";

  std::map<Vertex, int> degree;
  for (auto u = total.begin(); u != total.end(); ++u) {
    for (auto v = std::next(u); v != total.end(); ++v) {
      const bool edge = g.adjacent(*u, *v);
      if (edge != path_edges.contains({*u, *v})) return "witness is not induced (chord or missing edge)";
      if (edge) {
        ++degree[*u];
        ++degree[*v];
      }
    }
  }
  for (Vertex v : total) {
    const int want = branch.contains(v) ? 3 : 2;
    if (degree[v] != want) return "vertex " + std::to_string(v) + " has wrong degree in the witness";
  }
  return {};
}

std::optional<SubdivisionWitness> subdivision_structure(const Graph& g, const VertexSet& s) {
  if (s.size() < 4) return std::nullopt;
  VertexSet branch_set;
  for (Vertex v : s) {
    const int d = (g.adj(v) & s).size();
    if (d == 3)
      branch_set.insert(v);
    else if (d != 2)
      return std::nullopt;
  }
  if (branch_set.size() != 4) return std::nullopt;

  SubdivisionWitness w;
  const auto bv = branch_set.to_vector();
  std::copy(bv.begin(), bv.end(), w.branch.begin());
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::find(w.branch.begin(), w.branch.end(), v) - w.branch.begin());
  };

  std::array<bool, 6> have{};
  VertexSet covered = branch_set;
  for (int bi = 0; bi < 4; ++bi) {
    const Vertex x = w.branch[bi];
    for (Vertex y : g.adj(x) & s) {
      std::vector<Vertex> path{x};
      Vertex prev = x;
      Vertex cur = y;
      while (!branch_set.contains(cur)) {
        path.push_back(cur);
        const VertexSet next = (g.adj(cur) & s).without(prev);
        prev = cur;
        cur = next.first();
      }
      path.push_back(cur);
      const int bj = index_of(cur);
      if (bj == bi) return std::nullopt;
      if (bj < bi) continue;  // walked from the other end already
      const int k = static_cast<int>(
          std::find(kBranchPairs.begin(), kBranchPairs.end(), std::pair<int, int>{bi, bj}) -
          kBranchPairs.begin());
      if (have[k]) return std::nullopt;  // parallel chains
      have[k] = true;
      for (Vertex v : path) covered.insert(v);
      w.paths[k] = std::move(path);
    }
  }
  if (!std::all_of(have.begin(), have.end(), [](bool b) { return b; })) return std::nullopt;
  if (covered != s) return std::nullopt;  // stray cycles of degree-2 vertices
  w.total = s;
  return w;
}

bool is_k4_subdivision(const Graph& g) { return subdivision_structure(g, g.vertices()).has_value(); }

bool is_k4plus_subdivision(const Graph& g) { return g.order() >= kK4PlusOrder && is_k4_subdivision(g); }

SearchResult<SubdivisionWitness> find_isk4plus_oracle(const Graph& g, OracleOptions opts) {
  const int n = g.order();
  if (n > opts.max_order)
    throw GraphError("oracle ceiling exceeded: order " + std::to_string(n) + " > " + std::to_string(opts.max_order));
  if (n > 62) throw GraphError("oracle cannot enumerate subsets of more than 62 vertices");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) < opts.min_order) continue;
    const VertexSet s = VertexSet::from_lanes(mask, 0);
    if (auto w = subdivision_structure(g, s)) return SearchResult<SubdivisionWitness>::found(std::move(*w));
  }
  return SearchResult<SubdivisionWitness>::none();
}

namespace {

// Fixes four branch vertices, then routes the six connecting paths one at a
// time. Every placed vertex joins `placed_`; a new interior vertex may touch
// only its predecessor and, when it closes the path, the target.
class SubdivisionSearch {
public:
  SubdivisionSearch(const Graph& g, int min_order, SearchLimits limits)
      : g_(g), min_order_(min_order), counter_(limits) {}

  std::optional<SubdivisionWitness> run() {
    const int n = g_.order();
    VertexSet eligible;
    for (Vertex v = 0; v < n; ++v)
      if (g_.adj(v).size() >= 3) eligible.insert(v);
    if (eligible.size() < 4) return std::nullopt;

    const auto cand = eligible.to_vector();
    const int m = static_cast<int>(cand.size());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k)
          for (int l = k + 1; l < m; ++l)
            if (try_branch({cand[i], cand[j], cand[k], cand[l]})) return witness_;
    return std::nullopt;
  }

private:
  bool try_branch(std::array<Vertex, 4> branch) {
    counter_.tick();
    witness_ = SubdivisionWitness{};
    witness_.branch = branch;
    branch_set_ = VertexSet{branch[0], branch[1], branch[2], branch[3]};
    placed_ = branch_set_;
    pending_.clear();
    for (int k = 0; k < 6; ++k) {
      const Vertex x = branch[kBranchPairs[k].first];
      const Vertex y = branch[kBranchPairs[k].second];
      if (g_.adjacent(x, y))
        witness_.paths[k] = {x, y};
      else
        pending_.push_back(k);
    }
    if (pending_.empty() && min_order_ > 4) return false;
    if (!remaining_feasible(0)) return false;
    if (!route(0)) return false;
    witness_.total = placed_;
    return witness_.total.size() >= min_order_;
  }

  // Free vertices usable strictly inside a path ending at `target` once
  // everything in placed_ is fixed: not placed, no neighbor in placed_ - {target}.
  VertexSet interior_region(Vertex target) const {
    const VertexSet blocked = placed_.without(target);
    VertexSet region;
    for (Vertex v : g_.vertices() - placed_)
      if (!g_.adj(v).intersects(blocked)) region.insert(v);
    return region;
  }

  bool remaining_feasible(std::size_t from) const {
    for (std::size_t i = from; i < pending_.size(); ++i) {
      const int k = pending_[i];
      const Vertex x = witness_.branch[kBranchPairs[k].first];
      const Vertex y = witness_.branch[kBranchPairs[k].second];
      const VertexSet blocked = placed_ - VertexSet{x, y};
      VertexSet region;
      for (Vertex v : g_.vertices() - placed_)
        if (!g_.adj(v).intersects(blocked)) region.insert(v);
      const VertexSet start = g_.adj(x) & region;
      if (start.empty()) return false;
      VertexSet reach = start;
      VertexSet frontier = start;
      while (!frontier.empty() && !reach.intersects(g_.adj(y))) {
        VertexSet next;
        for (Vertex v : frontier) next |= g_.adj(v);
        next &= region;
        next -= reach;
        reach |= next;
        frontier = next;
      }
      if (!reach.intersects(g_.adj(y))) return false;
    }
    return true;
  }

  bool route(std::size_t idx) {
    if (idx == pending_.size()) return true;
    const int k = pending_[idx];
    const Vertex x = witness_.branch[kBranchPairs[k].first];
    const Vertex y = witness_.branch[kBranchPairs[k].second];
    witness_.paths[k] = {x};
    if (extend(idx, x, y)) return true;
    witness_.paths[k].clear();
    return false;
  }

  bool extend(std::size_t idx, Vertex end, Vertex target) {
    counter_.tick();
    const int k = pending_[idx];
    const VertexSet blocked = placed_ - VertexSet{end, target};
    VertexSet next_step;
    for (Vertex c : g_.adj(end) - placed_)
      if (!g_.adj(c).intersects(blocked)) next_step.insert(c);
    if (next_step.empty()) return false;

    // Distances to target through vertices usable after the next step.
    const VertexSet later = interior_region(target) - g_.adj(end);
    std::vector<std::pair<int, Vertex>> order;
    {
      VertexSet layer{target};
      VertexSet seen{target};
      VertexSet left = next_step;
      for (int dist = 1; !left.empty() && !layer.empty(); ++dist) {
        VertexSet touch;
        for (Vertex v : layer) touch |= g_.adj(v);
        for (Vertex c : left & touch) order.emplace_back(dist, c);
        left -= touch;
        VertexSet next = touch & later;
        next -= seen;
        seen |= next;
        layer = next;
      }
    }
    std::sort(order.begin(), order.end());

    for (auto [dist, c] : order) {
      placed_.insert(c);
      witness_.paths[k].push_back(c);
      bool ok = false;
      if (dist == 1) {
        witness_.paths[k].push_back(target);
        ok = remaining_feasible(idx + 1) && route(idx + 1);
        if (!ok) witness_.paths[k].pop_back();
      } else {
        ok = extend(idx, c, target);
      }
      if (ok) return true;
      witness_.paths[k].pop_back();
      placed_.erase(c);
    }
    return false;
  }

  const Graph& g_;
  int min_order_;
  NodeCounter counter_;
  SubdivisionWitness witness_;
  VertexSet branch_set_;
  VertexSet placed_;
  std::vector<int> pending_;
};

}  // namespace

SearchResult<SubdivisionWitness> find_induced_k4_subdivision(const Graph& g, int min_order,
                                                             SearchLimits limits) {
  try {
    SubdivisionSearch search(g, min_order, limits);
    if (auto w = search.run()) return SearchResult<SubdivisionWitness>::found(std::move(*w));
    return SearchResult<SubdivisionWitness>::none();
  } catch (const BudgetExhausted&) {
    return SearchResult<SubdivisionWitness>::budget();
  }
}

}  // namespace isk4
