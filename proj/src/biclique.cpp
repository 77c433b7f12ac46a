#include "isk4/detect.hpp"

namespace isk4 {

const char* to_string(RamseyExtraction::Status s) {
  switch (s) {
    case RamseyExtraction::Status::found: return "found";
    case RamseyExtraction::Status::not_found: return "not_found";
    case RamseyExtraction::Status::clique_violation: return "clique_violation";
    case RamseyExtraction::Status::budget: return "budget";
  }
  return "?";
}

bool is_valid_biclique(const Graph& g, const BicliqueWitness& w) {
  if (!w.side_a.subset_of(g.vertices()) || !w.side_b.subset_of(g.vertices())) return false;
  if (w.side_a.empty() || w.side_b.empty() || w.side_a.intersects(w.side_b)) return false;
  for (Vertex a : w.side_a)
    if (!w.side_b.subset_of(g.adj(a))) return false;
  if (w.induced && !(is_stable(g, w.side_a) && is_stable(g, w.side_b))) return false;
  return true;
}

namespace {

bool stable_dfs(const Graph& g, VertexSet chosen, VertexSet candidates, int size, NodeCounter& counter,
                VertexSet& out) {
  counter.tick();
  if (chosen.size() == size) {
    out = chosen;
    return true;
  }
  while (!candidates.empty() && chosen.size() + candidates.size() >= size) {
    const Vertex v = candidates.first();
    candidates.erase(v);
    if (stable_dfs(g, chosen.with(v), candidates - g.adj(v), size, counter, out)) return true;
  }
  return false;
}

// Side A grows in ascending order; `common` is the common neighborhood of A.
// `stable` selects the induced variant.
bool biclique_dfs(const Graph& g, int s, bool stable, VertexSet side_a, VertexSet common, Vertex start,
                  NodeCounter& counter, BicliqueWitness& out) {
  counter.tick();
  if (side_a.size() == s) {
    VertexSet side_b;
    if (!stable) {
      for (Vertex v : common) {
        if (side_b.size() == s) break;
        side_b.insert(v);
      }
    } else if (!stable_dfs(g, {}, common, s, counter, side_b)) {
      return false;
    }
    out = {side_a, side_b, stable};
    return true;
  }
  for (Vertex v = start; v < g.order(); ++v) {
    if (stable && g.adj(v).intersects(side_a)) continue;
    const VertexSet next = side_a.empty() ? g.adj(v) : common & g.adj(v);
    if (next.size() < s) continue;
    if (g.order() - v < s - side_a.size()) break;
    if (biclique_dfs(g, s, stable, side_a.with(v), next, v + 1, counter, out)) return true;
  }
  return false;
}

SearchResult<BicliqueWitness> biclique_search(const Graph& g, int s, bool stable, SearchLimits limits) {
  if (s < 1) throw GraphError("biclique side size must be at least 1");
  try {
    NodeCounter counter(limits);
    BicliqueWitness w;
    if (biclique_dfs(g, s, stable, {}, g.vertices(), 0, counter, w)) return SearchResult<BicliqueWitness>::found(w);
    return SearchResult<BicliqueWitness>::none();
  } catch (const BudgetExhausted&) {
    return SearchResult<BicliqueWitness>::budget();
  }
}

}  // namespace

SearchResult<VertexSet> find_stable_set(const Graph& g, const VertexSet& within, int size, SearchLimits limits) {
  g.check_set(within);
  try {
    NodeCounter counter(limits);
    VertexSet out;
    if (stable_dfs(g, {}, within, size, counter, out)) return SearchResult<VertexSet>::found(out);
    return SearchResult<VertexSet>::none();
  } catch (const BudgetExhausted&) {
    return SearchResult<VertexSet>::budget();
  }
}

SearchResult<BicliqueWitness> find_biclique_subgraph(const Graph& g, int s, SearchLimits limits) {
  return biclique_search(g, s, false, limits);
}

SearchResult<BicliqueWitness> find_induced_biclique(const Graph& g, int s, SearchLimits limits) {
  return biclique_search(g, s, true, limits);
}

RamseyExtraction ramsey_extract_k44(const Graph& g, const BicliqueWitness& w, int k, SearchLimits limits) {
  if (k < 1) throw GraphError("clique bound must be positive");
  if (!is_valid_biclique(g, BicliqueWitness{w.side_a, w.side_b, false}))
    throw GraphError("ramsey_extract_k44: not a complete bipartite subgraph");
  if (w.side_a.size() < 4 || w.side_b.size() < 4)
    throw GraphError("ramsey_extract_k44: both sides need at least 4 vertices");

  RamseyExtraction out;
  std::array<VertexSet, 2> picked;
  const std::array<VertexSet, 2> sides{w.side_a, w.side_b};
  for (int i = 0; i < 2; ++i) {
    auto stable = find_stable_set(g, sides[i], 4, limits);
    if (stable.is_budget()) {
      out.status = RamseyExtraction::Status::budget;
      return out;
    }
    if (stable.is_found()) {
      picked[i] = *stable.value;
      continue;
    }
    // No stable 4-set: a k-clique inside this side plus any vertex of the
    // other side would break the clique bound.
    auto clique = maximum_clique(g, sides[i], limits);
    if (clique.is_budget()) {
      out.status = RamseyExtraction::Status::budget;
      return out;
    }
    if (clique.value->size() >= k) {
      VertexSet c;
      for (Vertex v : *clique.value) {
        if (c.size() == k) break;
        c.insert(v);
      }
      out.status = RamseyExtraction::Status::clique_violation;
      out.clique = c.with(sides[1 - i].first());
      return out;
    }
    out.status = RamseyExtraction::Status::not_found;
    return out;
  }
  out.status = RamseyExtraction::Status::found;
  out.k44 = {picked[0], picked[1], true};
  return out;
}

}  // namespace isk4
