#include "isk4/structure.hpp"

#include <algorithm>
#include <limits>

namespace isk4 {

int MultipartiteWitness::part_of(Vertex v) const {
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    if (parts[i].contains(v)) return i;
  return -1;
}

MultipartiteWitness make_multipartite(std::vector<VertexSet> parts) {
  MultipartiteWitness m;
  m.parts = std::move(parts);
  for (int i = 0; i < static_cast<int>(m.parts.size()); ++i) {
    m.members |= m.parts[i];
    if (m.parts[i].size() >= 4) m.big_parts.push_back(i);
  }
  return m;
}

std::string validate_multipartite(const Graph& g, const MultipartiteWitness& m) {
  VertexSet seen;
  std::vector<int> big;
  for (int i = 0; i < static_cast<int>(m.parts.size()); ++i) {
    const VertexSet& p = m.parts[i];
    if (p.empty()) return "part " + std::to_string(i) + " is empty";
    if (!p.subset_of(g.vertices())) return "part " + std::to_string(i) + " leaves the graph";
    if (p.intersects(seen)) return "parts are not disjoint";
    if (!is_stable(g, p)) return "part " + std::to_string(i) + " is not stable";
    seen |= p;
    if (p.size() >= 4) big.push_back(i);
  }
  if (seen != m.members) return "members differ from the union of the parts";
  if (big != m.big_parts) return "big_parts does not list the parts of size >= 4";
  if (big.size() < 2) return "fewer than two parts of size >= 4";
  for (const VertexSet& p : m.parts)
    for (Vertex v : p)
      if (!(m.members - p).subset_of(g.adj(v))) return "parts are not pairwise complete";
  return {};
}

bool extends_multipartite(const Graph& g, const MultipartiteWitness& m, Vertex v) {
  if (m.members.contains(v)) return false;
  const VertexSet nv = g.adj(v);
  if (m.members.subset_of(nv)) return true;
  for (const VertexSet& p : m.parts)
    if (!nv.intersects(p) && (m.members - p).subset_of(nv)) return true;
  return false;
}

MultipartiteWitness grow_maximal_multipartite(const Graph& g, const BicliqueWitness& seed) {
  if (!is_valid_biclique(g, {seed.side_a, seed.side_b, true}) || seed.side_a.size() < 4 ||
      seed.side_b.size() < 4)
    throw GraphError("grow_maximal_multipartite: seed is not an induced K4,4");
  std::vector<VertexSet> parts{seed.side_a, seed.side_b};
  VertexSet members = seed.side_a | seed.side_b;

  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : g.vertices() - members) {
      const VertexSet nv = g.adj(v);
      bool added = false;
      for (VertexSet& p : parts) {
        if (!nv.intersects(p) && (members - p).subset_of(nv)) {
          p.insert(v);
          added = true;
          break;
        }
      }
      if (!added && members.subset_of(nv)) {
        parts.push_back(VertexSet{v});
        added = true;
      }
      if (added) {
        members.insert(v);
        changed = true;
      }
    }
  }
  return make_multipartite(std::move(parts));
}

const char* to_string(ClaimResult::Kind k) {
  switch (k) {
    case ClaimResult::Kind::ok: return "ok";
    case ClaimResult::Kind::violation: return "violation";
    case ClaimResult::Kind::maximality_breach: return "maximality_breach";
  }
  return "?";
}

namespace {

std::vector<Vertex> actor_key(const std::vector<Actor>& actors) {
  std::vector<Vertex> key;
  for (const auto& a : actors) key.push_back(a.vertex);
  return key;
}

ClaimResult make_violation(const Graph& g, int claim, std::vector<Actor> actors) {
  VertexSet s;
  for (const auto& a : actors) s.insert(a.vertex);
  auto w = subdivision_structure(g, s);
  if (!w || !verify_witness(g, *w).empty())
    throw ClaimPreconditionError("claim " + std::to_string(claim) +
                                 ": actors do not induce a K4+ subdivision; preconditions violated");
  ClaimResult r;
  r.kind = ClaimResult::Kind::violation;
  r.violation = ClaimViolation{claim, std::move(actors), std::move(*w)};
  return r;
}

// Keeps the candidate with the lexicographically smallest actor tuple.
void keep_smaller(std::optional<std::vector<Actor>>& best, std::vector<Actor> cand) {
  if (!best || actor_key(cand) < actor_key(*best)) best = std::move(cand);
}

// Claim-1 actors for v against part pair (i, j), assuming v has >= 2
// neighbors in part i and is mixed to part j.
std::vector<Actor> claim1_actors(const Graph& g, const MultipartiteWitness& m, Vertex v, int i, int j) {
  const VertexSet in_i = g.adj(v) & m.parts[i];
  const VertexSet hit_j = g.adj(v) & m.parts[j];
  const VertexSet miss_j = m.parts[j] - g.adj(v);
  const Vertex a = in_i.first();
  const Vertex b = in_i.without(a).first();
  return {{"v", v}, {"a", a}, {"b", b}, {"c", hit_j.first()}, {"d", miss_j.first()}};
}

std::optional<std::vector<Actor>> claim1_for_vertex(const Graph& g, const MultipartiteWitness& m, Vertex v) {
  std::optional<std::vector<Actor>> best;
  const int t = static_cast<int>(m.parts.size());
  for (int i = 0; i < t; ++i) {
    if ((g.adj(v) & m.parts[i]).size() < 2) continue;
    for (int j = 0; j < t; ++j) {
      if (j == i) continue;
      if (relation_to_set(g, v, m.parts[j]) == Relation::mixed) keep_smaller(best, claim1_actors(g, m, v, i, j));
    }
  }
  return best;
}

}  // namespace

ClaimResult check_claim1(const Graph& g, const MultipartiteWitness& m) {
  for (Vertex v : g.vertices() - m.members)
    if (auto actors = claim1_for_vertex(g, m, v)) return make_violation(g, 1, std::move(*actors));
  return {};
}

ClaimResult check_claim2(const Graph& g, const MultipartiteWitness& m) {
  const int t = static_cast<int>(m.parts.size());
  for (Vertex v : g.vertices() - m.members) {
    const VertexSet nv = g.adj(v);
    // A mixed part next to a doubly-hit part is a claim-1 configuration.
    if (auto actors = claim1_for_vertex(g, m, v)) return make_violation(g, 1, std::move(*actors));

    std::optional<std::vector<Actor>> best;
    bool breach = false;
    for (int i = 0; i < t; ++i) {
      const VertexSet in_i = nv & m.parts[i];
      if (in_i.size() < 2) continue;
      const Vertex a = in_i.first();
      const Vertex b = in_i.without(a).first();
      std::vector<int> anti;
      std::vector<int> comp;
      for (int j = 0; j < t; ++j) {
        if (j == i) continue;
        (nv.intersects(m.parts[j]) ? comp : anti).push_back(j);
      }
      if (anti.size() >= 2) {
        keep_smaller(best, {{"v", v},
                            {"a", a},
                            {"b", b},
                            {"u", m.parts[anti[0]].first()},
                            {"u'", m.parts[anti[1]].first()}});
        continue;
      }
      if (!m.parts[i].subset_of(nv)) {
        // v is mixed to part i; every complete part is a singleton (else
        // claim 1 fires), so the single anticomplete part carries the witness.
        if (anti.size() != 1 || m.parts[anti[0]].size() < 2)
          throw ClaimPreconditionError("claim 2: M lacks the big part the construction needs");
        const VertexSet dj = m.parts[anti[0]];
        const Vertex d = dj.first();
        keep_smaller(best, {{"v", v},
                            {"a", a},
                            {"b", b},
                            {"c", (m.parts[i] - nv).first()},
                            {"d", d},
                            {"d'", dj.without(d).first()}});
        continue;
      }
      breach = true;  // M + v is complete multipartite
    }
    if (best) return make_violation(g, 2, std::move(*best));
    if (breach) {
      ClaimResult r;
      r.kind = ClaimResult::Kind::maximality_breach;
      r.breach_vertex = v;
      return r;
    }
  }
  return {};
}

ClaimResult check_claim3(const Graph& g, const MultipartiteWitness& m) {
  const VertexSet rest = g.vertices() - m.members;
  const int t = static_cast<int>(m.parts.size());

  // Shortest path between two vertices of one part with interior in G - M.
  int best_len = std::numeric_limits<int>::max();
  int best_part = -1;
  std::vector<Vertex> best_path;
  for (int i = 0; i < t; ++i) {
    for (Vertex u : m.parts[i]) {
      if (!g.adj(u).intersects(rest)) continue;
      std::vector<Vertex> parent(g.order(), -1);
      VertexSet layer = g.adj(u) & rest;
      VertexSet seen = layer;
      for (Vertex x : layer) parent[x] = u;
      bool done = false;
      for (int d = 1; !layer.empty() && !done && d + 1 <= best_len; ++d) {
        // Targets in part i after u touching this layer.
        for (Vertex w : m.parts[i]) {
          if (w <= u) continue;
          const VertexSet touch = g.adj(w) & layer;
          if (touch.empty()) continue;
          if (d + 1 < best_len) {
            std::vector<Vertex> path{w};
            for (Vertex x = touch.first(); x != u; x = parent[x]) path.push_back(x);
            path.push_back(u);
            std::reverse(path.begin(), path.end());
            best_len = d + 1;
            best_part = i;
            best_path = std::move(path);
          }
          done = true;
          break;
        }
        VertexSet next;
        for (Vertex x : layer) {
          for (Vertex y : (g.adj(x) & rest) - seen) {
            if (parent[y] < 0) parent[y] = x;
          }
          next |= (g.adj(x) & rest);
        }
        next -= seen;
        seen |= next;
        layer = next;
      }
    }
  }
  if (best_part < 0) return {};

  const int i = best_part;
  const Vertex u = best_path.front();
  const Vertex v = best_path.back();
  VertexSet interior;
  for (std::size_t k = 1; k + 1 < best_path.size(); ++k) interior.insert(best_path[k]);
  if (interior.size() < 2) throw ClaimPreconditionError("claim 3: shortest path has two edges; claim 2 fails");
  VertexSet touched;
  for (Vertex x : interior) touched |= g.adj(x);

  std::vector<Actor> actors{{"u", u}};
  for (std::size_t k = 1; k + 1 < best_path.size(); ++k)
    actors.push_back({"p" + std::to_string(k), best_path[k]});
  actors.push_back({"v", v});

  int j = -1;
  for (int cand : m.big_parts) {
    if (cand != i && (m.parts[cand] - touched).size() >= 2) {
      j = cand;
      break;
    }
  }
  if (j < 0) throw ClaimPreconditionError("claim 3: no big part with two vertices free of the path");
  const VertexSet free_j = m.parts[j] - touched;
  const Vertex a = free_j.first();

  // Case |V_i| >= 3: a third vertex w of V_i free of the path.
  const VertexSet others = m.parts[i] - VertexSet{u, v} - touched;
  if (!others.empty()) {
    actors.push_back({"w", others.first()});
    actors.push_back({"a", a});
    actors.push_back({"b", free_j.without(a).first()});
    return make_violation(g, 3, std::move(actors));
  }
  // Otherwise a vertex c of a third part, adjacent to u, v and a.
  int l = -1;
  for (int cand = 0; cand < t && l < 0; ++cand)
    if (cand != i && cand != j && !(m.parts[cand] - touched).empty()) l = cand;
  if (l < 0) throw ClaimPreconditionError("claim 3: no third part free of the path");
  actors.push_back({"a", a});
  actors.push_back({"c", (m.parts[l] - touched).first()});
  return make_violation(g, 3, std::move(actors));
}

ClaimResult check_claims(const Graph& g, const MultipartiteWitness& m) {
  if (auto r = check_claim1(g, m); !r.ok()) return r;
  if (auto r = check_claim2(g, m); !r.ok()) return r;
  return check_claim3(g, m);
}

CutsetSplit make_cutset_split(const Graph& g, const VertexSet& clique, const VertexSet& component) {
  CutsetSplit s;
  s.clique = clique;
  s.component = component;
  s.g1 = induced_subgraph(g, g.vertices() - component);
  s.g2 = induced_subgraph(g, component | clique);
  return s;
}

std::string validate_cutset_split(const Graph& g, const CutsetSplit& s) {
  const VertexSet all = g.vertices();
  if (!is_clique(g, s.clique)) return "K is not a clique";
  if (s.component.empty()) return "C is empty";
  if (s.component.intersects(s.clique)) return "C meets K";
  if (!is_connected(g, s.component)) return "C is not connected";
  if (!neighborhood(g, s.component).subset_of(s.clique)) return "C is not a component of G - K";
  const VertexSet v1 = VertexSet::from_vector(s.g1.to_parent);
  const VertexSet v2 = VertexSet::from_vector(s.g2.to_parent);
  if (v1 != all - s.component) return "V(G1) differs from V - C";
  if (v2 != (s.component | s.clique)) return "V(G2) differs from C u K";
  if ((v1 & v2) != s.clique) return "V(G1) and V(G2) do not meet exactly in K";
  if ((v1 | v2) != all) return "V(G1) and V(G2) do not cover V";
  if (v1.size() >= g.order() || v2.size() >= g.order()) return "a side is not smaller than G";
  for (const Subgraph* sub : {&s.g1, &s.g2}) {
    const int m = sub->graph.order();
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        if (sub->graph.adjacent(x, y) != g.adjacent(sub->to_parent[x], sub->to_parent[y]))
          return "a side is not an induced subgraph";
  }
  return {};
}

CutsetOutcome find_structural_cutset(const Graph& g, const MultipartiteWitness& m) {
  CutsetOutcome out;
  const VertexSet rest = g.vertices() - m.members;
  if (rest.empty()) return out;
  const VertexSet component = reachable(g, rest.first(), rest);
  const VertexSet attachment = neighborhood(g, component);
  if (!is_clique(g, attachment)) {
    out.status = CutsetOutcome::Status::not_clique;
    out.attachment = attachment;
    return out;
  }
  out.status = CutsetOutcome::Status::split;
  out.split = make_cutset_split(g, attachment, component);
  return out;
}

namespace {

void collect_cliques(const Graph& g, VertexSet current, VertexSet candidates, int size, NodeCounter& counter,
                     std::vector<VertexSet>& out) {
  counter.tick();
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (Vertex v : candidates) {
    candidates.erase(v);
    collect_cliques(g, current.with(v), candidates & g.adj(v), size, counter, out);
  }
}

}  // namespace

SearchResult<CutsetSplit> find_any_clique_cutset(const Graph& g, SearchLimits limits) {
  try {
    NodeCounter counter(limits);
    const VertexSet all = g.vertices();
    for (int size = 0; size < g.order(); ++size) {
      std::vector<VertexSet> cliques;
      collect_cliques(g, {}, all, size, counter, cliques);
      if (cliques.empty()) break;
      std::sort(cliques.begin(), cliques.end());
      for (const VertexSet& k : cliques) {
        counter.tick();
        const auto comps = components(g, all - k);
        if (comps.size() >= 2) return SearchResult<CutsetSplit>::found(make_cutset_split(g, k, comps.front()));
      }
    }
    return SearchResult<CutsetSplit>::none();
  } catch (const BudgetExhausted&) {
    return SearchResult<CutsetSplit>::budget();
  }
}

}  // namespace isk4
