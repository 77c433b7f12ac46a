#include "isk4/generators.hpp"

#include <algorithm>
#include <numeric>

namespace isk4 {

Rng item_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<VertexSet> adj(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
  return Graph::from_adjacency(std::move(adj));
}

bool degrees_nonincreasing(int n, std::uint64_t mask) {
  // Per-vertex masks of the pair bits touching that vertex.
  static thread_local int cached_n = -1;
  static thread_local std::uint64_t touch[16];
  if (cached_n != n) {
    std::fill(std::begin(touch), std::end(touch), 0);
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit) {
        touch[i] |= std::uint64_t{1} << bit;
        touch[j] |= std::uint64_t{1} << bit;
      }
    cached_n = n;
  }
  int prev = n;
  for (int v = 0; v < n; ++v) {
    const int d = std::popcount(mask & touch[v]);
    if (d > prev) return false;
    prev = d;
  }
  return true;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e, "K" + std::to_string(n));
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e, "C" + std::to_string(n));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e, "P" + std::to_string(n));
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e, "Petersen");
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  std::vector<int> part;
  for (int p = 0; p < static_cast<int>(part_sizes.size()); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part.push_back(p);
  const int n = static_cast<int>(part.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[i] != part[j]) e.emplace_back(i, j);
  std::string label = "K";
  for (std::size_t p = 0; p < part_sizes.size(); ++p) label += (p ? "," : "") + std::to_string(part_sizes[p]);
  return Graph::from_edges(n, e, label);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), e);
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph random_triangle_free(int n, int target_edges, Rng& rng) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<VertexSet> adj(n);
  int placed = 0;
  for (auto [u, v] : pairs) {
    if (placed >= target_edges) break;
    if (adj[u].intersects(adj[v])) continue;
    adj[u].insert(v);
    adj[v].insert(u);
    ++placed;
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph shuffle_labels(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), e, g.label());
}

Graph random_with_k44(int n, double p, Rng& rng) {
  if (n < 8) throw GraphError("random_with_k44 needs at least 8 vertices");
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<int> side(n, -1);
  for (int i = 0; i < 8; ++i) side[labels[i]] = i < 4 ? 0 : 1;
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (side[i] >= 0 && side[j] >= 0) {
        if (side[i] != side[j]) e.emplace_back(i, j);
      } else if (coin(rng)) {
        e.emplace_back(i, j);
      }
    }
  return Graph::from_edges(n, e);
}

Graph random_planted(int max_n, double noise, Rng& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::bernoulli_distribution coin_noise(noise);

  // Core: two parts of size 4..5 plus up to two parts of size 1..4.
  std::vector<int> sizes{uniform(4, 5), uniform(4, 5)};
  for (int extra = uniform(0, 2); extra > 0; --extra) sizes.push_back(uniform(1, 4));
  while (std::accumulate(sizes.begin(), sizes.end(), 0) > max_n && sizes.size() > 2) sizes.pop_back();
  for (int& s : sizes)
    if (std::accumulate(sizes.begin(), sizes.end(), 0) > max_n && s > 4) s = 4;
  Graph core = complete_multipartite(sizes);
  int n = core.order();
  if (n > max_n) throw GraphError("random_planted: max_n too small for the core");

  std::vector<VertexSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = core.adj(v);
  auto add_vertex = [&]() {
    adj.emplace_back();
    return n++;
  };
  auto connect = [&](Vertex u, Vertex v) {
    adj[u].insert(v);
    adj[v].insert(u);
  };

  int attachments = uniform(1, std::max(1, max_n - n));
  while (n < max_n && attachments-- > 0) {
    if (coin_noise(rng)) {
      const Vertex x = add_vertex();
      std::bernoulli_distribution coin(0.3);
      for (Vertex u = 0; u < x; ++u)
        if (coin(rng)) connect(u, x);
      if (adj[x].empty()) connect(x, uniform(0, x - 1));
      continue;
    }
    // Pick a clique K of size 1..3 greedily from a random start.
    const Graph cur = Graph::from_adjacency(adj);
    const int want = uniform(1, 3);
    VertexSet clique{uniform(0, n - 1)};
    VertexSet cand = cur.adj(clique.first());
    while (clique.size() < want && !cand.empty()) {
      const auto options = cand.to_vector();
      const Vertex v = options[uniform(0, static_cast<int>(options.size()) - 1)];
      clique.insert(v);
      cand &= cur.adj(v);
    }
    const int room = max_n - n;
    const int len = uniform(1, std::min(room, 3));
    const bool cycle = clique.size() >= 2 && uniform(0, 1) == 1;
    std::vector<Vertex> path;
    for (int i = 0; i < len; ++i) {
      path.push_back(add_vertex());
      if (i > 0) connect(path[i - 1], path[i]);
    }
    if (cycle) {
      // Path closing a cycle through one edge of K.
      const Vertex k1 = clique.first();
      const Vertex k2 = clique.without(k1).first();
      connect(path.front(), k1);
      connect(path.back(), k2);
    } else {
      // Pendant path whose first vertex is complete to K.
      for (Vertex k : clique) connect(path.front(), k);
    }
  }
  Graph g = Graph::from_adjacency(std::move(adj));
  return shuffle_labels(g, rng);
}

}  // namespace isk4
