#include "isk4/graph.hpp"

namespace isk4 {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges, std::string label) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, 128]");
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint out of range");
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    adj[u].insert(v);
    adj[v].insert(u);
  }
  Graph g;
  g.adj_ = std::move(adj);
  g.label_ = std::move(label);
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj, std::string label) {
  const int n = static_cast<int>(adj.size());
  if (n > kMaxVertices) throw GraphError("vertex count exceeds 128");
  const VertexSet all = VertexSet::range(n);
  for (int v = 0; v < n; ++v) {
    if (!adj[v].subset_of(all)) throw GraphError("neighbor index out of range");
    if (adj[v].contains(v)) throw GraphError("loop at vertex " + std::to_string(v));
    for (Vertex u : adj[v])
      if (!adj[u].contains(v)) throw GraphError("adjacency is not symmetric");
  }
  Graph g;
  g.adj_ = std::move(adj);
  g.label_ = std::move(label);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (const auto& s : adj_) twice += s.size();
  return twice / 2;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::complete: return "complete";
    case Relation::anticomplete: return "anticomplete";
    case Relation::mixed: return "mixed";
  }
  return "?";
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  Subgraph out;
  out.to_parent = s.to_vector();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) index[out.to_parent[i]] = i;
  std::vector<VertexSet> adj(out.to_parent.size());
  for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i)
    for (Vertex w : g.adj(out.to_parent[i]) & s) adj[i].insert(index[w]);
  out.graph = Graph::from_adjacency(std::move(adj), g.label());
  return out;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, g.vertices() - s);
}

VertexSet reachable(const Graph& g, Vertex start, const VertexSet& within) {
  VertexSet seen{start};
  VertexSet frontier{start};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.adj(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = reachable(g, left.first(), within);
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g, const VertexSet& within) {
  if (within.empty()) return true;
  return reachable(g, within.first(), within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out |= g.adj(v);
  return out - s;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
  VertexSet out = g.vertices();
  for (Vertex v : s) out &= g.adj(v);
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!(s.without(v)).subset_of(g.adj(v))) return false;
  return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.adj(v).intersects(s)) return false;
  return true;
}

Relation relation_to_set(const Graph& g, Vertex v, const VertexSet& s) {
  g.check_vertex(v);
  g.check_set(s);
  if (s.empty()) throw GraphError("relation_to_set: empty set");
  if (s.contains(v)) throw GraphError("relation_to_set: vertex belongs to the set");
  const int hits = (g.adj(v) & s).size();
  if (hits == s.size()) return Relation::complete;
  if (hits == 0) return Relation::anticomplete;
  return Relation::mixed;
}

}  // namespace isk4
