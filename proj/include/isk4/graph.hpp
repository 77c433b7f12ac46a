#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isk4/vertex_set.hpp"

namespace isk4 {

/// Raised on invalid graph construction or out-of-range vertex arguments.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

class Graph;

/// An induced subgraph together with the map from its vertices to the parent's.
struct Subgraph;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 128).
///
/// Adjacency is stored as one VertexSet per vertex. Every constructor
/// enforces symmetry, irreflexivity and that no bit >= n is set.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse.
  /// Throws GraphError on loops or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<Edge>& edges, std::string label = {});

  /// Builds a graph from per-vertex neighborhoods, validating the invariants.
  static Graph from_adjacency(std::vector<VertexSet> adj, std::string label = {});

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;  // number of edges

  VertexSet vertices() const { return VertexSet::range(order()); }
  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  /// Unchecked neighborhood access for inner loops.
  const VertexSet& adj(Vertex v) const { return adj_[v]; }

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  std::vector<Edge> edges() const;

  /// Labeled equality; the label is not compared.
  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
      throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                       std::to_string(order()));
  }
  void check_set(const VertexSet& s) const {
    if (!s.subset_of(vertices())) throw GraphError("vertex set not contained in graph");
  }

private:
  std::vector<VertexSet> adj_;
  std::string label_;
};

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph vertex -> parent vertex

  VertexSet lift(const VertexSet& s) const {
    VertexSet out;
    for (Vertex v : s) out.insert(to_parent[v]);
    return out;
  }
};

enum class Relation { complete, anticomplete, mixed };

const char* to_string(Relation r);

/// The subgraph induced by `s`, relabeled to 0..|s|-1 in increasing order.
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - s.
Subgraph remove_vertices(const Graph& g, const VertexSet& s);

/// Connected components of G[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);

/// Vertices of `within` reachable from `start` inside G[within].
VertexSet reachable(const Graph& g, Vertex start, const VertexSet& within);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& within);

/// Union of the neighborhoods of `s`, minus `s` itself.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// Vertices adjacent to every member of `s`.
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);

/// Classifies v against a nonempty set not containing v.
Relation relation_to_set(const Graph& g, Vertex v, const VertexSet& s);

}  // namespace isk4
