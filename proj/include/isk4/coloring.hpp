#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isk4/graph.hpp"
#include "isk4/search.hpp"
#include "isk4/structure.hpp"

namespace isk4 {

class ColoringError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Vertex -> color index; palette_size is 1 + the largest color used.
struct Coloring {
  std::vector<int> color;
  int palette_size = 0;

  /// Wraps a complete color vector; throws ColoringError on negative entries.
  static Coloring from_colors(std::vector<int> colors);
};

/// The smallest edge (u < v, lexicographic) whose endpoints share a color.
/// Throws ColoringError if the coloring does not cover the graph.
std::optional<Edge> verify_proper(const Graph& g, const Coloring& c);

/// Colors v with the smallest color in [0, palette) absent from its
/// neighborhood. `partial` must color every vertex except v (marked -1).
Coloring greedy_extend(const Graph& g, std::vector<int> partial, Vertex v, int palette);

/// Combines colorings of G1 = G - C and G2 = G[C u K] that meet in the clique K.
/// c2 is relabeled by one permutation so it agrees with c1 on K; the result
/// equals c1 on V(G1).
Coloring merge_on_clique(int order, const Subgraph& g1, const Coloring& c1, const Subgraph& g2,
                         const Coloring& c2, const VertexSet& clique);

struct TraceNode {
  enum class Kind { base, component_split, low_degree, structural_split, multipartite_direct };

  Kind kind = Kind::base;
  int order = 0;
  int palette = 0;
  std::vector<Vertex> vertices;  // this node's graph, as vertices of the input graph
  Vertex removed = -1;           // low_degree: the removed vertex
  int removed_degree = -1;
  VertexSet clique;              // structural_split: K (input-graph indices)
  VertexSet component;           // structural_split: C
  int parts = 0;                 // multipartite_direct / structural_split: parts of M
  bool fallback = false;         // low_degree entered after a failed structural split
  std::string fallback_reason;
  std::optional<ClaimViolation> violation;  // input-graph indices
  std::string note;
  std::vector<TraceNode> children;
};

const char* to_string(TraceNode::Kind k);

struct ColoringOptions {
  /// Clique bound; 0 means use the clique number of the input.
  int k = 0;
  /// Graphs with at most this many vertices get distinct colors; -1 means k.
  int base_size = -1;
  /// Find K4,4 via a K_{s,s} subgraph plus stable-set extraction.
  bool via_ramsey = false;
  int ramsey_side = 4;
  /// Size of the two big parts sought; only 4 is supported.
  int part_size = 4;
  SearchLimits limits{};
};

struct ColoringResult {
  SearchStatus status = SearchStatus::found;  // budget when a detector ran out
  Coloring coloring;                          // valid when status == found
  TraceNode trace;
  int clique_bound = 0;
};

/// Recursive coloring following the clique-cutset decomposition around a
/// maximal complete multipartite set. Always returns a proper coloring
/// (unless a budget runs out); on inputs with an induced K4+ subdivision
/// some steps may fall back to the low-degree branch, flagged in the trace.
ColoringResult color_isk4plus_free(const Graph& g, const ColoringOptions& opts = {});

/// Number of fallback nodes in a trace.
int count_fallbacks(const TraceNode& node);

/// Checks trace consistency: children partition the work of each node and
/// every leaf is a base or multipartite_direct step. Empty string when valid.
std::string validate_trace(const TraceNode& node);

}  // namespace isk4
