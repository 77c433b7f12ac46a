#pragma once

#include <array>
#include <string>
#include <vector>

#include "isk4/graph.hpp"
#include "isk4/search.hpp"

namespace isk4 {

/// Branch-pair order used for SubdivisionWitness::paths: path k joins
/// branch[kBranchPairs[k].first] to branch[kBranchPairs[k].second].
inline constexpr std::array<std::pair<int, int>, 6> kBranchPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Certificate of an induced subdivision of K4 in a host graph.
///
/// branch is sorted ascending; every path starts at its first branch vertex
/// and ends at the second, so an unsubdivided edge is a 2-vertex path.
struct SubdivisionWitness {
  std::array<Vertex, 4> branch{};
  std::array<std::vector<Vertex>, 6> paths;
  VertexSet total;

  bool operator==(const SubdivisionWitness&) const = default;
};

/// Smallest witness order for an induced K4+ subdivision.
inline constexpr int kK4PlusOrder = 5;
/// Smallest witness order for an induced K4 subdivision.
inline constexpr int kK4Order = 4;

/// Re-checks every witness invariant against `g` from first principles.
/// Returns an empty string on success, otherwise the first failed invariant.
std::string verify_witness(const Graph& g, const SubdivisionWitness& w, int min_order = kK4PlusOrder);

/// Extracts branch vertices and paths when G[s] is a subdivision of K4.
std::optional<SubdivisionWitness> subdivision_structure(const Graph& g, const VertexSet& s);

bool is_k4_subdivision(const Graph& g);
bool is_k4plus_subdivision(const Graph& g);

struct OracleOptions {
  int max_order = 16;
  int min_order = kK4PlusOrder;
};

/// Brute force: the first vertex subset (by bitset value) of size >= min_order
/// inducing a K4 subdivision. Throws GraphError above max_order.
SearchResult<SubdivisionWitness> find_isk4plus_oracle(const Graph& g, OracleOptions opts = {});

/// Branch-and-route search for an induced subdivision of K4 on >= min_order vertices.
SearchResult<SubdivisionWitness> find_induced_k4_subdivision(const Graph& g, int min_order,
                                                             SearchLimits limits = {});

inline SearchResult<SubdivisionWitness> find_isk4plus(const Graph& g, SearchLimits limits = {}) {
  return find_induced_k4_subdivision(g, kK4PlusOrder, limits);
}
inline SearchResult<SubdivisionWitness> find_isk4(const Graph& g, SearchLimits limits = {}) {
  return find_induced_k4_subdivision(g, kK4Order, limits);
}

struct BicliqueWitness {
  VertexSet side_a;
  VertexSet side_b;
  bool induced = false;

  bool operator==(const BicliqueWitness&) const = default;
};

/// True if the sides are disjoint, nonempty and fully joined; when `w.induced`
/// is set, both sides must also be stable.
bool is_valid_biclique(const Graph& g, const BicliqueWitness& w);

/// A K_{s,s} subgraph (not necessarily induced), lexicographically smallest side A.
SearchResult<BicliqueWitness> find_biclique_subgraph(const Graph& g, int s, SearchLimits limits = {});

/// An induced K_{s,s}: both sides stable.
SearchResult<BicliqueWitness> find_induced_biclique(const Graph& g, int s, SearchLimits limits = {});

struct RamseyExtraction {
  enum class Status { found, not_found, clique_violation, budget };
  Status status = Status::not_found;
  BicliqueWitness k44;  // valid when found
  VertexSet clique;     // a (k+1)-clique when clique_violation
};

const char* to_string(RamseyExtraction::Status s);

/// Extracts an induced K4,4 from a K_{s,s} subgraph of a graph with clique
/// number at most k by picking stable 4-sets inside each side.
RamseyExtraction ramsey_extract_k44(const Graph& g, const BicliqueWitness& w, int k,
                                    SearchLimits limits = {});

/// First stable set of the given size inside `within`, by lexicographic order.
SearchResult<VertexSet> find_stable_set(const Graph& g, const VertexSet& within, int size,
                                        SearchLimits limits = {});

SearchResult<VertexSet> maximum_clique(const Graph& g, const VertexSet& within, SearchLimits limits = {});
SearchResult<int> clique_number(const Graph& g, SearchLimits limits = {});
SearchResult<int> chromatic_number_exact(const Graph& g, SearchLimits limits = {});

}  // namespace isk4
