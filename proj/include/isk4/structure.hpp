#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isk4/detect.hpp"
#include "isk4/graph.hpp"
#include "isk4/search.hpp"

namespace isk4 {

/// A vertex set inducing a complete multipartite graph with at least two
/// parts of size >= 4.
struct MultipartiteWitness {
  std::vector<VertexSet> parts;  // in creation order
  std::vector<int> big_parts;    // indices of parts with >= 4 vertices
  VertexSet members;             // union of the parts

  /// Index of the part containing v, or -1.
  int part_of(Vertex v) const;
};

/// Checks every MultipartiteWitness invariant against g; returns an empty
/// string when valid, otherwise the first failure.
std::string validate_multipartite(const Graph& g, const MultipartiteWitness& m);

/// Builds a witness from explicit parts (computes members and big_parts).
MultipartiteWitness make_multipartite(std::vector<VertexSet> parts);

/// Grows M from an induced K4,4 until no single vertex can be added.
///
/// Vertices outside M are scanned in increasing order; a vertex joins the
/// first part it is anticomplete to while being complete to the rest of M,
/// or opens a new singleton part when complete to M. Scans repeat until a
/// full pass adds nothing. Throws GraphError on an invalid seed.
MultipartiteWitness grow_maximal_multipartite(const Graph& g, const BicliqueWitness& seed);

/// Whether v could be added to M (to an existing part or as a new part)
/// keeping G[M] complete multipartite.
bool extends_multipartite(const Graph& g, const MultipartiteWitness& m, Vertex v);

struct Actor {
  std::string role;
  Vertex vertex;

  bool operator==(const Actor&) const = default;
};

struct ClaimViolation {
  int claim_id = 0;
  std::vector<Actor> actors;
  SubdivisionWitness constructed;
};

struct ClaimResult {
  enum class Kind { ok, violation, maximality_breach };
  Kind kind = Kind::ok;
  std::optional<ClaimViolation> violation;
  Vertex breach_vertex = -1;  // set for maximality_breach

  bool ok() const { return kind == Kind::ok; }
};

const char* to_string(ClaimResult::Kind k);

/// Raised when a claim check is called outside its precondition and the
/// witness construction cannot be completed.
class ClaimPreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// No vertex outside M with two neighbors in one part is mixed to another part.
ClaimResult check_claim1(const Graph& g, const MultipartiteWitness& m);

/// Every vertex outside M has at most one neighbor in each part. A vertex that
/// could have joined M is reported as a maximality breach.
ClaimResult check_claim2(const Graph& g, const MultipartiteWitness& m);

/// Every component of G - M has at most one neighbor in each part.
/// Requires claims 1 and 2 to hold; throws ClaimPreconditionError otherwise
/// when the construction breaks down.
ClaimResult check_claim3(const Graph& g, const MultipartiteWitness& m);

/// Runs the three checks in order and returns the first non-ok result.
ClaimResult check_claims(const Graph& g, const MultipartiteWitness& m);

/// A clique K, a component C of G - K, G1 = G - C and G2 = G[C u K].
struct CutsetSplit {
  VertexSet clique;
  VertexSet component;
  Subgraph g1;
  Subgraph g2;
};

/// Checks the CutsetSplit invariants against g; empty string when valid.
std::string validate_cutset_split(const Graph& g, const CutsetSplit& split);

/// Builds the split for a clique K and one component C of G - K.
CutsetSplit make_cutset_split(const Graph& g, const VertexSet& clique, const VertexSet& component);

struct CutsetOutcome {
  enum class Status { split, none, not_clique };
  Status status = Status::none;
  std::optional<CutsetSplit> split;
  VertexSet attachment;  // N(C) when not_clique
};

/// K = N(C) for the component C of G - M with the smallest vertex.
CutsetOutcome find_structural_cutset(const Graph& g, const MultipartiteWitness& m);

/// Smallest clique (by size, then bitset value) whose removal disconnects G.
/// Exhaustive; intended for n <= 24.
SearchResult<CutsetSplit> find_any_clique_cutset(const Graph& g, SearchLimits limits = {});

}  // namespace isk4
