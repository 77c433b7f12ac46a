#pragma once

#include <json.hpp>

#include "isk4/coloring.hpp"
#include "isk4/detect.hpp"
#include "isk4/structure.hpp"

namespace isk4 {

/// Insertion-ordered JSON; field order in every report is fixed by the writers below.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const SubdivisionWitness& w);
Json to_json(const BicliqueWitness& w);
Json to_json(const MultipartiteWitness& m);

/// {claim, actors, witness_vertices, witness_paths}
Json to_json(const ClaimViolation& v);
Json to_json(const ClaimResult& r);
Json to_json(const TraceNode& node);
Json to_json(const Coloring& c);

}  // namespace isk4
