#include "isk4/report.hpp"

namespace isk4 {

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const SubdivisionWitness& w) {
  Json j;
  j["branch"] = Json(std::vector<Vertex>(w.branch.begin(), w.branch.end()));
  j["paths"] = Json::array();
  for (const auto& p : w.paths) j["paths"].push_back(p);
  j["vertices"] = to_json(w.total);
  return j;
}

Json to_json(const BicliqueWitness& w) {
  Json j;
  j["side_a"] = to_json(w.side_a);
  j["side_b"] = to_json(w.side_b);
  j["induced"] = w.induced;
  return j;
}

Json to_json(const MultipartiteWitness& m) {
  Json j;
  j["parts"] = Json::array();
  for (const auto& p : m.parts) j["parts"].push_back(to_json(p));
  j["big_parts"] = m.big_parts;
  j["members"] = to_json(m.members);
  return j;
}

Json to_json(const ClaimViolation& v) {
  Json j;
  j["claim"] = v.claim_id;
  j["actors"] = Json::array();
  for (const auto& a : v.actors) {
    Json actor;
    actor["role"] = a.role;
    actor["vertex"] = a.vertex;
    j["actors"].push_back(std::move(actor));
  }
  j["witness_vertices"] = to_json(v.constructed.total);
  j["witness_paths"] = Json::array();
  for (const auto& p : v.constructed.paths) j["witness_paths"].push_back(p);
  return j;
}

Json to_json(const ClaimResult& r) {
  Json j;
  j["outcome"] = to_string(r.kind);
  if (r.violation) j["violation"] = to_json(*r.violation);
  if (r.kind == ClaimResult::Kind::maximality_breach) j["vertex"] = r.breach_vertex;
  return j;
}

Json to_json(const TraceNode& node) {
  Json j;
  j["step"] = to_string(node.kind);
  j["order"] = node.order;
  j["palette"] = node.palette;
  j["vertices"] = node.vertices;
  switch (node.kind) {
    case TraceNode::Kind::low_degree:
      j["vertex"] = node.removed;
      j["degree"] = node.removed_degree;
      break;
    case TraceNode::Kind::structural_split:
      j["clique"] = to_json(node.clique);
      j["component"] = to_json(node.component);
      j["parts"] = node.parts;
      break;
    case TraceNode::Kind::multipartite_direct:
      j["parts"] = node.parts;
      break;
    default:
      break;
  }
  if (node.fallback) {
    j["fallback"] = true;
    j["fallback_reason"] = node.fallback_reason;
    if (node.violation) j["violation"] = to_json(*node.violation);
  }
  if (!node.note.empty()) j["note"] = node.note;
  if (!node.children.empty()) {
    j["children"] = Json::array();
    for (const auto& c : node.children) j["children"].push_back(to_json(c));
  }
  return j;
}

Json to_json(const Coloring& c) {
  Json j;
  j["palette_size"] = c.palette_size;
  j["colors"] = c.color;
  return j;
}

}  // namespace isk4
