#include "isk4/coloring.hpp"

#include <algorithm>
#include <map>

#include "isk4/detect.hpp"

namespace isk4 {

Coloring Coloring::from_colors(std::vector<int> colors) {
  Coloring c;
  int top = -1;
  for (int x : colors) {
    if (x < 0) throw ColoringError("coloring leaves a vertex uncolored");
    top = std::max(top, x);
  }
  c.color = std::move(colors);
  c.palette_size = top + 1;
  return c;
}

std::optional<Edge> verify_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.order()) throw ColoringError("coloring size differs from graph order");
  for (int x : c.color)
    if (x < 0) throw ColoringError("coloring leaves a vertex uncolored");
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return Edge{u, v};
  return std::nullopt;
}

Coloring greedy_extend(const Graph& g, std::vector<int> partial, Vertex v, int palette) {
  g.check_vertex(v);
  if (static_cast<int>(partial.size()) != g.order()) throw ColoringError("partial coloring size differs from graph order");
  VertexSet blocked;
  for (Vertex u : g.adj(v)) {
    if (partial[u] < 0) throw ColoringError("neighbor " + std::to_string(u) + " is uncolored");
    if (partial[u] < kMaxVertices) blocked.insert(partial[u]);
  }
  int c = 0;
  while (c < palette && blocked.contains(c)) ++c;
  if (c >= palette)
    throw ColoringError("all " + std::to_string(palette) + " colors blocked at vertex " + std::to_string(v));
  partial[v] = c;
  return Coloring::from_colors(std::move(partial));
}

Coloring merge_on_clique(int order, const Subgraph& g1, const Coloring& c1, const Subgraph& g2,
                         const Coloring& c2, const VertexSet& clique) {
  if (c1.color.size() != g1.to_parent.size() || c2.color.size() != g2.to_parent.size())
    throw ColoringError("coloring size differs from its graph");
  std::vector<int> merged(order, -1);
  for (std::size_t i = 0; i < g1.to_parent.size(); ++i) merged[g1.to_parent[i]] = c1.color[i];

  // pi: c2 colors -> final colors, fixed on K to agree with c1.
  std::map<int, int> pi;
  VertexSet images;
  VertexSet in_g2;
  for (std::size_t i = 0; i < g2.to_parent.size(); ++i) {
    const Vertex v = g2.to_parent[i];
    in_g2.insert(v);
    if (merged[v] >= 0 && !clique.contains(v))
      throw ColoringError("vertex " + std::to_string(v) + " is shared but not in K");
    if (!clique.contains(v)) continue;
    if (merged[v] < 0) throw ColoringError("clique vertex " + std::to_string(v) + " missing from G1");
    const int from = c2.color[i];
    const int to = merged[v];
    auto [it, inserted] = pi.emplace(from, to);
    if (!inserted || images.contains(to))
      throw ColoringError("colorings are not injective on K");
    images.insert(to);
  }
  if (!clique.subset_of(in_g2)) throw ColoringError("K is not contained in G2");

  // Remaining c2 colors take the smallest unused images, in increasing order.
  int next = 0;
  for (int c = 0; c < c2.palette_size; ++c) {
    if (pi.contains(c)) continue;
    while (images.contains(next)) ++next;
    pi[c] = next;
    images.insert(next);
  }
  for (std::size_t i = 0; i < g2.to_parent.size(); ++i) {
    const Vertex v = g2.to_parent[i];
    if (!clique.contains(v)) merged[v] = pi.at(c2.color[i]);
  }
  return Coloring::from_colors(std::move(merged));
}

const char* to_string(TraceNode::Kind k) {
  switch (k) {
    case TraceNode::Kind::base: return "base";
    case TraceNode::Kind::component_split: return "component-split";
    case TraceNode::Kind::low_degree: return "low-degree";
    case TraceNode::Kind::structural_split: return "structural-split";
    case TraceNode::Kind::multipartite_direct: return "multipartite-direct";
  }
  return "?";
}

namespace {

VertexSet lift(const std::vector<Vertex>& to_root, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out.insert(to_root[v]);
  return out;
}

std::vector<Vertex> compose(const std::vector<Vertex>& to_root, const std::vector<Vertex>& to_parent) {
  std::vector<Vertex> out;
  out.reserve(to_parent.size());
  for (Vertex v : to_parent) out.push_back(to_root[v]);
  return out;
}

ClaimViolation lift(const std::vector<Vertex>& to_root, ClaimViolation cv) {
  for (auto& a : cv.actors) a.vertex = to_root[a.vertex];
  auto& w = cv.constructed;
  for (auto& b : w.branch) b = to_root[b];
  for (auto& p : w.paths)
    for (auto& v : p) v = to_root[v];
  w.total = lift(to_root, w.total);
  return cv;
}

template <class T>
T need(SearchResult<T> r) {
  if (r.is_budget()) throw BudgetExhausted{};
  return std::move(*r.value);
}

class RecursiveColoring {
public:
  RecursiveColoring(const ColoringOptions& opts, int k) : opts_(opts), k_(k) {
    base_size_ = opts.base_size >= 0 ? opts.base_size : k;
  }

  std::vector<int> color(const Graph& g, const std::vector<Vertex>& to_root, TraceNode& node) {
    const int n = g.order();
    node.order = n;
    node.vertices = to_root;

    if (n <= base_size_) {
      node.kind = TraceNode::Kind::base;
      std::vector<int> out(n);
      for (int v = 0; v < n; ++v) out[v] = v;
      return finish(node, out);
    }

    if (const auto comps = components(g); comps.size() > 1) {
      node.kind = TraceNode::Kind::component_split;
      std::vector<int> out(n, -1);
      for (const VertexSet& comp : comps) {
        const Subgraph sub = induced_subgraph(g, comp);
        node.children.emplace_back();
        const auto sub_colors = color(sub.graph, compose(to_root, sub.to_parent), node.children.back());
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i) out[sub.to_parent[i]] = sub_colors[i];
      }
      return finish(node, out);
    }

    std::optional<BicliqueWitness> k44 = find_k44(g, node);
    if (!k44) return low_degree(g, to_root, node);

    const MultipartiteWitness m = grow_maximal_multipartite(g, *k44);
    node.parts = static_cast<int>(m.parts.size());
    if (m.members == g.vertices()) {
      node.kind = TraceNode::Kind::multipartite_direct;
      std::vector<int> out(n);
      for (int v = 0; v < n; ++v) out[v] = m.part_of(v);
      return finish(node, out);
    }

    const CutsetOutcome cut = find_structural_cutset(g, m);
    if (cut.status != CutsetOutcome::Status::split) {
      node.fallback = true;
      try {
        const ClaimResult r = check_claims(g, m);
        if (r.violation) {
          node.violation = lift(to_root, *r.violation);
          node.fallback_reason = "claim " + std::to_string(r.violation->claim_id) + " violated";
        } else if (r.kind == ClaimResult::Kind::maximality_breach) {
          node.fallback_reason = "maximality breach at vertex " + std::to_string(to_root[r.breach_vertex]);
        } else {
          node.fallback_reason = "component attachment is not a clique";
        }
      } catch (const ClaimPreconditionError& e) {
        node.fallback_reason = e.what();
      }
      return low_degree(g, to_root, node);
    }

    const CutsetSplit& split = *cut.split;
    node.kind = TraceNode::Kind::structural_split;
    node.clique = lift(to_root, split.clique);
    node.component = lift(to_root, split.component);
    node.children.resize(2);
    const auto c1 = color(split.g1.graph, compose(to_root, split.g1.to_parent), node.children[0]);
    const auto c2 = color(split.g2.graph, compose(to_root, split.g2.to_parent), node.children[1]);
    const Coloring merged = merge_on_clique(n, split.g1, Coloring::from_colors(c1), split.g2,
                                            Coloring::from_colors(c2), split.clique);
    return finish(node, merged.color);
  }

private:
  std::optional<BicliqueWitness> find_k44(const Graph& g, TraceNode& node) const {
    if (!opts_.via_ramsey) {
      auto r = find_induced_biclique(g, opts_.part_size, opts_.limits);
      if (r.is_budget()) throw BudgetExhausted{};
      return r.value;
    }
    auto sub = find_biclique_subgraph(g, std::max(opts_.ramsey_side, opts_.part_size), opts_.limits);
    if (sub.is_budget()) throw BudgetExhausted{};
    if (!sub.is_found()) return std::nullopt;
    const RamseyExtraction ex = ramsey_extract_k44(g, *sub.value, k_, opts_.limits);
    switch (ex.status) {
      case RamseyExtraction::Status::found: return ex.k44;
      case RamseyExtraction::Status::budget: throw BudgetExhausted{};
      case RamseyExtraction::Status::clique_violation:
        throw ColoringError("clique bound " + std::to_string(k_) + " violated inside a K_{s,s}");
      case RamseyExtraction::Status::not_found:
        node.note = "K_{s,s} found but no induced K4,4 extracted";
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::vector<int> low_degree(const Graph& g, const std::vector<Vertex>& to_root, TraceNode& node) {
    node.kind = TraceNode::Kind::low_degree;
    Vertex v = 0;
    for (Vertex u = 1; u < g.order(); ++u)
      if (g.degree(u) < g.degree(v)) v = u;
    node.removed = to_root[v];
    node.removed_degree = g.degree(v);

    const Subgraph rest = remove_vertices(g, VertexSet{v});
    node.children.emplace_back();
    const auto sub_colors = color(rest.graph, compose(to_root, rest.to_parent), node.children.back());
    std::vector<int> partial(g.order(), -1);
    int used = 0;
    for (std::size_t i = 0; i < rest.to_parent.size(); ++i) {
      partial[rest.to_parent[i]] = sub_colors[i];
      used = std::max(used, sub_colors[i] + 1);
    }
    const int palette = std::max(used, g.degree(v) + 1);
    return finish(node, greedy_extend(g, std::move(partial), v, palette).color);
  }

  static std::vector<int> finish(TraceNode& node, std::vector<int> colors) {
    int top = -1;
    for (int c : colors) top = std::max(top, c);
    node.palette = top + 1;
    return colors;
  }

  const ColoringOptions& opts_;
  int k_;
  int base_size_;
};

}  // namespace

ColoringResult color_isk4plus_free(const Graph& g, const ColoringOptions& opts) {
  if (opts.part_size != 4) throw ColoringError("only part size 4 is supported");
  ColoringResult result;
  try {
    const int k = opts.k > 0 ? opts.k : need(clique_number(g, opts.limits));
    result.clique_bound = k;
    std::vector<Vertex> identity(g.order());
    for (int v = 0; v < g.order(); ++v) identity[v] = v;
    RecursiveColoring rc(opts, k);
    result.coloring = Coloring::from_colors(rc.color(g, identity, result.trace));
    result.status = SearchStatus::found;
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::budget;
  }
  return result;
}

int count_fallbacks(const TraceNode& node) {
  int total = node.fallback ? 1 : 0;
  for (const auto& c : node.children) total += count_fallbacks(c);
  return total;
}

std::string validate_trace(const TraceNode& node) {
  using Kind = TraceNode::Kind;
  const VertexSet mine = VertexSet::from_vector(node.vertices);
  if (static_cast<int>(node.vertices.size()) != node.order) return "node order differs from its vertex list";
  switch (node.kind) {
    case Kind::base:
    case Kind::multipartite_direct:
      if (!node.children.empty()) return std::string(to_string(node.kind)) + " node has children";
      return {};
    case Kind::component_split: {
      VertexSet seen;
      for (const auto& c : node.children) {
        const VertexSet cs = VertexSet::from_vector(c.vertices);
        if (cs.intersects(seen)) return "component children overlap";
        seen |= cs;
      }
      if (node.children.size() < 2 || seen != mine) return "component children do not partition the node";
      break;
    }
    case Kind::low_degree: {
      if (node.children.size() != 1) return "low-degree node needs one child";
      if (VertexSet::from_vector(node.children[0].vertices) != mine.without(node.removed))
        return "low-degree child is not G - v";
      break;
    }
    case Kind::structural_split: {
      if (node.children.size() != 2) return "structural split needs two children";
      const VertexSet v1 = VertexSet::from_vector(node.children[0].vertices);
      const VertexSet v2 = VertexSet::from_vector(node.children[1].vertices);
      if (v1 != mine - node.component || v2 != (node.component | node.clique))
        return "structural split children do not match K and C";
      if (v1.size() >= node.order || v2.size() >= node.order) return "structural split does not shrink";
      break;
    }
  }
  for (const auto& c : node.children)
    if (auto e = validate_trace(c); !e.empty()) return e;
  return {};
}

}  // namespace isk4
