#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fixtures_graphs.hpp"
#include "isk4/coloring.hpp"
#include "isk4/generators.hpp"
#include "isk4/graph_io.hpp"
#include "oracles.hpp"

using namespace isk4;

namespace {

bool has_kind(const TraceNode& n, TraceNode::Kind k) {
  if (n.kind == k) return true;
  for (const auto& c : n.children)
    if (has_kind(c, k)) return true;
  return false;
}

bool strictly_shrinks(const TraceNode& n) {
  for (const auto& c : n.children) {
    if (n.kind != TraceNode::Kind::component_split && c.order >= n.order) return false;
    if (!strictly_shrinks(c)) return false;
  }
  return true;
}

ColoringResult color(const Graph& g, ColoringOptions o = {}) {
  ColoringResult r = color_isk4plus_free(g, o);
  REQUIRE(r.status == SearchStatus::found);
  CHECK_FALSE(verify_proper(g, r.coloring).has_value());
  CHECK(validate_trace(r.trace) == "");
  return r;
}

}  // namespace

TEST_CASE("greedy_extend examples") {
  // Star K1,3 with center 0: leaves all color 0, center gets 1.
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(greedy_extend(star, {-1, 0, 0, 0}, 0, 2).color == std::vector<int>{1, 0, 0, 0});
  const Coloring k4 = greedy_extend(complete_graph(4), {0, 1, 2, -1}, 3, 4);
  CHECK(k4.color[3] == 3);
  CHECK(k4.palette_size == 4);
  CHECK(greedy_extend(Graph::from_edges(1, {}), {-1}, 0, 1).color == std::vector<int>{0});
}

TEST_CASE("greedy_extend errors") {
  CHECK_THROWS_AS(greedy_extend(complete_graph(4), {0, 1, 2, -1}, 3, 3), ColoringError);
  CHECK_THROWS_AS(greedy_extend(complete_graph(3), {0, -1, -1}, 1, 3), ColoringError);  // partial incomplete
}

TEST_CASE("merge_on_clique examples") {
  // Diamond: triangles {0,1,2} and {0,1,3} sharing edge {0,1}.
  const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const Subgraph g1 = induced_subgraph(diamond, VertexSet{0, 1, 2});
  const Subgraph g2 = induced_subgraph(diamond, VertexSet{0, 1, 3});
  const Coloring m = merge_on_clique(4, g1, Coloring::from_colors({0, 1, 2}), g2, Coloring::from_colors({1, 0, 2}),
                                     VertexSet{0, 1});
  CHECK(m.color == std::vector<int>{0, 1, 2, 2});
  CHECK(m.palette_size == 3);
  CHECK_FALSE(verify_proper(diamond, m).has_value());

  // Empty K: concatenation.
  const Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const Coloring e = merge_on_clique(4, induced_subgraph(two, VertexSet{0, 1}), Coloring::from_colors({0, 1}),
                                     induced_subgraph(two, VertexSet{2, 3}), Coloring::from_colors({1, 0}), {});
  CHECK(e.color == std::vector<int>{0, 1, 1, 0});

  // Shared single vertex colored 2 in c1 and 0 in c2: pi(0) = 2.
  const Graph p = path_graph(5);  // 0-1-2-3-4, cut at 2
  const Coloring s = merge_on_clique(5, induced_subgraph(p, VertexSet{0, 1, 2}), Coloring::from_colors({0, 1, 2}),
                                     induced_subgraph(p, VertexSet{2, 3, 4}), Coloring::from_colors({0, 1, 0}),
                                     VertexSet{2});
  CHECK(s.color == std::vector<int>{0, 1, 2, 0, 2});
  CHECK_FALSE(verify_proper(p, s).has_value());
}

TEST_CASE("merge_on_clique rejects colorings that are not injective on K") {
  const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  CHECK_THROWS_AS(merge_on_clique(4, induced_subgraph(diamond, VertexSet{0, 1, 2}), Coloring::from_colors({0, 0, 1}),
                                  induced_subgraph(diamond, VertexSet{0, 1, 3}), Coloring::from_colors({0, 1, 2}),
                                  VertexSet{0, 1}),
                  ColoringError);
}

TEST_CASE("verify_proper examples") {
  CHECK_FALSE(verify_proper(complete_graph(4), Coloring::from_colors({0, 1, 2, 3})).has_value());
  CHECK(verify_proper(complete_graph(2), Coloring::from_colors({0, 0})) == Edge{0, 1});
  CHECK_FALSE(verify_proper(Graph::from_edges(3, {}), Coloring::from_colors({0, 0, 0})).has_value());
  CHECK(verify_proper(cycle_graph(4), Coloring::from_colors({0, 1, 1, 1})) == Edge{1, 2});
  CHECK_THROWS_AS(verify_proper(cycle_graph(4), Coloring::from_colors({0, 1})), ColoringError);
  CHECK_THROWS_AS(Coloring::from_colors({0, -1}), ColoringError);
}

TEST_CASE("color_isk4plus_free examples") {
  const ColoringResult a = color(fx::k44());
  CHECK(a.coloring.palette_size == 2);
  CHECK(a.trace.kind == TraceNode::Kind::multipartite_direct);

  const ColoringResult b = color(fx::two_k4s());
  CHECK(b.coloring.palette_size == 4);
  CHECK(*chromatic_number_exact(fx::two_k4s()).value == 4);
  CHECK(has_kind(b.trace, TraceNode::Kind::low_degree));
  CHECK(count_fallbacks(b.trace) == 0);

  const Graph pendant = fx::k44_plus({{0}});
  const ColoringResult c = color(pendant);
  CHECK(c.trace.kind == TraceNode::Kind::structural_split);
  CHECK(c.trace.clique == VertexSet{0});
  CHECK(c.trace.component == VertexSet{8});
  CHECK(c.coloring.palette_size == 2);
  CHECK(*chromatic_number_exact(pendant).value == 2);
}

TEST_CASE("color_isk4plus_free base and component steps") {
  const ColoringResult k3 = color(complete_graph(3));
  CHECK(k3.trace.kind == TraceNode::Kind::base);
  CHECK(k3.coloring.color == std::vector<int>{0, 1, 2});
  const ColoringResult split = color(disjoint_union(complete_graph(3), cycle_graph(5)));
  CHECK(split.trace.kind == TraceNode::Kind::component_split);
  CHECK(split.coloring.palette_size == 3);
  const ColoringResult empty = color(Graph{});
  CHECK(empty.coloring.palette_size == 0);
}

TEST_CASE("color_isk4plus_free falls back on graphs that break the claims") {
  // K4,4 plus the path a1 - x - y - a2: claim 3 fails, so the split step records a fallback.
  const Graph g = fx::k44_plus({{0}, {1}}, {{8, 9}});
  const ColoringResult r = color(g);
  CHECK(count_fallbacks(r.trace) >= 1);
  CHECK(r.trace.fallback);
  REQUIRE(r.trace.violation.has_value());
  CHECK(r.trace.violation->claim_id == 3);
  CHECK(verify_witness(g, r.trace.violation->constructed) == "");
}

TEST_CASE("color_isk4plus_free via the Ramsey route") {
  ColoringOptions o;
  o.via_ramsey = true;
  o.k = 2;
  const ColoringResult a = color(fx::k44(), o);
  CHECK(a.coloring.palette_size == 2);
  CHECK(a.trace.kind == TraceNode::Kind::multipartite_direct);
  o.k = 3;
  const ColoringResult b = color(fx::k44_plus({{0}}), o);
  CHECK(b.trace.kind == TraceNode::Kind::structural_split);
}

TEST_CASE("color_isk4plus_free reports budget exhaustion") {
  Rng rng(1);
  ColoringOptions o;
  o.limits = SearchLimits{5};
  const ColoringResult r = color_isk4plus_free(random_gnp(30, 0.5, rng), o);
  CHECK(r.status == SearchStatus::budget);
}

TEST_CASE("property: properness on arbitrary random graphs n <= 20") {
  Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    const int n = std::uniform_int_distribution<int>(0, 20)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0.05, 0.95)(rng), rng);
    const ColoringResult r = color(g);
    CHECK(r.coloring.palette_size >= r.clique_bound);
    CHECK(strictly_shrinks(r.trace));
  }
}

TEST_CASE("property: no fallback and sane palette on ISK4+-free graphs") {
  Rng rng(42);
  int free_graphs = 0;
  for (int i = 0; i < 3000; ++i) {
    const int n = std::uniform_int_distribution<int>(8, 14)(rng);
    const Graph g = i % 3 == 0 ? random_planted(n, 0.2, rng)
                               : i % 3 == 1 ? random_with_k44(n, 0.25, rng) : random_gnp(n, 0.3, rng);
    if (!find_isk4plus_oracle(g).is_none()) continue;
    ++free_graphs;
    const ColoringResult r = color(g);
    CHECK_MESSAGE(count_fallbacks(r.trace) == 0, write_graph6(g));
    CHECK(strictly_shrinks(r.trace));
    if (n <= 12) CHECK(r.coloring.palette_size >= oracle::chromatic_number(g));
  }
  CHECK(free_graphs > 500);
}

TEST_CASE("property: merge_on_clique keeps c1 and permutes c2 by one bijection") {
  Rng rng(43);
  int merges = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_gnp(std::uniform_int_distribution<int>(3, 12)(rng), 0.35, rng);
    const auto cut = find_any_clique_cutset(g);
    if (!cut.is_found()) continue;
    const CutsetSplit& s = *cut.value;
    const Coloring c1 = color(s.g1.graph).coloring;
    // A deliberately shuffled optimal coloring of G2 so the permutation is exercised.
    std::vector<int> perm(s.g2.graph.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> raw = color(s.g2.graph).coloring.color;
    for (int& c : raw) c = perm[c];
    const Coloring c2 = Coloring::from_colors(raw);
    const Coloring m = merge_on_clique(g.order(), s.g1, c1, s.g2, c2, s.clique);
    CHECK_FALSE(verify_proper(g, m).has_value());
    CHECK(m.palette_size <= std::max(c1.palette_size, c2.palette_size));
    for (std::size_t k = 0; k < s.g1.to_parent.size(); ++k) CHECK(m.color[s.g1.to_parent[k]] == c1.color[k]);
    std::map<int, int> pi;
    for (std::size_t k = 0; k < s.g2.to_parent.size(); ++k) {
      auto [it, fresh] = pi.emplace(c2.color[k], m.color[s.g2.to_parent[k]]);
      CHECK(it->second == m.color[s.g2.to_parent[k]]);
    }
    std::set<int> images;
    for (auto [from, to] : pi) images.insert(to);
    CHECK(images.size() == pi.size());
    ++merges;
  }
  CHECK(merges > 100);
}
