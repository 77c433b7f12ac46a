#include <doctest.h>

#include <random>

#include "fixtures_graphs.hpp"
#include "isk4/detect.hpp"
#include "isk4/generators.hpp"
#include "isk4/graph_io.hpp"
#include "oracles.hpp"

using namespace isk4;

namespace {

Graph octahedron() { return complete_multipartite({2, 2, 2}); }

// K4 with edges {0,1} and {2,3} each subdivided once (vertices 4, 5).
Graph k4_two_subdivided() {
  return Graph::from_edges(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {4, 1}, {2, 5}, {5, 3}});
}

// K4,4 plus v = 8 adjacent to a1 = 0, a2 = 1, b1 = 4.
Graph k44_with_mixed_vertex() { return fx::k44_plus({{0, 1, 4}}); }

void check_witness(const Graph& g, const SearchResult<SubdivisionWitness>& r, int min_order = kK4PlusOrder) {
  REQUIRE(r.is_found());
  CHECK(verify_witness(g, *r.value, min_order) == "");
}

}  // namespace

TEST_CASE("is_k4_subdivision / is_k4plus_subdivision examples") {
  CHECK(is_k4_subdivision(complete_graph(4)));
  CHECK(is_k4_subdivision(fx::k4plus()));
  CHECK_FALSE(is_k4_subdivision(cycle_graph(5)));
  CHECK(is_k4plus_subdivision(fx::k4plus()));
  CHECK_FALSE(is_k4plus_subdivision(complete_graph(4)));
  CHECK(is_k4plus_subdivision(k4_two_subdivided()));
}

TEST_CASE("is_k4_subdivision rejects near misses") {
  CHECK_FALSE(is_k4_subdivision(Graph{}));
  CHECK_FALSE(is_k4_subdivision(complete_graph(5)));
  CHECK_FALSE(is_k4_subdivision(disjoint_union(complete_graph(4), cycle_graph(3))));
  CHECK_FALSE(is_k4_subdivision(complete_multipartite({3, 3})));  // K3,3: cubic but not a K4 subdivision
  CHECK_FALSE(is_k4_subdivision(petersen_graph()));
  // Theta graph with a pendant-free extra chain between the same pair: two chains 0..1.
  CHECK_FALSE(is_k4_subdivision(Graph::from_edges(
      6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}, {0, 5}, {5, 1}})));
  // K4 subdivision with one chain doubled back: a loop chain at a branch vertex.
  CHECK_FALSE(is_k4_subdivision(Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {5, 0}})));
}

TEST_CASE("oracle examples") {
  const auto a = find_isk4plus_oracle(fx::k4plus());
  check_witness(fx::k4plus(), a);
  CHECK(a.value->total == VertexSet::range(5));

  CHECK(find_isk4plus_oracle(octahedron()).is_none());

  const Graph g = k44_with_mixed_vertex();
  const auto c = find_isk4plus_oracle(g);
  check_witness(g, c);
  CHECK(c.value->total == (VertexSet{8, 0, 1, 4, 5}));

  CHECK_THROWS_AS(find_isk4plus_oracle(complete_graph(17)), GraphError);
  CHECK(find_isk4plus_oracle(complete_graph(17), {17, 5}).is_none());
}

TEST_CASE("fast detector examples") {
  check_witness(fx::k4plus(), find_isk4plus(fx::k4plus()));
  CHECK(find_isk4plus(octahedron()).is_none());
  check_witness(k44_with_mixed_vertex(), find_isk4plus(k44_with_mixed_vertex()));
  CHECK(find_isk4plus(cycle_graph(6)).is_none());
  CHECK(find_isk4plus(complete_graph(5)).is_none());
  CHECK(find_isk4plus_oracle(complete_graph(5)).is_none());
  // The ISK4 variant accepts K4 itself.
  check_witness(complete_graph(4), find_isk4(complete_graph(4)), kK4Order);
  CHECK(find_isk4plus(complete_graph(4)).is_none());
}

TEST_CASE("fast detector reports budget exhaustion explicitly") {
  const auto r = find_isk4plus(petersen_graph(), SearchLimits{1});
  CHECK(r.is_budget());
  CHECK_FALSE(r.value.has_value());
}

TEST_CASE("verify_witness catches broken witnesses") {
  SubdivisionWitness w = *find_isk4plus(fx::k4plus()).value;
  CHECK(verify_witness(fx::k4plus(), w) == "");
  CHECK(verify_witness(complete_graph(5), w) != "");  // chord 0-1 present
  SubdivisionWitness k4 = *find_isk4(complete_graph(4)).value;
  CHECK(verify_witness(complete_graph(4), k4, kK4Order) == "");
  CHECK(verify_witness(complete_graph(4), k4, kK4PlusOrder) != "");
  SubdivisionWitness bad = w;
  std::swap(bad.paths[0], bad.paths[5]);
  CHECK(verify_witness(fx::k4plus(), bad) != "");
}

TEST_CASE("biclique examples") {
  const auto a = find_biclique_subgraph(fx::k44(), 4);
  REQUIRE(a.is_found());
  CHECK(a.value->side_a == (VertexSet{0, 1, 2, 3}));
  CHECK(a.value->side_b == (VertexSet{4, 5, 6, 7}));
  CHECK(find_biclique_subgraph(cycle_graph(5), 2).is_none());
  const auto c = find_biclique_subgraph(complete_graph(5), 2);
  REQUIRE(c.is_found());
  CHECK(is_valid_biclique(complete_graph(5), *c.value));
  CHECK(find_induced_biclique(complete_graph(5), 2).is_none());
  const auto d = find_induced_biclique(fx::k44_plus({{0, 1, 4}}), 4);
  REQUIRE(d.is_found());
  CHECK(d.value->induced);
}

TEST_CASE("ramsey_extract_k44 examples") {
  const BicliqueWitness w{VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7}, false};
  const auto a = ramsey_extract_k44(fx::k44(), w, 2);
  REQUIRE(a.status == RamseyExtraction::Status::found);
  CHECK(a.k44.side_a == w.side_a);
  CHECK(a.k44.side_b == w.side_b);
  CHECK(a.k44.induced);

  // Triangle-free host containing a K4,4 subgraph: sides must come out stable.
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_with_k44(14, 0.2, rng);
    if (!oracle::clique_number(g) || oracle::clique_number(g) > 2) continue;
    const auto bc = find_biclique_subgraph(g, 4);
    REQUIRE(bc.is_found());
    const auto r = ramsey_extract_k44(g, *bc.value, 2);
    REQUIRE(r.status == RamseyExtraction::Status::found);
    CHECK(is_valid_biclique(g, r.k44));
    CHECK(is_stable(g, r.k44.side_a));
    CHECK(is_stable(g, r.k44.side_b));
  }

  // Planted: K9,9 whose side A carries a triangle-free edge set on 9 vertices.
  std::vector<Edge> edges;
  for (int a = 0; a < 9; ++a)
    for (int b = 9; b < 18; ++b) edges.emplace_back(a, b);
  for (int a = 0; a < 9; ++a) edges.emplace_back(a, (a + 1) % 9);  // C9 inside A
  const Graph planted = Graph::from_edges(18, edges);
  const BicliqueWitness w9{VertexSet::range(9), VertexSet::range(18) - VertexSet::range(9), false};
  const auto p = ramsey_extract_k44(planted, w9, 3);
  REQUIRE(p.status == RamseyExtraction::Status::found);
  CHECK(p.k44.side_a.size() == 4);
  CHECK(p.k44.side_b.size() == 4);
  CHECK(is_valid_biclique(planted, p.k44));
  CHECK(p.k44.induced);
}

TEST_CASE("ramsey_extract_k44 reports a clique violation and invalid inputs") {
  // K4,4 plus a triangle inside side A: with k = 2 the triangle and a B vertex form K4 > k.
  const Graph g = Graph::from_edges(8, [] {
    auto e = complete_multipartite({4, 4}).edges();
    e.insert(e.end(), {{0, 1}, {1, 2}, {0, 2}});
    return e;
  }());
  const BicliqueWitness w{VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7}, false};
  const auto r = ramsey_extract_k44(g, w, 2);
  REQUIRE(r.status == RamseyExtraction::Status::clique_violation);
  CHECK(r.clique.size() == 3);
  CHECK(is_clique(g, r.clique));

  const BicliqueWitness bogus{VertexSet{0, 1, 2, 3}, VertexSet{0, 5, 6, 7}, false};
  CHECK_THROWS_AS(ramsey_extract_k44(fx::k44(), bogus, 2), GraphError);
}

TEST_CASE("clique number and exact chromatic number examples") {
  CHECK(*clique_number(cycle_graph(5)).value == 2);
  CHECK(*chromatic_number_exact(cycle_graph(5)).value == 3);
  CHECK(*clique_number(complete_graph(4)).value == 4);
  CHECK(*chromatic_number_exact(complete_graph(4)).value == 4);
  CHECK(*clique_number(petersen_graph()).value == 2);
  CHECK(*chromatic_number_exact(petersen_graph()).value == 3);
  CHECK(oracle::clique_number(petersen_graph()) == 2);
  CHECK(oracle::chromatic_number(petersen_graph()) == 3);
  CHECK(*chromatic_number_exact(Graph{}).value == 0);
  Rng rng(1);
  CHECK(chromatic_number_exact(random_gnp(60, 0.5, rng), SearchLimits{10}).is_budget());
}

TEST_CASE("property: omega and chi match brute force on random graphs") {
  Rng rng(77);
  for (int i = 0; i < 400; ++i) {
    const int n = std::uniform_int_distribution<int>(0, 11)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
    CHECK(*clique_number(g).value == oracle::clique_number(g));
    CHECK(*chromatic_number_exact(g).value == oracle::chromatic_number(g));
  }
}

TEST_CASE("property: detector agrees with oracle on all graphs n <= 6 and witnesses verify") {
  long found = 0;
  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (1ULL << pair_count(n)); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const auto o = find_isk4plus_oracle(g);
      const auto f = find_isk4plus(g);
      REQUIRE_FALSE(f.is_budget());
      CHECK(o.is_found() == f.is_found());
      if (f.is_found()) {
        ++found;
        CHECK(verify_witness(g, *f.value) == "");
        CHECK(verify_witness(g, *o.value) == "");
      }
    }
  CHECK(found > 0);
}

TEST_CASE("property: detector agrees with oracle on random graphs n <= 14") {
  Rng rng(4);
  for (int i = 0; i < 600; ++i) {
    const int n = std::uniform_int_distribution<int>(5, 14)(rng);
    Graph g = i % 3 == 0 ? random_triangle_free(n, n, rng)
                         : random_gnp(n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), rng);
    const auto o = find_isk4plus_oracle(g);
    const auto f = find_isk4plus(g);
    CHECK_MESSAGE(o.is_found() == f.is_found(), write_graph6(g));
    if (f.is_found()) CHECK(verify_witness(g, *f.value) == "");
    const auto o4 = find_isk4plus_oracle(g, {16, kK4Order});
    const auto f4 = find_isk4(g);
    CHECK_MESSAGE(o4.is_found() == f4.is_found(), write_graph6(g));
    if (f4.is_found()) CHECK(verify_witness(g, *f4.value, kK4Order) == "");
  }
}

TEST_CASE("property: monotonicity under induced subgraphs") {
  Rng rng(8);
  int free_graphs = 0;
  for (int i = 0; i < 2000 && free_graphs < 150; ++i) {
    const Graph g = random_gnp(std::uniform_int_distribution<int>(6, 16)(rng), 0.3, rng);
    if (!find_isk4plus(g).is_none()) continue;
    ++free_graphs;
    for (int j = 0; j < 10; ++j) {
      VertexSet s;
      for (Vertex v = 0; v < g.order(); ++v)
        if (rng() & 1) s.insert(v);
      CHECK(find_isk4plus(induced_subgraph(g, s).graph).is_none());
    }
  }
  CHECK(free_graphs > 50);
}

TEST_CASE("property: hereditary omega and chi") {
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_gnp(std::uniform_int_distribution<int>(1, 14)(rng), 0.5, rng);
    const int w = *clique_number(g).value, c = *chromatic_number_exact(g).value;
    VertexSet s;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() & 1) s.insert(v);
    const Graph h = induced_subgraph(g, s).graph;
    CHECK(*clique_number(h).value <= w);
    CHECK(*chromatic_number_exact(h).value <= c);
  }
}

TEST_CASE("property: complete multipartite graphs are ISK4+-free") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    std::vector<int> sizes;
    int total = 0;
    while (true) {
      const int s = std::uniform_int_distribution<int>(1, 5)(rng);
      if (total + s > 14) break;
      sizes.push_back(s);
      total += s;
      if (rng() % 4 == 0) break;
    }
    const Graph g = shuffle_labels(complete_multipartite(sizes), rng);
    CHECK(find_isk4plus(g).is_none());
  }
}

TEST_CASE("property: Ramsey extraction output is always an induced K4,4") {
  Rng rng(13);
  int extracted = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph g = random_with_k44(std::uniform_int_distribution<int>(8, 16)(rng), 0.25, rng);
    const int w = *clique_number(g).value;
    for (int s : {4, 5}) {
      const auto bc = find_biclique_subgraph(g, s);
      if (!bc.is_found()) continue;
      const auto r = ramsey_extract_k44(g, *bc.value, w);
      CHECK(r.status != RamseyExtraction::Status::clique_violation);
      if (r.status != RamseyExtraction::Status::found) continue;
      ++extracted;
      CHECK(r.k44.side_a.size() == 4);
      CHECK(r.k44.side_b.size() == 4);
      CHECK(is_stable(g, r.k44.side_a));
      CHECK(is_stable(g, r.k44.side_b));
      CHECK(is_valid_biclique(g, r.k44));
      CHECK(r.k44.side_a.subset_of(bc.value->side_a) == true);
    }
  }
  CHECK(extracted > 100);
}
