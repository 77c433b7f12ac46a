#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

using Rng = std::mt19937_64;

/// Independent generator for item `index` of a stream seeded with `seed`.
Rng item_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

/// Labeled graph on n vertices whose edge (i, j), i < j, is bit
/// (j*(j-1)/2 + i) of mask, i.e. graph6 bit order.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Number of vertex pairs, n choose 2.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// True if the degrees of graph_from_mask(n, mask) are nonincreasing in vertex order.
bool degrees_nonincreasing(int n, std::uint64_t mask);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph complete_multipartite(const std::vector<int>& part_sizes);
/// Disjoint union; vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph random_gnp(int n, double p, Rng& rng);

/// Adds edges in random order, skipping any that close a triangle, until
/// `target_edges` edges are placed or no pair remains.
Graph random_triangle_free(int n, int target_edges, Rng& rng);

/// K4,4 on 8 randomly chosen labels plus G(n, p) edges on every pair that
/// does not lie inside the K4,4.
Graph random_with_k44(int n, double p, Rng& rng);

/// A complete multipartite core (two or more parts of size >= 4) grown by
/// gluing small blocks along cliques. With probability `noise` per step an
/// arbitrary vertex with random neighbors is added instead. Labels are shuffled.
/// With noise = 0 the result has no induced K4+ subdivision.
Graph random_planted(int max_n, double noise, Rng& rng);

/// Relabels vertices by a uniformly random permutation.
Graph shuffle_labels(const Graph& g, Rng& rng);

}  // namespace isk4
