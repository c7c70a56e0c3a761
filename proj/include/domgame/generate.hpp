#pragma once

#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// Every graph on n vertices, one representative per isomorphism class,
/// by direct canonical filtering of all adjacency masks. n <= 7.
std::vector<Graph> generate_all_graphs(int n);

/// Same contract up to n = 9: n <= 7 delegates to generate_all_graphs;
/// n = 8 and 9 extend the (n-1)-vertex list by one vertex in every way and
/// deduplicate by canonical form. Slower, OpenMP-parallel, deterministic.
std::vector<Graph> generate_all_graphs_extended(int n);

/// Connected claw-free cubic test corpus: exhaustive for n <= 8, plus
/// constructed families (diamond insertions into K_4 and the prism, diamond
/// necklaces, the triangle inflation of K_4) reaching n = 10, 12 and 14.
/// Deduplicated by canonical form, sorted by (n, canonical form).
std::vector<Graph> claw_free_cubic_corpus(int max_n = 14);

/// Replaces edge e of g by a path through a fresh diamond (adds 4 vertices,
/// preserves claw-freeness and cubicity).
Graph insert_diamond(const Graph& g, int e);

/// Ring of k >= 2 diamonds joined end to end (4k vertices, claw-free cubic).
Graph diamond_necklace(int k);

}  // namespace domgame
