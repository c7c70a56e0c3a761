#pragma once

#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}, center = 0
Graph petersen_graph();
Graph prism_graph();  // K_3 x K_2

/// Disjoint union, vertices of b shifted past a's.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Bundled sharpness instances: connected graphs with minimum degree 2,
/// diameter at least 3, and game domination number exactly ceil(n/2).
/// The first entry of the 9-vertex family is C_9.
std::vector<Graph> equality_instances_n9();
Graph equality_instance_n24();
Graph equality_instance_n30();

}  // namespace domgame
