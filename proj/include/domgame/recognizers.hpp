#pragma once

#include <optional>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// Walk with no repeated edge. `vertices` has one more entry than
/// `edge_indices`; closed trails repeat the start vertex at the end.
/// `dominating` is set by the finders when the trail's vertex set is a
/// vertex cover of the host graph.
struct Trail {
    std::vector<int> vertices;
    std::vector<int> edge_indices;
    bool closed = false;
    bool dominating = false;

    int length() const { return static_cast<int>(edge_indices.size()); }
};

enum class SearchStatus { Found, Absent, Unknown };

struct TrailSearch {
    SearchStatus status;
    std::optional<Trail> trail;
};

bool is_claw_free(const Graph& g);
bool is_cubic(const Graph& g);
int min_degree(const Graph& g);  // 0 for the empty graph

enum class ForbiddenPattern { K4, Diamond, C6plus };

/// K4 and Diamond are tested as induced subgraphs; C6plus (two vertex
/// disjoint triangles joined by two vertex disjoint edges) as a subgraph.
bool forbidden_subgraph_free(const Graph& g, ForbiddenPattern pattern);

bool is_traceable(const Graph& g);
bool is_hamiltonian(const Graph& g);

/// Smallest (then lexicographically least) edge subset inducing a connected
/// even-degree subgraph whose vertex set is a vertex cover, extracted as a
/// closed trail. Absent when no such subset exists; Unknown above the m cap.
TrailSearch find_edge_dominating_circuit(const Graph& g, int edge_cap = 24);

/// Same but allowing 0 or 2 odd-degree vertices (open or closed trail).
TrailSearch find_edge_dominating_trail(const Graph& g, int edge_cap = 24);

/// Open trails only (exactly two odd-degree vertices in the edge subset).
TrailSearch find_open_edge_dominating_trail(const Graph& g, int edge_cap = 24);

/// True when {trail vertices} covers every edge of g.
bool is_vertex_cover(const Graph& g, const std::vector<int>& vertices);

}  // namespace domgame
