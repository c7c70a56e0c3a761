#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "domgame/bits.hpp"

namespace domgame {

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is kept as one 64-bit neighbor mask per vertex; the edge list is
/// sorted lexicographically by (u,v) with u < v, and every module refers to
/// edges by their index in this list.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    explicit Graph(int n) : n_(n), adj_(check_order(n)) {}

    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    /// Neighbor mask N(v).
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    /// Closed neighborhood mask N[v].
    std::uint64_t closed_neighbors(int v) const { return adj_[v] | (std::uint64_t{1} << v); }

    std::uint64_t vertex_mask() const { return Bitset64::full(n_).bits; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }

    /// Index of edge (u,v) in the canonical list, or -1 if not present.
    int edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph order out of range");
        return n;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;
};

VertexSet closed_neighborhood(const Graph& g, int v);

bool is_connected(const Graph& g);

/// Max pairwise BFS distance; nullopt iff disconnected (or n == 0).
std::optional<int> diameter(const Graph& g);

/// Closed edge neighborhoods N[e] as edge-index masks. Requires m <= 64.
std::vector<std::uint64_t> edge_neighborhoods(const Graph& g);

/// Line graph L(g): vertex i stands for edge i of g (identity labeling).
/// Throws on an edgeless input or when m > 64.
Graph line_graph(const Graph& g);

}  // namespace domgame
