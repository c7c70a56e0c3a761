#include "domgame/graph.hpp"

#include <algorithm>

namespace domgame {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(check_order(n)) {
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        if ((adj_[u] >> v) & 1) throw std::invalid_argument("duplicate edge");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (it == edges_.end() || *it != std::pair{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    return {g.closed_neighbors(v)};
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

std::optional<int> diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int dist = 0;
        while (seen != g.vertex_mask()) {
            std::uint64_t next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~seen;
            if (!frontier) return std::nullopt;  // disconnected
            seen |= frontier;
            ++dist;
        }
        best = std::max(best, dist);
    }
    return best;
}

std::vector<std::uint64_t> edge_neighborhoods(const Graph& g) {
    int m = g.edge_count();
    if (m > 64) throw std::invalid_argument("edge games require m <= 64");
    // incident[v] = mask of edge indices touching v
    std::vector<std::uint64_t> incident(g.vertex_count(), 0);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        incident[u] |= std::uint64_t{1} << e;
        incident[v] |= std::uint64_t{1} << e;
    }
    std::vector<std::uint64_t> nbhd(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        nbhd[e] = incident[u] | incident[v];
    }
    return nbhd;
}

Graph line_graph(const Graph& g) {
    int m = g.edge_count();
    if (m == 0) throw std::invalid_argument("line graph of an edgeless graph");
    if (m > 64) throw std::invalid_argument("line graph would exceed the vertex cap");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        auto [a, b] = g.edge(i);
        for (int j = i + 1; j < m; ++j) {
            auto [c, d] = g.edge(j);
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    }
    return Graph(m, std::move(edges));
}

}  // namespace domgame
