#include "domgame/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "domgame/recognizers.hpp"

namespace domgame {

std::pair<Graph, TriangleMap> inflate(const Graph& f) {
    if (!is_cubic(f)) throw std::invalid_argument("inflation needs a cubic input");
    int nf = f.vertex_count();
    if (3 * nf > Graph::kMaxVertices) throw std::invalid_argument("inflation exceeds the vertex cap");

    auto slot = [&](int u, int v) {
        // rank of v among u's ascending neighbors
        int rank = 0;
        bool found = false;
        for_each_bit(f.neighbors(u), [&](int w) {
            if (w < v) ++rank;
            if (w == v) found = true;
        });
        if (!found) throw std::logic_error("slot of a non-neighbor");
        return 3 * u + rank;
    };

    TriangleMap map;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < nf; ++u) {
        map.triangle.push_back({3 * u, 3 * u + 1, 3 * u + 2});
        edges.emplace_back(3 * u, 3 * u + 1);
        edges.emplace_back(3 * u, 3 * u + 2);
        edges.emplace_back(3 * u + 1, 3 * u + 2);
    }
    for (auto [u, v] : f.edges()) {
        int a = slot(u, v), b = slot(v, u);
        map.connector.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (auto [x, y] : map.connector) edges.emplace_back(x, y);
    return {Graph(3 * nf, std::move(edges)), std::move(map)};
}

std::pair<Graph, TriangleMap> contract_triangles(const Graph& g) {
    if (!is_cubic(g) || !is_claw_free(g))
        throw std::invalid_argument("contraction needs a claw-free cubic host");
    for (auto pattern : {ForbiddenPattern::K4, ForbiddenPattern::Diamond, ForbiddenPattern::C6plus})
        if (!forbidden_subgraph_free(g, pattern))
            throw std::invalid_argument(
                pattern == ForbiddenPattern::K4       ? "host contains K4"
                : pattern == ForbiddenPattern::Diamond ? "host contains an induced diamond"
                                                        : "host contains two triangles joined twice");

    int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    TriangleMap map;
    for (int v = 0; v < n; ++v) {
        if (owner[v] >= 0) continue;
        // v's triangle is unique: exactly one adjacent pair among its neighbors
        std::array<int, 3> tri{v, -1, -1};
        for_each_bit(g.neighbors(v), [&](int a) {
            std::uint64_t common = g.neighbors(v) & g.neighbors(a) & (~std::uint64_t{0} << a << 1);
            for_each_bit(common, [&](int b) {
                if (tri[1] >= 0)
                    throw std::invalid_argument("vertex " + std::to_string(v) +
                                                " lies in two triangles");
                tri[1] = a;
                tri[2] = b;
            });
        });
        if (tri[1] < 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " lies in no triangle");
        int idx = static_cast<int>(map.triangle.size());
        for (int x : tri) {
            if (owner[x] >= 0)
                throw std::invalid_argument("triangles overlap at vertex " + std::to_string(x));
            owner[x] = idx;
        }
        std::sort(tri.begin(), tri.end());
        map.triangle.push_back(tri);
    }

    int nf = static_cast<int>(map.triangle.size());
    // keep the connector list aligned with the sorted F edge list
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> cross;
    for (auto [x, y] : g.edges()) {
        if (owner[x] == owner[y]) continue;  // triangle-internal
        cross.push_back({{std::min(owner[x], owner[y]), std::max(owner[x], owner[y])}, {x, y}});
    }
    std::sort(cross.begin(), cross.end());
    std::vector<std::pair<int, int>> edges;
    for (auto& [fe, ge] : cross) {
        if (!edges.empty() && edges.back() == fe)
            throw std::invalid_argument("two triangles joined by more than one edge");
        edges.push_back(fe);
        map.connector.push_back(ge);
    }
    return {Graph(nf, std::move(edges)), std::move(map)};
}

std::optional<bool> check_hamiltonicity_transfer(const Graph& f, int budget_n) {
    if (!is_cubic(f)) throw std::invalid_argument("transfer check needs a cubic input");
    if (f.vertex_count() > budget_n) return std::nullopt;
    bool h_ = is_hamiltonian(f);
    bool h_inflated = is_hamiltonian(inflate(f).first);
    return h_ == h_inflated;
}

}  // namespace domgame
