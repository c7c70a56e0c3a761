#include "domgame/recognizers.hpp"

#include <algorithm>

namespace domgame {

namespace {

// ---- Hamiltonian path / cycle backtracking ----------------------------

class HamiltonSearch {
public:
    explicit HamiltonSearch(const Graph& g) : g_(g), n_(g.vertex_count()), all_(g.vertex_mask()) {}

    bool has_path() {
        if (n_ == 0) return false;
        if (n_ == 1) return true;
        if (!is_connected(g_)) return false;
        for (int s = 0; s < n_; ++s)
            if (extend_path(s, std::uint64_t{1} << s)) return true;
        return false;
    }

    bool has_cycle() {
        if (n_ < 3) return false;
        if (!is_connected(g_)) return false;
        for (int v = 0; v < n_; ++v)
            if (g_.degree(v) < 2) return false;
        return extend_cycle(0, std::uint64_t{1});
    }

private:
    bool reachable_all(int cur, std::uint64_t remaining) const {
        std::uint64_t seen = std::uint64_t{1} << cur;
        std::uint64_t frontier = seen;
        std::uint64_t zone = remaining | seen;
        while (frontier) {
            std::uint64_t next = 0;
            for_each_bit(frontier, [&](int v) { next |= g_.neighbors(v); });
            frontier = next & zone & ~seen;
            seen |= frontier;
        }
        return (remaining & ~seen) == 0;
    }

    bool extend_path(int cur, std::uint64_t visited) {
        if (visited == all_) return true;
        std::uint64_t remaining = all_ & ~visited;
        if (!reachable_all(cur, remaining)) return false;
        // In the graph on remaining + cur, internal vertices need degree 2;
        // only the far endpoint may have degree 1.
        std::uint64_t zone = remaining | (std::uint64_t{1} << cur);
        int loose = 0;
        bool feasible = true;
        for_each_bit(remaining, [&](int r) {
            int d = std::popcount(g_.neighbors(r) & zone);
            if (d == 0) feasible = false;
            if (d == 1) ++loose;
        });
        if (!feasible || loose > 1) return false;
        bool found = false;
        for_each_bit(g_.neighbors(cur) & remaining, [&](int w) {
            if (!found && extend_path(w, visited | (std::uint64_t{1} << w))) found = true;
        });
        return found;
    }

    bool extend_cycle(int cur, std::uint64_t visited) {
        if (visited == all_) return g_.adjacent(cur, 0);
        std::uint64_t remaining = all_ & ~visited;
        if (!reachable_all(cur, remaining)) return false;
        if ((g_.neighbors(0) & remaining) == 0) return false;  // no way back to the start
        std::uint64_t zone = remaining | (std::uint64_t{1} << cur) | std::uint64_t{1};
        bool feasible = true;
        for_each_bit(remaining, [&](int r) {
            if (std::popcount(g_.neighbors(r) & zone) < 2) feasible = false;
        });
        if (!feasible) return false;
        bool found = false;
        for_each_bit(g_.neighbors(cur) & remaining, [&](int w) {
            if (!found && extend_cycle(w, visited | (std::uint64_t{1} << w))) found = true;
        });
        return found;
    }

    const Graph& g_;
    int n_;
    std::uint64_t all_;
};

// ---- Dominating trail subset search ------------------------------------

enum class TrailMode { Circuit, AnyTrail, OpenTrail };

class TrailSubsetSearch {
public:
    TrailSubsetSearch(const Graph& g, TrailMode mode) : g_(g), m_(g.edge_count()), mode_(mode) {
        endpoint_mask_.resize(m_);
        incident_.resize(g.vertex_count(), 0);
        for (int e = 0; e < m_; ++e) {
            auto [u, v] = g.edge(e);
            endpoint_mask_[e] = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            incident_[u] |= std::uint64_t{1} << e;
            incident_[v] |= std::uint64_t{1} << e;
        }
        suffix_verts_.assign(m_ + 1, 0);
        for (int e = m_ - 1; e >= 0; --e) suffix_verts_[e] = suffix_verts_[e + 1] | endpoint_mask_[e];
    }

    std::optional<std::vector<int>> run() {
        for (int size = 1; size <= m_; ++size) {
            chosen_.clear();
            if (dfs(0, size, 0, 0)) return chosen_;
        }
        return std::nullopt;
    }

private:
    bool cover_feasible(std::uint64_t coverable) const {
        for (int e = 0; e < m_; ++e)
            if ((endpoint_mask_[e] & coverable) == 0) return false;
        return true;
    }

    bool dfs(int next, int want, std::uint64_t verts, std::uint64_t odd) {
        if (want == 0) return accept(verts, odd);
        if (m_ - next < want) return false;
        if (!cover_feasible(verts | suffix_verts_[next])) return false;
        // Vertices whose incident edges are all decided keep their parity.
        std::uint64_t frozen_odd = 0;
        std::uint64_t suffix_edges = (next >= 64) ? 0 : (~std::uint64_t{0} << next);
        for_each_bit(odd, [&](int v) {
            if ((incident_[v] & suffix_edges) == 0) frozen_odd |= std::uint64_t{1} << v;
        });
        int max_odd = mode_ == TrailMode::Circuit ? 0 : 2;
        if (std::popcount(frozen_odd) > max_odd) return false;

        for (int e = next; e <= m_ - want; ++e) {
            chosen_.push_back(e);
            if (dfs(e + 1, want - 1, verts | endpoint_mask_[e], odd ^ endpoint_mask_[e])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    bool accept(std::uint64_t verts, std::uint64_t odd) const {
        int odd_count = std::popcount(odd);
        switch (mode_) {
            case TrailMode::Circuit:
                if (odd_count != 0) return false;
                break;
            case TrailMode::AnyTrail:
                if (odd_count != 0 && odd_count != 2) return false;
                break;
            case TrailMode::OpenTrail:
                if (odd_count != 2) return false;
                break;
        }
        if (!cover_feasible(verts)) return false;
        // Edge-induced subgraph must be connected.
        std::uint64_t seen = endpoint_mask_[chosen_[0]];
        for (;;) {
            std::uint64_t grow = seen;
            for (int e : chosen_)
                if (endpoint_mask_[e] & seen) grow |= endpoint_mask_[e];
            if (grow == seen) break;
            seen = grow;
        }
        for (int e : chosen_)
            if ((endpoint_mask_[e] & seen) == 0) return false;
        return true;
    }

    const Graph& g_;
    int m_;
    TrailMode mode_;
    std::vector<std::uint64_t> endpoint_mask_;
    std::vector<std::uint64_t> incident_;
    std::vector<std::uint64_t> suffix_verts_;
    std::vector<int> chosen_;
};

/// Deterministic Hierholzer walk over the chosen edge subset: start at the
/// smaller odd-degree vertex (or the smallest vertex for circuits), always
/// leave along the unused edge with the smallest index.
Trail hierholzer(const Graph& g, const std::vector<int>& subset) {
    std::vector<int> degree(g.vertex_count(), 0);
    std::vector<std::vector<int>> at(g.vertex_count());
    for (int e : subset) {
        auto [u, v] = g.edge(e);
        ++degree[u], ++degree[v];
        at[u].push_back(e);
        at[v].push_back(e);
    }
    for (auto& list : at) std::sort(list.begin(), list.end());

    int start = -1;
    bool closed = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (degree[v] % 2 == 1) {
            closed = false;
            start = v;
            break;
        }
    }
    if (start < 0)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (degree[v] > 0) {
                start = v;
                break;
            }

    std::vector<bool> used(g.edge_count(), false);
    std::vector<std::size_t> cursor(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> stack{{start, -1}};  // (vertex, edge used to arrive)
    std::vector<std::pair<int, int>> out;
    while (!stack.empty()) {
        auto [v, via] = stack.back();
        bool extended = false;
        while (cursor[v] < at[v].size()) {
            int e = at[v][cursor[v]++];
            if (used[e]) continue;
            used[e] = true;
            auto [a, b] = g.edge(e);
            stack.emplace_back(a == v ? b : a, e);
            extended = true;
            break;
        }
        if (!extended) {
            out.push_back({v, via});
            stack.pop_back();
        }
    }
    std::reverse(out.begin(), out.end());

    Trail t;
    t.closed = closed;
    for (std::size_t i = 0; i < out.size(); ++i) {
        t.vertices.push_back(out[i].first);
        if (i > 0) t.edge_indices.push_back(out[i].second);
    }
    return t;
}

TrailSearch find_dominating_subset(const Graph& g, TrailMode mode, int edge_cap) {
    if (g.edge_count() == 0) return {SearchStatus::Absent, std::nullopt};
    if (g.edge_count() > edge_cap) return {SearchStatus::Unknown, std::nullopt};
    TrailSubsetSearch search(g, mode);
    auto subset = search.run();
    if (!subset) return {SearchStatus::Absent, std::nullopt};
    Trail t = hierholzer(g, *subset);
    t.dominating = true;
    return {SearchStatus::Found, std::move(t)};
}

}  // namespace

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t nbrs = g.neighbors(v);
        bool claw = false;
        for_each_bit(nbrs, [&](int a) {
            if (claw) return;
            std::uint64_t nonadj_a = nbrs & ~g.closed_neighbors(a);
            for_each_bit(nonadj_a, [&](int b) {
                if (claw || b <= a) return;
                // a third pairwise nonadjacent neighbor above b closes a claw
                if (nonadj_a & ~g.closed_neighbors(b) & (~std::uint64_t{0} << b << 1)) claw = true;
            });
        });
        if (claw) return false;
    }
    return true;
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return g.vertex_count() > 0;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int d = 64;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

bool forbidden_subgraph_free(const Graph& g, ForbiddenPattern pattern) {
    if (pattern == ForbiddenPattern::K4 || pattern == ForbiddenPattern::Diamond) {
        for (auto [u, v] : g.edges()) {
            std::uint64_t common = g.neighbors(u) & g.neighbors(v);
            bool hit = false;
            for_each_bit(common, [&](int x) {
                std::uint64_t others = common & (~std::uint64_t{0} << x << 1);
                std::uint64_t match = (pattern == ForbiddenPattern::K4) ? (others & g.neighbors(x))
                                                                        : (others & ~g.neighbors(x));
                if (match) hit = true;
            });
            if (hit) return false;
        }
        return true;
    }
    // C6plus: two vertex disjoint triangles joined by two vertex disjoint edges.
    std::vector<std::uint64_t> triangles;
    for (auto [u, v] : g.edges()) {
        std::uint64_t common = g.neighbors(u) & g.neighbors(v);
        for_each_bit(common, [&](int x) {
            if (x > v) triangles.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v) | (std::uint64_t{1} << x));
        });
    }
    for (std::size_t i = 0; i < triangles.size(); ++i) {
        for (std::size_t j = i + 1; j < triangles.size(); ++j) {
            if (triangles[i] & triangles[j]) continue;
            std::vector<std::pair<int, int>> cross;
            for_each_bit(triangles[i], [&](int a) {
                for_each_bit(triangles[j] & g.neighbors(a), [&](int b) { cross.emplace_back(a, b); });
            });
            for (std::size_t p = 0; p < cross.size(); ++p)
                for (std::size_t q = p + 1; q < cross.size(); ++q)
                    if (cross[p].first != cross[q].first && cross[p].second != cross[q].second)
                        return false;
        }
    }
    return true;
}

bool is_traceable(const Graph& g) { return HamiltonSearch(g).has_path(); }

bool is_hamiltonian(const Graph& g) { return HamiltonSearch(g).has_cycle(); }

TrailSearch find_edge_dominating_circuit(const Graph& g, int edge_cap) {
    return find_dominating_subset(g, TrailMode::Circuit, edge_cap);
}

TrailSearch find_edge_dominating_trail(const Graph& g, int edge_cap) {
    return find_dominating_subset(g, TrailMode::AnyTrail, edge_cap);
}

TrailSearch find_open_edge_dominating_trail(const Graph& g, int edge_cap) {
    return find_dominating_subset(g, TrailMode::OpenTrail, edge_cap);
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& vertices) {
    std::uint64_t mask = 0;
    for (int v : vertices) mask |= std::uint64_t{1} << v;
    for (auto [u, v] : g.edges())
        if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
    return true;
}

}  // namespace domgame
