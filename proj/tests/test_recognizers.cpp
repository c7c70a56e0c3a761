#include "doctest.h"

#include "domgame/builders.hpp"
#include "domgame/generate.hpp"
#include "domgame/graph.hpp"
#include "domgame/recognizers.hpp"

using namespace domgame;

TEST_SUITE_BEGIN("recognizers");

namespace {

// Oracle for claw-freeness: brute force over all vertex triples.
bool clawfree_oracle(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int d = b + 1; d < n; ++d) {
                    if (a == c || b == c || d == c) continue;
                    if (g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) &&
                        !g.adjacent(a, b) && !g.adjacent(a, d) && !g.adjacent(b, d))
                        return false;
                }
    return true;
}

bool trail_is_valid(const Graph& g, const Trail& t) {
    if (t.vertices.size() != t.edge_indices.size() + 1) return false;
    std::vector<bool> used(g.edge_count(), false);
    for (std::size_t i = 0; i < t.edge_indices.size(); ++i) {
        int e = t.edge_indices[i];
        auto [u, v] = g.edge(e);
        int a = t.vertices[i], b = t.vertices[i + 1];
        if (!((a == u && b == v) || (a == v && b == u))) return false;
        if (used[e]) return false;
        used[e] = true;
    }
    if (t.closed && t.vertices.front() != t.vertices.back()) return false;
    if (!t.closed && t.vertices.front() == t.vertices.back() && t.length() > 0) return false;
    return true;
}

}  // namespace

TEST_CASE("claw-freeness") {
    CHECK(!is_claw_free(star_graph(3)));
    for (int n = 3; n <= 9; ++n) CHECK(is_claw_free(cycle_graph(n)));
    CHECK(!is_claw_free(petersen_graph()));
    CHECK(is_claw_free(prism_graph()));
    CHECK(is_claw_free(complete_graph(6)));
    for (const Graph& g : {petersen_graph(), prism_graph(), star_graph(4), path_graph(7),
                           complete_bipartite(2, 4), cycle_graph(8)})
        CHECK(is_claw_free(g) == clawfree_oracle(g));
}

TEST_CASE("degree predicates") {
    CHECK(is_cubic(complete_graph(4)));
    CHECK(min_degree(complete_graph(4)) == 3);
    CHECK(!is_cubic(cycle_graph(5)));
    CHECK(min_degree(cycle_graph(5)) == 2);
    CHECK(min_degree(path_graph(3)) == 1);
    CHECK(is_cubic(petersen_graph()));
    CHECK(is_cubic(prism_graph()));
    CHECK(!is_cubic(Graph(0)));
}

TEST_CASE("forbidden subgraphs") {
    CHECK(!forbidden_subgraph_free(complete_graph(4), ForbiddenPattern::K4));
    CHECK(forbidden_subgraph_free(cycle_graph(6), ForbiddenPattern::C6plus));
    CHECK(!forbidden_subgraph_free(prism_graph(), ForbiddenPattern::C6plus));

    // K_4 minus an edge is an induced diamond
    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!forbidden_subgraph_free(diamond, ForbiddenPattern::Diamond));
    CHECK(forbidden_subgraph_free(diamond, ForbiddenPattern::K4));
    // K_4 has no induced diamond, only a subgraph one
    CHECK(forbidden_subgraph_free(complete_graph(4), ForbiddenPattern::Diamond));
    CHECK(forbidden_subgraph_free(petersen_graph(), ForbiddenPattern::K4));
    CHECK(forbidden_subgraph_free(petersen_graph(), ForbiddenPattern::Diamond));
    CHECK(forbidden_subgraph_free(petersen_graph(), ForbiddenPattern::C6plus));

    // two triangles joined by two disjoint edges: the pattern itself
    Graph c6plus(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}});
    CHECK(!forbidden_subgraph_free(c6plus, ForbiddenPattern::C6plus));
    // joined by a single edge: no
    Graph bowtie_bridge(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}});
    CHECK(forbidden_subgraph_free(bowtie_bridge, ForbiddenPattern::C6plus));
    // two edges sharing an endpoint do not count
    Graph shared(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {0, 4}});
    CHECK(forbidden_subgraph_free(shared, ForbiddenPattern::C6plus));
}

TEST_CASE("traceability and hamiltonicity") {
    CHECK(is_traceable(cycle_graph(9)));
    CHECK(is_hamiltonian(cycle_graph(9)));
    CHECK(!is_traceable(star_graph(3)));
    CHECK(is_traceable(petersen_graph()));
    CHECK(!is_hamiltonian(petersen_graph()));
    CHECK(is_hamiltonian(complete_bipartite(3, 3)));
    CHECK(!is_hamiltonian(complete_bipartite(2, 3)));
    CHECK(is_traceable(complete_bipartite(3, 4)));
    CHECK(!is_traceable(complete_bipartite(2, 4)));
    CHECK(is_traceable(path_graph(9)));
    CHECK(!is_hamiltonian(path_graph(9)));
    CHECK(is_traceable(Graph(1)));
    CHECK(!is_traceable(disjoint_union(complete_graph(2), complete_graph(2))));
    // hamiltonian implies traceable on a mixed battery
    for (const Graph& g : {cycle_graph(7), prism_graph(), complete_graph(5), petersen_graph(),
                           complete_bipartite(3, 3), path_graph(5)})
        if (is_hamiltonian(g)) CHECK(is_traceable(g));
}

TEST_CASE("the bundled large instances are not traceable") {
    CHECK(!is_traceable(equality_instance_n24()));
    CHECK(!is_traceable(equality_instance_n30()));
    for (const Graph& g : equality_instances_n9()) CHECK(is_traceable(g));
}

TEST_CASE("edge dominating circuits") {
    for (int n : {3, 5, 8}) {
        auto r = find_edge_dominating_circuit(cycle_graph(n));
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.trail->closed);
        CHECK(r.trail->length() == n);
        CHECK(trail_is_valid(cycle_graph(n), *r.trail));
    }

    auto k4 = find_edge_dominating_circuit(complete_graph(4));
    REQUIRE(k4.status == SearchStatus::Found);
    CHECK(k4.trail->closed);
    CHECK(k4.trail->length() == 3);  // a triangle covers all six edges
    CHECK(is_vertex_cover(complete_graph(4), k4.trail->vertices));

    CHECK(find_edge_dominating_circuit(star_graph(3)).status == SearchStatus::Absent);
    CHECK(find_edge_dominating_circuit(path_graph(5)).status == SearchStatus::Absent);
    CHECK(find_edge_dominating_circuit(complete_graph(1)).status == SearchStatus::Absent);
}

TEST_CASE("edge dominating trails") {
    auto p4 = find_edge_dominating_trail(path_graph(4));
    REQUIRE(p4.status == SearchStatus::Found);
    CHECK(p4.trail->length() == 1);
    CHECK(p4.trail->vertices == std::vector<int>{1, 2});
    CHECK(!p4.trail->closed);

    auto star = find_edge_dominating_trail(star_graph(3));
    REQUIRE(star.status == SearchStatus::Found);
    CHECK(star.trail->length() == 1);
    CHECK(star.trail->vertices.front() == 0);  // one edge through the center

    auto two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(find_edge_dominating_trail(two_triangles).status == SearchStatus::Absent);

    // every found trail is a real trail and a vertex cover
    for (const Graph& g : {path_graph(6), cycle_graph(6), complete_graph(4), prism_graph(),
                           star_graph(5), petersen_graph()}) {
        auto r = find_edge_dominating_trail(g);
        if (r.status != SearchStatus::Found) continue;
        CHECK(trail_is_valid(g, *r.trail));
        CHECK(is_vertex_cover(g, r.trail->vertices));
    }
}

TEST_CASE("edge cap yields the explicit unknown state") {
    CHECK(find_edge_dominating_circuit(complete_graph(8), 24).status == SearchStatus::Unknown);
    CHECK(find_edge_dominating_circuit(complete_graph(8), 28).status == SearchStatus::Found);
}

TEST_CASE("claw-free cubic trichotomy") {
    // every vertex of a claw-free cubic graph lies in a K_4 component, or is
    // a diamond center, or touches exactly one flat edge and one triangle
    auto check_trichotomy = [](const Graph& g) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool in_k4 = false, diamond_center = false;
            std::uint64_t nb = g.neighbors(v);
            for_each_bit(nb, [&](int u) {
                std::uint64_t common = g.neighbors(v) & g.neighbors(u);
                if (std::popcount(common) == 2) {
                    std::uint64_t cn = common;
                    int x = std::countr_zero(cn);
                    cn &= cn - 1;
                    int y = std::countr_zero(cn);
                    if (g.adjacent(x, y))
                        in_k4 = true;
                    else
                        diamond_center = true;
                }
            });
            if (in_k4 || diamond_center) continue;
            int triangles = 0, flat = 0;
            for_each_bit(nb, [&](int u) {
                if (g.neighbors(v) & g.neighbors(u))
                    ++triangles;
                else
                    ++flat;
            });
            CHECK(flat == 1);
            CHECK(triangles == 2);  // the two edges of one triangle
        }
    };
    for (const Graph& g : claw_free_cubic_corpus(14)) check_trichotomy(g);
}

TEST_CASE("every returned circuit gives each edge two adjacent circuit edges") {
    std::vector<Graph> hosts;
    for (int n = 1; n <= 6; ++n)
        for (Graph& g : generate_all_graphs(n))
            if (is_connected(g)) hosts.push_back(std::move(g));
    for (int n = 7; n <= 10; ++n) hosts.push_back(cycle_graph(n));
    for (const Graph& g : hosts) {
        auto r = find_edge_dominating_circuit(g);
        if (r.status != SearchStatus::Found) continue;
        std::uint64_t cset = 0;
        for (int e : r.trail->edge_indices) cset |= std::uint64_t{1} << e;
        auto nbhd = edge_neighborhoods(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            int adjacent_circuit = std::popcount(nbhd[e] & cset & ~(std::uint64_t{1} << e));
            CHECK(adjacent_circuit >= 2);
        }
    }
}

TEST_CASE("a hamiltonian line graph forces an edge dominating circuit") {
    // classical equivalence, with the star exception: L(K_{1,k}) is complete
    // and hamiltonian although stars are acyclic
    auto is_star = [](const Graph& g) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == g.edge_count()) return true;
        return false;
    };
    int confirmed = 0;
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : generate_all_graphs(n)) {
            if (!is_connected(g) || g.edge_count() < 3 || g.edge_count() > 9) continue;
            if (!is_hamiltonian(line_graph(g)) || is_star(g)) continue;
            CHECK(find_edge_dominating_circuit(g).status == SearchStatus::Found);
            ++confirmed;
        }
    }
    CHECK(confirmed > 50);
}

TEST_SUITE_END();
