#include "doctest.h"

#include "domgame/builders.hpp"
#include "domgame/edge_game.hpp"
#include "domgame/game.hpp"

using namespace domgame;

TEST_SUITE_BEGIN("edge_game");

namespace {

// Independent oracle: plain recursion over edge states, no memoization.
int brute_edge_value(const Graph& g, std::uint64_t dominated, Player mover) {
    auto nbhd = edge_neighborhoods(g);
    std::uint64_t all = Bitset64::full(g.edge_count()).bits;
    if ((all & ~dominated) == 0) return 0;
    int best = mover == Player::Dominator ? 1 << 20 : 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::uint64_t gain = nbhd[e] & ~dominated;
        if (!gain) continue;
        int val = 1 + brute_edge_value(g, dominated | gain, other(mover));
        best = mover == Player::Dominator ? std::min(best, val) : std::max(best, val);
    }
    return best;
}

}  // namespace

TEST_CASE("edge game values on small graphs") {
    CHECK(edge_game_value(cycle_graph(5), Player::Dominator) == 3);
    CHECK(edge_game_value(star_graph(3), Player::Dominator) == 1);
    CHECK(edge_game_value(path_graph(4), Player::Dominator) == 1);
    CHECK(edge_game_value(path_graph(4), Player::Staller) == 2);
    CHECK(edge_game_value(Graph(3), Player::Dominator) == 0);
}

TEST_CASE("edge solver matches the brute-force oracle") {
    for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(4), complete_graph(4),
                           prism_graph(), complete_bipartite(2, 3)}) {
        for (Player start : {Player::Dominator, Player::Staller})
            CHECK(edge_game_value(g, start) == brute_edge_value(g, 0, start));
    }
}

TEST_CASE("edge game equals the vertex game on the line graph") {
    CHECK(edge_game_value_via_line_graph(star_graph(3), Player::Dominator) == 1);
    CHECK(edge_game_value_via_line_graph(cycle_graph(9), Player::Dominator) == 5);
    for (const Graph& g : {path_graph(6), cycle_graph(7), complete_graph(4), star_graph(5),
                           prism_graph(), petersen_graph()}) {
        for (Player start : {Player::Dominator, Player::Staller})
            CHECK(edge_game_value(g, start) == edge_game_value_via_line_graph(g, start));
    }
}

TEST_CASE("edge colors and the blue endpoint invariant along random games") {
    Graph g = prism_graph();
    EdgeResidualState s{&g, {}, Player::Dominator};
    auto fresh = edge_colors(s);
    CHECK(fresh.white.count() == g.edge_count());
    CHECK(white_vertices(s).count() == g.vertex_count());

    // play every game of greedy-ish first moves, checking the invariant
    for (int first = 0; first < g.edge_count(); ++first) {
        EdgeResidualState state{&g, {}, Player::Dominator};
        state = apply_edge_move(state, first);
        check_blue_edge_endpoints(state);
        while (!legal_edge_moves(state).empty()) {
            state = apply_edge_move(state, legal_edge_moves(state).lowest());
            check_blue_edge_endpoints(state);
        }
        CHECK(edge_colors(state).white.empty());
    }
}

TEST_CASE("augment_with_handle builds the handle and the closing circuit") {
    Graph p4 = path_graph(4);
    auto trail = find_edge_dominating_trail(p4);
    REQUIRE(trail.status == SearchStatus::Found);
    AugmentedGraph aug = augment_with_handle(p4, *trail.trail);
    CHECK(aug.f.vertex_count() == 6);
    CHECK(aug.f.edge_count() == 6);
    CHECK(aug.initial_dominated.count() == 3);
    CHECK(aug.circuit.closed);
    CHECK(is_vertex_cover(aug.f, aug.circuit.vertices));

    // a single edge: the augmentation is the 4-cycle
    Graph k2 = complete_graph(2);
    Trail t{{0, 1}, {0}, false, true};
    AugmentedGraph small = augment_with_handle(k2, t);
    CHECK(small.f.vertex_count() == 4);
    CHECK(small.f.edge_count() == 4);
    CHECK(small.f == Graph(4, {{0, 2}, {2, 3}, {1, 3}, {0, 1}}));

    // closed trail or equal endpoints are precondition failures
    auto circuit = find_edge_dominating_circuit(cycle_graph(5));
    REQUIRE(circuit.status == SearchStatus::Found);
    CHECK_THROWS_AS(augment_with_handle(cycle_graph(5), *circuit.trail), std::invalid_argument);
    Trail not_dominating{{0, 1}, {0}, false, false};
    CHECK_THROWS_AS(augment_with_handle(path_graph(5), not_dominating), std::invalid_argument);
}

TEST_CASE("imagination lockstep on the path") {
    Graph p4 = path_graph(4);
    auto trail = find_edge_dominating_trail(p4);
    REQUIRE(trail.status == SearchStatus::Found);
    auto report = imagination_lockstep(p4, *trail.trail);
    CHECK(report.invariant_held);
    CHECK(report.inequalities_held);
    CHECK(report.moves_played == 1);
    CHECK(report.real_value == 1);
}

TEST_CASE("imagination lockstep on longer paths") {
    for (int n : {5, 6, 7, 8}) {
        Graph p = path_graph(n);
        auto trail = find_edge_dominating_trail(p);
        REQUIRE(trail.status == SearchStatus::Found);
        auto report = imagination_lockstep(p, *trail.trail);
        CHECK(report.invariant_held);
        CHECK(report.inequalities_held);
        CHECK(report.imagined_value <= (p.edge_count() + 1) / 2);
    }
}

TEST_CASE("lockstep along full Eulerian trails") {
    // graphs with an open Eulerian trail that covers every vertex
    for (const Graph& g : {path_graph(6), complete_bipartite(2, 3)}) {
        // build the Eulerian trail subset = all edges, when it qualifies
        auto trail = find_edge_dominating_trail(g);
        if (trail.status != SearchStatus::Found || trail.trail->closed) continue;
        auto report = imagination_lockstep(g, *trail.trail);
        CHECK(report.invariant_held);
        CHECK(report.inequalities_held);
    }
}

TEST_SUITE_END();
