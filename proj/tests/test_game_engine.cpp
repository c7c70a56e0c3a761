#include "doctest.h"

#include "domgame/builders.hpp"
#include "domgame/game.hpp"
#include "domgame/generate.hpp"

using namespace domgame;

TEST_SUITE_BEGIN("game_engine");

namespace {

// Independent oracle: plain game-tree recursion, no memoization, no pruning.
int brute_value(const Graph& g, std::uint64_t dominated, Player mover) {
    if (dominated == g.vertex_mask()) return 0;
    int best = mover == Player::Dominator ? 1 << 20 : 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t gain = g.closed_neighbors(v) & ~dominated;
        if (!gain) continue;
        int val = 1 + brute_value(g, dominated | gain, other(mover));
        best = mover == Player::Dominator ? std::min(best, val) : std::max(best, val);
    }
    return best;
}

int cycle_formula(int n) { return n % 4 == 1 ? (n + 1) / 2 : n / 2; }

}  // namespace

TEST_CASE("vertex colors partition the vertex set") {
    Graph p3 = path_graph(3);

    ResidualState done{&p3, {0b111}, Player::Staller};
    auto c1 = vertex_colors(done);
    CHECK(c1.white.empty());
    CHECK(c1.blue.empty());
    CHECK(c1.red.bits == 0b111);

    // D = {0}: dominated = {0,1}
    ResidualState mid{&p3, {0b011}, Player::Staller};
    auto c2 = vertex_colors(mid);
    CHECK(c2.white.bits == 0b100);
    CHECK(c2.blue.bits == 0b010);
    CHECK(c2.red.bits == 0b001);

    Graph c4 = cycle_graph(4);
    ResidualState fresh{&c4, {}, Player::Dominator};
    auto c3 = vertex_colors(fresh);
    CHECK(c3.white.bits == c4.vertex_mask());
    CHECK(c3.blue.empty());
    CHECK(c3.red.empty());
}

TEST_CASE("legal moves") {
    Graph p3 = path_graph(3);
    CHECK(legal_moves({&p3, {0b011}, Player::Staller}).bits == 0b110);
    CHECK(legal_moves({&p3, {0b111}, Player::Staller}).empty());
    Graph c5 = cycle_graph(5);
    CHECK(legal_moves({&c5, {}, Player::Dominator}).bits == c5.vertex_mask());
}

TEST_CASE("apply_move") {
    Graph c5 = cycle_graph(5);
    ResidualState s = apply_move({&c5, {}, Player::Dominator}, 0);
    CHECK(s.dominated.bits == 0b10011);  // {4,0,1}
    CHECK(s.mover == Player::Staller);

    Graph p3 = path_graph(3);
    ResidualState t = apply_move({&p3, {0b011}, Player::Staller}, 2);
    CHECK(t.dominated.bits == p3.vertex_mask());
    CHECK_THROWS_AS(apply_move({&p3, {0b011}, Player::Staller}, 0), std::invalid_argument);
}

TEST_CASE("game values on small named graphs") {
    CHECK(game_value(complete_graph(4), Player::Dominator) == 1);
    CHECK(game_value(cycle_graph(9), Player::Dominator) == 5);
    CHECK(game_value(cycle_graph(5), Player::Dominator) == 3);
    CHECK(game_value(cycle_graph(5), Player::Staller) == 2);
    CHECK(game_value(path_graph(3), Player::Dominator) == 1);
}

TEST_CASE("solver agrees with the brute-force oracle exhaustively below 7 vertices") {
    SolverOptions pruned;
    pruned.continuation_pruning = true;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : generate_all_graphs(n)) {
            for (Player start : {Player::Dominator, Player::Staller}) {
                int expect = brute_value(g, 0, start);
                CHECK(game_value(g, start) == expect);
                CHECK(game_value(g, start, {}, pruned) == expect);
            }
        }
    }
}

TEST_CASE("predomination monotonicity, exhaustive singletons below 7 vertices") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : generate_all_graphs(n)) {
            GameSolver solver(g);
            int base = solver.value({}, Player::Dominator);
            for (int v = 0; v < n; ++v) CHECK(solver.value(VertexSet::single(v), Player::Dominator) <= base);
        }
    }
}

TEST_CASE("solver agrees with the brute-force oracle on a battery") {
    SolverOptions pruned;
    pruned.continuation_pruning = true;
    for (const Graph& g : {path_graph(5), path_graph(6), cycle_graph(6), cycle_graph(7),
                           petersen_graph(), prism_graph(), complete_bipartite(2, 3), star_graph(5),
                           disjoint_union(cycle_graph(3), path_graph(3))}) {
        for (Player start : {Player::Dominator, Player::Staller}) {
            int expect = brute_value(g, 0, start);
            CHECK(game_value(g, start) == expect);
            CHECK(game_value(g, start, {}, pruned) == expect);
        }
    }
}

TEST_CASE("predominated games and monotonicity") {
    Graph c6 = cycle_graph(6);
    CHECK(game_value(c6, Player::Dominator, {c6.vertex_mask()}) == 0);
    for (const Graph& g : {cycle_graph(6), path_graph(6), petersen_graph()}) {
        int base = game_value(g, Player::Dominator);
        for (int v = 0; v < g.vertex_count(); ++v) {
            int restricted = game_value(g, Player::Dominator, VertexSet::single(v));
            CHECK(restricted <= base);
            CHECK(brute_value(g, std::uint64_t{1} << v, Player::Dominator) == restricted);
        }
    }
}

TEST_CASE("D-game and S-game differ by at most one") {
    for (const Graph& g : {path_graph(7), cycle_graph(8), petersen_graph(), star_graph(4),
                           prism_graph(), complete_bipartite(3, 3)}) {
        int d = game_value(g, Player::Dominator);
        int s = game_value(g, Player::Staller);
        CHECK(std::abs(d - s) <= 1);
    }
}

TEST_CASE("optimal_move picks the smallest optimal index") {
    Graph k4 = complete_graph(4);
    CHECK(optimal_move({&k4, {}, Player::Dominator}) == 0);

    Graph p3 = path_graph(3);
    CHECK(optimal_move({&p3, {}, Player::Dominator}) == 1);

    // Staller starting on C_5: the S-game value is 2, so her optimal move
    // leaves a continuation worth 1; smallest such index wins the tie.
    Graph c5 = cycle_graph(5);
    GameSolver solver(c5);
    int mv = solver.optimal_move({&c5, {}, Player::Staller});
    ResidualState after = apply_move({&c5, {}, Player::Staller}, mv);
    CHECK(1 + solver.value(after) == solver.value({&c5, {}, Player::Staller}));
    CHECK(mv == 0);
}

TEST_CASE("continuation pruning is value-preserving across all 7-vertex graphs") {
    SolverOptions pruned;
    pruned.continuation_pruning = true;
    for (const Graph& g : generate_all_graphs(7)) {
        CHECK(game_value(g, Player::Dominator) == game_value(g, Player::Dominator, {}, pruned));
    }
}

TEST_CASE("replaying optimal moves realizes the game value") {
    for (const Graph& g : {cycle_graph(9), petersen_graph(), prism_graph(),
                           equality_instance_n24()}) {
        GameSolver solver(g);
        for (Player start : {Player::Dominator, Player::Staller}) {
            int value = solver.value({}, start);
            ResidualState s{&g, {}, start};
            int played = 0;
            while (!legal_moves(s).empty()) {
                s = apply_move(s, solver.optimal_move(s));
                ++played;
            }
            CHECK(played == value);
        }
    }
}

TEST_CASE("optimal_move refuses a finished game") {
    Graph k1 = complete_graph(1);
    GameSolver solver(k1);
    CHECK_THROWS_AS(solver.optimal_move({&k1, {1}, Player::Dominator}), std::logic_error);
}

TEST_CASE("cycle formula regression, n = 3..20") {
    for (int n = 3; n <= 20; ++n) CHECK(game_value(cycle_graph(n), Player::Dominator) == cycle_formula(n));
}

TEST_CASE("bundled equality instances have value ceil(n/2)") {
    for (const Graph& g : equality_instances_n9()) CHECK(game_value(g, Player::Dominator) == 5);
    CHECK(game_value(equality_instance_n24(), Player::Dominator) == 12);
    CHECK(game_value(equality_instance_n30(), Player::Dominator) == 15);
}

TEST_SUITE_END();
