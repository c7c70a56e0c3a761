#pragma once

#include <memory>

#include "domgame/graph.hpp"
#include "domgame/solver.hpp"

namespace domgame {

/// A position of the vertex domination game: the set N[D] of dominated
/// vertices plus whose turn it is. Play histories with equal N[D] are
/// identified.
struct ResidualState {
    const Graph* graph;
    VertexSet dominated;
    Player mover;
};

struct VertexColors {
    VertexSet white;  // undominated
    VertexSet blue;   // dominated, with an undominated neighbor
    VertexSet red;    // closed neighborhood fully dominated
};

VertexColors vertex_colors(const ResidualState& s);

/// Vertices whose closed neighborhood still contains an undominated vertex.
VertexSet legal_moves(const ResidualState& s);

/// Throws std::invalid_argument on an illegal move.
ResidualState apply_move(const ResidualState& s, int v);

/// Solver bound to one graph; the transposition table is shared across
/// queries on the instance. Instances are single-threaded; use one per task.
class GameSolver {
public:
    explicit GameSolver(const Graph& g, SolverOptions opt = {});

    int value(VertexSet dominated, Player mover) { return core_.value(dominated.bits, mover); }
    int value(const ResidualState& s) { return core_.value(s.dominated.bits, s.mover); }

    /// Smallest-index move attaining the mover's optimum.
    int optimal_move(const ResidualState& s);

private:
    const Graph* graph_;
    DominationSolver core_;
};

/// Exact length of the game started by `start` on g with `predominated`
/// already counted as dominated (the game on the predominated graph).
int game_value(const Graph& g, Player start, VertexSet predominated = {},
               SolverOptions opt = {});

int optimal_move(const ResidualState& s);

}  // namespace domgame
