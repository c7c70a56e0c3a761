#pragma once

#include <vector>

#include "domgame/graph.hpp"
#include "domgame/recognizers.hpp"
#include "domgame/solver.hpp"

namespace domgame {

/// A position of the edge domination game: the set N[D] of dominated edges
/// plus whose turn it is.
struct EdgeResidualState {
    const Graph* graph;
    EdgeSet dominated;
    Player mover;
};

struct EdgeColors {
    EdgeSet white;  // undominated
    EdgeSet blue;   // dominated, adjacent to an undominated edge
    EdgeSet red;    // closed edge neighborhood dominated
};

EdgeColors edge_colors(const EdgeResidualState& s);

/// Vertex coloring induced by the edge residual graph: a vertex is white
/// when incident to at least one white edge, red otherwise.
VertexSet white_vertices(const EdgeResidualState& s);

EdgeSet legal_edge_moves(const EdgeResidualState& s);

EdgeResidualState apply_edge_move(const EdgeResidualState& s, int e);

/// Every blue edge joins one white and one red vertex. Throws
/// std::logic_error with the offending edge if violated.
void check_blue_edge_endpoints(const EdgeResidualState& s);

class EdgeGameSolver {
public:
    explicit EdgeGameSolver(const Graph& g, SolverOptions opt = {});

    int value(EdgeSet dominated, Player mover) { return core_.value(dominated.bits, mover); }
    int value(const EdgeResidualState& s) { return core_.value(s.dominated.bits, s.mover); }
    int optimal_move(const EdgeResidualState& s);

private:
    const Graph* graph_;
    DominationSolver core_;
};

int edge_game_value(const Graph& g, Player start, EdgeSet predominated = {},
                    SolverOptions opt = {});

/// Observation-style cross check: the same number computed as the vertex
/// game value on the line graph. Throws on an edgeless input.
int edge_game_value_via_line_graph(const Graph& g, Player start);

/// G plus two new vertices and a three-edge handle closing an open edge
/// dominating trail into an edge dominating circuit. F is an ordinary
/// lexicographically indexed Graph; `edge_map` embeds E(G) into E(F).
struct AugmentedGraph {
    Graph f;
    std::vector<int> edge_map;       // G edge index -> F edge index
    int handle_start;                // F edge index of v1-v1'
    int handle_middle;               // F edge index of v1'-vl' (the predominated edge)
    int handle_end;                  // F edge index of vl-vl'
    EdgeSet initial_dominated;       // N[{v1'vl'}] in F
    Trail circuit;                   // the closing circuit v1..vl vl' v1' v1
};

/// Requires an open dominating trail with distinct endpoints; verifies the
/// closed trail is an edge dominating circuit of F before returning.
AugmentedGraph augment_with_handle(const Graph& g, const Trail& t);

struct LockstepReport {
    int moves_played = 0;
    int real_value = 0;       // D-game edge value of G
    int imagined_value = 0;   // D-game edge value of the augmented residual start
    bool invariant_held = true;       // undominated sets matched after every move
    bool inequalities_held = true;    // real_value <= moves_played <= imagined_value
    int copy_fallbacks = 0;           // interpreted moves that could not be copied
    std::vector<int> real_moves;      // G edge indices in play order
    std::vector<int> imagined_moves;  // F edge indices in play order
};

/// Plays the real game on G (Staller exact) against the imagined game on
/// the augmented graph (Dominator exact, never taking a handle edge),
/// copying interpreted moves across and checking the undominated sets stay
/// equal after every move.
LockstepReport imagination_lockstep(const Graph& g, const Trail& t);

}  // namespace domgame
