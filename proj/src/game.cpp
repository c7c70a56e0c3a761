#include "domgame/game.hpp"

namespace domgame {

namespace {

std::vector<std::uint64_t> vertex_neighborhoods(const Graph& g) {
    std::vector<std::uint64_t> nbhd(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) nbhd[v] = g.closed_neighbors(v);
    return nbhd;
}

}  // namespace

VertexColors vertex_colors(const ResidualState& s) {
    const Graph& g = *s.graph;
    std::uint64_t white = g.vertex_mask() & ~s.dominated.bits;
    std::uint64_t blue = 0;
    for_each_bit(s.dominated.bits & g.vertex_mask(), [&](int v) {
        if (g.neighbors(v) & white) blue |= std::uint64_t{1} << v;
    });
    std::uint64_t red = g.vertex_mask() & ~white & ~blue;
    return {{white}, {blue}, {red}};
}

VertexSet legal_moves(const ResidualState& s) {
    const Graph& g = *s.graph;
    std::uint64_t white = g.vertex_mask() & ~s.dominated.bits;
    std::uint64_t legal = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.closed_neighbors(v) & white) legal |= std::uint64_t{1} << v;
    return {legal};
}

ResidualState apply_move(const ResidualState& s, int v) {
    const Graph& g = *s.graph;
    if (v < 0 || v >= g.vertex_count() || !legal_moves(s).test(v))
        throw std::invalid_argument("illegal move");
    return {s.graph, {s.dominated.bits | g.closed_neighbors(v)}, other(s.mover)};
}

GameSolver::GameSolver(const Graph& g, SolverOptions opt)
    : graph_(&g), core_(vertex_neighborhoods(g), g.vertex_mask(), opt) {}

int GameSolver::optimal_move(const ResidualState& s) {
    if (s.graph != graph_) throw std::invalid_argument("state belongs to a different graph");
    return core_.best_move(s.dominated.bits, s.mover);
}

int game_value(const Graph& g, Player start, VertexSet predominated, SolverOptions opt) {
    GameSolver solver(g, opt);
    return solver.value(predominated, start);
}

int optimal_move(const ResidualState& s) {
    GameSolver solver(*s.graph);
    return solver.optimal_move(s);
}

}  // namespace domgame
