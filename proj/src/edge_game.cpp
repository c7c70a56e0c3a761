#include "domgame/edge_game.hpp"

#include <algorithm>

#include "domgame/game.hpp"

namespace domgame {

namespace {

void validate_trail(const Graph& g, const Trail& t) {
    if (t.vertices.size() != t.edge_indices.size() + 1)
        throw std::invalid_argument("malformed trail");
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < t.edge_indices.size(); ++i) {
        int e = t.edge_indices[i];
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("trail edge out of range");
        auto [u, v] = g.edge(e);
        int a = t.vertices[i], b = t.vertices[i + 1];
        if (!((a == u && b == v) || (a == v && b == u)))
            throw std::invalid_argument("trail edge does not match its vertices");
        if ((used >> e) & 1) throw std::invalid_argument("trail repeats an edge");
        used |= std::uint64_t{1} << e;
    }
}

}  // namespace

EdgeColors edge_colors(const EdgeResidualState& s) {
    const Graph& g = *s.graph;
    auto nbhd = edge_neighborhoods(g);
    std::uint64_t all = Bitset64::full(g.edge_count()).bits;
    std::uint64_t white = all & ~s.dominated.bits;
    std::uint64_t blue = 0;
    for_each_bit(s.dominated.bits & all, [&](int e) {
        if (nbhd[e] & white) blue |= std::uint64_t{1} << e;
    });
    return {{white}, {blue}, {all & ~white & ~blue}};
}

VertexSet white_vertices(const EdgeResidualState& s) {
    const Graph& g = *s.graph;
    std::uint64_t all = Bitset64::full(g.edge_count()).bits;
    std::uint64_t whites = 0;
    for_each_bit(all & ~s.dominated.bits, [&](int e) {
        auto [u, v] = g.edge(e);
        whites |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    });
    return {whites};
}

EdgeSet legal_edge_moves(const EdgeResidualState& s) {
    const Graph& g = *s.graph;
    auto nbhd = edge_neighborhoods(g);
    std::uint64_t all = Bitset64::full(g.edge_count()).bits;
    std::uint64_t white = all & ~s.dominated.bits;
    std::uint64_t legal = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (nbhd[e] & white) legal |= std::uint64_t{1} << e;
    return {legal};
}

EdgeResidualState apply_edge_move(const EdgeResidualState& s, int e) {
    const Graph& g = *s.graph;
    if (e < 0 || e >= g.edge_count() || !legal_edge_moves(s).test(e))
        throw std::invalid_argument("illegal edge move");
    auto nbhd = edge_neighborhoods(g);
    return {s.graph, {s.dominated.bits | nbhd[e]}, other(s.mover)};
}

void check_blue_edge_endpoints(const EdgeResidualState& s) {
    auto colors = edge_colors(s);
    std::uint64_t white_v = white_vertices(s).bits;
    for_each_bit(colors.blue.bits, [&](int e) {
        auto [u, v] = s.graph->edge(e);
        int whites = static_cast<int>((white_v >> u) & 1) + static_cast<int>((white_v >> v) & 1);
        if (whites != 1)
            throw std::logic_error("blue edge " + std::to_string(e) +
                                   " does not join one white and one red vertex");
    });
}

EdgeGameSolver::EdgeGameSolver(const Graph& g, SolverOptions opt)
    : graph_(&g), core_(edge_neighborhoods(g), Bitset64::full(g.edge_count()).bits, opt) {}

int EdgeGameSolver::optimal_move(const EdgeResidualState& s) {
    if (s.graph != graph_) throw std::invalid_argument("state belongs to a different graph");
    return core_.best_move(s.dominated.bits, s.mover);
}

int edge_game_value(const Graph& g, Player start, EdgeSet predominated, SolverOptions opt) {
    if (g.edge_count() == 0) return 0;
    EdgeGameSolver solver(g, opt);
    return solver.value(predominated, start);
}

int edge_game_value_via_line_graph(const Graph& g, Player start) {
    return game_value(line_graph(g), start);
}

AugmentedGraph augment_with_handle(const Graph& g, const Trail& t) {
    validate_trail(g, t);
    if (t.length() == 0) throw std::invalid_argument("empty trail");
    if (t.closed || t.vertices.front() == t.vertices.back())
        throw std::invalid_argument("augmentation needs an open trail with distinct endpoints");
    if (!is_vertex_cover(g, t.vertices)) throw std::invalid_argument("trail is not dominating");

    int n = g.vertex_count();
    if (n + 2 > Graph::kMaxVertices) throw std::invalid_argument("augmented graph exceeds the vertex cap");
    int v1 = t.vertices.front(), vl = t.vertices.back();
    int v1p = n, vlp = n + 1;

    auto edges = g.edges();
    edges.emplace_back(v1, v1p);
    edges.emplace_back(v1p, vlp);
    edges.emplace_back(vl, vlp);
    AugmentedGraph aug{Graph(n + 2, std::move(edges)), {}, 0, 0, 0, {}, {}};

    aug.edge_map.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) aug.edge_map.push_back(aug.f.edge_index(u, v));
    aug.handle_start = aug.f.edge_index(v1, v1p);
    aug.handle_middle = aug.f.edge_index(v1p, vlp);
    aug.handle_end = aug.f.edge_index(vl, vlp);
    aug.initial_dominated = {edge_neighborhoods(aug.f)[aug.handle_middle]};

    aug.circuit.vertices = t.vertices;
    aug.circuit.vertices.push_back(vlp);
    aug.circuit.vertices.push_back(v1p);
    aug.circuit.vertices.push_back(v1);
    for (int e : t.edge_indices) aug.circuit.edge_indices.push_back(aug.edge_map[e]);
    aug.circuit.edge_indices.push_back(aug.handle_end);
    aug.circuit.edge_indices.push_back(aug.handle_middle);
    aug.circuit.edge_indices.push_back(aug.handle_start);
    aug.circuit.closed = true;
    validate_trail(aug.f, aug.circuit);
    if (!is_vertex_cover(aug.f, aug.circuit.vertices))
        throw std::logic_error("closing circuit fails to dominate the augmented graph");
    aug.circuit.dominating = true;
    return aug;
}

LockstepReport imagination_lockstep(const Graph& g, const Trail& t) {
    AugmentedGraph aug = augment_with_handle(g, t);
    const Graph& f = aug.f;

    std::vector<int> f_to_g(f.edge_count(), -1);
    for (int i = 0; i < g.edge_count(); ++i) f_to_g[aug.edge_map[i]] = i;

    EdgeGameSolver real_solver(g), imag_solver(f);
    EdgeResidualState real{&g, {}, Player::Dominator};
    EdgeResidualState imag{&f, aug.initial_dominated, Player::Dominator};

    LockstepReport report;
    report.real_value = real_solver.value(real);
    report.imagined_value = imag_solver.value(imag);

    auto undominated_match = [&]() {
        std::uint64_t u1 = Bitset64::full(g.edge_count()).bits & ~real.dominated.bits;
        std::uint64_t u2 = 0;
        for (int i = 0; i < g.edge_count(); ++i)
            if (!imag.dominated.test(aug.edge_map[i])) u2 |= std::uint64_t{1} << i;
        return u1 == u2;
    };

    auto is_handle = [&](int e) {
        return e == aug.handle_start || e == aug.handle_middle || e == aug.handle_end;
    };

    while (!(Bitset64::full(g.edge_count()) - real.dominated).empty()) {
        if (real.mover == Player::Dominator) {
            // Optimal in the imagined game, never along the handle.
            int target = imag_solver.value(imag) - 1;
            int chosen = -1;
            for_each_bit(legal_edge_moves(imag).bits, [&](int e) {
                if (chosen >= 0 || is_handle(e)) return;
                if (imag_solver.value(apply_edge_move(imag, e)) == target) chosen = e;
            });
            if (chosen < 0) {  // a handle move is never strictly needed
                report.invariant_held = false;
                break;
            }
            imag = apply_edge_move(imag, chosen);
            report.imagined_moves.push_back(chosen);
            int g_edge = f_to_g[chosen];
            if (!legal_edge_moves(real).test(g_edge)) {
                ++report.copy_fallbacks;
                g_edge = legal_edge_moves(real).lowest();
            }
            real = apply_edge_move(real, g_edge);
            report.real_moves.push_back(g_edge);
        } else {
            // Staller exact in the real game.
            int chosen = real_solver.optimal_move(real);
            real = apply_edge_move(real, chosen);
            report.real_moves.push_back(chosen);
            int f_edge = aug.edge_map[chosen];
            if (!legal_edge_moves(imag).test(f_edge)) {
                ++report.copy_fallbacks;
                f_edge = legal_edge_moves(imag).lowest();
            }
            imag = apply_edge_move(imag, f_edge);
            report.imagined_moves.push_back(f_edge);
        }
        ++report.moves_played;
        if (!undominated_match()) {
            report.invariant_held = false;
            break;
        }
    }

    report.inequalities_held = report.invariant_held && report.real_value <= report.moves_played &&
                               report.moves_played <= report.imagined_value;
    return report;
}

}  // namespace domgame
