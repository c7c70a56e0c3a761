#include "domgame/strategies.hpp"

#include <algorithm>
#include <random>

#include "domgame/graph6.hpp"
#include "json.hpp"

namespace domgame {

namespace {

// ---- shared structure helpers -------------------------------------------

std::vector<std::vector<int>> white_components(const Graph& g, std::uint64_t white) {
    std::vector<std::vector<int>> comps;
    std::uint64_t left = white;
    while (left) {
        int seed = std::countr_zero(left);
        std::uint64_t comp = std::uint64_t{1} << seed;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v) & white; });
            frontier = next & ~comp;
            comp |= next;
        }
        std::vector<int> vs;
        for_each_bit(comp, [&](int v) { vs.push_back(v); });
        comps.push_back(std::move(vs));
        left &= ~comp;
    }
    return comps;  // ordered by smallest vertex; each sorted
}

int white_degree(const Graph& g, std::uint64_t white, int v) {
    return std::popcount(g.neighbors(v) & white);
}

bool comp_is_cycle(const Graph& g, std::uint64_t white, const std::vector<int>& comp) {
    if (comp.size() < 3) return false;
    for (int v : comp)
        if (white_degree(g, white, v) != 2) return false;
    return true;
}

/// Vertices of a path component in path order, starting at the smaller end.
std::vector<int> path_order(const Graph& g, std::uint64_t white, const std::vector<int>& comp) {
    if (comp.size() == 1) return comp;
    int start = -1;
    for (int v : comp)
        if (white_degree(g, white, v) == 1) {
            start = v;
            break;
        }
    std::vector<int> order{start};
    std::uint64_t seen = std::uint64_t{1} << start;
    int cur = start;
    while (order.size() < comp.size()) {
        std::uint64_t next = g.neighbors(cur) & white & ~seen;
        cur = std::countr_zero(next);
        seen |= std::uint64_t{1} << cur;
        order.push_back(cur);
    }
    return order;
}

bool is_triangle_edge(const Graph& g, int u, int v) { return (g.neighbors(u) & g.neighbors(v)) != 0; }

/// Labels a white cycle component v_1..v_j so that v_1 is the smallest
/// vertex and v_1v_2 is a triangle edge; flat and triangle edges alternate.
std::vector<int> cycle_order(const Graph& g, std::uint64_t white, const std::vector<int>& comp) {
    int v1 = comp.front();
    std::uint64_t nb = g.neighbors(v1) & white;
    int a = std::countr_zero(nb);
    int b = std::countr_zero(nb & (nb - 1));
    bool ta = is_triangle_edge(g, v1, a), tb = is_triangle_edge(g, v1, b);
    if (ta == tb) throw std::logic_error("white cycle edges do not alternate flat/triangle");
    int v2 = ta ? a : b;
    std::vector<int> order{v1, v2};
    std::uint64_t seen = (std::uint64_t{1} << v1) | (std::uint64_t{1} << v2);
    while (order.size() < comp.size()) {
        std::uint64_t next = g.neighbors(order.back()) & white & ~seen;
        int cur = std::countr_zero(next);
        seen |= std::uint64_t{1} << cur;
        order.push_back(cur);
    }
    return order;
}

/// Diamond with white true-twin centers u,v: the four sorted vertices.
std::optional<std::array<int, 4>> k_subgraph_centers(const Graph& g, int u, int v) {
    if (g.closed_neighbors(u) != g.closed_neighbors(v)) return std::nullopt;
    std::uint64_t rest = g.neighbors(u) & ~(std::uint64_t{1} << v);
    int x = std::countr_zero(rest);
    int y = std::countr_zero(rest & (rest - 1));
    std::array<int, 4> d{u, v, x, y};
    std::sort(d.begin(), d.end());
    return d;
}

/// White vertices inside a strict-decrease structure: a P_1 component, a
/// cycle component of length >= 4, or the centers of a K-subgraph.
std::uint64_t strict_structure_whites(const Graph& g, std::uint64_t white) {
    std::uint64_t out = 0;
    for (const auto& comp : white_components(g, white)) {
        if (comp.size() == 1) {
            out |= std::uint64_t{1} << comp[0];
        } else if (comp.size() == 2 && k_subgraph_centers(g, comp[0], comp[1])) {
            out |= (std::uint64_t{1} << comp[0]) | (std::uint64_t{1} << comp[1]);
        } else if (comp.size() >= 4 && comp_is_cycle(g, white, comp)) {
            for (int v : comp) out |= std::uint64_t{1} << v;
        }
    }
    return out;
}

bool host_is_cycle(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

/// The edge game never sees isolated vertices: its cycle case is "the edge
/// set forms a single cycle", regardless of isolates.
bool edge_structure_is_cycle(const Graph& g) {
    int m = g.edge_count();
    if (m < 3) return false;
    std::uint64_t support = 0;
    for (auto [u, v] : g.edges()) support |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if (std::popcount(support) != m) return false;
    bool ok = true;
    for_each_bit(support, [&](int v) {
        if (g.degree(v) != 2) ok = false;
    });
    if (!ok) return false;
    std::uint64_t seen = std::uint64_t{1} << std::countr_zero(support);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & support & ~seen;
        seen |= frontier;
    }
    return seen == support;
}

namespace {

int floor_div(int a, int b) { return a / b; }
int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::string profile_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::CubicClawFree: return "cubic-claw-free";
        case ProfileKind::EdgeCircuit: return "edge-circuit";
        case ProfileKind::ClawFreeMinDeg2: return "claw-free-mindeg2";
    }
    return "?";
}

std::string staller_name(StallerModel m) {
    switch (m) {
        case StallerModel::ExactAdversary: return "exact";
        case StallerModel::GreedyMinGain: return "greedy";
        case StallerModel::SeededRandom: return "random";
    }
    return "?";
}

// ---- cubic claw-free -----------------------------------------------------

int cubic_potential(const ResidualState& s) {
    auto c = vertex_colors(s);
    return 3 * c.white.count() + c.blue.count();
}

int cubic_move_gain(const ResidualState& s, int v) {
    return cubic_potential(s) - cubic_potential(apply_move(s, v));
}

CubicCaseClass classify_cubic_case(const ResidualState& s) {
    const Graph& g = *s.graph;
    if (!is_cubic(g) || !is_claw_free(g))
        throw std::invalid_argument("cubic case analysis needs a claw-free cubic host");
    std::uint64_t white = g.vertex_mask() & ~s.dominated.bits;
    if (!white) return {CubicCaseClass::Done, {}};

    // (C1) a white vertex with three white neighbors
    int c1 = -1;
    for_each_bit(white, [&](int v) {
        if (c1 < 0 && white_degree(g, white, v) == 3) c1 = v;
    });
    if (c1 >= 0) return {CubicCaseClass::C1, {c1}};

    // (C2) an all-white triangle, least by sorted vertex tuple
    {
        std::vector<int> best_triangle;
        for (auto [u, v] : g.edges()) {
            if (!((white >> u) & 1) || !((white >> v) & 1)) continue;
            for_each_bit(g.neighbors(u) & g.neighbors(v) & white, [&](int x) {
                if (x <= v) return;
                std::vector<int> tri{u, v, x};
                if (best_triangle.empty() || tri < best_triangle) best_triangle = tri;
            });
        }
        if (!best_triangle.empty()) return {CubicCaseClass::C2, best_triangle};
    }

    auto comps = white_components(g, white);

    // (C3) a white path on at least three vertices
    for (const auto& comp : comps)
        if (comp.size() >= 3 && !comp_is_cycle(g, white, comp))
            return {CubicCaseClass::C3, path_order(g, white, comp)};

    // (C4) a white P_2 outside any K-subgraph
    for (const auto& comp : comps)
        if (comp.size() == 2 && !k_subgraph_centers(g, comp[0], comp[1]))
            return {CubicCaseClass::C4, comp};

    // (C5) a K-subgraph
    for (const auto& comp : comps)
        if (comp.size() == 2)
            if (auto d = k_subgraph_centers(g, comp[0], comp[1]))
                return {CubicCaseClass::C5, {d->begin(), d->end()}};

    // (C6) a white cycle (length >= 4: triangles were caught by C2)
    for (const auto& comp : comps)
        if (comp_is_cycle(g, white, comp))
            return {CubicCaseClass::C6, cycle_order(g, white, comp)};

    // (C7) a white P_1
    for (const auto& comp : comps)
        if (comp.size() == 1) return {CubicCaseClass::C7, comp};

    throw std::logic_error("residual state escaped the case analysis");
}

CubicPolicy::CubicPolicy(const Graph& g) : g_(&g) {
    if (!is_cubic(g) || !is_claw_free(g))
        throw std::invalid_argument("cubic policy needs a claw-free cubic host");
}

int CubicPolicy::choose(const ResidualState& s) {
    if (!block_cycle_.empty()) {
        std::vector<int> cycle = std::move(block_cycle_);
        block_cycle_.clear();
        int j = static_cast<int>(cycle.size());
        // The prescribed rejoinder when Staller took the blue cycle vertex
        // v_1; any other reply closed the block, so re-classify.
        if (j >= 6 && last_opponent_ == cycle[0]) {
            int rejoinder = cycle[j - 3];  // v_{j-2}
            if (legal_moves(s).test(rejoinder)) {
                note_ = "C6-rejoinder";
                return rejoinder;
            }
        }
    }
    CubicCaseClass cls = classify_cubic_case(s);
    switch (cls.id) {
        case CubicCaseClass::C1:
            note_ = "C1";
            return cls.witness[0];
        case CubicCaseClass::C2:
            note_ = "C2";
            return *std::min_element(cls.witness.begin(), cls.witness.end());
        case CubicCaseClass::C3:
            note_ = "C3";
            return cls.witness[1];  // second vertex from the end
        case CubicCaseClass::C4:
            note_ = "C4";
            return cls.witness[0];
        case CubicCaseClass::C5:
            note_ = "C5";
            return cls.witness[0];
        case CubicCaseClass::C6:
            note_ = "C6";
            if (cls.witness.size() >= 6) block_cycle_ = cls.witness;
            return cls.witness[1];  // v_2
        case CubicCaseClass::C7:
            note_ = "C7";
            return cls.witness[0];
        case CubicCaseClass::Done:
            break;
    }
    throw std::logic_error("no move in a finished game");
}

// ---- claw-free mindeg-2 ----------------------------------------------------

PhasedState initial_phased_state(const Graph& g, Player start) { return {&g, {}, start, {}, 1}; }

int max_white_degree(const Graph& g, VertexSet dominated) {
    std::uint64_t white = g.vertex_mask() & ~dominated.bits;
    int best = 0;
    for_each_bit(white, [&](int v) { best = std::max(best, white_degree(g, white, v)); });
    return best;
}

PhasedState apply_phased_move(const PhasedState& s, int v) {
    const Graph& g = *s.graph;
    int phase = s.phase;
    if (s.mover == Player::Dominator && phase == 1 && max_white_degree(g, s.dominated) <= 2)
        phase = 2;
    ResidualState after = apply_move(s.residual(), v);
    std::uint64_t newly = after.dominated.bits & ~s.dominated.bits;
    std::uint64_t white_after = g.vertex_mask() & ~after.dominated.bits;
    std::uint64_t newly_blue = 0;
    for_each_bit(newly, [&](int w) {
        if (g.neighbors(w) & white_after) newly_blue |= std::uint64_t{1} << w;
    });
    VertexSet tagged = s.tagged_plus;
    if (phase == 1) tagged.bits |= newly_blue;
    return {s.graph, after.dominated, after.mover, tagged, phase};
}

int clawfree2_potential(const PhasedState& s) {
    auto c = vertex_colors(s.residual());
    int bplus = (c.blue & s.tagged_plus).count();
    int bminus = (c.blue - s.tagged_plus).count();
    return 22 * c.white.count() + 10 * bplus + 9 * bminus;
}

int clawfree2_move_gain(const PhasedState& s, int v) {
    return clawfree2_potential(s) - clawfree2_potential(apply_phased_move(s, v));
}

ClawFree2Policy::ClawFree2Policy(const Graph& g) : g_(&g) {
    if (!is_claw_free(g) || min_degree(g) < 2)
        throw std::invalid_argument("policy needs a claw-free host with minimum degree 2");
    solver_ = std::make_unique<GameSolver>(g);
}

int ClawFree2Policy::choose(const PhasedState& s) {
    const Graph& g = *g_;
    auto colors = vertex_colors(s.residual());
    std::uint64_t white = colors.white.bits;
    std::uint64_t blue = colors.blue.bits;
    auto comps = white_components(g, white);

    if (!endgame_ && blue == 0 && !comps.empty()) {
        bool all_cycles = true;
        for (const auto& comp : comps)
            if (!comp_is_cycle(g, white, comp)) all_cycles = false;
        if (all_cycles) endgame_ = true;
    }
    if (endgame_) {
        note_ = "endgame";
        return solver_->optimal_move({g_, s.dominated, Player::Dominator});
    }

    // (D1) a white vertex with three or more white neighbors
    int d1 = -1;
    for_each_bit(white, [&](int v) {
        if (d1 < 0 && white_degree(g, white, v) >= 3) d1 = v;
    });
    if (d1 >= 0) {
        note_ = "D1";
        return d1;
    }
    // (D2) a white path on >= 3 vertices: take the second vertex from an end
    for (const auto& comp : comps)
        if (comp.size() >= 3 && !comp_is_cycle(g, white, comp)) {
            note_ = "D2";
            return path_order(g, white, comp)[1];
        }
    // (D3) a white P_2 with at least two blue neighbors
    for (const auto& comp : comps)
        if (comp.size() == 2) {
            std::uint64_t nb = (g.neighbors(comp[0]) | g.neighbors(comp[1])) & blue;
            if (std::popcount(nb) >= 2) {
                note_ = "D3";
                return comp[0];
            }
        }
    // (D4) a white cycle touching a blue vertex
    for (const auto& comp : comps)
        if (comp_is_cycle(g, white, comp))
            for (int v : comp)
                if (g.neighbors(v) & blue) {
                    note_ = "D4";
                    return v;
                }
    // (D5) a remaining non-cycle component (P_1, or P_2 with one blue neighbor)
    for (const auto& comp : comps)
        if (!comp_is_cycle(g, white, comp)) {
            note_ = "D5";
            return comp[0];
        }
    throw std::logic_error("claw-free case analysis found no component");
}

// ---- edge circuit ------------------------------------------------------------

int edge_circuit_potential(const EdgeResidualState& s, EdgeSet circuit) {
    auto c = edge_colors(s);
    return 2 * c.white.count() + (c.blue & circuit).count();
}

int edge_circuit_move_gain(const EdgeResidualState& s, EdgeSet circuit, int e) {
    return edge_circuit_potential(s, circuit) - edge_circuit_potential(apply_edge_move(s, e), circuit);
}

int edge_circuit_policy_move(const EdgeResidualState& s, EdgeSet circuit) {
    int best = -1, best_gain = -1;
    for_each_bit(legal_edge_moves(s).bits, [&](int e) {
        int gain = edge_circuit_move_gain(s, circuit, e);
        if (gain > best_gain) best_gain = gain, best = e;
    });
    if (best < 0) throw std::logic_error("no legal edge move");
    return best;
}

// ---- simulations ---------------------------------------------------------------

namespace {

int pick_random(std::uint64_t legal, std::mt19937_64& rng) {
    std::vector<int> options;
    for_each_bit(legal, [&](int v) { options.push_back(v); });
    return options[rng() % options.size()];
}

int clawfree2_bound(const Graph& g) {
    int n = g.vertex_count();
    if (is_connected(g) && !host_is_cycle(g)) return floor_div(11 * n, 20);
    return ceil_div(11 * n, 20);
}

int edge_circuit_bound(const Graph& g) {
    int m = g.edge_count();
    if (edge_structure_is_cycle(g) && m % 4 == 1) return ceil_div(m, 2);
    return floor_div(m, 2);
}

}  // namespace

bool AuditReport::all_passed() const {
    if (!bound_satisfied) return false;
    for (const auto& c : claims)
        if (!c.passed) return false;
    return true;
}

AuditReport simulate_cubic(const Graph& g, StallerModel staller, std::uint64_t seed) {
    CubicPolicy policy(g);
    GameSolver solver(g);
    std::mt19937_64 rng(seed);

    AuditReport report;
    report.profile = ProfileKind::CubicClawFree;
    report.graph6 = encode_graph6(g);
    report.staller = staller;
    report.seed = seed;

    ResidualState state{&g, {}, Player::Dominator};
    report.initial_potential = cubic_potential(state);
    while (!legal_moves(state).empty()) {
        int v = -1;
        std::string note;
        if (state.mover == Player::Dominator) {
            v = policy.choose(state);
            note = policy.last_note();
        } else {
            switch (staller) {
                case StallerModel::ExactAdversary:
                    v = solver.optimal_move(state);
                    break;
                case StallerModel::GreedyMinGain: {
                    int best = -1, best_gain = 1 << 20;
                    for_each_bit(legal_moves(state).bits, [&](int u) {
                        int gain = cubic_move_gain(state, u);
                        if (gain < best_gain) best_gain = gain, best = u;
                    });
                    v = best;
                    break;
                }
                case StallerModel::SeededRandom:
                    v = pick_random(legal_moves(state).bits, rng);
                    break;
            }
            policy.observe_opponent(v);
        }
        report.moves.push_back({state.mover, v, cubic_move_gain(state, v), note});
        state = apply_move(state, v);
    }
    report.length = static_cast<int>(report.moves.size());
    report.bound = g.vertex_count() / 2;  // cubic hosts have even order
    report.bound_satisfied = report.length <= report.bound;
    report.claims = audit_claims(report);
    return report;
}

AuditReport simulate_clawfree2(const Graph& g, StallerModel staller, std::uint64_t seed) {
    ClawFree2Policy policy(g);
    GameSolver solver(g);
    std::mt19937_64 rng(seed);

    AuditReport report;
    report.profile = ProfileKind::ClawFreeMinDeg2;
    report.graph6 = encode_graph6(g);
    report.staller = staller;
    report.seed = seed;

    PhasedState state = initial_phased_state(g);
    report.initial_potential = clawfree2_potential(state);
    while (!legal_moves(state.residual()).empty()) {
        int v = -1;
        std::string note;
        if (state.mover == Player::Dominator) {
            v = policy.choose(state);
            note = policy.last_note();
        } else {
            switch (staller) {
                case StallerModel::ExactAdversary:
                    v = solver.optimal_move(state.residual());
                    break;
                case StallerModel::GreedyMinGain: {
                    int best = -1, best_gain = 1 << 20;
                    for_each_bit(legal_moves(state.residual()).bits, [&](int u) {
                        int gain = clawfree2_move_gain(state, u);
                        if (gain < best_gain) best_gain = gain, best = u;
                    });
                    v = best;
                    break;
                }
                case StallerModel::SeededRandom:
                    v = pick_random(legal_moves(state.residual()).bits, rng);
                    break;
            }
        }
        report.moves.push_back({state.mover, v, clawfree2_move_gain(state, v), note});
        state = apply_phased_move(state, v);
    }
    report.length = static_cast<int>(report.moves.size());
    report.bound = clawfree2_bound(g);
    report.bound_satisfied = report.length <= report.bound;
    report.claims = audit_claims(report);
    return report;
}

AuditReport simulate_edge_circuit(const Graph& g, const Trail& circuit, StallerModel staller,
                                  std::uint64_t seed) {
    if (!circuit.closed) throw std::invalid_argument("edge circuit profile needs a closed trail");
    if (!is_vertex_cover(g, circuit.vertices))
        throw std::invalid_argument("fixed circuit is not dominating");
    EdgeSet cset{};
    for (int e : circuit.edge_indices) cset.set(e);

    EdgeGameSolver solver(g);
    std::mt19937_64 rng(seed);

    AuditReport report;
    report.profile = ProfileKind::EdgeCircuit;
    report.graph6 = encode_graph6(g);
    report.staller = staller;
    report.seed = seed;
    report.circuit_edges = circuit.edge_indices;

    EdgeResidualState state{&g, {}, Player::Dominator};
    report.initial_potential = edge_circuit_potential(state, cset);
    while (!legal_edge_moves(state).empty()) {
        int e = -1;
        if (state.mover == Player::Dominator) {
            e = edge_circuit_policy_move(state, cset);
        } else {
            switch (staller) {
                case StallerModel::ExactAdversary:
                    e = solver.optimal_move(state);
                    break;
                case StallerModel::GreedyMinGain: {
                    int best = -1, best_gain = 1 << 20;
                    for_each_bit(legal_edge_moves(state).bits, [&](int f) {
                        int gain = edge_circuit_move_gain(state, cset, f);
                        if (gain < best_gain) best_gain = gain, best = f;
                    });
                    e = best;
                    break;
                }
                case StallerModel::SeededRandom:
                    e = pick_random(legal_edge_moves(state).bits, rng);
                    break;
            }
        }
        report.moves.push_back({state.mover, e, edge_circuit_move_gain(state, cset, e), ""});
        state = apply_edge_move(state, e);
    }
    report.length = static_cast<int>(report.moves.size());
    report.bound = edge_circuit_bound(g);
    report.bound_satisfied = report.length <= report.bound;
    report.claims = audit_claims(report);
    return report;
}

// ---- audits ----------------------------------------------------------------------

namespace {

void add_check(std::vector<ClaimCheck>& out, const std::string& name, bool passed,
               const std::string& detail = "") {
    out.push_back({name, passed, passed ? "" : detail});
}

std::vector<ClaimCheck> audit_cubic(const AuditReport& report, const Graph& g) {
    std::vector<ClaimCheck> out;
    ResidualState state{&g, {}, Player::Dominator};
    bool trace_ok = true, min3 = true, struct5 = true;
    std::string detail;
    int total = 0;
    std::vector<int> gains;
    for (const auto& mv : report.moves) {
        if (state.mover != mv.player || !legal_moves(state).test(mv.item)) {
            trace_ok = false;
            break;
        }
        int s = cubic_move_gain(state, mv.item);
        if (s != mv.gain) trace_ok = false;
        if (mv.player == Player::Staller) {
            if (s < 3) {
                min3 = false;
                detail = "move " + std::to_string(mv.item) + " has s=" + std::to_string(s);
            }
            std::uint64_t white = g.vertex_mask() & ~state.dominated.bits;
            std::uint64_t structures = strict_structure_whites(g, white);
            if ((g.closed_neighbors(mv.item) & white & structures) && s < 5) struct5 = false;
        }
        gains.push_back(s);
        total += s;
        state = apply_move(state, mv.item);
    }
    add_check(out, "trace-replay", trace_ok, "trace does not replay");
    add_check(out, "staller-s3", min3, detail);
    add_check(out, "staller-structures-s5", struct5, "structure move below 5");
    bool finished = legal_moves(state).empty();
    add_check(out, "telescoping",
              trace_ok && finished && total == report.initial_potential && cubic_potential(state) == 0,
              "potential does not telescope to zero");

    bool q_ok = trace_ok;
    std::size_t i = 0;
    while (q_ok && i < gains.size()) {
        if (report.moves[i].player != Player::Dominator) {
            q_ok = false;
            break;
        }
        if (i + 1 == gains.size() && gains[i] >= 6) {
            i += 1;  // (Q1)
        } else if (i + 1 < gains.size() && gains[i] + gains[i + 1] >= 12) {
            i += 2;  // (Q2)
        } else if (i + 3 == gains.size() && gains[i] + gains[i + 1] + gains[i + 2] >= 18) {
            i += 3;  // (Q3)
        } else if (i + 3 < gains.size() &&
                   gains[i] + gains[i + 1] + gains[i + 2] + gains[i + 3] >= 24) {
            i += 4;  // (Q4)
        } else {
            q_ok = false;
        }
    }
    add_check(out, "property-Q", q_ok, "no block satisfies (Q1)-(Q4) at move " + std::to_string(i));
    return out;
}

std::vector<ClaimCheck> audit_edge_circuit(const AuditReport& report, const Graph& g) {
    std::vector<ClaimCheck> out;
    EdgeSet cset{};
    for (int e : report.circuit_edges) cset.set(e);
    bool cycle_host = edge_structure_is_cycle(g);
    auto nbhd = edge_neighborhoods(g);

    EdgeResidualState state{&g, {}, Player::Dominator};
    bool trace_ok = true, st2 = true, dom_ok = true, playable4 = true, recolor = true, blue_ok = true;
    int total = 0;
    std::vector<int> gains;
    for (const auto& mv : report.moves) {
        if (state.mover != mv.player || !legal_edge_moves(state).test(mv.item)) {
            trace_ok = false;
            break;
        }
        int s = edge_circuit_move_gain(state, cset, mv.item);
        if (s != mv.gain) trace_ok = false;

        auto before = edge_colors(state);
        bool adjacent_whites = false;
        for_each_bit(before.white.bits, [&](int e) {
            if (nbhd[e] & before.white.bits & ~(std::uint64_t{1} << e)) adjacent_whites = true;
        });
        if (mv.player == Player::Staller) {
            if (s < 2) st2 = false;
        } else {
            if (adjacent_whites && !cycle_host) {
                if (s < 6) dom_ok = false;
            } else if (s < 4) {
                dom_ok = false;
            }
        }
        if (!adjacent_whites) {
            for_each_bit(legal_edge_moves(state).bits, [&](int f) {
                if (edge_circuit_move_gain(state, cset, f) < 4) playable4 = false;
            });
        }

        EdgeResidualState next = apply_edge_move(state, mv.item);
        auto after = edge_colors(next);
        // Recoloring facts: a played white edge reddens adjacent blues and
        // dominates adjacent whites; a played blue edge does the same around
        // its white endpoint.
        std::uint64_t adj = nbhd[mv.item] & ~(std::uint64_t{1} << mv.item);
        if (before.white.test(mv.item)) {
            if ((adj & before.blue.bits & ~after.red.bits) != 0) recolor = false;
            if ((adj & before.white.bits & after.white.bits) != 0) recolor = false;
        } else if (before.blue.test(mv.item)) {
            std::uint64_t wv = white_vertices(state).bits;
            auto [u, v] = g.edge(mv.item);
            int white_end = ((wv >> u) & 1) ? u : v;
            std::uint64_t at_end = 0;
            for (int f = 0; f < g.edge_count(); ++f) {
                auto [a, b] = g.edge(f);
                if (a == white_end || b == white_end) at_end |= std::uint64_t{1} << f;
            }
            if ((at_end & before.white.bits & after.white.bits) != 0) recolor = false;
            if ((at_end & before.blue.bits & ~after.red.bits) != 0) recolor = false;
        }
        try {
            check_blue_edge_endpoints(next);
        } catch (const std::logic_error&) {
            blue_ok = false;
        }
        gains.push_back(s);
        total += s;
        state = next;
    }
    add_check(out, "trace-replay", trace_ok, "trace does not replay");
    add_check(out, "staller-s2", st2, "a Staller move decreased f by less than 2");
    add_check(out, "dominator-s6-or-s4", dom_ok, "a Dominator move fell below its per-case bound");
    add_check(out, "all-playable-s4", playable4, "a playable edge below 4 in an isolated-whites state");
    add_check(out, "recoloring", recolor, "adjacent edge recoloring violated");
    add_check(out, "blue-endpoints", blue_ok, "a blue edge lost its white/red endpoint split");
    bool finished = legal_edge_moves(state).empty();
    add_check(out, "telescoping",
              trace_ok && finished && total == report.initial_potential &&
                  edge_circuit_potential(state, cset) == 0,
              "potential does not telescope to zero");
    if (!cycle_host) {
        bool pairs = trace_ok;
        for (std::size_t i = 0; pairs && i < gains.size(); i += 2) {
            if (i + 1 < gains.size()) {
                if (gains[i] + gains[i + 1] < 8) pairs = false;
            } else if (gains[i] < 4) {
                pairs = false;
            }
        }
        add_check(out, "pairs-s8", pairs, "a Dominator-Staller pair decreased f by less than 8");
    }
    return out;
}

std::vector<ClaimCheck> audit_clawfree2(const AuditReport& report, const Graph& g) {
    std::vector<ClaimCheck> out;
    PhasedState state = initial_phased_state(g);
    bool trace_ok = true, st22 = true, complete = true, tags = true;
    int total = 0;
    std::vector<int> gains;
    int endgame_entry = -1;
    int endgame_whites = 0;
    for (std::size_t i = 0; i < report.moves.size(); ++i) {
        const auto& mv = report.moves[i];
        if (state.mover != mv.player || !legal_moves(state.residual()).test(mv.item)) {
            trace_ok = false;
            break;
        }
        int s = clawfree2_move_gain(state, mv.item);
        if (s != mv.gain) trace_ok = false;

        auto colors = vertex_colors(state.residual());
        // every blue vertex must see a complete set of white neighbors
        for_each_bit(colors.blue.bits, [&](int b) {
            std::uint64_t wn = g.neighbors(b) & colors.white.bits;
            for_each_bit(wn, [&](int x) {
                if ((wn & ~g.closed_neighbors(x)) != 0) complete = false;
            });
        });
        if (mv.player == Player::Dominator && endgame_entry < 0 && colors.blue.empty()) {
            auto comps = white_components(g, colors.white.bits);
            bool all_cycles = !comps.empty();
            for (const auto& comp : comps)
                if (!comp_is_cycle(g, colors.white.bits, comp)) all_cycles = false;
            if (all_cycles) {
                endgame_entry = static_cast<int>(i);
                endgame_whites = colors.white.count();
            }
        }
        if (mv.player == Player::Staller && s < 22) st22 = false;

        PhasedState next = apply_phased_move(state, mv.item);
        bool boundary_hit = mv.player == Player::Dominator && state.phase == 1 &&
                            max_white_degree(g, state.dominated) <= 2;
        if (next.phase == 1) {
            auto nc = vertex_colors(next.residual());
            if (!(nc.blue - next.tagged_plus).empty()) tags = false;  // B == B+ in phase 1
        } else if ((state.phase == 2 || boundary_hit) &&
                   !(next.tagged_plus - state.tagged_plus).empty()) {
            tags = false;  // a B+ tag appeared at or after the boundary
        }
        gains.push_back(s);
        total += s;
        state = next;
    }
    add_check(out, "trace-replay", trace_ok, "trace does not replay");
    add_check(out, "staller-s22", st22, "a Staller move decreased f by less than 22");
    add_check(out, "blue-sees-complete-white", complete, "a blue vertex with independent white neighbors");
    add_check(out, "phase-tags", tags, "phase tag bookkeeping violated");
    bool finished = legal_moves(state.residual()).empty();
    add_check(out, "telescoping",
              trace_ok && finished && total == report.initial_potential &&
                  clawfree2_potential(state) == 0,
              "potential does not telescope to zero");

    bool pairs = trace_ok;
    std::size_t cutoff = endgame_entry < 0 ? gains.size() : static_cast<std::size_t>(endgame_entry);
    for (std::size_t i = 0; pairs && i < cutoff; i += 2) {
        if (i + 1 < gains.size()) {
            if (gains[i] + gains[i + 1] < 80) pairs = false;
        } else if (gains[i] < 40) {
            pairs = false;
        }
    }
    add_check(out, "pairs-s80", pairs, "a pre-endgame pair decreased f by less than 80");
    if (endgame_entry >= 0) {
        int j = static_cast<int>(gains.size()) - endgame_entry;
        bool ledger = 2 * j - 1 <= endgame_whites && 22 * endgame_whites >= 44 * j - 22;
        add_check(out, "endgame-ledger", ledger, "cycle endgame exceeded (|W|+1)/2 moves");
    }
    return out;
}

}  // namespace

std::vector<ClaimCheck> audit_claims(const AuditReport& report) {
    Graph g = parse_graph6(report.graph6);
    switch (report.profile) {
        case ProfileKind::CubicClawFree: return audit_cubic(report, g);
        case ProfileKind::EdgeCircuit: return audit_edge_circuit(report, g);
        case ProfileKind::ClawFreeMinDeg2: return audit_clawfree2(report, g);
    }
    throw std::logic_error("unknown profile");
}

// ---- random-state claim checks ------------------------------------------------

std::vector<ClaimCheck> check_cubic_state_claims(const ResidualState& s) {
    std::vector<ClaimCheck> failures;
    const Graph& g = *s.graph;
    std::uint64_t white = g.vertex_mask() & ~s.dominated.bits;
    std::uint64_t structures = strict_structure_whites(g, white);
    for_each_bit(legal_moves(s).bits, [&](int v) {
        int gain = cubic_move_gain(s, v);
        if (gain < 3) failures.push_back({"staller-s3", false, "move " + std::to_string(v)});
        if ((g.closed_neighbors(v) & white & structures) && gain < 5)
            failures.push_back({"staller-structures-s5", false, "move " + std::to_string(v)});
    });
    return failures;
}

std::vector<ClaimCheck> check_edge_state_claims(const EdgeResidualState& s, EdgeSet circuit,
                                                bool cycle_host) {
    std::vector<ClaimCheck> failures;
    auto colors = edge_colors(s);
    auto nbhd = edge_neighborhoods(*s.graph);
    bool adjacent_whites = false;
    for_each_bit(colors.white.bits, [&](int e) {
        if (nbhd[e] & colors.white.bits & ~(std::uint64_t{1} << e)) adjacent_whites = true;
    });
    int max_gain = 0;
    for_each_bit(legal_edge_moves(s).bits, [&](int e) {
        int gain = edge_circuit_move_gain(s, circuit, e);
        max_gain = std::max(max_gain, gain);
        if (gain < 2) failures.push_back({"playable-s2", false, "edge " + std::to_string(e)});
        if (!adjacent_whites && gain < 4)
            failures.push_back({"playable-s4", false, "edge " + std::to_string(e)});
    });
    if (adjacent_whites && !cycle_host && !colors.white.empty() && max_gain < 6)
        failures.push_back({"dominator-s6-available", false, "max gain " + std::to_string(max_gain)});
    try {
        check_blue_edge_endpoints(s);
    } catch (const std::logic_error& e) {
        failures.push_back({"blue-endpoints", false, e.what()});
    }
    return failures;
}

std::vector<ClaimCheck> check_clawfree2_state_claims(const PhasedState& s) {
    std::vector<ClaimCheck> failures;
    const Graph& g = *s.graph;
    auto colors = vertex_colors(s.residual());
    for_each_bit(legal_moves(s.residual()).bits, [&](int v) {
        if (clawfree2_move_gain(s, v) < 22)
            failures.push_back({"legal-s22", false, "move " + std::to_string(v)});
    });
    for_each_bit(colors.blue.bits, [&](int b) {
        std::uint64_t wn = g.neighbors(b) & colors.white.bits;
        for_each_bit(wn, [&](int x) {
            if ((wn & ~g.closed_neighbors(x)) != 0)
                failures.push_back({"blue-sees-complete-white", false, "blue " + std::to_string(b)});
        });
        // a white neighbor with two white neighbors of its own forces a B+ tag
        for_each_bit(wn, [&](int u) {
            if (std::popcount(g.neighbors(u) & colors.white.bits) >= 2 && !s.tagged_plus.test(b))
                failures.push_back({"bplus-tag-forced", false, "blue " + std::to_string(b)});
        });
    });
    return failures;
}

// ---- JSON --------------------------------------------------------------------

std::string AuditReport::to_json() const {
    nlohmann::ordered_json j;
    j["graph6"] = graph6;
    j["profile"] = profile_name(profile);
    j["staller"] = staller_name(staller);
    j["seed"] = seed;
    if (profile == ProfileKind::EdgeCircuit) j["circuit"] = circuit_edges;
    j["moves"] = nlohmann::ordered_json::array();
    for (const auto& mv : moves) {
        nlohmann::ordered_json m;
        m["player"] = mv.player == Player::Dominator ? "D" : "S";
        m["item"] = mv.item;
        m["s"] = mv.gain;
        if (!mv.note.empty()) m["note"] = mv.note;
        j["moves"].push_back(m);
    }
    j["s"] = nlohmann::ordered_json::array();
    for (const auto& mv : moves) j["s"].push_back(mv.gain);
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
        nlohmann::ordered_json cc;
        cc["name"] = c.name;
        cc["passed"] = c.passed;
        if (!c.detail.empty()) cc["detail"] = c.detail;
        j["claims"].push_back(cc);
    }
    j["initial_potential"] = initial_potential;
    j["length"] = length;
    j["bound"] = bound;
    j["verdict"] = all_passed() ? "pass" : "fail";
    return j.dump(2);
}

}  // namespace domgame
