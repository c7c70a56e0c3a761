#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domgame/edge_game.hpp"
#include "domgame/game.hpp"
#include "domgame/recognizers.hpp"

namespace domgame {

enum class ProfileKind { CubicClawFree, EdgeCircuit, ClawFreeMinDeg2 };
enum class StallerModel { ExactAdversary, GreedyMinGain, SeededRandom };

std::string profile_name(ProfileKind k);
std::string staller_name(StallerModel m);

// ---- cubic claw-free potential: white 3, blue 1, red 0 -----------------

int cubic_potential(const ResidualState& s);
int cubic_move_gain(const ResidualState& s, int v);

struct CubicCaseClass {
    enum Case { C1, C2, C3, C4, C5, C6, C7, Done } id;
    /// Case witness: C1/C7 the vertex; C2 the triangle; C3/C6 the component
    /// in path/cycle order; C4 the pair; C5 the diamond.
    std::vector<int> witness;
};

/// First applicable case, tested in order. Host must be claw-free cubic.
CubicCaseClass classify_cubic_case(const ResidualState& s);

/// The case-driven cubic strategy. Carries the one-reply block memory that
/// the long-cycle case needs: after opening a white cycle the policy answers
/// the specific blue counterattack with the prescribed rejoinder, and
/// re-classifies on anything else.
class CubicPolicy {
public:
    explicit CubicPolicy(const Graph& g);

    int choose(const ResidualState& s);
    void observe_opponent(int v) { last_opponent_ = v; }
    /// Note for the move returned by the last choose() call ("C1".."C7").
    const std::string& last_note() const { return note_; }

private:
    const Graph* g_;
    std::vector<int> block_cycle_;  // v_1..v_j of the opened white cycle
    int last_opponent_ = -1;
    std::string note_;
};

// ---- claw-free mindeg-2 phased potential: 22 / 10 / 9 / 0 --------------

/// Residual state plus phase bookkeeping. tagged_plus holds every vertex
/// whose white->blue transition happened in phase 1; the tag is permanent.
struct PhasedState {
    const Graph* graph;
    VertexSet dominated;
    Player mover;
    VertexSet tagged_plus;
    int phase = 1;

    ResidualState residual() const { return {graph, dominated, mover}; }
};

PhasedState initial_phased_state(const Graph& g, Player start = Player::Dominator);

/// Max count of white neighbors over white vertices (0 when W is empty).
int max_white_degree(const Graph& g, VertexSet dominated);

/// Applies the move, flipping to phase 2 first when it is Dominator's turn
/// and no white vertex has three white neighbors. Staller's moves never
/// advance the phase.
PhasedState apply_phased_move(const PhasedState& s, int v);

int clawfree2_potential(const PhasedState& s);
int clawfree2_move_gain(const PhasedState& s, int v);

class ClawFree2Policy {
public:
    explicit ClawFree2Policy(const Graph& g);

    int choose(const PhasedState& s);
    bool in_endgame() const { return endgame_; }
    const std::string& last_note() const { return note_; }

private:
    const Graph* g_;
    std::unique_ptr<GameSolver> solver_;  // exact play for the cycle endgame
    bool endgame_ = false;
    std::string note_;
};

// ---- edge circuit potential: white 2, blue C-edge 1, otherwise 0 -------

/// The edge game's cycle case: the edge set forms one cycle (isolated
/// vertices are invisible to the edge game).
bool edge_structure_is_cycle(const Graph& g);

int edge_circuit_potential(const EdgeResidualState& s, EdgeSet circuit);
int edge_circuit_move_gain(const EdgeResidualState& s, EdgeSet circuit, int e);

/// Greedy prescription: the legal edge maximizing the decrease, smallest
/// edge index on ties.
int edge_circuit_policy_move(const EdgeResidualState& s, EdgeSet circuit);

// ---- simulation and claim audits ----------------------------------------

struct MoveRecord {
    Player player;
    int item;          // vertex, or edge index for the edge profile
    int gain;          // s-value of the move
    std::string note;  // case / phase annotation
};

struct ClaimCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct AuditReport {
    ProfileKind profile;
    std::string graph6;
    StallerModel staller;
    std::uint64_t seed = 0;
    std::vector<int> circuit_edges;  // fixed circuit, edge profile only
    std::vector<MoveRecord> moves;
    int initial_potential = 0;
    int length = 0;
    int bound = 0;
    bool bound_satisfied = false;
    std::vector<ClaimCheck> claims;

    bool all_passed() const;
    std::string to_json() const;
};

/// Plays a D-game with the profile's Dominator policy against the chosen
/// Staller model and returns the fully audited trace.
AuditReport simulate_cubic(const Graph& g, StallerModel staller, std::uint64_t seed = 0);
AuditReport simulate_clawfree2(const Graph& g, StallerModel staller, std::uint64_t seed = 0);
AuditReport simulate_edge_circuit(const Graph& g, const Trail& circuit, StallerModel staller,
                                  std::uint64_t seed = 0);

/// Replays the report's trace from its graph6 record and re-derives every
/// per-move claim verdict. simulate_* fills report.claims with exactly this.
std::vector<ClaimCheck> audit_claims(const AuditReport& report);

// ---- random reachable states for property-style claim sampling ----------

/// Universal per-move claims checked on one reachable state; used by the
/// sampling harness. Returns the failed checks (empty = all hold).
std::vector<ClaimCheck> check_cubic_state_claims(const ResidualState& s);
std::vector<ClaimCheck> check_edge_state_claims(const EdgeResidualState& s, EdgeSet circuit,
                                                bool host_is_cycle);
std::vector<ClaimCheck> check_clawfree2_state_claims(const PhasedState& s);

}  // namespace domgame
