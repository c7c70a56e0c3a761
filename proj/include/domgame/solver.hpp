#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "domgame/bits.hpp"

namespace domgame {

enum class Player { Dominator, Staller };

constexpr Player other(Player p) {
    return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

struct SolverOptions {
    /// When set, the minimizing side skips moves whose gain set is a strict
    /// subset of another legal move's gain set. Values are provably
    /// unchanged; kept as a flag so the identity can be A/B tested.
    bool continuation_pruning = false;
};

/// Exact minimax solver for closed-neighborhood domination games: items
/// 0..k-1 each carry a mask N[i]; a move i is legal iff N[i] still covers
/// something undominated, and playing it adds N[i] to the dominated set.
/// Dominator minimizes and Staller maximizes the total number of moves.
///
/// The vertex game instantiates this with vertex neighborhoods, the edge
/// game with edge neighborhoods. The search is alpha-beta over a
/// transposition table keyed by (dominated set, mover) that stores value
/// bounds, so repeated queries on one instance share work.
class DominationSolver {
public:
    DominationSolver(std::vector<std::uint64_t> neighborhoods, std::uint64_t universe,
                     SolverOptions opt = {});

    /// Exact number of remaining moves under optimal play.
    int value(std::uint64_t dominated, Player mover);

    /// Smallest-index legal move attaining the mover's optimum.
    /// Throws when there is no legal move.
    int best_move(std::uint64_t dominated, Player mover);

    std::uint64_t universe() const { return universe_; }
    std::size_t table_size() const { return table_[0].size() + table_[1].size(); }

private:
    struct Entry {
        std::int16_t lo;
        std::int16_t hi;
        std::int16_t best = -1;  // move that proved the exact value, if any
    };

    struct Candidate {
        int item;
        std::uint64_t gain;
    };

    int search(std::uint64_t dominated, int mover, int alpha, int beta);
    void collect_moves(std::uint64_t dominated, std::vector<Candidate>& out) const;

    std::vector<std::uint64_t> nbhd_;
    std::uint64_t universe_;
    SolverOptions opt_;
    std::unordered_map<std::uint64_t, Entry> table_[2];
    std::vector<std::vector<Candidate>> move_pool_;  // per-depth scratch
    int depth_ = 0;
};

}  // namespace domgame
