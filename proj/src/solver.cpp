#include "domgame/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace domgame {

namespace {

constexpr int kDominator = 0;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

DominationSolver::DominationSolver(std::vector<std::uint64_t> neighborhoods, std::uint64_t universe,
                                   SolverOptions opt)
    : nbhd_(std::move(neighborhoods)), universe_(universe), opt_(opt) {
    for (auto m : nbhd_)
        if (m & ~universe_) throw std::invalid_argument("neighborhood leaves the universe");
    move_pool_.resize(72);  // recursion depth is bounded by the 64-item universe
}

void DominationSolver::collect_moves(std::uint64_t dominated, std::vector<Candidate>& out) const {
    out.clear();
    std::uint64_t undom = universe_ & ~dominated;
    for (int i = 0; i < static_cast<int>(nbhd_.size()); ++i) {
        std::uint64_t gain = nbhd_[i] & undom;
        if (gain) out.push_back({i, gain});
    }
    // Equal gain sets lead to the same child; keep the smallest item.
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return a.gain != b.gain ? a.gain < b.gain : a.item < b.item;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Candidate& a, const Candidate& b) { return a.gain == b.gain; }),
              out.end());
}

int DominationSolver::search(std::uint64_t dominated, int mover, int alpha, int beta) {
    if (dominated == universe_) return 0;

    // References into unordered_map stay valid across rehashes.
    auto [it, fresh] = table_[mover].try_emplace(dominated, Entry{});
    Entry& entry = it->second;
    if (!fresh) {
        if (entry.lo == entry.hi) return entry.lo;
        if (entry.lo >= beta) return entry.lo;
        if (entry.hi <= alpha) return entry.hi;
    }

    std::vector<Candidate>& moves = move_pool_.at(depth_);
    ++depth_;
    collect_moves(dominated, moves);
    if (moves.empty()) throw std::logic_error("undominated state with no legal move");

    if (fresh) {
        int undom = std::popcount(universe_ & ~dominated);
        int max_gain = 1;
        for (const auto& c : moves) max_gain = std::max(max_gain, std::popcount(c.gain));
        entry.lo = static_cast<std::int16_t>(ceil_div(undom, max_gain));
        entry.hi = static_cast<std::int16_t>(undom);
    }

    auto done = [&](int r) {
        --depth_;
        return r;
    };

    if (entry.lo == entry.hi) return done(entry.lo);
    if (entry.lo >= beta) return done(entry.lo);
    if (entry.hi <= alpha) return done(entry.hi);
    int a = std::max(alpha, static_cast<int>(entry.lo));
    int b = std::min(beta, static_cast<int>(entry.hi));

    bool minimizing = (mover == kDominator);
    if (minimizing && opt_.continuation_pruning) {
        // Drop moves whose gain set is strictly inside another move's.
        auto subsumed = [&](const Candidate& c) {
            for (const auto& d : moves)
                if (d.item != c.item && (c.gain & ~d.gain) == 0 && c.gain != d.gain) return true;
            return false;
        };
        moves.erase(std::remove_if(moves.begin(), moves.end(), subsumed), moves.end());
    }

    // Strong moves first: big gains for Dominator, small for Staller.
    std::sort(moves.begin(), moves.end(), [&](const Candidate& x, const Candidate& y) {
        int gx = std::popcount(x.gain), gy = std::popcount(y.gain);
        if (gx != gy) return minimizing ? gx > gy : gx < gy;
        return x.item < y.item;
    });
    if (entry.best >= 0) {
        auto pos = std::find_if(moves.begin(), moves.end(),
                                [&](const Candidate& c) { return c.item == entry.best; });
        if (pos != moves.end()) std::rotate(moves.begin(), pos, pos + 1);
    }

    int best;
    int best_item = -1;
    if (minimizing) {
        best = INT16_MAX;
        for (const auto& c : moves) {
            int val = 1 + search(dominated | c.gain, mover ^ 1, a - 1, b - 1);
            if (val < best) best = val, best_item = c.item;
            if (best <= a) break;
            b = std::min(b, best);
        }
    } else {
        best = 0;
        for (const auto& c : moves) {
            int val = 1 + search(dominated | c.gain, mover ^ 1, a - 1, b - 1);
            if (val > best) best = val, best_item = c.item;
            if (best >= b) break;
            a = std::max(a, best);
        }
    }

    if (best <= alpha) {
        entry.hi = std::min(entry.hi, static_cast<std::int16_t>(best));
    } else if (best >= beta) {
        entry.lo = std::max(entry.lo, static_cast<std::int16_t>(best));
        entry.best = static_cast<std::int16_t>(best_item);
    } else {
        entry.lo = entry.hi = static_cast<std::int16_t>(best);
        entry.best = static_cast<std::int16_t>(best_item);
    }
    return done(best);
}

int DominationSolver::value(std::uint64_t dominated, Player mover) {
    int mv = (mover == Player::Dominator) ? 0 : 1;
    int undom = std::popcount(universe_ & ~dominated);
    return search(dominated, mv, -1, undom + 1);
}

int DominationSolver::best_move(std::uint64_t dominated, Player mover) {
    if (dominated == universe_) throw std::logic_error("no legal move: game over");
    int target = value(dominated, mover) - 1;
    std::vector<Candidate> moves;
    collect_moves(dominated, moves);
    // Candidates in item order; the dedup kept the smallest item per gain set.
    std::sort(moves.begin(), moves.end(),
              [](const Candidate& a, const Candidate& b) { return a.item < b.item; });
    for (const auto& c : moves)
        if (value(dominated | c.gain, other(mover)) == target) return c.item;
    throw std::logic_error("no child attains the optimum");  // unreachable
}

}  // namespace domgame
