#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

enum class SweepCheck {
    Conjecture12,  // mindeg >= 2 implies gamma_g <= ceil(n/2)
    Conjecture11,  // traceable implies gamma_g <= ceil(n/2)
    Thm31,         // claw-free cubic: gamma_g <= n/2, policy + audits
    Cor35,         // claw-free cubic: Staller-start value <= (n-1)/2
    Thm44,         // edge dominating circuit: edge game <= m/2 bounds
    Thm48,         // edge dominating trail: edge game <= ceil(m/2)
    Thm411,        // traceable line graph: gamma_g(L) <= ceil(m/2)
    Thm51,         // claw-free mindeg 2: 11n/20 bounds, policy + audits
    Obs41,         // edge game == vertex game on the line graph
    Lockstep,      // imagination lockstep on open dominating trails
    Equality,      // record gamma_g == ceil(n/2) instances
};

constexpr int kSweepCheckCount = 11;

std::string check_name(SweepCheck c);
std::optional<SweepCheck> parse_check(std::string_view name);

struct SweepFilters {
    bool connected = false;
    int min_degree = 0;
    int min_diameter = 0;
    bool claw_free = false;
    bool cubic = false;
    int max_edges = 0;  // 0 = no cap
};

struct SweepConfig {
    std::vector<SweepCheck> checks;
    SweepFilters filters;
    bool as_line_graphs = false;  // sweep the line graphs of the inputs
    int jobs = 1;                 // DOMGAME_JOBS overrides at the CLI level
    std::uint64_t seed = 0;
    int trail_edge_cap = 24;
};

struct CheckStats {
    long passed = 0;
    long failed = 0;
    long skipped = 0;
};

/// Failure record; `detail` carries the violating values, and for policy
/// failures the full audited move trace, so the case replays from graph6.
struct Certificate {
    std::string check;
    std::string graph6;
    std::string detail;
};

struct SweepReport {
    std::vector<SweepCheck> checks;
    std::vector<CheckStats> stats;  // aligned with checks
    long input_count = 0;
    long swept_count = 0;
    std::vector<Certificate> failures;
    std::vector<std::string> equality_cases;  // graph6, input order
    int max_excess = 0;                       // max gamma_g - ceil(n/2)
    std::string max_excess_graph6;
    double max_ratio = 0.0;  // max gamma_g / n
    std::string max_ratio_graph6;
    bool sanity_ok = true;  // |gamma_g - gamma_g'| <= 1 held everywhere

    bool all_passed() const;
    std::string to_json() const;
    std::string to_csv() const;
};

/// Runs every enabled check on every graph passing the filters. jobs > 1
/// uses OpenMP over the inputs; the report is identical to the serial
/// reference for any jobs value.
SweepReport run_sweep(const SweepConfig& cfg, const std::vector<Graph>& inputs);

/// Plain single-threaded reference implementation.
SweepReport run_sweep_serial(const SweepConfig& cfg, const std::vector<Graph>& inputs);

struct BuiltinCheckResult {
    std::string name;
    std::string graph6;
    int expected_value;
    int actual_value;
    bool expected_traceable;
    bool traceable;
    bool ok;
};

/// Exact values and traceability of the bundled sharpness instances.
std::vector<BuiltinCheckResult> verify_builtin_instances();

}  // namespace domgame
