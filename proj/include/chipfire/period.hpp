#pragma once

#include "chipfire/dynamics.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace chipfire {

/// Exact orbit data of a game. transient is the first round of the periodic
/// regime, period its minimal length. fire_counts[v] is the number of rounds
/// v fires within one period.
struct PeriodSummary {
    std::uint64_t transient = 0;
    std::uint64_t period = 1;
    std::vector<BigInt> fire_counts;
    std::vector<ChipConfiguration> cycle_configurations; // size = period
    std::vector<std::vector<bool>> firing_rows;          // size = period
};

/// Finite binary string with the usual firing-sequence statistics: length,
/// number of ones, index of the last one, trailing zero count.
class FiringString {
public:
    FiringString() = default;
    explicit FiringString(std::string bits);

    const std::string& bits() const { return bits_; }
    std::size_t length() const { return bits_.size(); }
    std::size_t ones() const;
    std::optional<std::size_t> last_one_index() const;
    std::size_t trailing_zeros() const;

    bool operator==(const FiringString& other) const { return bits_ == other.bits_; }

private:
    std::string bits_;
};

/// Thrown when a simulation budget runs out before a configuration repeats.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(std::uint64_t rounds)
        : std::runtime_error("no configuration repeat within " + std::to_string(rounds) +
                             " rounds"),
          rounds_simulated(rounds) {}

    std::uint64_t rounds_simulated;
};

/// Simulates forward, storing every configuration; the first revisit closes
/// the unique eventual cycle of the deterministic system, so the reported
/// period is exactly minimal. Throws BudgetExhausted if no repeat shows up
/// within max_rounds steps.
PeriodSummary detect_period(const DirectedMultigraph& g, const ChipConfiguration& c0,
                            std::uint64_t max_rounds = kDefaultRoundCap);
PeriodSummary detect_period(const UndirectedGraph& g, const ChipConfiguration& c0,
                            std::uint64_t max_rounds = kDefaultRoundCap);

/// The length-T binary string F_t0(v) ... F_{t0+T-1}(v).
FiringString atomic_firing_sequence(const PeriodSummary& summary, int v);

/// Smallest r dividing the length such that the string is a concatenation of
/// copies of its length-r prefix; the length itself if none smaller.
std::size_t minimal_string_period(const FiringString& s);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct ConvergentSearchReport {
    std::optional<std::uint64_t> min_period;
    /// First configuration of the periodic orbit of the first game (in
    /// enumeration order) that attains min_period.
    ChipConfiguration witness;
    std::uint64_t configurations_tested = 0;
    bool complete = true;
};

/// Enumerates every configuration with entries in [0, per_vertex_bound] and
/// total chips >= min_chips (lexicographic order) and reports the minimum
/// eventual period observed. Desk-scale evidence about the convergent period;
/// the exact value quantifies over unbounded chip counts and is out of reach.
/// Budget overruns are flagged in the report instead of thrown.
ConvergentSearchReport convergent_period_search(const DirectedMultigraph& g,
                                                const BigInt& min_chips, int per_vertex_bound,
                                                std::uint64_t max_rounds = kDefaultRoundCap,
                                                std::uint64_t enumeration_budget =
                                                    kDefaultEnumerationBudget);

} // namespace chipfire
