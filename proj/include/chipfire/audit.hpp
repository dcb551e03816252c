#pragma once

#include "chipfire/constructions.hpp"
#include "chipfire/period.hpp"

#include <chrono>
#include <string>

namespace chipfire {

/// Outcome of one exhaustive or sampled claim check. Empty
/// violations means the claim held on everything tested; the report records
/// the bounds so a run can be reproduced exactly.
struct AuditReport {
    std::string claim;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> violations;
    std::string parameters;
    std::string notes;
    std::chrono::duration<double> elapsed{0};
    bool complete = true;

    bool passed() const { return violations.empty(); }
};

/// Checks every orientation of base against every configuration with total
/// chips <= total_chip_bound and records each game whose eventual period is
/// exactly 2. For K_n with n <= 4 the violation list must stay empty.
/// Bounded-chip evidence, not a proof.
AuditReport audit_no_period2_orientations(const UndirectedGraph& base, int total_chip_bound,
                                          std::uint64_t max_rounds = kDefaultRoundCap);

/// On the directed cycle C_n: every eventual period of a game with total
/// chips <= total_chip_bound divides n, and every divisor i of n is realized
/// by the divisor construction.
AuditReport audit_cycle_periods(int n, int total_chip_bound,
                                std::uint64_t max_rounds = kDefaultRoundCap);

/// Samples seeded random games on a strongly connected graph; for every game
/// reaching period > 1 checks that no vertex stays passive, that the firing
/// counts over one period reduce to the solver's minimal kernel vector, and
/// the family-specific maxima (f_3 on useful K_n, f_4 on useful K_{a,a}).
AuditReport audit_stationary_fire_counts(const DirectedMultigraph& g, int samples,
                                         unsigned seed, int total_chip_bound,
                                         std::uint64_t max_rounds = kDefaultRoundCap);

} // namespace chipfire
