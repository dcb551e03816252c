#pragma once

#include "chipfire/graph.hpp"
#include "chipfire/numeric.hpp"

#include <cstdint>

namespace chipfire {

/// One chip count per vertex, paired positionally with a graph.
using ChipConfiguration = std::vector<BigInt>;

struct StepResult {
    ChipConfiguration next;
    std::vector<bool> fired;
};

struct TrajectoryRecord {
    std::vector<ChipConfiguration> configurations; // rounds 0..R
    std::vector<std::vector<bool>> firings;        // rounds 0..R-1
};

inline constexpr std::uint64_t kDefaultRoundCap = 1'000'000;

/// One parallel round on a digraph: v fires iff c(v) >= deg+(v) > 0, every
/// firing vertex sends one chip along each out-edge (multiplicity counts),
/// all firings simultaneous. Total chips are conserved; the implementation
/// checks this and throws std::logic_error if it ever breaks.
StepResult step_directed(const DirectedMultigraph& g, const ChipConfiguration& c);

/// Undirected variant: threshold deg(v), one chip to each neighbor.
StepResult step_undirected(const UndirectedGraph& g, const ChipConfiguration& c);

TrajectoryRecord run_trajectory(const DirectedMultigraph& g, const ChipConfiguration& c0,
                                std::uint64_t rounds, std::uint64_t cap = kDefaultRoundCap);
TrajectoryRecord run_trajectory(const UndirectedGraph& g, const ChipConfiguration& c0,
                                std::uint64_t rounds, std::uint64_t cap = kDefaultRoundCap);

BigInt total_chips(const ChipConfiguration& c);

} // namespace chipfire
