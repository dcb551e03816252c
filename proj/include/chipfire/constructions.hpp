#pragma once

#include "chipfire/dynamics.hpp"
#include "chipfire/period.hpp"

#include <optional>
#include <string>
#include <variant>

namespace chipfire {

/// A ready-to-run game: graph, initial chips, and optionally a vertex whose
/// firing sequence the construction is about and the period it promises.
/// One-based vertex labels v_1..v_n map to indices 0..n-1 throughout.
struct GadgetGame {
    std::variant<DirectedMultigraph, UndirectedGraph> graph;
    ChipConfiguration initial;
    std::optional<int> designated_vertex;
    std::optional<std::uint64_t> predicted_period;
    std::string label;

    bool is_directed() const { return graph.index() == 0; }
    const DirectedMultigraph& digraph() const { return std::get<DirectedMultigraph>(graph); }
    const UndirectedGraph& ungraph() const { return std::get<UndirectedGraph>(graph); }
    int vertex_count() const;
};

/// Simple directed cycle: edges v_{i+1} -> v_i plus v_0 -> v_{n-1}, so chips
/// travel toward lower indices. n = 2 gives the antiparallel pair.
DirectedMultigraph directed_cycle(int n);

/// One chip on every v_j with j = 0 (mod i); runs with period exactly i.
GadgetGame cycle_divisor_game(int n, int i);

/// The useful orientation of K_n: chain v_1 -> ... -> v_n -> v_1, edges from
/// v_1 to v_3..v_{n-1}, and from v_j down to v_2..v_{j-2}.
DirectedMultigraph useful_complete(int n);

/// The useful orientation of K_{a,a} on 2a vertices, odd indices on the left
/// side: the chain plus the three down-edge families.
DirectedMultigraph useful_bipartite(int a);

/// Orientation of K_{a,b} (a < b) whose unique sink component is the useful
/// K_{a,a}: extra right-side vertices send all their edges into the left side.
DirectedMultigraph bipartite_with_sink(int a, int b);

/// Raised for firing strings no strongly connected game can realize
/// (all-zero strings of length >= 2).
class UnrealizableSequence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RealizeOptions {
    /// Build the full cycles-plus-waterfalls gadget even for non-periodic
    /// strings, where a plain cycle would already do.
    bool force_full_gadget = false;
    /// Place the n extra chips on the hub also when the string has no
    /// trailing zeros. Simulation certifies this choice; the flag exists to
    /// exercise the alternative reading.
    bool flat_case_extra_chips = true;
};

/// A game whose designated vertex has s as its atomic firing sequence and
/// whose period is exactly the length of s. Gadget vertex order: hub v, then
/// each cycle copy's v_1..v_{l-1}, then u, then the waterfalls.
GadgetGame realize_sequence(const FiringString& s, RealizeOptions options = {});

/// The appendix period-2 game: deg(u) chips on even BFS layers from the
/// anchor, deg(u) minus the cross-layer edge count on odd layers. Every
/// vertex fires exactly once per period.
GadgetGame undirected_t2_game(const UndirectedGraph& g, int anchor);

/// Structural matches against the builders, used to pick cross-checks.
std::optional<int> match_useful_complete(const DirectedMultigraph& g);
std::optional<int> match_useful_bipartite(const DirectedMultigraph& g);

} // namespace chipfire
