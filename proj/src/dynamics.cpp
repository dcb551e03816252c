#include "chipfire/dynamics.hpp"

#include <stdexcept>
#include <string>

namespace chipfire {

namespace {

void check_paired(int vertex_count, const ChipConfiguration& c) {
    if (static_cast<int>(c.size()) != vertex_count)
        throw std::invalid_argument("configuration length " + std::to_string(c.size()) +
                                    " does not match vertex count " +
                                    std::to_string(vertex_count));
    for (const BigInt& x : c)
        if (x < 0)
            throw std::invalid_argument("chip counts must be nonnegative");
}

} // namespace

BigInt total_chips(const ChipConfiguration& c) {
    BigInt total = 0;
    for (const BigInt& x : c)
        total += x;
    return total;
}

StepResult step_directed(const DirectedMultigraph& g, const ChipConfiguration& c) {
    check_paired(g.vertex_count(), c);
    const int n = g.vertex_count();
    StepResult r;
    r.fired.assign(n, false);
    r.next = c;
    for (int v = 0; v < n; ++v) {
        const int d = g.out_degree(v);
        if (d > 0 && c[v] >= d) {
            r.fired[v] = true;
            r.next[v] -= d;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!r.fired[v])
            continue;
        for (int w : g.out_neighbors(v))
            r.next[w] += 1;
    }
    if (total_chips(r.next) != total_chips(c))
        throw std::logic_error("chip conservation violated in step_directed");
    return r;
}

StepResult step_undirected(const UndirectedGraph& g, const ChipConfiguration& c) {
    check_paired(g.vertex_count(), c);
    const int n = g.vertex_count();
    StepResult r;
    r.fired.assign(n, false);
    r.next = c;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d > 0 && c[v] >= d) {
            r.fired[v] = true;
            r.next[v] -= d;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!r.fired[v])
            continue;
        for (int w : g.neighbors(v))
            r.next[w] += 1;
    }
    if (total_chips(r.next) != total_chips(c))
        throw std::logic_error("chip conservation violated in step_undirected");
    return r;
}

namespace {

template <class Graph, class StepFn>
TrajectoryRecord run_impl(const Graph& g, const ChipConfiguration& c0, std::uint64_t rounds,
                          std::uint64_t cap, StepFn step) {
    if (rounds > cap)
        throw std::invalid_argument("requested " + std::to_string(rounds) +
                                    " rounds exceeds the cap of " + std::to_string(cap));
    TrajectoryRecord record;
    record.configurations.reserve(rounds + 1);
    record.configurations.push_back(c0);
    record.firings.reserve(rounds);
    for (std::uint64_t t = 0; t < rounds; ++t) {
        StepResult s = step(g, record.configurations.back());
        record.firings.push_back(std::move(s.fired));
        record.configurations.push_back(std::move(s.next));
    }
    return record;
}

} // namespace

TrajectoryRecord run_trajectory(const DirectedMultigraph& g, const ChipConfiguration& c0,
                                std::uint64_t rounds, std::uint64_t cap) {
    return run_impl(g, c0, rounds, cap,
                    [](const DirectedMultigraph& gr, const ChipConfiguration& c) {
                        return step_directed(gr, c);
                    });
}

TrajectoryRecord run_trajectory(const UndirectedGraph& g, const ChipConfiguration& c0,
                                std::uint64_t rounds, std::uint64_t cap) {
    return run_impl(g, c0, rounds, cap,
                    [](const UndirectedGraph& gr, const ChipConfiguration& c) {
                        return step_undirected(gr, c);
                    });
}

} // namespace chipfire
