#include "chipfire/period.hpp"

#include <algorithm>
#include <map>

namespace chipfire {

FiringString::FiringString(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw std::invalid_argument("firing string must contain only '0' and '1'");
}

std::size_t FiringString::ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

std::optional<std::size_t> FiringString::last_one_index() const {
    const auto pos = bits_.find_last_of('1');
    if (pos == std::string::npos)
        return std::nullopt;
    return pos;
}

std::size_t FiringString::trailing_zeros() const {
    if (const auto k = last_one_index())
        return bits_.size() - 1 - *k;
    return bits_.size();
}

namespace {

template <class Graph, class StepFn>
PeriodSummary detect_impl(const Graph& g, const ChipConfiguration& c0, std::uint64_t max_rounds,
                          StepFn step) {
    if (max_rounds < 1)
        throw std::invalid_argument("max_rounds must be at least 1");
    const int n = g.vertex_count();

    std::map<ChipConfiguration, std::uint64_t> first_seen;
    ChipConfiguration cur = c0;
    first_seen.emplace(cur, 0);
    std::uint64_t round = 0;
    while (round < max_rounds) {
        StepResult s = step(g, cur);
        ++round;
        cur = std::move(s.next);
        auto [it, inserted] = first_seen.emplace(cur, round);
        if (inserted)
            continue;

        // cur equals the configuration first seen at round t0, so it is the
        // start of the orbit; walk one period to collect the orbit data.
        const std::uint64_t t0 = it->second;
        PeriodSummary out;
        out.transient = t0;
        out.period = round - t0;
        out.fire_counts.assign(n, 0);
        out.cycle_configurations.reserve(out.period);
        out.firing_rows.reserve(out.period);
        ChipConfiguration orbit = std::move(cur);
        for (std::uint64_t t = 0; t < out.period; ++t) {
            StepResult st = step(g, orbit);
            for (int v = 0; v < n; ++v)
                if (st.fired[v])
                    out.fire_counts[v] += 1;
            out.cycle_configurations.push_back(std::move(orbit));
            out.firing_rows.push_back(std::move(st.fired));
            orbit = std::move(st.next);
        }
        return out;
    }
    throw BudgetExhausted(round);
}

} // namespace

PeriodSummary detect_period(const DirectedMultigraph& g, const ChipConfiguration& c0,
                            std::uint64_t max_rounds) {
    return detect_impl(g, c0, max_rounds,
                       [](const DirectedMultigraph& gr, const ChipConfiguration& c) {
                           return step_directed(gr, c);
                       });
}

PeriodSummary detect_period(const UndirectedGraph& g, const ChipConfiguration& c0,
                            std::uint64_t max_rounds) {
    return detect_impl(g, c0, max_rounds,
                       [](const UndirectedGraph& gr, const ChipConfiguration& c) {
                           return step_undirected(gr, c);
                       });
}

FiringString atomic_firing_sequence(const PeriodSummary& summary, int v) {
    if (v < 0 || v >= static_cast<int>(summary.fire_counts.size()))
        throw std::invalid_argument("vertex out of range");
    std::string bits(summary.period, '0');
    for (std::uint64_t t = 0; t < summary.period; ++t)
        if (summary.firing_rows[t][v])
            bits[t] = '1';
    return FiringString(std::move(bits));
}

std::size_t minimal_string_period(const FiringString& s) {
    const std::string& bits = s.bits();
    const std::size_t len = bits.size();
    if (len == 0)
        throw std::invalid_argument("minimal_string_period: empty string");
    for (std::size_t r = 1; r < len; ++r) {
        if (len % r != 0)
            continue;
        bool ok = true;
        for (std::size_t i = r; i < len && ok; ++i)
            ok = bits[i] == bits[i % r];
        if (ok)
            return r;
    }
    return len;
}

ConvergentSearchReport convergent_period_search(const DirectedMultigraph& g,
                                                const BigInt& min_chips, int per_vertex_bound,
                                                std::uint64_t max_rounds,
                                                std::uint64_t enumeration_budget) {
    if (per_vertex_bound < 0)
        throw std::invalid_argument("per-vertex bound must be nonnegative");
    const int n = g.vertex_count();
    ConvergentSearchReport report;

    std::vector<int> odo(n, 0);
    bool done = n == 0;
    while (!done) {
        BigInt total = 0;
        for (int x : odo)
            total += x;
        if (total >= min_chips) {
            if (report.configurations_tested >= enumeration_budget) {
                report.complete = false;
                break;
            }
            ++report.configurations_tested;
            ChipConfiguration c(odo.begin(), odo.end());
            try {
                PeriodSummary s = detect_period(g, c, max_rounds);
                if (!report.min_period || s.period < *report.min_period) {
                    report.min_period = s.period;
                    report.witness = s.cycle_configurations.front();
                }
            } catch (const BudgetExhausted&) {
                report.complete = false;
            }
        }
        // lexicographic odometer: increment the last position
        int pos = n - 1;
        while (pos >= 0 && odo[pos] == per_vertex_bound)
            odo[pos--] = 0;
        if (pos < 0)
            done = true;
        else
            ++odo[pos];
    }
    return report;
}

} // namespace chipfire
