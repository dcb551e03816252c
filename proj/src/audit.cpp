#include "chipfire/audit.hpp"

#include "chipfire/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace chipfire {

namespace {

std::string describe_config(const ChipConfiguration& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

/// Enumerates every configuration on n vertices with total chips <= bound,
/// in lexicographic order.
template <class Fn>
void for_each_bounded_total(int n, int bound, Fn fn) {
    std::vector<int> c(n, 0);
    int total = 0;
    while (true) {
        fn(c);
        int pos = n - 1;
        while (pos >= 0 && total == bound) {
            total -= c[pos];
            c[pos--] = 0;
        }
        if (pos < 0)
            break;
        ++c[pos];
        ++total;
    }
}

class StopWatch {
public:
    std::chrono::duration<double> read() const {
        return std::chrono::steady_clock::now() - start_;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace

AuditReport audit_no_period2_orientations(const UndirectedGraph& base, int total_chip_bound,
                                          std::uint64_t max_rounds) {
    StopWatch watch;
    AuditReport report;
    report.claim = "no-period-2-orientations";
    report.parameters = "vertices=" + std::to_string(base.vertex_count()) +
                        " edges=" + std::to_string(base.edge_count()) +
                        " total_chip_bound=" + std::to_string(total_chip_bound) +
                        " max_rounds=" + std::to_string(max_rounds);
    std::uint64_t orientation_index = 0;
    for_each_orientation(base, [&](const DirectedMultigraph& oriented) {
        for_each_bounded_total(base.vertex_count(), total_chip_bound,
                               [&](const std::vector<int>& raw) {
            ChipConfiguration c(raw.begin(), raw.end());
            ++report.instances_checked;
            try {
                const PeriodSummary s = detect_period(oriented, c, max_rounds);
                if (s.period == 2)
                    report.violations.push_back("orientation #" +
                                                std::to_string(orientation_index) +
                                                " with chips " + describe_config(c) +
                                                " reaches period 2");
            } catch (const BudgetExhausted&) {
                report.complete = false;
            }
        });
        ++orientation_index;
    });
    report.elapsed = watch.read();
    return report;
}

AuditReport audit_cycle_periods(int n, int total_chip_bound, std::uint64_t max_rounds) {
    StopWatch watch;
    AuditReport report;
    report.claim = "cycle-periods-divide-n";
    report.parameters = "n=" + std::to_string(n) +
                        " total_chip_bound=" + std::to_string(total_chip_bound) +
                        " max_rounds=" + std::to_string(max_rounds);
    const DirectedMultigraph cycle = directed_cycle(n);

    std::set<std::uint64_t> observed;
    for_each_bounded_total(n, total_chip_bound, [&](const std::vector<int>& raw) {
        ChipConfiguration c(raw.begin(), raw.end());
        ++report.instances_checked;
        try {
            const PeriodSummary s = detect_period(cycle, c, max_rounds);
            observed.insert(s.period);
            if (n % s.period != 0)
                report.violations.push_back("chips " + describe_config(c) + " reach period " +
                                            std::to_string(s.period) +
                                            ", which does not divide " + std::to_string(n));
        } catch (const BudgetExhausted&) {
            report.complete = false;
        }
    });

    for (int i = 1; i <= n; ++i) {
        if (n % i != 0)
            continue;
        const GadgetGame game = cycle_divisor_game(n, i);
        ++report.instances_checked;
        const PeriodSummary s = detect_period(game.digraph(), game.initial, max_rounds);
        if (s.period != static_cast<std::uint64_t>(i))
            report.violations.push_back("divisor construction i=" + std::to_string(i) +
                                        " realized period " + std::to_string(s.period));
    }

    std::ostringstream os;
    os << "observed_periods=";
    bool first = true;
    for (std::uint64_t p : observed) {
        os << (first ? "" : ",") << p;
        first = false;
    }
    report.notes = os.str();
    report.elapsed = watch.read();
    return report;
}

AuditReport audit_stationary_fire_counts(const DirectedMultigraph& g, int samples, unsigned seed,
                                         int total_chip_bound, std::uint64_t max_rounds) {
    StopWatch watch;
    if (!is_strongly_connected(g))
        throw std::invalid_argument("fire-count audit needs a strongly connected graph");

    AuditReport report;
    report.claim = "stationary-fire-counts";
    report.parameters = "vertices=" + std::to_string(g.vertex_count()) +
                        " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                        " total_chip_bound=" + std::to_string(total_chip_bound) +
                        " max_rounds=" + std::to_string(max_rounds);

    const FiringVector minimal = minimal_positive_kernel_vector(g);
    const std::optional<int> complete_n = match_useful_complete(g);
    const std::optional<int> bipartite_a = match_useful_bipartite(g);

    std::mt19937 rng(seed);
    const int n = g.vertex_count();
    std::uint64_t periodic_games = 0;
    for (int sample = 0; sample < samples; ++sample) {
        // Random total in [0, bound], thrown one chip at a time onto random
        // vertices; reproducible given the seed.
        ChipConfiguration c(n, 0);
        const int total = std::uniform_int_distribution<int>(0, total_chip_bound)(rng);
        for (int t = 0; t < total; ++t)
            c[std::uniform_int_distribution<int>(0, n - 1)(rng)] += 1;

        ++report.instances_checked;
        PeriodSummary s;
        try {
            s = detect_period(g, c, max_rounds);
        } catch (const BudgetExhausted&) {
            report.complete = false;
            continue;
        }
        if (s.period <= 1)
            continue;
        ++periodic_games;

        const BigInt min_fires = *std::min_element(s.fire_counts.begin(), s.fire_counts.end());
        if (min_fires < 1)
            report.violations.push_back("game " + describe_config(c) +
                                        " has a forever-passive vertex despite period " +
                                        std::to_string(s.period));

        const BigInt max_fires = *std::max_element(s.fire_counts.begin(), s.fire_counts.end());
        if (complete_n && *complete_n >= 4 && s.fire_counts[2] != max_fires)
            report.violations.push_back("game " + describe_config(c) +
                                        " on useful K_n: f_3 is not the maximum");
        if (bipartite_a && *bipartite_a >= 3 && s.fire_counts[3] != max_fires)
            report.violations.push_back("game " + describe_config(c) +
                                        " on useful K_{a,a}: f_4 is not the maximum");

        std::vector<BigInt> reduced = s.fire_counts;
        const BigInt g0 = vector_gcd(reduced);
        if (g0 > 1)
            for (BigInt& e : reduced)
                e /= g0;
        if (reduced != minimal.counts)
            report.violations.push_back("game " + describe_config(c) +
                                        " firing counts do not reduce to the kernel vector");
    }
    report.notes = "periodic_games=" + std::to_string(periodic_games);
    report.elapsed = watch.read();
    return report;
}

} // namespace chipfire
