#include "chipfire/cli.hpp"

#include "chipfire/audit.hpp"
#include "chipfire/gamefile.hpp"
#include "chipfire/linalg.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace chipfire {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitViolation = 3;
constexpr int kExitBudget = 4;

const char* kUsage =
    "usage: chipfire <command> [args]\n"
    "\n"
    "commands:\n"
    "  simulate FILE --rounds R [--trace]     run R rounds, print the final chips\n"
    "  period FILE [--max-rounds M]           transient, period, firing counts, sequences\n"
    "  solve FILE                             minimal positive firing vector\n"
    "  construct cycle N I                    divisor game on the directed N-cycle\n"
    "  construct complete N                   useful orientation of K_N\n"
    "  construct bipartite A                  useful orientation of K_{A,A}\n"
    "  construct bipartite-sink A B           K_{A,B} with useful K_{A,A} as unique sink\n"
    "  construct sequence BITS [--full-gadget] game realizing BITS as a firing sequence\n"
    "  construct undirected-t2 FILE V         period-2 game on an undirected graph\n"
    "  recurrence --n N                       T_N from the complete-graph recurrence\n"
    "  audit no-t2 [--n N] [--chips B] [--max-rounds M]\n"
    "  audit cycle-divisors N [--chips B] [--max-rounds M]\n"
    "  audit fire-counts FILE [--samples S] [--seed X] [--chips B] [--max-rounds M]\n"
    "  export-dot FILE                        GraphViz output\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::vector<std::string> positional;
    // flag -> value ("" for bare flags)
    std::vector<std::pair<std::string, std::string>> flags;

    bool has(const std::string& name) const {
        for (const auto& [k, v] : flags)
            if (k == name)
                return true;
        return false;
    }

    std::string get(const std::string& name, const std::string& fallback) const {
        for (const auto& [k, v] : flags)
            if (k == name)
                return v;
        return fallback;
    }
};

const std::vector<std::string> kValueFlags = {"--rounds", "--max-rounds", "--n",
                                              "--chips",  "--samples",    "--seed"};
const std::vector<std::string> kBareFlags = {"--trace", "--full-gadget"};

Args parse_args(int argc, const char* const* argv, int from) {
    Args args;
    for (int i = from; i < argc; ++i) {
        const std::string a = argv[i];
        if (a.rfind("--", 0) == 0) {
            if (std::find(kBareFlags.begin(), kBareFlags.end(), a) != kBareFlags.end()) {
                args.flags.push_back({a, ""});
            } else if (std::find(kValueFlags.begin(), kValueFlags.end(), a) !=
                       kValueFlags.end()) {
                if (i + 1 >= argc)
                    throw UsageError("flag " + a + " needs a value");
                args.flags.push_back({a, argv[++i]});
            } else {
                throw UsageError("unknown flag " + a);
            }
        } else {
            args.positional.push_back(a);
        }
    }
    return args;
}

long long to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + " '" + s + "'");
    }
}

GadgetGame load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game_file(buf.str());
}

std::string join_bigints(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

std::string join_config(const ChipConfiguration& c) { return join_bigints(c); }

PeriodSummary detect_game_period(const GadgetGame& game, std::uint64_t max_rounds) {
    if (game.is_directed())
        return detect_period(game.digraph(), game.initial, max_rounds);
    return detect_period(game.ungraph(), game.initial, max_rounds);
}

int cmd_simulate(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1 || !args.has("--rounds"))
        throw UsageError("simulate needs FILE and --rounds");
    const GadgetGame game = load_game(args.positional[0]);
    const auto rounds = static_cast<std::uint64_t>(to_int(args.get("--rounds", ""), "round count"));
    const TrajectoryRecord record =
        game.is_directed() ? run_trajectory(game.digraph(), game.initial, rounds)
                           : run_trajectory(game.ungraph(), game.initial, rounds);
    if (args.has("--trace")) {
        for (std::size_t t = 0; t < record.configurations.size(); ++t) {
            out << "round " << t << ": " << join_config(record.configurations[t]);
            if (t < record.firings.size()) {
                out << " fired=";
                for (bool b : record.firings[t])
                    out << (b ? '1' : '0');
            }
            out << "\n";
        }
    } else {
        out << join_config(record.configurations.back()) << "\n";
    }
    return kExitOk;
}

int cmd_period(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1)
        throw UsageError("period needs exactly one FILE");
    const GadgetGame game = load_game(args.positional[0]);
    const auto max_rounds =
        static_cast<std::uint64_t>(to_int(args.get("--max-rounds", "1000000"), "round budget"));
    const PeriodSummary s = detect_game_period(game, max_rounds);
    out << "transient=" << s.transient << " period=" << s.period
        << " f=" << join_bigints(s.fire_counts) << "\n";
    for (int v = 0; v < game.vertex_count(); ++v)
        out << "v" << v << ": " << atomic_firing_sequence(s, v).bits() << "\n";
    return kExitOk;
}

int cmd_solve(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1)
        throw UsageError("solve needs exactly one FILE");
    const GadgetGame game = load_game(args.positional[0]);
    if (!game.is_directed())
        throw std::invalid_argument("solve works on directed games");
    const DirectedMultigraph& g = game.digraph();
    const FiringVector f = minimal_positive_kernel_vector(g);
    out << "f=" << join_bigints(f.counts) << "\n";
    const auto max_it = std::max_element(f.counts.begin(), f.counts.end());
    out << "max=" << *max_it << " (vertex " << (max_it - f.counts.begin()) << ")\n";
    if (const auto n = match_useful_complete(g)) {
        const BigInt expected = complete_graph_recurrence(*n);
        out << "useful K_" << *n << ": recurrence T = " << expected << ", f_3 = " << f.counts[2]
            << (expected == f.counts[2] ? " (match)" : " (MISMATCH)") << "\n";
    }
    if (const auto a = match_useful_bipartite(g)) {
        out << "useful K_{" << *a << "," << *a << "}: lower bound f_4 = " << f.counts[3] << "\n";
    }
    return kExitOk;
}

int cmd_construct(const Args& args, std::ostream& out) {
    if (args.positional.empty())
        throw UsageError("construct needs a family");
    const std::string& family = args.positional[0];
    GadgetGame game;
    if (family == "cycle") {
        if (args.positional.size() != 3)
            throw UsageError("construct cycle needs N and I");
        game = cycle_divisor_game(static_cast<int>(to_int(args.positional[1], "N")),
                                  static_cast<int>(to_int(args.positional[2], "I")));
    } else if (family == "complete") {
        if (args.positional.size() != 2)
            throw UsageError("construct complete needs N");
        const int n = static_cast<int>(to_int(args.positional[1], "N"));
        game = GadgetGame{useful_complete(n), ChipConfiguration(n, 0), std::nullopt, std::nullopt,
                          "useful K_" + std::to_string(n)};
    } else if (family == "bipartite") {
        if (args.positional.size() != 2)
            throw UsageError("construct bipartite needs A");
        const int a = static_cast<int>(to_int(args.positional[1], "A"));
        game = GadgetGame{useful_bipartite(a), ChipConfiguration(2 * a, 0), std::nullopt,
                          std::nullopt, "useful K_{a,a}"};
    } else if (family == "bipartite-sink") {
        if (args.positional.size() != 3)
            throw UsageError("construct bipartite-sink needs A and B");
        const int a = static_cast<int>(to_int(args.positional[1], "A"));
        const int b = static_cast<int>(to_int(args.positional[2], "B"));
        game = GadgetGame{bipartite_with_sink(a, b), ChipConfiguration(a + b, 0), std::nullopt,
                          std::nullopt, "K_{a,b} with useful sink"};
    } else if (family == "sequence") {
        if (args.positional.size() != 2)
            throw UsageError("construct sequence needs BITS");
        RealizeOptions options;
        options.force_full_gadget = args.has("--full-gadget");
        game = realize_sequence(FiringString(args.positional[1]), options);
    } else if (family == "undirected-t2") {
        if (args.positional.size() != 3)
            throw UsageError("construct undirected-t2 needs FILE and V");
        const GadgetGame base = load_game(args.positional[1]);
        if (base.is_directed())
            throw std::invalid_argument("undirected-t2 needs a 'graph' file");
        game = undirected_t2_game(base.ungraph(), static_cast<int>(to_int(args.positional[2], "V")));
    } else {
        throw UsageError("unknown construct family '" + family + "'");
    }
    out << write_game_file(game);
    return kExitOk;
}

int cmd_recurrence(const Args& args, std::ostream& out) {
    if (!args.has("--n"))
        throw UsageError("recurrence needs --n N");
    out << complete_graph_recurrence(static_cast<int>(to_int(args.get("--n", ""), "index")))
        << "\n";
    return kExitOk;
}

void print_report(const AuditReport& report, std::ostream& out) {
    out << "audit " << report.claim << "\n";
    out << "  parameters: " << report.parameters << "\n";
    out << "  instances checked: " << report.instances_checked << "\n";
    if (!report.notes.empty())
        out << "  " << report.notes << "\n";
    out << "  elapsed: " << report.elapsed.count() << "s\n";
    if (!report.complete)
        out << "  INCOMPLETE: simulation budget exhausted on some instances\n";
    if (report.passed()) {
        out << "  PASS: no violations\n";
    } else {
        out << "  FAIL: " << report.violations.size() << " violation(s)\n";
        for (const auto& v : report.violations)
            out << "    " << v << "\n";
    }
}

int report_exit(const AuditReport& report) {
    if (!report.passed())
        return kExitViolation;
    if (!report.complete)
        return kExitBudget;
    return kExitOk;
}

int cmd_audit(const Args& args, std::ostream& out) {
    if (args.positional.empty())
        throw UsageError("audit needs a claim name");
    const std::string& claim = args.positional[0];
    const auto max_rounds =
        static_cast<std::uint64_t>(to_int(args.get("--max-rounds", "1000000"), "round budget"));
    if (claim == "no-t2") {
        const int n = static_cast<int>(to_int(args.get("--n", "4"), "N"));
        const int chips = static_cast<int>(to_int(args.get("--chips", "8"), "chip bound"));
        const AuditReport report =
            audit_no_period2_orientations(complete_graph(n), chips, max_rounds);
        print_report(report, out);
        return report_exit(report);
    }
    if (claim == "cycle-divisors") {
        if (args.positional.size() != 2)
            throw UsageError("audit cycle-divisors needs N");
        const int n = static_cast<int>(to_int(args.positional[1], "N"));
        const int chips = static_cast<int>(to_int(args.get("--chips", std::to_string(n)), "chip bound"));
        const AuditReport report = audit_cycle_periods(n, chips, max_rounds);
        print_report(report, out);
        return report_exit(report);
    }
    if (claim == "fire-counts") {
        if (args.positional.size() != 2)
            throw UsageError("audit fire-counts needs FILE");
        const GadgetGame game = load_game(args.positional[1]);
        if (!game.is_directed())
            throw std::invalid_argument("fire-counts audit needs a directed game");
        const int samples = static_cast<int>(to_int(args.get("--samples", "500"), "sample count"));
        const auto seed = static_cast<unsigned>(to_int(args.get("--seed", "1"), "seed"));
        const int chips = static_cast<int>(to_int(args.get("--chips", "12"), "chip bound"));
        const AuditReport report =
            audit_stationary_fire_counts(game.digraph(), samples, seed, chips, max_rounds);
        print_report(report, out);
        return report_exit(report);
    }
    throw UsageError("unknown audit claim '" + claim + "'");
}

int cmd_export_dot(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1)
        throw UsageError("export-dot needs exactly one FILE");
    out << export_dot(load_game(args.positional[0]));
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    if (argc < 2) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string command = argv[1];
    try {
        const Args args = parse_args(argc, argv, 2);
        if (command == "simulate")
            return cmd_simulate(args, out);
        if (command == "period")
            return cmd_period(args, out);
        if (command == "solve")
            return cmd_solve(args, out);
        if (command == "construct")
            return cmd_construct(args, out);
        if (command == "recurrence")
            return cmd_recurrence(args, out);
        if (command == "audit")
            return cmd_audit(args, out);
        if (command == "export-dot")
            return cmd_export_dot(args, out);
        if (command == "help" || command == "--help" || command == "-h") {
            out << kUsage;
            return kExitOk;
        }
        err << "unknown command '" << command << "'\n" << kUsage;
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return kExitUsage;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace chipfire
