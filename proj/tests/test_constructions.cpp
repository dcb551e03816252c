#include "chipfire/constructions.hpp"

#include "chipfire/linalg.hpp"
#include "doctest.h"
#include "helpers.hpp"

#include <set>

using namespace chipfire;

namespace {

std::set<Edge> edge_set(const DirectedMultigraph& g) {
    const auto sorted = g.sorted_edges();
    return {sorted.begin(), sorted.end()};
}

PeriodSummary detect_game(const GadgetGame& game) {
    if (game.is_directed())
        return detect_period(game.digraph(), game.initial);
    return detect_period(game.ungraph(), game.initial);
}

} // namespace

TEST_CASE("directed cycle construction") {
    CHECK_THROWS_AS(directed_cycle(1), std::invalid_argument);

    const DirectedMultigraph c2 = directed_cycle(2);
    CHECK(edge_set(c2) == std::set<Edge>{{0, 1}, {1, 0}});

    const DirectedMultigraph c3 = directed_cycle(3);
    for (int v = 0; v < 3; ++v) {
        CHECK(c3.out_degree(v) == 1);
        CHECK(c3.in_degree(v) == 1);
    }

    // chips travel toward lower indices
    const DirectedMultigraph c5 = directed_cycle(5);
    CHECK(edge_set(c5) == std::set<Edge>{{1, 0}, {2, 1}, {3, 2}, {4, 3}, {0, 4}});
}

TEST_CASE("cycle divisor games") {
    CHECK_THROWS_AS(cycle_divisor_game(6, 4), std::invalid_argument);
    CHECK_THROWS_AS(cycle_divisor_game(6, 0), std::invalid_argument);

    const GadgetGame g63 = cycle_divisor_game(6, 3);
    CHECK(g63.initial == ChipConfiguration{1, 0, 0, 1, 0, 0});
    CHECK(detect_game(g63).period == 3);

    CHECK(detect_game(cycle_divisor_game(5, 1)).period == 1);
    CHECK(detect_game(cycle_divisor_game(4, 4)).period == 4);
}

TEST_CASE("divisor game rotates one position per round") {
    const GadgetGame game = cycle_divisor_game(6, 2);
    CHECK(total_chips(game.initial) == 3);
    ChipConfiguration c = game.initial;
    for (int t = 1; t <= 6; ++t) {
        c = step_directed(game.digraph(), c).next;
        for (int j = 0; j < 6; ++j)
            CHECK(c[j] == (game.initial[(j + t) % 6]));
    }
}

TEST_CASE("useful orientation of K_n") {
    CHECK_THROWS_AS(useful_complete(2), std::invalid_argument);

    CHECK(edge_set(useful_complete(3)) == std::set<Edge>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(edge_set(useful_complete(4)) ==
          std::set<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}});
    // the K_5 diagram: 1->2,2->3,3->4,4->5,5->1, 1->3,1->4, 4->2, 5->2,5->3
    CHECK(edge_set(useful_complete(5)) == std::set<Edge>{{0, 1},
                                                         {1, 2},
                                                         {2, 3},
                                                         {3, 4},
                                                         {4, 0},
                                                         {0, 2},
                                                         {0, 3},
                                                         {3, 1},
                                                         {4, 1},
                                                         {4, 2}});

    for (int n = 3; n <= 9; ++n) {
        const DirectedMultigraph g = useful_complete(n);
        CHECK(g.edge_count() == n * (n - 1) / 2);
        CHECK(is_strongly_connected(g));
        CHECK(underlying_undirected(g).edges() == complete_graph(n).edges());
    }
}

TEST_CASE("useful orientation of K_{a,a}") {
    CHECK_THROWS_AS(useful_bipartite(1), std::invalid_argument);

    // a = 2 degenerates to a directed 4-cycle
    const DirectedMultigraph k22 = useful_bipartite(2);
    CHECK(k22.edge_count() == 4);
    for (int v = 0; v < 4; ++v) {
        CHECK(k22.out_degree(v) == 1);
        CHECK(k22.in_degree(v) == 1);
    }
    CHECK(is_strongly_connected(k22));

    // a = 3: chain plus 1->4, 5->2, 6->3
    CHECK(edge_set(useful_bipartite(3)) == std::set<Edge>{{0, 1},
                                                          {1, 2},
                                                          {2, 3},
                                                          {3, 4},
                                                          {4, 5},
                                                          {5, 0},
                                                          {0, 3},
                                                          {4, 1},
                                                          {5, 2}});

    // the K_{4,4} diagram: chain 1..8 + 8->1, plus 1->4,1->6,6->3,8->3,8->5,5->2,7->2,7->4
    CHECK(edge_set(useful_bipartite(4)) ==
          std::set<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                         {0, 3}, {0, 5}, {5, 2}, {7, 2}, {7, 4}, {4, 1}, {6, 1}, {6, 3}});

    for (int a = 2; a <= 9; ++a) {
        const DirectedMultigraph g = useful_bipartite(a);
        CHECK(g.edge_count() == a * a);
        CHECK(is_strongly_connected(g));
        // odd one-based labels (even indices) on one side, even on the other
        for (const auto& [u, v] : g.edges())
            CHECK(u % 2 != v % 2);
        CHECK(underlying_undirected(g).edge_count() == a * a);
    }
}

TEST_CASE("bipartite orientation with a designated sink component") {
    CHECK_THROWS_AS(bipartite_with_sink(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_with_sink(3, 2), std::invalid_argument);

    SUBCASE("K_{2,3}") {
        const DirectedMultigraph g = bipartite_with_sink(2, 3);
        CHECK(g.vertex_count() == 5);
        CHECK(g.out_degree(4) == 2);
        CHECK(g.in_degree(4) == 0);
        const auto report = scc_partition(g);
        REQUIRE(report.sink_components.size() == 1);
        CHECK(report.components[report.sink_components[0]] == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("K_{3,4} embeds useful K_{3,3}") {
        const DirectedMultigraph g = bipartite_with_sink(3, 4);
        const auto report = scc_partition(g);
        REQUIRE(report.sink_components.size() == 1);
        const auto& sink = report.components[report.sink_components[0]];
        CHECK(sink == std::vector<int>{0, 1, 2, 3, 4, 5});
        // the induced sink subgraph is exactly the useful orientation
        std::vector<Edge> inside;
        for (const auto& e : g.edges())
            if (e.first < 6 && e.second < 6)
                inside.push_back(e);
        CHECK(DirectedMultigraph(6, inside).same_structure(useful_bipartite(3)));
    }
    SUBCASE("extra vertices go passive") {
        std::mt19937 rng(71);
        const DirectedMultigraph g = bipartite_with_sink(2, 3);
        for (int trial = 0; trial < 25; ++trial) {
            const PeriodSummary s = detect_period(g, testing::random_config(rng, 5, 4));
            CHECK(s.fire_counts[4] == 0);
        }
    }
}

TEST_CASE("realize_sequence rejects what no game can produce") {
    CHECK_THROWS_AS(realize_sequence(FiringString("")), std::invalid_argument);
    CHECK_THROWS_AS(realize_sequence(FiringString("00")), UnrealizableSequence);
    CHECK_THROWS_AS(realize_sequence(FiringString("0000")), UnrealizableSequence);
}

TEST_CASE("realize_sequence short cases") {
    SUBCASE("0") {
        const GadgetGame game = realize_sequence(FiringString("0"));
        const PeriodSummary s = detect_game(game);
        CHECK(s.period == 1);
        CHECK(atomic_firing_sequence(s, *game.designated_vertex).bits() == "0");
    }
    SUBCASE("1") {
        const GadgetGame game = realize_sequence(FiringString("1"));
        const PeriodSummary s = detect_game(game);
        CHECK(s.period == 1);
        CHECK(atomic_firing_sequence(s, *game.designated_vertex).bits() == "1");
    }
    SUBCASE("10 and 01 share the C_4 game at different phases") {
        for (const std::string bits : {"10", "01"}) {
            const GadgetGame game = realize_sequence(FiringString(bits));
            const PeriodSummary s = detect_game(game);
            CHECK(s.period == 2);
            CHECK(atomic_firing_sequence(s, *game.designated_vertex).bits() == bits);
        }
    }
    SUBCASE("11 uses the double-fire gadget") {
        const GadgetGame game = realize_sequence(FiringString("11"));
        CHECK(game.vertex_count() == 4);
        const PeriodSummary s = detect_game(game);
        CHECK(s.period == 2);
        CHECK(atomic_firing_sequence(s, 0).bits() == "11");
    }
}

TEST_CASE("non-periodic strings ride a plain cycle") {
    const GadgetGame game = realize_sequence(FiringString("11000"));
    CHECK(game.vertex_count() == 5); // optimization path, no gadget
    const PeriodSummary s = detect_game(game);
    CHECK(s.period == 5);
    CHECK(atomic_firing_sequence(s, 0).bits() == "11000");

    RealizeOptions forced;
    forced.force_full_gadget = true;
    const GadgetGame big = realize_sequence(FiringString("11000"), forced);
    CHECK(big.vertex_count() > 5);
    const PeriodSummary sb = detect_game(big);
    CHECK(sb.period == 5);
    CHECK(atomic_firing_sequence(sb, *big.designated_vertex).bits() == "11000");
}

TEST_CASE("the 1010 gadget matches the worked example") {
    const GadgetGame game = realize_sequence(FiringString("1010"));
    // 4 cycle copies of 3 vertices each + hub + u + 2 waterfall vertices
    CHECK(game.vertex_count() == 16);
    CHECK(game.initial[0] == 6); // c_0(v) = 2n + n

    const TrajectoryRecord record = run_trajectory(game.digraph(), game.initial, 4);
    CHECK(record.configurations[0][0] == 6);
    CHECK(record.configurations[1][0] == 3);
    CHECK(record.configurations[2][0] == 7);
    CHECK(record.configurations[3][0] == 2);
    CHECK(record.configurations[4] == game.initial);

    const PeriodSummary s = detect_game(game);
    CHECK(s.transient == 0);
    CHECK(s.period == 4);
    CHECK(atomic_firing_sequence(s, 0).bits() == "1010");
}

TEST_CASE("every short string with a one is realizable") {
    for (int len = 1; len <= 6; ++len) {
        for (unsigned mask = 1; mask < (1u << len); ++mask) {
            std::string bits(len, '0');
            for (int i = 0; i < len; ++i)
                if ((mask >> i) & 1)
                    bits[i] = '1';
            CAPTURE(bits);

            const GadgetGame game = realize_sequence(FiringString(bits));
            const PeriodSummary s = detect_game(game);
            CHECK(s.period == static_cast<std::uint64_t>(len));
            CHECK(atomic_firing_sequence(s, *game.designated_vertex).bits() == bits);

            if (len >= 3) {
                RealizeOptions forced;
                forced.force_full_gadget = true;
                const GadgetGame big = realize_sequence(FiringString(bits), forced);
                const PeriodSummary sb = detect_game(big);
                CHECK(sb.period == static_cast<std::uint64_t>(len));
                CHECK(atomic_firing_sequence(sb, *big.designated_vertex).bits() == bits);
            }
        }
    }
}

TEST_CASE("undirected period-2 construction") {
    CHECK_THROWS_AS(undirected_t2_game(UndirectedGraph(1, {}), 0), std::invalid_argument);
    CHECK_THROWS_AS(undirected_t2_game(UndirectedGraph(3, {{0, 1}}), 0), std::invalid_argument);

    SUBCASE("two-vertex path") {
        const GadgetGame game = undirected_t2_game(UndirectedGraph(2, {{0, 1}}), 0);
        CHECK(game.initial == ChipConfiguration{1, 0});
        const PeriodSummary s = detect_game(game);
        CHECK(s.period == 2);
        CHECK(s.cycle_configurations[0] == ChipConfiguration{1, 0});
        CHECK(s.cycle_configurations[1] == ChipConfiguration{0, 1});
    }
    SUBCASE("star anchored at the center") {
        const GadgetGame game =
            undirected_t2_game(UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}}), 0);
        CHECK(game.initial == ChipConfiguration{3, 0, 0, 0});
        CHECK(detect_game(game).period == 2);
    }
    SUBCASE("four-cycle") {
        const GadgetGame game = undirected_t2_game(cycle_graph(4), 0);
        CHECK(game.initial == ChipConfiguration{2, 0, 2, 0});
        CHECK(detect_game(game).period == 2);
    }
    SUBCASE("every vertex fires exactly once per period on random graphs") {
        std::mt19937 rng(73);
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = testing::random_connected_undirected(rng, 2 + trial % 9, 0.3);
            const int anchor =
                std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
            const GadgetGame game = undirected_t2_game(g, anchor);
            const PeriodSummary s = detect_game(game);
            CHECK(s.transient == 0);
            CHECK(s.period == 2);
            CHECK(s.fire_counts == std::vector<BigInt>(g.vertex_count(), 1));
        }
    }
}

TEST_CASE("predicted periods hold for every gadget that states one") {
    std::vector<GadgetGame> games;
    games.push_back(cycle_divisor_game(12, 4));
    games.push_back(realize_sequence(FiringString("10110")));
    games.push_back(realize_sequence(FiringString("1001001")));
    games.push_back(undirected_t2_game(complete_graph(5), 2));
    for (const GadgetGame& game : games) {
        REQUIRE(game.predicted_period.has_value());
        CHECK(detect_game(game).period == *game.predicted_period);
    }
}

TEST_CASE("structural matchers recognize the useful families") {
    CHECK(match_useful_complete(useful_complete(6)) == 6);
    CHECK(match_useful_complete(directed_cycle(6)) == std::nullopt);
    CHECK(match_useful_bipartite(useful_bipartite(4)) == 4);
    CHECK(match_useful_bipartite(useful_complete(4)) == std::nullopt);
}

TEST_CASE("the flat-case hub chips are load-bearing") {
    // With no trailing zeros the waterfall delivery arrives one round later
    // than usual, so the hub needs its n extra starting chips; without them
    // the gadget realizes a different game entirely.
    RealizeOptions forced;
    forced.force_full_gadget = true;
    RealizeOptions starved = forced;
    starved.flat_case_extra_chips = false;

    const GadgetGame good = realize_sequence(FiringString("101"), forced);
    const GadgetGame bad = realize_sequence(FiringString("101"), starved);
    CHECK(good.initial[0] == 6);
    CHECK(bad.initial[0] == 4);

    const PeriodSummary sg = detect_game(good);
    CHECK(sg.period == 3);
    CHECK(atomic_firing_sequence(sg, 0).bits() == "101");

    const PeriodSummary sb = detect_game(bad);
    CHECK(sb.period == 4);
    CHECK(atomic_firing_sequence(sb, 0).bits() == "0110");
}
