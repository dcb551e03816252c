#include "chipfire/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace chipfire {

int GadgetGame::vertex_count() const {
    return is_directed() ? digraph().vertex_count() : ungraph().vertex_count();
}

DirectedMultigraph directed_cycle(int n) {
    if (n < 2)
        throw std::invalid_argument("directed cycle needs at least 2 vertices");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i + 1, i});
    edges.push_back({0, n - 1});
    return DirectedMultigraph(n, std::move(edges));
}

GadgetGame cycle_divisor_game(int n, int i) {
    if (i < 1 || n % i != 0)
        throw std::invalid_argument("divisor game needs i >= 1 with i dividing n");
    GadgetGame game{directed_cycle(n), ChipConfiguration(n, 0), std::nullopt,
                    static_cast<std::uint64_t>(i),
                    "C_" + std::to_string(n) + " divisor game, i = " + std::to_string(i)};
    for (int j = 0; j < n; j += i)
        game.initial[j] = 1;
    return game;
}

DirectedMultigraph useful_complete(int n) {
    if (n < 3)
        throw std::invalid_argument("useful orientation of K_n needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) // chain v_i -> v_{i+1}
        edges.push_back({i - 1, i});
    edges.push_back({n - 1, 0}); // v_n -> v_1
    for (int k = 3; k <= n - 1; ++k) // v_1 -> v_k, skipping the chain edge and v_n
        edges.push_back({0, k - 1});
    for (int j = 4; j <= n; ++j) // v_j -> v_k for 1 < k <= j-2
        for (int k = 2; k <= j - 2; ++k)
            edges.push_back({j - 1, k - 1});
    return DirectedMultigraph(n, std::move(edges));
}

DirectedMultigraph useful_bipartite(int a) {
    if (a < 2)
        throw std::invalid_argument("useful orientation of K_{a,a} needs a >= 2");
    const int n = 2 * a;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) // chain v_i -> v_{i+1}
        edges.push_back({i - 1, i});
    edges.push_back({n - 1, 0}); // v_2a -> v_1
    for (int i = 2; i < a; ++i)  // v_1 -> v_{2i}; i = 1 is the chain edge
        edges.push_back({0, 2 * i - 1});
    for (int j = 2; j < a; ++j) // v_{2j+1} -> v_{2k} for k < j
        for (int k = 1; k < j; ++k)
            edges.push_back({2 * j, 2 * k - 1});
    for (int j = 3; j <= a; ++j) // v_{2j} -> v_{2k-1} for 1 < k < j
        for (int k = 2; k < j; ++k)
            edges.push_back({2 * j - 1, 2 * k - 2});
    return DirectedMultigraph(n, std::move(edges));
}

DirectedMultigraph bipartite_with_sink(int a, int b) {
    if (a < 2 || b <= a)
        throw std::invalid_argument("sink embedding needs 2 <= a < b");
    const DirectedMultigraph core = useful_bipartite(a);
    std::vector<Edge> edges = core.edges();
    // Extra right-side vertices point at every left-side (odd-labelled)
    // vertex, so they can never receive chips back.
    for (int extra = 2 * a; extra < a + b; ++extra)
        for (int left = 0; left < 2 * a; left += 2)
            edges.push_back({extra, left});
    return DirectedMultigraph(a + b, std::move(edges));
}

namespace {

GadgetGame plain_cycle_realization(const FiringString& s) {
    const int len = static_cast<int>(s.length());
    GadgetGame game{directed_cycle(len), ChipConfiguration(len, 0), 0,
                    static_cast<std::uint64_t>(len), "C_" + std::to_string(len) + " realizing " +
                                                         s.bits()};
    for (int i = 0; i < len; ++i)
        game.initial[i] = s.bits()[i] == '1' ? 1 : 0;
    return game;
}

GadgetGame waterfall_gadget(const FiringString& s, const RealizeOptions& options) {
    const int len = static_cast<int>(s.length());
    const int ones = static_cast<int>(s.ones());
    const int trailing = static_cast<int>(s.trailing_zeros());
    const int copies = 2 * ones;
    const int fall_len = std::max(trailing, 1);

    // Vertex layout: hub v first, then each copy's v_1..v_{l-1}, then u,
    // then the waterfalls in order.
    const int hub = 0;
    const auto cycle_vertex = [&](int copy, int i) { return 1 + copy * (len - 1) + (i - 1); };
    const int u = 1 + copies * (len - 1);
    const auto fall_vertex = [&](int fall, int i) { return u + 1 + fall * fall_len + i; };
    const int total = u + 1 + ones * fall_len;

    std::vector<Edge> edges;
    for (int j = 0; j < copies; ++j) {
        edges.push_back({cycle_vertex(j, 1), hub}); // v_1 -> v_0
        for (int i = 1; i + 1 < len; ++i)
            edges.push_back({cycle_vertex(j, i + 1), cycle_vertex(j, i)});
        edges.push_back({hub, cycle_vertex(j, len - 1)}); // v_0 -> v_{l-1}
    }
    edges.push_back({hub, u});
    for (int j = 0; j < ones; ++j) {
        edges.push_back({u, fall_vertex(j, 0)});
        for (int i = 0; i + 1 < fall_len; ++i)
            edges.push_back({fall_vertex(j, i), fall_vertex(j, i + 1)});
        edges.push_back({fall_vertex(j, fall_len - 1), hub});
    }

    ChipConfiguration chips(total, 0);
    for (int j = 0; j < copies; ++j)
        for (int i = 1; i < len; ++i)
            chips[cycle_vertex(j, i)] = s.bits()[i] == '1' ? 1 : 0;
    chips[hub] = s.bits()[0] == '1' ? copies : 0;
    if (trailing >= 1) {
        for (int j = 0; j < ones; ++j)
            chips[fall_vertex(j, fall_len - 1)] = 1;
        chips[hub] += ones;
    } else {
        chips[u] = ones;
        if (options.flat_case_extra_chips)
            chips[hub] += ones;
    }

    return GadgetGame{DirectedMultigraph(total, std::move(edges)), std::move(chips), hub,
                      static_cast<std::uint64_t>(len), "waterfall gadget realizing " + s.bits()};
}

} // namespace

GadgetGame realize_sequence(const FiringString& s, RealizeOptions options) {
    const std::string& bits = s.bits();
    if (bits.empty())
        throw std::invalid_argument("cannot realize the empty firing string");
    if (s.ones() == 0 && bits.size() >= 2)
        throw UnrealizableSequence(
            "no vertex of a strongly connected game with period >= 2 can stay passive for a "
            "whole period, so '" + bits + "' is unrealizable");

    if (bits == "0") {
        GadgetGame game{directed_cycle(3), ChipConfiguration(3, 0), 0, 1, "idle C_3"};
        return game;
    }
    if (bits == "1") {
        GadgetGame game{directed_cycle(3), ChipConfiguration(3, 1), 0, 1, "saturated C_3"};
        return game;
    }
    if (bits == "10" || bits == "01") {
        GadgetGame game{directed_cycle(4), ChipConfiguration(4, 0), bits == "10" ? 0 : 1, 2,
                        "C_4 alternator"};
        game.initial[0] = 1;
        game.initial[2] = 1;
        return game;
    }
    if (bits == "11") {
        // The 4-vertex graph of the length-2 case: v_1 fires on both rounds.
        DirectedMultigraph g(4, {{0, 1}, {1, 2}, {1, 3}, {2, 0}, {3, 0}});
        GadgetGame game{std::move(g), {2, 2, 0, 0}, 0, 2, "double-fire gadget"};
        return game;
    }

    if (!options.force_full_gadget && minimal_string_period(s) == s.length())
        return plain_cycle_realization(s);
    return waterfall_gadget(s, options);
}

GadgetGame undirected_t2_game(const UndirectedGraph& g, int anchor) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("period-2 construction needs at least 2 vertices");
    if (anchor < 0 || anchor >= g.vertex_count())
        throw std::invalid_argument("anchor vertex out of range");
    if (!g.connected())
        throw std::invalid_argument("period-2 construction needs a connected graph");

    const std::vector<int> dist = bfs_distance(g, anchor);
    ChipConfiguration chips(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] % 2 == 0) {
            chips[v] = g.degree(v);
        } else {
            int cross = 0;
            for (int w : g.neighbors(v))
                if (dist[w] != dist[v])
                    ++cross;
            chips[v] = g.degree(v) - cross;
        }
    }
    return GadgetGame{g, std::move(chips), anchor, 2,
                      "period-2 game anchored at v" + std::to_string(anchor)};
}

std::optional<int> match_useful_complete(const DirectedMultigraph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n * (n - 1) / 2)
        return std::nullopt;
    if (g.same_structure(useful_complete(n)))
        return n;
    return std::nullopt;
}

std::optional<int> match_useful_bipartite(const DirectedMultigraph& g) {
    const int n = g.vertex_count();
    if (n < 4 || n % 2 != 0)
        return std::nullopt;
    const int a = n / 2;
    if (g.edge_count() != a * a)
        return std::nullopt;
    if (g.same_structure(useful_bipartite(a)))
        return a;
    return std::nullopt;
}

} // namespace chipfire
