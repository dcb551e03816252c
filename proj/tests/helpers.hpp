#pragma once

#include "chipfire/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace chipfire::testing {

inline DirectedMultigraph random_digraph(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution keep(edge_prob);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && keep(rng))
                edges.push_back({u, v});
    return DirectedMultigraph(n, std::move(edges));
}

/// Random DAG: edges only from lower to higher rank in a shuffled order.
inline DirectedMultigraph random_dag(std::mt19937& rng, int n, double edge_prob) {
    std::vector<int> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    std::bernoulli_distribution keep(edge_prob);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (rank[u] < rank[v] && keep(rng))
                edges.push_back({u, v});
    return DirectedMultigraph(n, std::move(edges));
}

/// Hamiltonian cycle plus random extra edges, so always strongly connected.
inline DirectedMultigraph random_strongly_connected(std::mt19937& rng, int n, double extra_prob) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    std::bernoulli_distribution keep(extra_prob);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (u + 1) % n != v && keep(rng))
                edges.push_back({u, v});
    return DirectedMultigraph(n, std::move(edges));
}

/// Random spanning tree plus extra edges; always connected.
inline UndirectedGraph random_connected_undirected(std::mt19937& rng, int n, double extra_prob) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
    std::bernoulli_distribution keep(extra_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool in_tree = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
                return e == Edge{std::min(u, v), std::max(u, v)} ||
                       e == Edge{std::max(u, v), std::min(u, v)};
            });
            if (!in_tree && keep(rng))
                edges.push_back({u, v});
        }
    return UndirectedGraph(n, std::move(edges));
}

inline ChipConfiguration random_config(std::mt19937& rng, int n, int max_per_vertex) {
    ChipConfiguration c(n);
    std::uniform_int_distribution<int> d(0, max_per_vertex);
    for (int v = 0; v < n; ++v)
        c[v] = d(rng);
    return c;
}

} // namespace chipfire::testing
