#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace chipfire {

using Edge = std::pair<int, int>;

/// Directed graph with parallel edges allowed (edge list is a multiset).
/// Vertices are dense indices 0..n-1; self-loops are rejected because the
/// firing rule would be ambiguous for them. Immutable after construction:
/// degree and adjacency tables are built once so simulation loops stay
/// allocation-free.
class DirectedMultigraph {
public:
    DirectedMultigraph() = default; // empty graph
    DirectedMultigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int out_degree(int v) const { return out_degree_[v]; }
    int in_degree(int v) const { return in_degree_[v]; }

    /// Targets of v's out-edges, one entry per edge (multiplicity kept).
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }

    std::vector<Edge> sorted_edges() const;
    bool same_structure(const DirectedMultigraph& other) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> out_degree_;
    std::vector<int> in_degree_;
    std::vector<std::vector<int>> out_;
};

/// Simple undirected graph: no self-loops, no duplicate edges. Edges are
/// stored normalized (u < v) and sorted.
class UndirectedGraph {
public:
    UndirectedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct CondensationReport {
    std::vector<int> component_of;          // vertex -> component id
    std::vector<std::vector<int>> components; // id -> sorted vertex list
    std::vector<Edge> condensation_edges;   // unique, sorted (from, to) pairs
    std::vector<int> sink_components;       // ids with no outgoing edge, sorted
};

/// Tarjan's algorithm (iterative). Components partition the vertices; the
/// condensation is acyclic by construction.
CondensationReport scc_partition(const DirectedMultigraph& g);

/// True iff g has no directed cycle, i.e. every SCC is a singleton.
bool is_dag(const DirectedMultigraph& g);

bool is_strongly_connected(const DirectedMultigraph& g);

/// BFS distances from source in edge count; -1 marks unreachable vertices.
std::vector<int> bfs_distance(const UndirectedGraph& g, int source);

inline constexpr int kDefaultOrientationLimit = 24;

/// Calls fn with each of the 2^m orientations of g. Bit i of the running
/// counter picks the direction of edge i (0 keeps the stored (u,v) order,
/// 1 reverses it), so the order is reproducible. Refuses when the edge count
/// exceeds max_edges.
void for_each_orientation(const UndirectedGraph& g,
                          const std::function<void(const DirectedMultigraph&)>& fn,
                          int max_edges = kDefaultOrientationLimit);

std::vector<DirectedMultigraph> enumerate_orientations(const UndirectedGraph& g,
                                                       int max_edges = kDefaultOrientationLimit);

/// Support graph of a digraph: one undirected edge per unordered pair that
/// carries at least one directed edge.
UndirectedGraph underlying_undirected(const DirectedMultigraph& g);

UndirectedGraph complete_graph(int n);
UndirectedGraph complete_bipartite(int a, int b);
UndirectedGraph cycle_graph(int n);

} // namespace chipfire
