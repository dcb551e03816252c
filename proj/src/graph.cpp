#include "chipfire/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace chipfire {

DirectedMultigraph::DirectedMultigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    out_degree_.assign(n_, 0);
    in_degree_.assign(n_, 0);
    out_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed: vertex " + std::to_string(u));
        ++out_degree_[u];
        ++in_degree_[v];
        out_[u].push_back(v);
    }
}

std::vector<Edge> DirectedMultigraph::sorted_edges() const {
    std::vector<Edge> e = edges_;
    std::sort(e.begin(), e.end());
    return e;
}

bool DirectedMultigraph::same_structure(const DirectedMultigraph& other) const {
    return n_ == other.n_ && sorted_edges() == other.sorted_edges();
}

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed: vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate undirected edge");
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool UndirectedGraph::connected() const {
    if (n_ <= 1)
        return true;
    std::vector<bool> seen(n_, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n_;
}

CondensationReport scc_partition(const DirectedMultigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    stack.reserve(n);
    int next_index = 0;
    int comp_count = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> dfs;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        dfs.push_back({root, 0});
        while (!dfs.empty()) {
            Frame& f = dfs.back();
            const auto& succ = g.out_neighbors(f.v);
            if (f.child < succ.size()) {
                const int w = succ[f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    dfs.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                const int v = f.v;
                dfs.pop_back();
                if (!dfs.empty())
                    low[dfs.back().v] = std::min(low[dfs.back().v], low[v]);
                if (low[v] == index[v]) {
                    const int id = comp_count++;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = id;
                    } while (w != v);
                }
            }
        }
    }

    CondensationReport report;
    report.component_of = comp;
    report.components.assign(comp_count, {});
    for (int v = 0; v < n; ++v)
        report.components[comp[v]].push_back(v);
    for (auto& c : report.components)
        std::sort(c.begin(), c.end());

    std::set<Edge> cedges;
    for (const auto& [u, v] : g.edges()) {
        if (comp[u] != comp[v])
            cedges.insert({comp[u], comp[v]});
    }
    report.condensation_edges.assign(cedges.begin(), cedges.end());

    std::vector<bool> has_out(comp_count, false);
    for (const auto& [a, b] : report.condensation_edges)
        has_out[a] = true;
    for (int id = 0; id < comp_count; ++id)
        if (!has_out[id])
            report.sink_components.push_back(id);
    return report;
}

bool is_dag(const DirectedMultigraph& g) {
    const auto report = scc_partition(g);
    for (const auto& c : report.components)
        if (c.size() > 1)
            return false;
    return true;
}

bool is_strongly_connected(const DirectedMultigraph& g) {
    return scc_partition(g).components.size() <= 1;
}

std::vector<int> bfs_distance(const UndirectedGraph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

void for_each_orientation(const UndirectedGraph& g,
                          const std::function<void(const DirectedMultigraph&)>& fn,
                          int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges)
        throw std::invalid_argument("orientation enumeration refused: " + std::to_string(m) +
                                    " edges exceeds the limit of " + std::to_string(max_edges) +
                                    " (2^m orientations)");
    const std::uint64_t count = std::uint64_t{1} << m;
    std::vector<Edge> oriented(m);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (int i = 0; i < m; ++i) {
            const auto& [u, v] = g.edges()[i];
            oriented[i] = (mask >> i) & 1 ? Edge{v, u} : Edge{u, v};
        }
        fn(DirectedMultigraph(g.vertex_count(), oriented));
    }
}

std::vector<DirectedMultigraph> enumerate_orientations(const UndirectedGraph& g, int max_edges) {
    std::vector<DirectedMultigraph> all;
    for_each_orientation(g, [&](const DirectedMultigraph& d) { all.push_back(d); }, max_edges);
    return all;
}

UndirectedGraph underlying_undirected(const DirectedMultigraph& g) {
    std::set<Edge> pairs;
    for (auto [u, v] : g.edges()) {
        if (u > v)
            std::swap(u, v);
        pairs.insert({u, v});
    }
    return UndirectedGraph(g.vertex_count(), {pairs.begin(), pairs.end()});
}

UndirectedGraph complete_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite graph needs nonempty parts");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({i, a + j});
    return UndirectedGraph(a + b, std::move(edges));
}

UndirectedGraph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("undirected cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return UndirectedGraph(n, std::move(edges));
}

} // namespace chipfire
