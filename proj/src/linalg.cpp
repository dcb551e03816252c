#include "chipfire/linalg.hpp"

#include "chipfire/constructions.hpp"

#include <utility>

namespace chipfire {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * cols, BigRat(0));
}

void ExactMatrix::swap_rows(int a, int b) {
    if (a == b)
        return;
    for (int j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RrefResult reduced_row_echelon(ExactMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot_row = -1;
        for (int r = rank; r < rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0)
            continue;
        m.swap_rows(rank, pivot_row);
        const BigRat scale = m.at(rank, col);
        for (int j = col; j < cols; ++j)
            m.at(rank, j) /= scale;
        for (int r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const BigRat factor = m.at(r, col);
            if (factor == 0)
                continue;
            for (int j = col; j < cols; ++j)
                m.at(r, j) -= factor * m.at(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(m), rank, std::move(pivots)};
}

ExactMatrix balance_laplacian(const DirectedMultigraph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("balance system needs at least one vertex");
    ExactMatrix L(n, n);
    for (int v = 0; v < n; ++v)
        L.at(v, v) = g.out_degree(v);
    for (const auto& [u, v] : g.edges())
        L.at(v, u) -= 1;
    return L;
}

FiringVector minimal_positive_kernel_vector(const DirectedMultigraph& g) {
    const int n = g.vertex_count();
    const RrefResult sol = reduced_row_echelon(balance_laplacian(g));
    if (sol.rank != n - 1)
        throw KernelStructureError(sol.rank, n - 1);

    // The single free column spans the kernel.
    std::vector<bool> is_pivot(n, false);
    for (int c : sol.pivot_columns)
        is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c])
            free_col = c;

    std::vector<BigRat> x(n, BigRat(0));
    x[free_col] = 1;
    for (int r = 0; r < sol.rank; ++r)
        x[sol.pivot_columns[r]] = -sol.rref.at(r, free_col);

    BigInt common = 1;
    for (const BigRat& q : x)
        common = boost::multiprecision::lcm(common, denominator(q));
    std::vector<BigInt> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = numerator(x[i]) * (common / denominator(x[i]));

    const BigInt g0 = vector_gcd(v);
    if (g0 > 1)
        for (BigInt& e : v)
            e /= g0;
    bool any_neg = false, any_pos = false;
    for (const BigInt& e : v) {
        if (e < 0)
            any_neg = true;
        else if (e > 0)
            any_pos = true;
    }
    if (any_neg && any_pos)
        throw std::runtime_error("no strictly positive solution: kernel vector has mixed signs");
    if (any_neg)
        for (BigInt& e : v)
            e = -e;
    for (const BigInt& e : v)
        if (e == 0)
            throw std::runtime_error("no strictly positive solution: kernel vector has a zero entry");
    return FiringVector{std::move(v)};
}

BigInt complete_graph_recurrence(int n) {
    if (n <= 0)
        throw std::invalid_argument("recurrence index must be positive");
    if (n <= 3)
        return 1;
    BigInt t_prev2 = 1; // T_2
    BigInt t_prev1 = 1; // T_3
    BigInt t = 0;
    for (int k = 4; k <= n; ++k) {
        t = t_prev2 + (k - 1) * t_prev1;
        t_prev2 = t_prev1;
        t_prev1 = t;
    }
    return t;
}

BigInt bipartite_lower_bound(int a) {
    if (a < 2)
        throw std::invalid_argument("bipartite bound needs a >= 2");
    const FiringVector f = minimal_positive_kernel_vector(useful_bipartite(a));
    return f.counts[3]; // vertex v_4 fires the most
}

} // namespace chipfire
