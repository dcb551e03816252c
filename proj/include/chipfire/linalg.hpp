#pragma once

#include "chipfire/graph.hpp"
#include "chipfire/numeric.hpp"

#include <stdexcept>
#include <string>

namespace chipfire {

/// Dense matrix of exact rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigRat& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigRat& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    void swap_rows(int a, int b);

    static ExactMatrix identity(int n);

    bool operator==(const ExactMatrix& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<BigRat> entries_;
};

struct RrefResult {
    ExactMatrix rref;
    int rank = 0;
    std::vector<int> pivot_columns;
};

/// Exact Gauss-Jordan elimination with deterministic pivoting (first nonzero
/// entry in column order); no numerical stabilization is needed over Q.
RrefResult reduced_row_echelon(ExactMatrix m);

/// The per-period balance system of g as an n x n integer-valued matrix:
/// row v reads deg+(v) * f_v - sum over edges (u, v) of f_u = 0, i.e. chips
/// leaving v per period equal chips arriving. L * f = 0 is exactly the
/// stationarity condition for firing vectors, and L is the (directed)
/// Laplacian of g.
ExactMatrix balance_laplacian(const DirectedMultigraph& g);

/// Strictly positive integer firing vector, entries coprime.
struct FiringVector {
    std::vector<BigInt> counts;
};

/// Raised when the balance system's kernel is not one-dimensional.
class KernelStructureError : public std::runtime_error {
public:
    KernelStructureError(int rank, int expected)
        : std::runtime_error("balance system has rank " + std::to_string(rank) + ", expected " +
                             std::to_string(expected) + " (kernel not one-dimensional)"),
          rank(rank) {}

    int rank;
};

/// Solves L * f = 0 for the smallest strictly positive integer vector:
/// kernel basis over Q, cleared denominators, divided by the gcd, sign
/// flipped positive. Requires a one-dimensional kernel (strongly connected
/// inputs); throws KernelStructureError otherwise, or std::runtime_error if
/// the kernel vector has mixed signs or zeros.
FiringVector minimal_positive_kernel_vector(const DirectedMultigraph& g);

/// T_1 = T_2 = T_3 = 1; T_n = T_{n-2} + (n-1) T_{n-1} for n >= 4. Grows at
/// least factorially: the minimal f_3 on the useful orientation of K_n.
BigInt complete_graph_recurrence(int n);

/// Minimal f_4 on the useful orientation of K_{a,a} (no closed form; the
/// exact solver is the definition).
BigInt bipartite_lower_bound(int a);

} // namespace chipfire
