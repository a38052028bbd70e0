#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qchow {

using SparseVec = std::vector<std::pair<int, mpz_class>>;  // sorted by index

// Integer lattice spanned by the columns of an m x n matrix, brought to
// column echelon form by unimodular column operations.  The transform is
// kept so that a solution is expressed in the original columns.
class LatticeSolver {
public:
    LatticeSolver(int rows, const std::vector<SparseVec>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    // x with A x = b, or nullopt when b is not in the lattice.
    std::optional<std::vector<mpz_class>> solve(const std::vector<mpz_class>& b) const;

private:
    struct Pivot {
        int row;
        SparseVec image;      // entries in rows [row, rows_)
        SparseVec transform;  // coefficients on the original columns
    };
    int rows_;
    int cols_;
    std::vector<Pivot> pivots_;  // increasing pivot row
};

// Dense convenience wrapper: A is row-major m x n.
std::optional<std::vector<mpz_class>> hnf_solve(const std::vector<std::vector<mpz_class>>& A,
                                                const std::vector<mpz_class>& b);

// Whether b lies in the column span of A over Z/p for a prime p.
bool in_span_mod_prime(int rows, const std::vector<SparseVec>& columns, const std::vector<mpz_class>& b,
                       std::uint64_t p);

}  // namespace qchow
