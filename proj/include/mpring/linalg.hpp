#ifndef MPRING_LINALG_HPP
#define MPRING_LINALG_HPP

#include <optional>
#include <vector>

#include "mpring/matrix.hpp"

namespace mpring {

/// Exact determinant of a square matrix over any supported ring. Field
/// entries eliminate directly; Z_m and Z entries lift to integers and use
/// fraction-free (Bareiss) elimination.
Scalar determinant(const MatrixElement& a);

/// Exact two-sided inverse, or nullopt when a is not invertible. Over Z_m the
/// matrix is invertible iff its determinant is a unit mod m; over Z iff the
/// determinant is +-1 (adjugate route in both cases).
std::optional<MatrixElement> matrix_inverse(const MatrixElement& a);

/// A = F * G with F of full column rank r and G of full row rank r,
/// r = rank(A). For A = 0 both factors are empty (n x 0 and 0 x n).
struct RankFactorization {
    MatrixElement f;
    MatrixElement g;
    int rank = 0;
};

/// Only defined over QQ and QI, where the involution is positive definite
/// (F*F and GG* are then invertible). Throws UnsupportedRing otherwise.
RankFactorization rank_factorization(const MatrixElement& a);

namespace linalg_detail {

/// Reduced row echelon form over a field (QQ/QI), with the pivot column
/// indices in order. Forward phase is fraction-free with first-nonzero row
/// pivoting; the back phase normalizes pivots by exact division.
struct Rref {
    MatrixElement m;
    std::vector<int> pivot_cols;
};
Rref reduced_row_echelon(const MatrixElement& a);
int rank(const MatrixElement& a);

} // namespace linalg_detail

} // namespace mpring

#endif
