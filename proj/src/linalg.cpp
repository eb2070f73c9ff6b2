#include "mpring/linalg.hpp"

namespace mpring {

namespace {

bool field_kind(ScalarKind kind) {
    return kind == ScalarKind::rational || kind == ScalarKind::gaussian_rational;
}

/// Integer entries of a Z_m or Z matrix, row-major.
std::vector<BigInt> lift_to_integers(const MatrixElement& a) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(a.rows()) * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& s = a.at(i, j);
            out.push_back(s.kind() == ScalarKind::mod_int ? BigInt(s.as_mod().value)
                                                          : s.as_integer());
        }
    return out;
}

/// Bareiss fraction-free determinant of an n x n integer matrix.
BigInt integer_determinant(std::vector<BigInt> m, int n) {
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n + j]; };
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (at(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? prev : -prev;
}

/// Cofactor expansion is avoided; each adjugate entry is a Bareiss minor.
std::vector<BigInt> integer_adjugate(const std::vector<BigInt>& m, int n) {
    std::vector<BigInt> adj(static_cast<std::size_t>(n) * n);
    if (n == 0) return adj;
    std::vector<BigInt> minor(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int r = 0;
            for (int ii = 0; ii < n; ++ii) {
                if (ii == i) continue;
                int c = 0;
                for (int jj = 0; jj < n; ++jj) {
                    if (jj == j) continue;
                    minor[static_cast<std::size_t>(r) * (n - 1) + c] =
                        m[static_cast<std::size_t>(ii) * n + jj];
                    ++c;
                }
                ++r;
            }
            BigInt cof = integer_determinant(minor, n - 1);
            if ((i + j) % 2 != 0) cof = -cof;
            adj[static_cast<std::size_t>(j) * n + i] = cof; // transposed
        }
    }
    return adj;
}

Scalar field_determinant(MatrixElement m) {
    const int n = m.rows();
    Scalar det = m.ring().one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) { pivot = i; break; }
        if (pivot < 0) return m.ring().zero();
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            det = -det;
        }
        det = det * m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            Scalar factor = m.at(i, k) / m.at(k, k);
            for (int j = k; j < n; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(k, j);
        }
    }
    return det;
}

std::optional<MatrixElement> field_inverse(const MatrixElement& a) {
    const int n = a.rows();
    MatrixElement m = a;
    MatrixElement inv(a.ring(), n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = a.ring().one();

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(k, j));
                std::swap(inv.at(pivot, j), inv.at(k, j));
            }
        Scalar d = m.at(k, k);
        for (int j = 0; j < n; ++j) {
            m.at(k, j) = m.at(k, j) / d;
            inv.at(k, j) = inv.at(k, j) / d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m.at(i, k).is_zero()) continue;
            Scalar factor = m.at(i, k);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - factor * m.at(k, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

} // namespace

Scalar determinant(const MatrixElement& a) {
    if (!a.is_square()) throw ContextError("determinant of non-square matrix");
    if (field_kind(a.ring().kind)) return field_determinant(a);
    BigInt det = integer_determinant(lift_to_integers(a), a.rows());
    if (a.ring().kind == ScalarKind::integer) return Scalar::integer(det);
    BigInt r = det % a.ring().modulus;
    if (r < 0) r += a.ring().modulus;
    return Scalar::mod(static_cast<std::int64_t>(r), a.ring().modulus);
}

std::optional<MatrixElement> matrix_inverse(const MatrixElement& a) {
    if (!a.is_square()) throw ContextError("inverse of non-square matrix");
    if (field_kind(a.ring().kind)) return field_inverse(a);

    // Z_m / Z: invertible iff det is a unit; inverse = det^{-1} * adjugate.
    const int n = a.rows();
    auto lifted = lift_to_integers(a);
    BigInt det = integer_determinant(lifted, n);
    Scalar det_scalar = a.ring().kind == ScalarKind::integer
                            ? Scalar::integer(det)
                            : [&] {
                                  BigInt r = det % a.ring().modulus;
                                  if (r < 0) r += a.ring().modulus;
                                  return Scalar::mod(static_cast<std::int64_t>(r),
                                                     a.ring().modulus);
                              }();
    auto det_inv = det_scalar.inverse();
    if (!det_inv) return std::nullopt;

    auto adj = integer_adjugate(lifted, n);
    MatrixElement inv(a.ring(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const BigInt& c = adj[static_cast<std::size_t>(i) * n + j];
            Scalar entry = a.ring().kind == ScalarKind::integer
                               ? Scalar::integer(c)
                               : [&] {
                                     BigInt r = c % a.ring().modulus;
                                     if (r < 0) r += a.ring().modulus;
                                     return Scalar::mod(static_cast<std::int64_t>(r),
                                                        a.ring().modulus);
                                 }();
            inv.at(i, j) = *det_inv * entry;
        }
    return inv;
}

namespace linalg_detail {

Rref reduced_row_echelon(const MatrixElement& a) {
    if (!field_kind(a.ring().kind))
        throw UnsupportedRing("row reduction requires a field (QQ or QI), got " + a.ring().id());

    MatrixElement m = a;
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    Scalar prev = m.ring().one();
    int row = 0;

    // Fraction-free forward elimination, first nonzero entry as pivot.
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j)) / prev;
            m.at(i, col) = m.ring().zero();
        }
        prev = m.at(row, col);
        pivots.push_back(col);
        ++row;
    }

    // Back phase: normalize pivots to 1 and clear above.
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        const int col = pivots[r];
        Scalar d = m.at(r, col);
        for (int j = col; j < cols; ++j) m.at(r, j) = m.at(r, j) / d;
        for (int i = 0; i < r; ++i) {
            Scalar factor = m.at(i, col);
            if (factor.is_zero()) continue;
            for (int j = col; j < cols; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
    }
    return Rref{std::move(m), std::move(pivots)};
}

int rank(const MatrixElement& a) {
    return static_cast<int>(reduced_row_echelon(a).pivot_cols.size());
}

} // namespace linalg_detail

RankFactorization rank_factorization(const MatrixElement& a) {
    if (!field_kind(a.ring().kind))
        throw UnsupportedRing("rank factorization requires QQ or QI, got " + a.ring().id());

    auto rref = linalg_detail::reduced_row_echelon(a);
    const int r = static_cast<int>(rref.pivot_cols.size());

    // A = A[:, pivot columns] * (nonzero rows of rref(A)).
    MatrixElement f(a.ring(), a.rows(), r);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < r; ++k) f.at(i, k) = a.at(i, rref.pivot_cols[k]);
    MatrixElement g(a.ring(), r, a.cols());
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < a.cols(); ++j) g.at(k, j) = rref.m.at(k, j);
    return RankFactorization{std::move(f), std::move(g), r};
}

} // namespace mpring
