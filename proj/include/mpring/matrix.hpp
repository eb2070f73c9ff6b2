#ifndef MPRING_MATRIX_HPP
#define MPRING_MATRIX_HPP

#include <vector>

#include "mpring/ring.hpp"

namespace mpring {

/// Dense matrix of exact scalars over one RingContext. Ring elements are the
/// square n-by-n matrices of the context; rectangular shapes (including empty
/// ones) occur only as internal intermediates of rank factorization and
/// projector construction. Values are immutable in spirit: every operation
/// returns a fresh matrix.
class MatrixElement {
public:
    MatrixElement(RingContext ring, int rows, int cols);

    static MatrixElement zero(const RingContext& ring) {
        return MatrixElement(ring, ring.n, ring.n);
    }
    static MatrixElement identity(const RingContext& ring);
    /// n-by-n matrix built from row-major small integers (test/fixture helper).
    static MatrixElement from_ints(const RingContext& ring,
                                   const std::vector<std::vector<std::int64_t>>& rows);

    const RingContext& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_ring_element() const { return rows_ == ring_.n && cols_ == ring_.n; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    MatrixElement operator+(const MatrixElement& rhs) const;
    MatrixElement operator-(const MatrixElement& rhs) const;
    MatrixElement operator*(const MatrixElement& rhs) const;
    MatrixElement operator-() const;

    /// The involution a -> a*: transpose, conjugating entries over QI.
    MatrixElement star() const;

    MatrixElement scalar_mul(const Scalar& c) const;

    bool is_zero() const;
    bool operator==(const MatrixElement& rhs) const;
    bool operator!=(const MatrixElement& rhs) const { return !(*this == rhs); }

    /// Row-major entry text, e.g. "[[1,-1],[-1,-1]]"; diagnostics and memo keys.
    std::string to_string() const;

private:
    void check_same_ring(const MatrixElement& rhs) const;

    RingContext ring_;
    int rows_;
    int cols_;
    std::vector<Scalar> e_;
};

inline MatrixElement operator*(const Scalar& c, const MatrixElement& m) { return m.scalar_mul(c); }

/// 1 - a, the pervasive complement of the projector calculus.
MatrixElement one_minus(const MatrixElement& a);

} // namespace mpring

#endif
