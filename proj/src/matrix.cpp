#include "mpring/matrix.hpp"

namespace mpring {

MatrixElement::MatrixElement(RingContext ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ContextError("negative matrix shape");
    e_.assign(static_cast<std::size_t>(rows) * cols, ring_.zero());
}

MatrixElement MatrixElement::identity(const RingContext& ring) {
    MatrixElement m(ring, ring.n, ring.n);
    for (int i = 0; i < ring.n; ++i) m.at(i, i) = ring.one();
    return m;
}

MatrixElement MatrixElement::from_ints(const RingContext& ring,
                                       const std::vector<std::vector<std::int64_t>>& rows) {
    MatrixElement m(ring, static_cast<int>(rows.size()),
                    rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw ContextError("ragged matrix literal");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = ring.from_int(rows[i][j]);
    }
    return m;
}

void MatrixElement::check_same_ring(const MatrixElement& rhs) const {
    if (ring_ != rhs.ring_)
        throw ContextError("ring context mismatch: " + ring_.id() + " (n=" +
                           std::to_string(ring_.n) + ") vs " + rhs.ring_.id() + " (n=" +
                           std::to_string(rhs.ring_.n) + ")");
}

MatrixElement MatrixElement::operator+(const MatrixElement& rhs) const {
    check_same_ring(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContextError("shape mismatch in +");
    MatrixElement out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + rhs.e_[k];
    return out;
}

MatrixElement MatrixElement::operator-(const MatrixElement& rhs) const {
    check_same_ring(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContextError("shape mismatch in -");
    MatrixElement out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - rhs.e_[k];
    return out;
}

MatrixElement MatrixElement::operator*(const MatrixElement& rhs) const {
    check_same_ring(rhs);
    if (cols_ != rhs.rows_) throw ContextError("shape mismatch in *");
    MatrixElement out(ring_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = out.at(i, j) + aik * rhs.at(k, j);
        }
    }
    return out;
}

MatrixElement MatrixElement::operator-() const {
    MatrixElement out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

MatrixElement MatrixElement::star() const {
    MatrixElement out(ring_, cols_, rows_);
    const bool conj = ring_.conjugating_involution();
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(j, i) = conj ? at(i, j).conj() : at(i, j);
    return out;
}

MatrixElement MatrixElement::scalar_mul(const Scalar& c) const {
    MatrixElement out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = c * e_[k];
    return out;
}

bool MatrixElement::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

bool MatrixElement::operator==(const MatrixElement& rhs) const {
    return ring_ == rhs.ring_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

std::string MatrixElement::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += at(i, j).to_string();
        }
        s += "]";
    }
    return s + "]";
}

MatrixElement one_minus(const MatrixElement& a) {
    return MatrixElement::identity(a.ring()) - a;
}

} // namespace mpring
