#ifndef MPRING_RING_HPP
#define MPRING_RING_HPP

#include <cstdint>
#include <string>

#include "mpring/scalar.hpp"

namespace mpring {

/// Identifies the ambient *-ring M_n(S): the scalar kind, the matrix
/// dimension, and the modulus for finite rings. The involution is determined
/// by the scalar kind: conjugate-transpose over the Gaussian rationals,
/// transpose everywhere else.
struct RingContext {
    ScalarKind kind = ScalarKind::rational;
    int n = 1;
    std::int64_t modulus = 0; // mod_int only

    bool is_finite() const { return kind == ScalarKind::mod_int; }
    bool conjugating_involution() const { return kind == ScalarKind::gaussian_rational; }

    Scalar zero() const { return from_int(0); }
    Scalar one() const { return from_int(1); }
    Scalar from_int(std::int64_t k) const;

    /// Whether the integer k (i.e. k * 1) is a unit of the scalar ring.
    /// Decides the "2 invertible" / "6 invertible" hypotheses.
    bool integer_is_unit(std::int64_t k) const;

    /// "QQ", "QI", "Zm:<m>", or "ZZ".
    std::string id() const;

    static RingContext make(const std::string& ring_id, int n);

    bool operator==(const RingContext&) const = default;
};

} // namespace mpring

#endif
