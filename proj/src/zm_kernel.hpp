#ifndef MPRING_ZM_KERNEL_HPP
#define MPRING_ZM_KERNEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mpring/matrix.hpp"

namespace mpring::zm {

// Flat int64 arithmetic for M_n(Z_m). Exhaustive searches (brute-force MP
// inverse, *-cancellability, projector enumeration) walk the whole matrix
// space; the generic Scalar path stays as the reference and the two are
// equivalence-tested.

using Flat = std::vector<std::int64_t>;

struct Kernel {
    int n;
    std::int64_t m;

    Flat from_element(const MatrixElement& a) const;
    MatrixElement to_element(const Flat& a, const RingContext& ring) const;

    Flat mul(const Flat& a, const Flat& b) const;
    Flat transpose(const Flat& a) const;
    bool is_symmetric(const Flat& a) const;

    /// Row-major odometer encoding; enumeration order is lexicographic on
    /// the entry tuple.
    std::uint64_t encode(const Flat& a) const;
    Flat decode(std::uint64_t code) const;

    bool penrose(const Flat& a, const Flat& b) const;

    /// Number of matrices in M_n(Z_m), or nullopt on overflow past `cap`.
    std::optional<std::uint64_t> space_size(std::uint64_t cap) const;
};

} // namespace mpring::zm

#endif
