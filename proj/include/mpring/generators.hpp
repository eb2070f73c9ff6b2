#ifndef MPRING_GENERATORS_HPP
#define MPRING_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mpring/matrix.hpp"

namespace mpring {

enum class PairKind { generic, commuting, orthogonal, equal, complement, diagonal };

std::string to_string(PairKind kind);
PairKind pair_kind_from_string(const std::string& s);

/// Seeded projector generation over QQ/QI. Outputs are deterministic in
/// (seed, index) regardless of call order or thread schedule.
struct GeneratorSpec {
    RingContext ring;
    std::uint64_t seed = 0;
    PairKind kind = PairKind::generic;
    int rank_min = 0;
    int rank_max = -1; // -1: ring.n
};

/// Orthogonal projector onto the column space of basis: B (B*B)^{-1} B*.
/// basis may have zero columns (yields the zero projector).
MatrixElement projector_from_basis(const MatrixElement& basis);

/// Rational orthogonal (QI: unitary) matrix (I - S)(I + S)^{-1} from a
/// skew-adjoint S; I + S is always invertible for such S.
MatrixElement cayley_orthogonal(const MatrixElement& skew);

MatrixElement random_projector(const GeneratorSpec& spec, std::uint64_t index);

std::pair<MatrixElement, MatrixElement> random_pair(const GeneratorSpec& spec,
                                                    std::uint64_t index);

/// All projectors of a finite ring, lexicographic in row-major entries.
std::vector<MatrixElement> enumerate_projectors(const RingContext& ring);

/// The 1x1 integer demonstration: with p = q = 1 in Z, p - q = 0 has an
/// MP-inverse but p + q = 2 does not, while 2 over Q inverts to 1/2.
struct CounterexampleReport {
    bool difference_invertible = false; // (p-q)^+ exists and equals 0
    bool sum_has_no_inverse = false;    // 2 has no MP-inverse over Z
    bool rational_half = false;         // 2^+ = 1/2 over Q
    std::string text;
    bool ok() const { return difference_invertible && sum_has_no_inverse && rational_half; }
};

CounterexampleReport integer_counterexample_demo();

namespace gen_detail {

/// SplitMix64; the (seed, index) stream derivation for reproducible trials.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0);
    std::uint64_t next();
    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here, only
    /// determinism matters.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

} // namespace gen_detail

} // namespace mpring

#endif
