#ifndef MPRING_MP_HPP
#define MPRING_MP_HPP

#include <optional>
#include <string>

#include "mpring/matrix.hpp"

namespace mpring {

/// Hard caps on exhaustive searches. Exceeding one raises
/// SearchBudgetExceeded, never a silent skip.
inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;   // MP search, cancellability
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;   // projector enumeration

/// Per-equation record for a candidate Moore-Penrose pair (a, b):
///   eq1  a b a = a
///   eq2  b a b = b
///   eq3  (a b)* = a b
///   eq4  (b a)* = b a
/// On failure, `witness` holds the first failing equation's two sides.
struct PenroseReport {
    bool eq1_aba = false;
    bool eq2_bab = false;
    bool eq3_ab_sym = false;
    bool eq4_ba_sym = false;
    bool overall = false;
    std::string failed_equation; // empty iff overall
    std::optional<std::pair<MatrixElement, MatrixElement>> witness;
};

PenroseReport penrose_check(const MatrixElement& a, const MatrixElement& b);

enum class MpMethod { rank_factorization, brute_force, analytic_integer };

std::string to_string(MpMethod method);

/// Outcome of an MP-inverse computation. Non-existence is a result, not a
/// fault: `exists` is false and `inverse`/`report` are empty. When the
/// inverse exists its report always passes all four equations.
struct MpResult {
    bool exists = false;
    std::optional<MatrixElement> inverse;
    MpMethod method = MpMethod::rank_factorization;
    std::optional<PenroseReport> report;
};

/// Compute the MP-inverse:
///   QQ / QI:  a^+ = G*(F*AG*)^{-1}F* from the rank factorization A = FG
///   Z_m:      exhaustive search (mp_inverse_brute)
///   Z (1x1):  a^+ exists iff a is 0 or a unit; larger integer matrices are
///             out of scope and raise UnsupportedRing.
MpResult mp_inverse(const MatrixElement& a);

/// Exhaustive search over all of M_n(Z_m); asserts that at most one candidate
/// passes the four equations. Finite contexts only.
MpResult mp_inverse_brute(const MatrixElement& a);

/// p^2 = p = p*.
bool is_projector(const MatrixElement& p);

/// a a* = a* a.
bool is_normal(const MatrixElement& a);

/// a*ax = 0 => ax = 0 and xaa* = 0 => xa = 0, for all x. True without search
/// over QQ/QI (positive definite involution) and over Z (which embeds in QQ);
/// decided by enumeration of all x over Z_m.
bool is_star_cancellable(const MatrixElement& a);

namespace mp_detail {
/// Reference search used by equivalence tests: same contract as
/// mp_inverse_brute but walking generic Scalar matrices.
MpResult mp_inverse_brute_generic(const MatrixElement& a);
} // namespace mp_detail

} // namespace mpring

#endif
