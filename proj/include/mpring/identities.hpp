#ifndef MPRING_IDENTITIES_HPP
#define MPRING_IDENTITIES_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpring/mp.hpp"

namespace mpring {

// Each operation realizes one statement about projectors p, q (or general
// elements a, b, d) in a *-ring: it checks every stated hypothesis first
// (HypothesisViolation when one fails), evaluates the claimed formula, and
// certifies the claim through the four Penrose equations. A certificate
// failure under satisfied hypotheses raises IdentityFalsified - that would
// mean the claim is false for the witness elements or the engine is buggy,
// never "input out of scope".

/// d a1 = a2 d and d a1* = a2* d for MP-invertible a1, a2 force
/// a2^+ d = d a1^+. Returns true after asserting the transferred equation.
bool intertwine_transfer(const MatrixElement& a1, const MatrixElement& a2,
                         const MatrixElement& d);

/// For commuting a, b (ab = ba, a*b = ba*) with MP-inverses:
/// (ab)^+ = b^+ a^+ = a^+ b^+.
MatrixElement commuting_product_mp(const MatrixElement& a, const MatrixElement& b);

/// For a*b = ab* = 0: (a + b)^+ = a^+ + b^+.
MatrixElement orthogonal_sum_mp(const MatrixElement& a, const MatrixElement& b);

/// For a projector p and a, b with a*p = pa*, b*p = pb*:
/// (ap + b(1-p))^+ = a^+ p + b^+ (1-p).
MatrixElement pencil_mp(const MatrixElement& a, const MatrixElement& b,
                        const MatrixElement& p);

/// The ten elements whose MP-existence is equivalent when p(1-q) and q(1-p)
/// are *-cancellable, in statement order.
inline constexpr std::array<const char*, 10> kExistenceChainKeys = {
    "1-pq", "1-pqp", "p-pqp", "p-pq", "p-qp",
    "1-qp", "1-qpq", "q-qpq", "q-qp", "q-pq"};

struct ExistenceChainReport {
    std::array<bool, 10> exists{};
    bool cancellable_p_one_minus_q = false;
    bool cancellable_q_one_minus_p = false;
    bool gated = false;     // both cancellability flags hold
    bool all_equal = false; // verdict: the ten booleans agree
    // Diagnostic sub-equivalences mirroring the proof chain.
    bool star_pair_16 = false;   // (1) <-> (6)
    bool star_pair_45 = false;   // (4) <-> (5)
    bool chain_234 = false;      // (2) <-> (3) <-> (4)
    bool product_pair_12 = false; // (1) <-> (2), the external equivalence
};

ExistenceChainReport existence_chain(const MatrixElement& p, const MatrixElement& q);

/// Existence of p-q, 1-pq and p+q-pq is all-or-nothing when p-q, p(1-q) and
/// q(1-p) are *-cancellable.
struct DifferenceTriple {
    bool exists_diff = false;    // p-q
    bool exists_one_pq = false;  // 1-pq
    bool exists_sum_pq = false;  // p+q-pq
    bool cancellable_diff = false;
    bool cancellable_p_one_minus_q = false;
    bool cancellable_q_one_minus_p = false;
    bool gated = false;
    bool all_equal = false;
};

DifferenceTriple difference_equivalence_triple(const MatrixElement& p, const MatrixElement& q);

/// F = p(p-q)^+, G = (p-q)^+ p, H = (p-q)(p-q)^+ and the relations they
/// satisfy whenever p-q is MP-invertible. Every flag is asserted true.
struct FGHTriple {
    MatrixElement f, g, h;
    MatrixElement diff_mp; // (p-q)^+
    struct Relations {
        bool f_idem = false;       // F^2 = F
        bool f_alt = false;        // F = (p-q)^+ (1-q)
        bool g_idem = false;       // G^2 = G
        bool g_alt = false;        // G = (1-q)(p-q)^+
        bool h_proj = false;       // H^2 = H = H*
        bool q_shift = false;      // q(p-q)^+ = (p-q)^+ (1-p)
        bool qh_hq = false;        // qH = Hq
        bool gq_qf = false;        // G(1-q) = (1-q)F
        bool fp_pg_ph_hp = false;  // Fp = pG = pH = Hp
        bool qhq_chain = false;    // qHq = qH = Hq = HqH
        bool comp_chain = false;   // (1-q)(1-F) = (1-G)(1-q) = (1-q)(1-F)(1-q)
        bool recompose = false;    // F + G - H = (p-q)^+
    } relations;
};

FGHTriple fgh_decomposition(const MatrixElement& p, const MatrixElement& q);

/// When 2 is invertible and p-q is MP-invertible, the conditions
///   (1) pH = p   (2) (p+q)H = p+q   (3) (p+q)^+ = (p-q)^+(p+q)(p-q)^+
/// are equivalent; the formula value is returned when they hold.
struct SumViaDifference {
    bool cond_ph = false;
    bool cond_sum_h = false;
    bool cond_formula = false;
    bool applicable = false; // the three (equal) conditions hold
    std::optional<MatrixElement> sum_mp;
};

SumViaDifference sum_mp_via_difference(const MatrixElement& p, const MatrixElement& q);

/// For commuting projectors: p+q is MP-invertible iff 1+pq is, with
/// (p+q)^+ = (1+pq)^+ p + q(1-p) and (1+pq)^+ = (p+q)^+ p + 1 - p.
struct CommutingSum {
    bool exists = false; // both (equivalently, either) exist
    std::optional<MatrixElement> sum_mp;     // (p+q)^+
    std::optional<MatrixElement> one_pq_mp;  // (1+pq)^+
};

CommutingSum commuting_sum_mp(const MatrixElement& p, const MatrixElement& q);

/// The five difference formulas. Entries 4 and 5 additionally require p-pq
/// to be *-cancellable; without it they are evaluated as an observation only
/// (`asserted` false) and never raise.
struct FiveFormulas {
    struct Entry {
        std::string target_name;
        MatrixElement target;
        MatrixElement formula_value;
        PenroseReport report;
        bool asserted = false;
    };
    std::vector<Entry> entries; // exactly five, in statement order
    bool cancellable_p_minus_pq = false;
};

FiveFormulas difference_formula_suite(const MatrixElement& p, const MatrixElement& q);

/// (p-q)^+ = (1-pq)^+(p-pq) + (p+q-pq)^+(pq-q), for *-cancellable p-pq and
/// MP-invertible 1-pq. Also certifies the intermediate expression for
/// (p+q-pq)^+ used to prove it.
MatrixElement difference_from_products(const MatrixElement& p, const MatrixElement& q);

/// (p-q)^+ = p-q iff pq = qp; and when 6 is invertible, (p+q)^+ = p+q iff
/// pq = 0. Requires pq-qp *-cancellable. The sum part is skipped (nullopt)
/// when 6 is not invertible.
struct SelfInverse {
    bool diff_self = false;
    std::optional<bool> sum_self;
    bool commute = false; // pq = qp
    bool product_zero = false;
};

SelfInverse self_inverse_characterization(const MatrixElement& p, const MatrixElement& q);

/// When 1-p-q is MP-invertible: (pqp)^+ = p((1-p-q)^+)^2 = ((1-p-q)^+)^2 p;
/// and when pq is *-cancellable, (pq)^+ = qp((1-p-q)^+)^2.
struct ComplementProduct {
    MatrixElement pqp_mp;
    bool pq_cancellable = false;
    std::optional<MatrixElement> pq_mp; // present iff pq is *-cancellable
};

ComplementProduct product_mp_via_complement(const MatrixElement& p, const MatrixElement& q);

} // namespace mpring

#endif
