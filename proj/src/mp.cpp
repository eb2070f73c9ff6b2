#include "mpring/mp.hpp"

#include <stdexcept>

#include "mpring/linalg.hpp"
#include "zm_kernel.hpp"

namespace mpring {

namespace {

void require_element(const MatrixElement& a, const char* where) {
    if (!a.is_ring_element())
        throw ContextError(std::string(where) + ": operand is not an n x n ring element");
}

void require_same_context(const MatrixElement& a, const MatrixElement& b, const char* where) {
    if (a.ring() != b.ring())
        throw ContextError(std::string(where) + ": ring context mismatch");
}

zm::Kernel kernel_for(const RingContext& ring) {
    return zm::Kernel{ring.n, ring.modulus};
}

std::uint64_t checked_space(const RingContext& ring, std::uint64_t budget, const char* what) {
    auto size = kernel_for(ring).space_size(budget);
    if (!size)
        throw SearchBudgetExceeded(std::string(what) + ": |M_" + std::to_string(ring.n) +
                                   "(Z_" + std::to_string(ring.modulus) + ")| exceeds budget " +
                                   std::to_string(budget));
    return *size;
}

} // namespace

std::string to_string(MpMethod method) {
    switch (method) {
        case MpMethod::rank_factorization: return "rank_factorization";
        case MpMethod::brute_force: return "brute_force";
        case MpMethod::analytic_integer: return "analytic_integer";
    }
    return "?";
}

PenroseReport penrose_check(const MatrixElement& a, const MatrixElement& b) {
    require_same_context(a, b, "penrose_check");
    require_element(a, "penrose_check");
    require_element(b, "penrose_check");

    PenroseReport rep;
    const MatrixElement ab = a * b;
    const MatrixElement ba = b * a;
    const MatrixElement aba = ab * a;
    const MatrixElement bab = ba * b;
    const MatrixElement ab_star = ab.star();
    const MatrixElement ba_star = ba.star();

    // All four equations are evaluated even after a failure; the witness
    // records the first failing one.
    rep.eq1_aba = (aba == a);
    rep.eq2_bab = (bab == b);
    rep.eq3_ab_sym = (ab_star == ab);
    rep.eq4_ba_sym = (ba_star == ba);
    rep.overall = rep.eq1_aba && rep.eq2_bab && rep.eq3_ab_sym && rep.eq4_ba_sym;
    if (!rep.overall) {
        if (!rep.eq1_aba) {
            rep.failed_equation = "aba = a";
            rep.witness = {aba, a};
        } else if (!rep.eq2_bab) {
            rep.failed_equation = "bab = b";
            rep.witness = {bab, b};
        } else if (!rep.eq3_ab_sym) {
            rep.failed_equation = "(ab)* = ab";
            rep.witness = {ab_star, ab};
        } else {
            rep.failed_equation = "(ba)* = ba";
            rep.witness = {ba_star, ba};
        }
    }
    return rep;
}

namespace {

MpResult found(MatrixElement inverse, MpMethod method, const MatrixElement& a) {
    MpResult r;
    r.method = method;
    r.report = penrose_check(a, inverse);
    if (!r.report->overall)
        throw std::logic_error("computed MP-inverse failed its Penrose certificate for a = " +
                               a.to_string());
    r.exists = true;
    r.inverse = std::move(inverse);
    return r;
}

MpResult not_found(MpMethod method) {
    MpResult r;
    r.exists = false;
    r.method = method;
    return r;
}

MpResult mp_via_rank_factorization(const MatrixElement& a) {
    auto [f, g, rank] = rank_factorization(a);
    if (rank == 0) return found(MatrixElement::zero(a.ring()), MpMethod::rank_factorization, a);

    // a^+ = G*(F*AG*)^{-1}F*; F*AG* = (F*F)(GG*) is invertible over QQ/QI.
    const MatrixElement f_star = f.star();
    const MatrixElement g_star = g.star();
    auto core = matrix_inverse(f_star * a * g_star);
    if (!core)
        throw std::logic_error("F*AG* not invertible; rank factorization is inconsistent");
    return found(g_star * *core * f_star, MpMethod::rank_factorization, a);
}

MpResult mp_integer_1x1(const MatrixElement& a) {
    const BigInt& v = a.at(0, 0).as_integer();
    if (v == 0 || v == 1 || v == -1) return found(a, MpMethod::analytic_integer, a);
    return not_found(MpMethod::analytic_integer);
}

} // namespace

MpResult mp_inverse(const MatrixElement& a) {
    require_element(a, "mp_inverse");
    switch (a.ring().kind) {
        case ScalarKind::rational:
        case ScalarKind::gaussian_rational:
            return mp_via_rank_factorization(a);
        case ScalarKind::mod_int:
            return mp_inverse_brute(a);
        case ScalarKind::integer:
            if (a.ring().n != 1)
                throw UnsupportedRing("MP-inverse over Z is only supported for 1x1 matrices");
            return mp_integer_1x1(a);
    }
    throw ContextError("unknown ring kind");
}

MpResult mp_inverse_brute(const MatrixElement& a) {
    require_element(a, "mp_inverse_brute");
    if (!a.ring().is_finite())
        throw UnsupportedRing("brute-force MP search requires a finite ring, got " + a.ring().id());

    const std::uint64_t space = checked_space(a.ring(), kBruteForceBudget, "mp_inverse_brute");
    zm::Kernel k = kernel_for(a.ring());
    const zm::Flat target = k.from_element(a);

    std::optional<zm::Flat> winner;
    for (std::uint64_t code = 0; code < space; ++code) {
        zm::Flat b = k.decode(code);
        if (!k.penrose(target, b)) continue;
        if (winner)
            throw std::logic_error("two distinct MP-inverses found for " + a.to_string() +
                                   "; uniqueness violated");
        winner = std::move(b);
    }
    if (!winner) return not_found(MpMethod::brute_force);
    return found(k.to_element(*winner, a.ring()), MpMethod::brute_force, a);
}

namespace mp_detail {

MpResult mp_inverse_brute_generic(const MatrixElement& a) {
    require_element(a, "mp_inverse_brute_generic");
    if (!a.ring().is_finite())
        throw UnsupportedRing("brute-force MP search requires a finite ring");

    const std::uint64_t space = checked_space(a.ring(), kBruteForceBudget, "mp_inverse_brute");
    zm::Kernel k = kernel_for(a.ring());

    std::optional<MatrixElement> winner;
    for (std::uint64_t code = 0; code < space; ++code) {
        MatrixElement b = k.to_element(k.decode(code), a.ring());
        if (!penrose_check(a, b).overall) continue;
        if (winner) throw std::logic_error("uniqueness violated");
        winner = std::move(b);
    }
    if (!winner) return not_found(MpMethod::brute_force);
    return found(std::move(*winner), MpMethod::brute_force, a);
}

} // namespace mp_detail

bool is_projector(const MatrixElement& p) {
    require_element(p, "is_projector");
    return p * p == p && p.star() == p;
}

bool is_normal(const MatrixElement& a) {
    require_element(a, "is_normal");
    const MatrixElement s = a.star();
    return a * s == s * a;
}

bool is_star_cancellable(const MatrixElement& a) {
    require_element(a, "is_star_cancellable");
    switch (a.ring().kind) {
        case ScalarKind::rational:
        case ScalarKind::gaussian_rational:
            // x*(a*ax) = (ax)*(ax), and the involution is positive definite.
            return true;
        case ScalarKind::integer:
            // Integer matrices embed in the rational case.
            return true;
        case ScalarKind::mod_int:
            break;
    }

    const std::uint64_t space = checked_space(a.ring(), kBruteForceBudget, "is_star_cancellable");
    zm::Kernel k = kernel_for(a.ring());
    const zm::Flat fa = k.from_element(a);
    const zm::Flat fa_t = k.transpose(fa);
    const zm::Flat gram_left = k.mul(fa_t, fa);  // a*a
    const zm::Flat gram_right = k.mul(fa, fa_t); // aa*
    const zm::Flat zero(static_cast<std::size_t>(k.n) * k.n, 0);

    for (std::uint64_t code = 0; code < space; ++code) {
        zm::Flat x = k.decode(code);
        if (k.mul(gram_left, x) == zero && k.mul(fa, x) != zero) return false;
        if (k.mul(x, gram_right) == zero && k.mul(x, fa) != zero) return false;
    }
    return true;
}

} // namespace mpring
