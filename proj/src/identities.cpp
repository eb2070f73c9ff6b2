#include "mpring/identities.hpp"

#include <map>

namespace mpring {

namespace {

std::string describe(std::initializer_list<std::pair<const char*, const MatrixElement*>> elems) {
    std::string s;
    for (const auto& [name, m] : elems) {
        if (!s.empty()) s += ", ";
        s += std::string(name) + " = " + m->to_string();
    }
    return s;
}

void require_hyp(bool ok, const char* stmt, const std::string& hyp,
                 std::initializer_list<std::pair<const char*, const MatrixElement*>> witness) {
    if (!ok) throw HypothesisViolation(stmt, hyp, describe(witness));
}

void require_projector_pair(const char* stmt, const MatrixElement& p, const MatrixElement& q) {
    if (p.ring() != q.ring()) throw ContextError(std::string(stmt) + ": p and q share one ring");
    require_hyp(is_projector(p), stmt, "p is a projector (p^2 = p = p*)", {{"p", &p}});
    require_hyp(is_projector(q), stmt, "q is a projector (q^2 = q = q*)", {{"q", &q}});
}

/// MP-inverse required by a hypothesis; non-existence is a violation.
MatrixElement mp_or_violation(const char* stmt, const char* name, const MatrixElement& a) {
    MpResult r = mp_inverse(a);
    if (!r.exists)
        throw HypothesisViolation(stmt, std::string(name) + " is MP-invertible",
                                  describe({{name, &a}}));
    return std::move(*r.inverse);
}

/// Conclusion-level equality; failure falsifies the statement.
void assert_identity(bool ok, const char* stmt, const std::string& claim,
                     std::initializer_list<std::pair<const char*, const MatrixElement*>> witness) {
    if (!ok) throw IdentityFalsified(stmt, claim, describe(witness));
}

/// Penrose certificate for a claimed inverse; failure falsifies the statement.
PenroseReport certify(const char* stmt, const std::string& claim, const MatrixElement& target,
                      const MatrixElement& candidate) {
    PenroseReport rep = penrose_check(target, candidate);
    if (!rep.overall)
        throw IdentityFalsified(stmt,
                                claim + " (failed equation: " + rep.failed_equation + ")",
                                describe({{"target", &target}, {"candidate", &candidate}}));
    return rep;
}

} // namespace

bool intertwine_transfer(const MatrixElement& a1, const MatrixElement& a2,
                         const MatrixElement& d) {
    constexpr const char* stmt = "lemma-intertwine";
    MatrixElement a1_mp = mp_or_violation(stmt, "a1", a1);
    MatrixElement a2_mp = mp_or_violation(stmt, "a2", a2);
    require_hyp(d * a1 == a2 * d, stmt, "d a1 = a2 d", {{"a1", &a1}, {"a2", &a2}, {"d", &d}});
    require_hyp(d * a1.star() == a2.star() * d, stmt, "d a1* = a2* d",
                {{"a1", &a1}, {"a2", &a2}, {"d", &d}});
    assert_identity(a2_mp * d == d * a1_mp, stmt, "a2^+ d = d a1^+",
                    {{"a1", &a1}, {"a2", &a2}, {"d", &d}});
    return true;
}

MatrixElement commuting_product_mp(const MatrixElement& a, const MatrixElement& b) {
    constexpr const char* stmt = "lemma-commuting-product";
    MatrixElement a_mp = mp_or_violation(stmt, "a", a);
    MatrixElement b_mp = mp_or_violation(stmt, "b", b);
    require_hyp(a * b == b * a, stmt, "ab = ba", {{"a", &a}, {"b", &b}});
    require_hyp(a.star() * b == b * a.star(), stmt, "a*b = ba*", {{"a", &a}, {"b", &b}});

    MatrixElement value = b_mp * a_mp;
    assert_identity(value == a_mp * b_mp, stmt, "b^+ a^+ = a^+ b^+", {{"a", &a}, {"b", &b}});
    certify(stmt, "(ab)^+ = b^+ a^+", a * b, value);
    return value;
}

MatrixElement orthogonal_sum_mp(const MatrixElement& a, const MatrixElement& b) {
    constexpr const char* stmt = "lemma-orthogonal-sum";
    MatrixElement a_mp = mp_or_violation(stmt, "a", a);
    MatrixElement b_mp = mp_or_violation(stmt, "b", b);
    require_hyp((a.star() * b).is_zero(), stmt, "a*b = 0", {{"a", &a}, {"b", &b}});
    require_hyp((a * b.star()).is_zero(), stmt, "ab* = 0", {{"a", &a}, {"b", &b}});

    MatrixElement value = a_mp + b_mp;
    certify(stmt, "(a+b)^+ = a^+ + b^+", a + b, value);
    return value;
}

MatrixElement pencil_mp(const MatrixElement& a, const MatrixElement& b, const MatrixElement& p) {
    constexpr const char* stmt = "thm-pencil";
    require_hyp(is_projector(p), stmt, "p is a projector", {{"p", &p}});
    MatrixElement a_mp = mp_or_violation(stmt, "a", a);
    MatrixElement b_mp = mp_or_violation(stmt, "b", b);
    require_hyp(a.star() * p == p * a.star(), stmt, "a*p = pa*", {{"a", &a}, {"p", &p}});
    require_hyp(b.star() * p == p * b.star(), stmt, "b*p = pb*", {{"b", &b}, {"p", &p}});

    const MatrixElement pc = one_minus(p);
    MatrixElement value = a_mp * p + b_mp * pc;
    certify(stmt, "(ap + b(1-p))^+ = a^+ p + b^+ (1-p)", a * p + b * pc, value);
    return value;
}

namespace {

/// Existence decisions for several derived elements of one pair, memoized on
/// the entry text (elements repeat in the chains).
class ExistenceOracle {
public:
    bool exists(const MatrixElement& a) {
        auto [it, fresh] = memo_.try_emplace(a.to_string(), false);
        if (fresh) it->second = mp_inverse(a).exists;
        return it->second;
    }

private:
    std::map<std::string, bool> memo_;
};

} // namespace

ExistenceChainReport existence_chain(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "prop-ten-equivalences";
    require_projector_pair(stmt, p, q);

    const MatrixElement one = MatrixElement::identity(p.ring());
    const MatrixElement pq = p * q;
    const MatrixElement qp = q * p;
    const std::array<MatrixElement, 10> elements = {
        one - pq,  one - pq * p, p - pq * p, p - pq, p - qp,
        one - qp,  one - qp * q, q - qp * q, q - qp, q - pq};

    ExistenceChainReport rep;
    ExistenceOracle oracle;
    for (std::size_t i = 0; i < elements.size(); ++i) rep.exists[i] = oracle.exists(elements[i]);

    rep.cancellable_p_one_minus_q = is_star_cancellable(p * one_minus(q));
    rep.cancellable_q_one_minus_p = is_star_cancellable(q * one_minus(p));
    rep.gated = rep.cancellable_p_one_minus_q && rep.cancellable_q_one_minus_p;

    rep.all_equal = true;
    for (bool e : rep.exists) rep.all_equal = rep.all_equal && (e == rep.exists[0]);

    rep.star_pair_16 = rep.exists[0] == rep.exists[5];
    rep.star_pair_45 = rep.exists[3] == rep.exists[4];
    rep.chain_234 = rep.exists[1] == rep.exists[2] && rep.exists[2] == rep.exists[3];
    rep.product_pair_12 = rep.exists[0] == rep.exists[1];

    if (rep.gated && !rep.all_equal) {
        std::string detail = "the ten existence conditions are equivalent; got [";
        for (std::size_t i = 0; i < rep.exists.size(); ++i)
            detail += std::string(i ? "," : "") + (rep.exists[i] ? "1" : "0");
        detail += "] keyed [1-pq,1-pqp,p-pqp,p-pq,p-qp,1-qp,1-qpq,q-qpq,q-qp,q-pq]";
        throw IdentityFalsified(stmt, detail, describe({{"p", &p}, {"q", &q}}));
    }
    return rep;
}

DifferenceTriple difference_equivalence_triple(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "thm-diff-triple";
    require_projector_pair(stmt, p, q);

    const MatrixElement one = MatrixElement::identity(p.ring());
    const MatrixElement pq = p * q;

    DifferenceTriple rep;
    rep.exists_diff = mp_inverse(p - q).exists;
    rep.exists_one_pq = mp_inverse(one - pq).exists;
    rep.exists_sum_pq = mp_inverse(p + q - pq).exists;
    rep.cancellable_diff = is_star_cancellable(p - q);
    rep.cancellable_p_one_minus_q = is_star_cancellable(p * one_minus(q));
    rep.cancellable_q_one_minus_p = is_star_cancellable(q * one_minus(p));
    rep.gated = rep.cancellable_diff && rep.cancellable_p_one_minus_q &&
                rep.cancellable_q_one_minus_p;
    rep.all_equal = rep.exists_diff == rep.exists_one_pq && rep.exists_one_pq == rep.exists_sum_pq;

    if (rep.gated && !rep.all_equal)
        throw IdentityFalsified(
            stmt,
            "p-q, 1-pq, p+q-pq are MP-invertible together; got " +
                std::to_string(rep.exists_diff) + "," + std::to_string(rep.exists_one_pq) + "," +
                std::to_string(rep.exists_sum_pq),
            describe({{"p", &p}, {"q", &q}}));
    return rep;
}

FGHTriple fgh_decomposition(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "thm-fgh";
    require_projector_pair(stmt, p, q);

    const MatrixElement diff = p - q;
    MpResult diff_result = mp_inverse(diff);
    require_hyp(diff_result.exists, stmt, "p-q is MP-invertible", {{"p", &p}, {"q", &q}});
    const MatrixElement dag = *diff_result.inverse;

    const MatrixElement one = MatrixElement::identity(p.ring());
    const MatrixElement cq = one - q; // 1-q
    const MatrixElement f = p * dag;
    const MatrixElement g = dag * p;
    const MatrixElement h = diff * dag;

    FGHTriple out{f, g, h, dag, {}};
    auto& rel = out.relations;
    rel.f_idem = f * f == f;
    rel.f_alt = f == dag * cq;
    rel.g_idem = g * g == g;
    rel.g_alt = g == cq * dag;
    rel.h_proj = h * h == h && h.star() == h;
    rel.q_shift = q * dag == dag * one_minus(p);
    rel.qh_hq = q * h == h * q;
    rel.gq_qf = g * cq == cq * f;
    {
        const MatrixElement fp = f * p, pg = p * g, ph = p * h, hp = h * p;
        rel.fp_pg_ph_hp = fp == pg && pg == ph && ph == hp;
    }
    {
        const MatrixElement qh = q * h, hq = h * q;
        rel.qhq_chain = q * h * q == qh && qh == hq && hq == h * q * h;
    }
    {
        const MatrixElement cf = one - f, cg = one - g;
        rel.comp_chain = cq * cf == cg * cq && cg * cq == cq * cf * cq;
    }
    rel.recompose = f + g - h == dag;

    const std::pair<const char*, bool> named[] = {
        {"F^2 = F", rel.f_idem},
        {"F = (p-q)^+ (1-q)", rel.f_alt},
        {"G^2 = G", rel.g_idem},
        {"G = (1-q)(p-q)^+", rel.g_alt},
        {"H^2 = H = H*", rel.h_proj},
        {"q(p-q)^+ = (p-q)^+ (1-p)", rel.q_shift},
        {"qH = Hq", rel.qh_hq},
        {"G(1-q) = (1-q)F", rel.gq_qf},
        {"Fp = pG = pH = Hp", rel.fp_pg_ph_hp},
        {"qHq = qH = Hq = HqH", rel.qhq_chain},
        {"(1-q)(1-F) = (1-G)(1-q) = (1-q)(1-F)(1-q)", rel.comp_chain},
        {"F + G - H = (p-q)^+", rel.recompose},
    };
    for (const auto& [claim, ok] : named)
        assert_identity(ok, stmt, claim, {{"p", &p}, {"q", &q}});
    return out;
}

SumViaDifference sum_mp_via_difference(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "thm-sum-via-diff";
    require_projector_pair(stmt, p, q);
    require_hyp(p.ring().integer_is_unit(2), stmt, "2 is invertible in the ring",
                {{"p", &p}, {"q", &q}});

    const MatrixElement diff = p - q;
    MpResult diff_result = mp_inverse(diff);
    require_hyp(diff_result.exists, stmt, "p-q is MP-invertible", {{"p", &p}, {"q", &q}});
    const MatrixElement dag = *diff_result.inverse;
    const MatrixElement h = diff * dag;
    const MatrixElement sum = p + q;

    SumViaDifference out;
    out.cond_ph = p * h == p;
    out.cond_sum_h = sum * h == sum;
    MatrixElement candidate = dag * sum * dag;
    out.cond_formula = penrose_check(sum, candidate).overall;

    assert_identity(out.cond_ph == out.cond_sum_h && out.cond_sum_h == out.cond_formula, stmt,
                    "pH = p, (p+q)H = p+q and (p+q)^+ = (p-q)^+(p+q)(p-q)^+ are equivalent; got " +
                        std::to_string(out.cond_ph) + "," + std::to_string(out.cond_sum_h) + "," +
                        std::to_string(out.cond_formula),
                    {{"p", &p}, {"q", &q}});
    out.applicable = out.cond_ph;
    if (out.applicable) out.sum_mp = std::move(candidate);
    return out;
}

CommutingSum commuting_sum_mp(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "thm-commuting-sum";
    require_projector_pair(stmt, p, q);
    const MatrixElement pq = p * q;
    require_hyp(pq == q * p, stmt, "pq = qp", {{"p", &p}, {"q", &q}});

    const MatrixElement one = MatrixElement::identity(p.ring());
    const MatrixElement sum = p + q;
    const MatrixElement one_pq = one + pq;

    MpResult sum_result = mp_inverse(sum);
    MpResult one_pq_result = mp_inverse(one_pq);
    assert_identity(sum_result.exists == one_pq_result.exists, stmt,
                    "p+q is MP-invertible iff 1+pq is; got " +
                        std::to_string(sum_result.exists) + " vs " +
                        std::to_string(one_pq_result.exists),
                    {{"p", &p}, {"q", &q}});

    CommutingSum out;
    out.exists = sum_result.exists;
    if (!out.exists) return out;

    MatrixElement sum_formula = *one_pq_result.inverse * p + q * one_minus(p);
    certify(stmt, "(p+q)^+ = (1+pq)^+ p + q(1-p)", sum, sum_formula);
    MatrixElement one_pq_formula = *sum_result.inverse * p + one_minus(p);
    certify(stmt, "(1+pq)^+ = (p+q)^+ p + 1-p", one_pq, one_pq_formula);

    out.sum_mp = std::move(sum_formula);
    out.one_pq_mp = std::move(one_pq_formula);
    return out;
}

FiveFormulas difference_formula_suite(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "thm-five-formulas";
    require_projector_pair(stmt, p, q);

    const MatrixElement diff = p - q;
    MpResult diff_result = mp_inverse(diff);
    require_hyp(diff_result.exists, stmt, "p-q is MP-invertible", {{"p", &p}, {"q", &q}});
    const MatrixElement dag = *diff_result.inverse;
    const MatrixElement dag2 = dag * dag;

    const MatrixElement one = MatrixElement::identity(p.ring());
    const MatrixElement pq = p * q;
    const MatrixElement qp = q * p;
    const MatrixElement cp = one - p;

    FiveFormulas out;
    out.cancellable_p_minus_pq = is_star_cancellable(p - pq);

    struct Spec {
        const char* name;
        MatrixElement target;
        MatrixElement value;
        bool gated; // needs p-pq *-cancellable
    };
    Spec specs[] = {
        {"1-pqp", one - pq * p, p * dag2 + cp, false},
        {"1-pq", one - pq, p * dag2 - pq * dag + cp, false},
        {"p-pqp", p - pq * p, p * dag2, false},
        {"p-pq", p - pq, dag * p, true},
        {"p-qp", p - qp, p * dag, true},
    };

    for (auto& s : specs) {
        FiveFormulas::Entry e{s.name, std::move(s.target), std::move(s.value), {}, false};
        e.report = penrose_check(e.target, e.formula_value);
        e.asserted = !s.gated || out.cancellable_p_minus_pq;
        if (e.asserted && !e.report.overall)
            throw IdentityFalsified(stmt,
                                    "(" + e.target_name + ")^+ formula failed its certificate (" +
                                        e.report.failed_equation + ")",
                                    describe({{"p", &p}, {"q", &q}}));
        out.entries.push_back(std::move(e));
    }
    return out;
}

MatrixElement difference_from_products(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "cor-diff-from-products";
    require_projector_pair(stmt, p, q);

    const MatrixElement one = MatrixElement::identity(p.ring());
    const MatrixElement pq = p * q;
    const MatrixElement one_pq = one - pq;

    MpResult one_pq_result = mp_inverse(one_pq);
    require_hyp(one_pq_result.exists, stmt, "1-pq is MP-invertible", {{"p", &p}, {"q", &q}});
    require_hyp(is_star_cancellable(p - pq), stmt, "p-pq is *-cancellable",
                {{"p", &p}, {"q", &q}});

    // The statement concludes that p-q is MP-invertible.
    const MatrixElement diff = p - q;
    MpResult diff_result = mp_inverse(diff);
    assert_identity(diff_result.exists, stmt, "p-q is MP-invertible", {{"p", &p}, {"q", &q}});
    const MatrixElement dag = *diff_result.inverse;

    const MatrixElement sum_pq = p + q - pq;
    MpResult sum_pq_result = mp_inverse(sum_pq);
    assert_identity(sum_pq_result.exists, stmt, "p+q-pq is MP-invertible (used by the formula)",
                    {{"p", &p}, {"q", &q}});

    // Intermediate expression for (p+q-pq)^+ used in the derivation.
    const MatrixElement cp = one - p;
    MatrixElement intermediate = cp * (dag * dag) + cp * one_minus(q) * dag + p;
    assert_identity(*sum_pq_result.inverse == intermediate, stmt,
                    "(p+q-pq)^+ = (1-p)((p-q)^+)^2 + (1-p)(1-q)(p-q)^+ + p",
                    {{"p", &p}, {"q", &q}});

    MatrixElement value = *one_pq_result.inverse * (p - pq) + *sum_pq_result.inverse * (pq - q);
    certify(stmt, "(p-q)^+ = (1-pq)^+(p-pq) + (p+q-pq)^+(pq-q)", diff, value);
    return value;
}

SelfInverse self_inverse_characterization(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "thm-self-inverse";
    require_projector_pair(stmt, p, q);

    const MatrixElement pq = p * q;
    const MatrixElement qp = q * p;
    require_hyp(is_star_cancellable(pq - qp), stmt, "pq-qp is *-cancellable",
                {{"p", &p}, {"q", &q}});

    SelfInverse out;
    out.commute = pq == qp;
    out.diff_self = penrose_check(p - q, p - q).overall;
    assert_identity(out.diff_self == out.commute, stmt, "(p-q)^+ = p-q iff pq = qp; got " +
                        std::to_string(out.diff_self) + " vs commute=" +
                        std::to_string(out.commute),
                    {{"p", &p}, {"q", &q}});

    out.product_zero = pq.is_zero();
    if (p.ring().integer_is_unit(6)) {
        out.sum_self = penrose_check(p + q, p + q).overall;
        assert_identity(*out.sum_self == out.product_zero, stmt,
                        "(p+q)^+ = p+q iff pq = 0; got " + std::to_string(*out.sum_self) +
                            " vs pq=0 is " + std::to_string(out.product_zero),
                        {{"p", &p}, {"q", &q}});
    }
    return out;
}

ComplementProduct product_mp_via_complement(const MatrixElement& p, const MatrixElement& q) {
    constexpr const char* stmt = "thm-complement-product";
    require_projector_pair(stmt, p, q);

    const MatrixElement comp = MatrixElement::identity(p.ring()) - p - q;
    MpResult comp_result = mp_inverse(comp);
    require_hyp(comp_result.exists, stmt, "1-p-q is MP-invertible", {{"p", &p}, {"q", &q}});

    const MatrixElement w2 = *comp_result.inverse * *comp_result.inverse;
    const MatrixElement pq = p * q;
    const MatrixElement pqp = pq * p;

    MatrixElement left = p * w2;
    assert_identity(left == w2 * p, stmt, "p((1-p-q)^+)^2 = ((1-p-q)^+)^2 p",
                    {{"p", &p}, {"q", &q}});
    certify(stmt, "(pqp)^+ = p((1-p-q)^+)^2", pqp, left);

    ComplementProduct out{std::move(left), false, std::nullopt};
    out.pq_cancellable = is_star_cancellable(pq);
    if (out.pq_cancellable) {
        MatrixElement value = q * p * w2;
        certify(stmt, "(pq)^+ = qp((1-p-q)^+)^2", pq, value);
        out.pq_mp = std::move(value);
    }
    return out;
}

} // namespace mpring
