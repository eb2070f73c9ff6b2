#include "mpring/statements.hpp"

#include <functional>
#include <map>

namespace mpring {

const std::vector<std::string>& statement_ids() {
    static const std::vector<std::string> ids = {
        "lemma-intertwine",
        "lemma-commuting-product",
        "lemma-orthogonal-sum",
        "thm-pencil",
        "prop-ten-equivalences",
        "thm-diff-triple",
        "thm-fgh",
        "cor-fgh-relations",
        "cor-fgh-recompose",
        "thm-sum-via-diff",
        "thm-commuting-sum",
        "thm-five-formulas",
        "cor-diff-from-products",
        "thm-self-inverse",
        "thm-complement-product",
    };
    return ids;
}

bool is_statement_id(const std::string& id) {
    for (const auto& s : statement_ids())
        if (s == id) return true;
    return false;
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::verified: return "verified";
        case Outcome::skipped: return "skipped";
        case Outcome::falsified: return "falsified";
    }
    return "?";
}

namespace {

const MatrixElement& need(const std::optional<MatrixElement>& slot, const char* name,
                          const std::string& id) {
    if (!slot) throw ParseError("statement '" + id + "' requires element \"" + name + "\"");
    return *slot;
}

Json witness_json(const StatementInputs& in) {
    Json w = Json::object();
    if (in.p) w["p"] = matrix_to_json(*in.p);
    if (in.q) w["q"] = matrix_to_json(*in.q);
    if (in.a) w["a"] = matrix_to_json(*in.a);
    if (in.b) w["b"] = matrix_to_json(*in.b);
    if (in.d) w["d"] = matrix_to_json(*in.d);
    return w;
}

/// The tampered candidate for the corrupt self-test: a sign flip, or an
/// identity shift when the value is fixed by negation.
MatrixElement tamper(const MatrixElement& value) {
    MatrixElement flipped = -value;
    if (flipped != value) return flipped;
    return value + MatrixElement::identity(value.ring());
}

void certify_or_falsify(const std::string& id, const std::string& claim,
                        const MatrixElement& target, const MatrixElement& candidate) {
    PenroseReport rep = penrose_check(target, candidate);
    if (!rep.overall)
        throw IdentityFalsified(id, claim + " (failed equation: " + rep.failed_equation + ")",
                                "target = " + target.to_string() +
                                    ", candidate = " + candidate.to_string());
}

Json fgh_to_json(const FGHTriple& t) {
    Json j;
    j["F"] = matrix_to_json(t.f);
    j["G"] = matrix_to_json(t.g);
    j["H"] = matrix_to_json(t.h);
    j["diff_mp"] = matrix_to_json(t.diff_mp);
    Json rel;
    rel["F_idem"] = t.relations.f_idem;
    rel["F_alt"] = t.relations.f_alt;
    rel["G_idem"] = t.relations.g_idem;
    rel["G_alt"] = t.relations.g_alt;
    rel["H_proj"] = t.relations.h_proj;
    rel["q_shift"] = t.relations.q_shift;
    rel["qH_Hq"] = t.relations.qh_hq;
    rel["Gq_qF"] = t.relations.gq_qf;
    rel["Fp_pG_pH_Hp"] = t.relations.fp_pg_ph_hp;
    rel["qHq_chain"] = t.relations.qhq_chain;
    rel["comp_chain"] = t.relations.comp_chain;
    rel["recompose"] = t.relations.recompose;
    j["relations"] = std::move(rel);
    return j;
}

Json chain_to_json(const ExistenceChainReport& rep) {
    Json j;
    Json ex;
    for (std::size_t i = 0; i < kExistenceChainKeys.size(); ++i)
        ex[kExistenceChainKeys[i]] = rep.exists[i];
    j["exists"] = std::move(ex);
    j["cancellable_p_one_minus_q"] = rep.cancellable_p_one_minus_q;
    j["cancellable_q_one_minus_p"] = rep.cancellable_q_one_minus_p;
    j["gated"] = rep.gated;
    j["all_equal"] = rep.all_equal;
    Json diag;
    diag["1-pq_iff_1-qp"] = rep.star_pair_16;
    diag["p-pq_iff_p-qp"] = rep.star_pair_45;
    diag["1-pqp_iff_p-pqp_iff_p-pq"] = rep.chain_234;
    diag["1-pq_iff_1-pqp"] = rep.product_pair_12;
    j["diagnostics"] = std::move(diag);
    return j;
}

using Runner = std::function<Json(const StatementInputs&, const RunOptions&, const std::string&)>;

Json run_intertwine(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& a1 = need(in.a, "a", id);
    const auto& a2 = need(in.b, "b", id);
    const auto& d = need(in.d, "d", id);
    intertwine_transfer(a1, a2, d);
    if (opts.corrupt) {
        // Flip one side of the transferred equation.
        MatrixElement lhs = tamper(mp_inverse(a2).inverse.value() * d);
        if (lhs != d * mp_inverse(a1).inverse.value())
            throw IdentityFalsified(id, "a2^+ d = d a1^+ (corrupt self-test)", "");
    }
    Json j;
    j["transferred"] = true;
    return j;
}

Json run_commuting_product(const StatementInputs& in, const RunOptions& opts,
                           const std::string& id) {
    const auto& a = need(in.a, "a", id);
    const auto& b = need(in.b, "b", id);
    MatrixElement value = commuting_product_mp(a, b);
    if (opts.corrupt) certify_or_falsify(id, "(ab)^+ corrupt self-test", a * b, tamper(value));
    Json j;
    j["product_mp"] = matrix_to_json(value);
    return j;
}

Json run_orthogonal_sum(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& a = need(in.a, "a", id);
    const auto& b = need(in.b, "b", id);
    MatrixElement value = orthogonal_sum_mp(a, b);
    if (opts.corrupt) certify_or_falsify(id, "(a+b)^+ corrupt self-test", a + b, tamper(value));
    Json j;
    j["sum_mp"] = matrix_to_json(value);
    return j;
}

Json run_pencil(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& a = need(in.a, "a", id);
    const auto& b = need(in.b, "b", id);
    const auto& p = need(in.p, "p", id);
    MatrixElement value = pencil_mp(a, b, p);
    if (opts.corrupt)
        certify_or_falsify(id, "pencil corrupt self-test", a * p + b * one_minus(p),
                           tamper(value));
    Json j;
    j["pencil_mp"] = matrix_to_json(value);
    return j;
}

Json run_chain(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    ExistenceChainReport rep = existence_chain(p, q);
    if (opts.corrupt && rep.gated) {
        auto flipped = rep.exists;
        flipped[0] = !flipped[0];
        bool all_equal = true;
        for (bool e : flipped) all_equal = all_equal && (e == flipped[0]);
        if (!all_equal)
            throw IdentityFalsified(id, "ten-way equivalence (corrupt self-test)", "");
    }
    return chain_to_json(rep);
}

Json run_diff_triple(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    DifferenceTriple rep = difference_equivalence_triple(p, q);
    if (opts.corrupt && rep.gated && !rep.exists_diff != rep.exists_one_pq)
        throw IdentityFalsified(id, "existence triple (corrupt self-test)", "");
    Json j;
    j["exists_p-q"] = rep.exists_diff;
    j["exists_1-pq"] = rep.exists_one_pq;
    j["exists_p+q-pq"] = rep.exists_sum_pq;
    j["cancellable_p-q"] = rep.cancellable_diff;
    j["cancellable_p(1-q)"] = rep.cancellable_p_one_minus_q;
    j["cancellable_q(1-p)"] = rep.cancellable_q_one_minus_p;
    j["gated"] = rep.gated;
    j["all_equal"] = rep.all_equal;
    return j;
}

Json run_fgh(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    FGHTriple t = fgh_decomposition(p, q);
    if (opts.corrupt)
        certify_or_falsify(id, "(p-q)^+ corrupt self-test", p - q, tamper(t.diff_mp));
    return fgh_to_json(t);
}

Json run_sum_via_diff(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    SumViaDifference rep = sum_mp_via_difference(p, q);
    if (opts.corrupt && rep.sum_mp)
        certify_or_falsify(id, "(p+q)^+ corrupt self-test", p + q, tamper(*rep.sum_mp));
    Json j;
    j["cond_pH"] = rep.cond_ph;
    j["cond_sumH"] = rep.cond_sum_h;
    j["cond_formula"] = rep.cond_formula;
    j["applicable"] = rep.applicable;
    if (rep.sum_mp) j["sum_mp"] = matrix_to_json(*rep.sum_mp);
    return j;
}

Json run_commuting_sum(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    CommutingSum rep = commuting_sum_mp(p, q);
    if (opts.corrupt && rep.sum_mp)
        certify_or_falsify(id, "(p+q)^+ corrupt self-test", p + q, tamper(*rep.sum_mp));
    Json j;
    j["exists"] = rep.exists;
    if (rep.sum_mp) j["sum_mp"] = matrix_to_json(*rep.sum_mp);
    if (rep.one_pq_mp) j["one_plus_pq_mp"] = matrix_to_json(*rep.one_pq_mp);
    return j;
}

Json run_five_formulas(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    FiveFormulas rep = difference_formula_suite(p, q);
    if (opts.corrupt)
        certify_or_falsify(id, "(1-pqp)^+ corrupt self-test", rep.entries[0].target,
                           tamper(rep.entries[0].formula_value));
    Json j;
    j["cancellable_p-pq"] = rep.cancellable_p_minus_pq;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["target"] = e.target_name;
        je["value"] = matrix_to_json(e.formula_value);
        je["passes"] = e.report.overall;
        je["asserted"] = e.asserted;
        entries.push_back(std::move(je));
    }
    j["formulas"] = std::move(entries);
    return j;
}

Json run_diff_from_products(const StatementInputs& in, const RunOptions& opts,
                            const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    MatrixElement value = difference_from_products(p, q);
    if (opts.corrupt) certify_or_falsify(id, "(p-q)^+ corrupt self-test", p - q, tamper(value));
    Json j;
    j["diff_mp"] = matrix_to_json(value);
    return j;
}

Json run_self_inverse(const StatementInputs& in, const RunOptions& opts, const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    SelfInverse rep = self_inverse_characterization(p, q);
    if (opts.corrupt && !rep.diff_self != rep.commute)
        throw IdentityFalsified(id, "(p-q)^+ = p-q iff pq = qp (corrupt self-test)", "");
    Json j;
    j["diff_self"] = rep.diff_self;
    j["commute"] = rep.commute;
    if (rep.sum_self) {
        j["sum_self"] = *rep.sum_self;
        j["product_zero"] = rep.product_zero;
    } else {
        j["sum_part"] = "skipped: 6 is not invertible in the ring";
    }
    return j;
}

Json run_complement_product(const StatementInputs& in, const RunOptions& opts,
                            const std::string& id) {
    const auto& p = need(in.p, "p", id);
    const auto& q = need(in.q, "q", id);
    ComplementProduct rep = product_mp_via_complement(p, q);
    if (opts.corrupt)
        certify_or_falsify(id, "(pqp)^+ corrupt self-test", p * q * p, tamper(rep.pqp_mp));
    Json j;
    j["pqp_mp"] = matrix_to_json(rep.pqp_mp);
    j["pq_cancellable"] = rep.pq_cancellable;
    if (rep.pq_mp) j["pq_mp"] = matrix_to_json(*rep.pq_mp);
    return j;
}

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> table = {
        {"lemma-intertwine", run_intertwine},
        {"lemma-commuting-product", run_commuting_product},
        {"lemma-orthogonal-sum", run_orthogonal_sum},
        {"thm-pencil", run_pencil},
        {"prop-ten-equivalences", run_chain},
        {"thm-diff-triple", run_diff_triple},
        {"thm-fgh", run_fgh},
        {"cor-fgh-relations", run_fgh},
        {"cor-fgh-recompose", run_fgh},
        {"thm-sum-via-diff", run_sum_via_diff},
        {"thm-commuting-sum", run_commuting_sum},
        {"thm-five-formulas", run_five_formulas},
        {"cor-diff-from-products", run_diff_from_products},
        {"thm-self-inverse", run_self_inverse},
        {"thm-complement-product", run_complement_product},
    };
    return table;
}

} // namespace

StatementReport run_statement(const std::string& id, const StatementInputs& in,
                              const RunOptions& opts) {
    auto it = runners().find(id);
    if (it == runners().end()) throw ParseError("unknown statement id '" + id + "'");

    StatementReport rep;
    rep.id = id;
    try {
        rep.data = it->second(in, opts, id);
        rep.outcome = Outcome::verified;
        rep.detail = "verified";
    } catch (const HypothesisViolation& e) {
        rep.outcome = Outcome::skipped;
        rep.detail = e.hypothesis();
        rep.witness = witness_json(in);
        rep.witness["violation"] = e.witness();
    } catch (const IdentityFalsified& e) {
        rep.outcome = Outcome::falsified;
        rep.detail = e.claim();
        rep.witness = witness_json(in);
        rep.witness["falsified"] = e.witness();
    }
    return rep;
}

} // namespace mpring
