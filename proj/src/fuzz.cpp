#include "mpring/fuzz.hpp"

#include <algorithm>

namespace mpring {

namespace {

using gen_detail::Rng;

constexpr std::array<PairKind, 10> kKindMix = {
    PairKind::generic,   PairKind::generic,    PairKind::generic, PairKind::generic,
    PairKind::commuting, PairKind::commuting,  PairKind::orthogonal,
    PairKind::orthogonal, PairKind::equal,     PairKind::complement};

/// Extra generator streams must not collide with the per-trial pair streams,
/// which use indices below 2^32.
constexpr std::uint64_t kExtraBase = std::uint64_t(1) << 32;

Scalar random_real_scalar(const RingContext& ring, Rng& rng, int num_bound, int den_bound) {
    BigRat r(rng.next_in(-num_bound, num_bound), rng.next_in(1, den_bound));
    if (ring.kind == ScalarKind::gaussian_rational) return Scalar::gaussian(r, BigRat(0));
    return Scalar::rational(r);
}

MatrixElement random_skew(const RingContext& ring, Rng& rng) {
    MatrixElement s(ring, ring.n, ring.n);
    for (int i = 0; i < ring.n; ++i) {
        for (int j = i + 1; j < ring.n; ++j) {
            Scalar v = ring.kind == ScalarKind::gaussian_rational
                           ? Scalar::gaussian(BigRat(rng.next_in(-3, 3)), BigRat(rng.next_in(-3, 3)))
                           : Scalar::rational(BigRat(rng.next_in(-3, 3)));
            s.at(i, j) = v;
            s.at(j, i) = -v.conj();
        }
        if (ring.conjugating_involution())
            s.at(i, i) = Scalar::gaussian(BigRat(0), BigRat(rng.next_in(-3, 3)));
    }
    return s;
}

MatrixElement random_real_diagonal(const RingContext& ring, Rng& rng) {
    MatrixElement d(ring, ring.n, ring.n);
    for (int i = 0; i < ring.n; ++i) d.at(i, i) = random_real_scalar(ring, rng, 4, 3);
    return d;
}

MatrixElement random_int_matrix(const RingContext& ring, Rng& rng, int bound) {
    MatrixElement m(ring, ring.n, ring.n);
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < ring.n; ++j) m.at(i, j) = ring.from_int(rng.next_in(-bound, bound));
    return m;
}

/// Hypothesis-satisfying elements for the four non-(p,q) statements, derived
/// deterministically from the trial stream.
struct LemmaInputs {
    StatementInputs intertwine;  // a = a1, b = a2, d
    StatementInputs commuting;   // a, b commuting symmetric
    StatementInputs orthogonal;  // a, b with a*b = ab* = 0
    StatementInputs pencil;      // a, b, p with a*, b* commuting with p
};

LemmaInputs make_lemma_inputs(const GeneratorSpec& spec, std::uint64_t trial,
                              const MatrixElement& p) {
    const RingContext& ring = spec.ring;
    LemmaInputs out;

    {
        // a1 symmetric, a2 = O a1 O*, d = O f(a1): then d a1 = a2 d and
        // d a1* = a2* d hold by construction.
        Rng rng(spec.seed, trial, 0x696e7477); // "intw"
        MatrixElement o_inner = cayley_orthogonal(random_skew(ring, rng));
        MatrixElement a1 = o_inner * random_real_diagonal(ring, rng) * o_inner.star();
        MatrixElement o = cayley_orthogonal(random_skew(ring, rng));
        MatrixElement a2 = o * a1 * o.star();
        Scalar c0 = random_real_scalar(ring, rng, 3, 2);
        Scalar c1 = random_real_scalar(ring, rng, 3, 2);
        Scalar c2 = random_real_scalar(ring, rng, 3, 2);
        MatrixElement poly = MatrixElement::identity(ring).scalar_mul(c0) + a1.scalar_mul(c1) +
                             (a1 * a1).scalar_mul(c2);
        out.intertwine.a = std::move(a1);
        out.intertwine.b = std::move(a2);
        out.intertwine.d = o * poly;
    }
    {
        // Commuting symmetric pair: one rotation, two real diagonals.
        Rng rng(spec.seed, trial, 0x636f6d6d); // "comm"
        MatrixElement o = cayley_orthogonal(random_skew(ring, rng));
        MatrixElement os = o.star();
        out.commuting.a = o * random_real_diagonal(ring, rng) * os;
        out.commuting.b = o * random_real_diagonal(ring, rng) * os;
    }
    {
        // a = p M r, b = (1-p) N (1-r): a*b = ab* = 0 for projectors p, r.
        Rng rng(spec.seed, trial, 0x6f727468); // "orth"
        GeneratorSpec rspec = spec;
        MatrixElement r = random_projector(rspec, kExtraBase + trial);
        out.orthogonal.a = p * random_int_matrix(ring, rng, 3) * r;
        out.orthogonal.b = one_minus(p) * random_int_matrix(ring, rng, 3) * one_minus(r);
    }
    {
        // Polynomials in p are self-adjoint and commute with p.
        Rng rng(spec.seed, trial, 0x70656e63); // "penc"
        Scalar alpha = random_real_scalar(ring, rng, 4, 3);
        Scalar beta = random_real_scalar(ring, rng, 4, 3);
        Scalar gamma = random_real_scalar(ring, rng, 4, 3);
        Scalar delta = random_real_scalar(ring, rng, 4, 3);
        out.pencil.a = p.scalar_mul(alpha) + one_minus(p).scalar_mul(beta);
        out.pencil.b = p.scalar_mul(gamma) + one_minus(p).scalar_mul(delta);
        out.pencil.p = p;
    }
    return out;
}

Outcome worst(Outcome a, Outcome b) {
    auto rank = [](Outcome o) {
        return o == Outcome::falsified ? 2 : (o == Outcome::skipped ? 1 : 0);
    };
    return rank(a) >= rank(b) ? a : b;
}

bool statement_uses_pair(const std::string& id) {
    return id != "lemma-intertwine" && id != "lemma-commuting-product" &&
           id != "lemma-orthogonal-sum" && id != "thm-pencil";
}

} // namespace

FuzzConfig FuzzConfig::from_json(const Json& j) {
    FuzzConfig c;
    if (j.contains("ring")) c.ring_id = j["ring"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) c.trials = j["trials"].get<int>();
    if (j.contains("dim")) c.dim = j["dim"].get<int>();
    if (j.contains("rank_min")) c.rank_min = j["rank_min"].get<int>();
    if (j.contains("rank_max")) c.rank_max = j["rank_max"].get<int>();
    if (j.contains("kind")) c.kind = pair_kind_from_string(j["kind"].get<std::string>());
    if (j.contains("statements")) {
        if (j["statements"].is_string()) {
            if (j["statements"].get<std::string>() != "all")
                c.statements = {j["statements"].get<std::string>()};
        } else {
            c.statements = j["statements"].get<std::vector<std::string>>();
        }
    }
    return c;
}

Json FuzzConfig::to_json() const {
    Json j;
    j["ring"] = ring_id;
    j["seed"] = seed;
    j["trials"] = trials;
    j["dim"] = dim;
    j["rank_min"] = rank_min;
    j["rank_max"] = rank_max < 0 ? dim : rank_max;
    if (kind) j["kind"] = to_string(*kind);
    j["statements"] = statements.empty() ? Json("all") : Json(statements);
    return j;
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
    RingContext ring = RingContext::make(config.ring_id, config.dim);
    if (ring.kind != ScalarKind::rational && ring.kind != ScalarKind::gaussian_rational)
        throw ParseError("fuzz generates over QQ or QI; use the oracle command for finite rings");
    if (config.trials < 0) throw ParseError("trials must be >= 0");

    std::vector<std::string> selected = config.statements;
    if (selected.empty()) selected = statement_ids();
    for (const auto& id : selected)
        if (!is_statement_id(id)) throw ParseError("unknown statement id '" + id + "'");
    if (!config.corrupt_id.empty() && !is_statement_id(config.corrupt_id))
        throw ParseError("unknown statement id '" + config.corrupt_id + "'");

    FuzzSummary summary;
    summary.config = config;
    for (const auto& id : selected) summary.per_statement[id];

    for (int trial = 0; trial < config.trials; ++trial) {
        PairKind kind = config.kind ? *config.kind : kKindMix[static_cast<std::size_t>(trial % 10)];
        GeneratorSpec spec{ring, config.seed, kind, config.rank_min, config.rank_max};
        auto [p, q] = random_pair(spec, static_cast<std::uint64_t>(trial));
        LemmaInputs lemma = make_lemma_inputs(spec, static_cast<std::uint64_t>(trial), p);

        StatementInputs pair_in;
        pair_in.p = p;
        pair_in.q = q;
        StatementInputs swapped;
        swapped.p = q;
        swapped.q = p;

        for (const auto& id : selected) {
            RunOptions opts;
            opts.corrupt = (id == config.corrupt_id);

            StatementReport primary;
            Outcome combined;
            if (!statement_uses_pair(id)) {
                const StatementInputs* in = &lemma.intertwine;
                if (id == "lemma-commuting-product") in = &lemma.commuting;
                else if (id == "lemma-orthogonal-sum") in = &lemma.orthogonal;
                else if (id == "thm-pencil") in = &lemma.pencil;
                primary = run_statement(id, *in, opts);
                combined = primary.outcome;
                if (primary.outcome == Outcome::falsified)
                    summary.failures.push_back(Json{{"statement", id},
                                                    {"trial", trial},
                                                    {"kind", to_string(kind)},
                                                    {"detail", primary.detail},
                                                    {"witness", primary.witness}});
            } else {
                primary = run_statement(id, pair_in, opts);
                StatementReport swap = run_statement(id, swapped, RunOptions{});
                combined = worst(primary.outcome, swap.outcome);
                for (const StatementReport* rep : {&primary, &swap})
                    if (rep->outcome == Outcome::falsified)
                        summary.failures.push_back(Json{{"statement", id},
                                                        {"trial", trial},
                                                        {"kind", to_string(kind)},
                                                        {"detail", rep->detail},
                                                        {"witness", rep->witness}});

                // The existence triple must agree with the complemented pair
                // on the p-q condition.
                if (id == "thm-diff-triple" && primary.outcome == Outcome::verified) {
                    StatementInputs comp_in;
                    comp_in.p = one_minus(p);
                    comp_in.q = one_minus(q);
                    StatementReport comp = run_statement(id, comp_in, RunOptions{});
                    bool consistent =
                        comp.outcome != Outcome::falsified &&
                        comp.data["exists_p-q"] == primary.data["exists_p-q"];
                    if (!consistent) {
                        combined = Outcome::falsified;
                        summary.failures.push_back(
                            Json{{"statement", id},
                                 {"trial", trial},
                                 {"kind", to_string(kind)},
                                 {"detail", "complement pair disagrees on p-q existence"},
                                 {"witness", primary.witness}});
                    }
                }
            }

            auto& tally = summary.per_statement[id];
            if (combined == Outcome::verified) ++tally.verified;
            else if (combined == Outcome::skipped) ++tally.skipped;
            else ++tally.falsified;
        }
        ++summary.trials_run;
    }
    return summary;
}

Json FuzzSummary::to_json() const {
    Json j;
    j["config"] = config.to_json();
    j["trials_run"] = trials_run;
    Json stmts = Json::object();
    for (const auto& [id, tally] : per_statement) {
        Json t;
        t["verified"] = tally.verified;
        t["skipped"] = tally.skipped;
        t["falsified"] = tally.falsified;
        stmts[id] = std::move(t);
    }
    j["statements"] = std::move(stmts);
    j["failures"] = failures;
    j["ok"] = ok();
    return j;
}

std::string FuzzSummary::to_text() const {
    std::string s = "fuzz: ring " + config.ring_id + ", dim " + std::to_string(config.dim) +
                    ", seed " + std::to_string(config.seed) + ", trials " +
                    std::to_string(trials_run) + "\n";
    for (const auto& [id, tally] : per_statement)
        s += "  " + id + ": verified " + std::to_string(tally.verified) + ", skipped " +
             std::to_string(tally.skipped) + ", falsified " + std::to_string(tally.falsified) +
             "\n";
    s += failures.empty() ? "no falsifications\n"
                          : (std::to_string(failures.size()) + " falsification(s)\n");
    return s;
}

} // namespace mpring
