#include "mpring/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mpring/linalg.hpp"
#include "mpring/mp.hpp"
#include "zm_kernel.hpp"

namespace mpring {

namespace gen_detail {

namespace {
std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix(s);
    s = a ^ (index * 0xD1B54A32D192ED03ULL + 0x9E3779B97F4A7C15ULL);
    std::uint64_t b = splitmix(s);
    state_ = b ^ (salt * 0x94D049BB133111EBULL + 1);
}

std::uint64_t Rng::next() { return splitmix(state_); }

std::int64_t Rng::next_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

} // namespace gen_detail

using gen_detail::Rng;

std::string to_string(PairKind kind) {
    switch (kind) {
        case PairKind::generic: return "generic";
        case PairKind::commuting: return "commuting";
        case PairKind::orthogonal: return "orthogonal";
        case PairKind::equal: return "equal";
        case PairKind::complement: return "complement";
        case PairKind::diagonal: return "diagonal";
    }
    return "?";
}

PairKind pair_kind_from_string(const std::string& s) {
    for (PairKind k : {PairKind::generic, PairKind::commuting, PairKind::orthogonal,
                       PairKind::equal, PairKind::complement, PairKind::diagonal})
        if (to_string(k) == s) return k;
    throw ParseError("unknown pair kind '" + s + "'");
}

namespace {

constexpr int kEntryBound = 5;  // basis entries drawn from [-5, 5]
constexpr int kMaxRetries = 64;

void require_field_ring(const RingContext& ring, const char* what) {
    if (ring.kind != ScalarKind::rational && ring.kind != ScalarKind::gaussian_rational)
        throw UnsupportedRing(std::string(what) + " requires QQ or QI, got " + ring.id());
}

Scalar random_entry(const RingContext& ring, Rng& rng, int bound) {
    if (ring.kind == ScalarKind::gaussian_rational)
        return Scalar::gaussian(BigRat(rng.next_in(-bound, bound)),
                                BigRat(rng.next_in(-bound, bound)));
    return Scalar::rational(BigRat(rng.next_in(-bound, bound)));
}

MatrixElement random_basis(const RingContext& ring, Rng& rng, int k) {
    MatrixElement b(ring, ring.n, k);
    for (int i = 0; i < ring.n; ++i)
        for (int j = 0; j < k; ++j) b.at(i, j) = random_entry(ring, rng, kEntryBound);
    return b;
}

int effective_rank_max(const GeneratorSpec& spec) {
    int hi = spec.rank_max < 0 ? spec.ring.n : spec.rank_max;
    return std::clamp(hi, 0, spec.ring.n);
}

int draw_rank(const GeneratorSpec& spec, Rng& rng) {
    int lo = std::clamp(spec.rank_min, 0, spec.ring.n);
    int hi = effective_rank_max(spec);
    if (lo > hi) std::swap(lo, hi);
    return static_cast<int>(rng.next_in(lo, hi));
}

/// Random 0/1 diagonal of the given rank (uniform position subset).
MatrixElement random_diagonal_projector(const RingContext& ring, Rng& rng, int rank) {
    std::vector<int> idx(static_cast<std::size_t>(ring.n));
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = ring.n - 1; i > 0; --i)
        std::swap(idx[static_cast<std::size_t>(i)],
                  idx[static_cast<std::size_t>(rng.next_in(0, i))]);
    MatrixElement d(ring, ring.n, ring.n);
    for (int i = 0; i < rank; ++i) d.at(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i)]) = ring.one();
    return d;
}

MatrixElement random_skew_adjoint(const RingContext& ring, Rng& rng) {
    MatrixElement s(ring, ring.n, ring.n);
    for (int i = 0; i < ring.n; ++i) {
        for (int j = i + 1; j < ring.n; ++j) {
            Scalar v = random_entry(ring, rng, 3);
            s.at(i, j) = v;
            s.at(j, i) = -v.conj();
        }
        if (ring.conjugating_involution())
            s.at(i, i) = Scalar::gaussian(BigRat(0), BigRat(rng.next_in(-3, 3)));
    }
    return s;
}

MatrixElement projector_with_rank(const RingContext& ring, Rng& rng, int k) {
    if (k == 0) return MatrixElement::zero(ring);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        MatrixElement b = random_basis(ring, rng, k);
        if (linalg_detail::rank(b) == k) return projector_from_basis(b);
    }
    throw std::runtime_error("could not sample a full-rank basis after bounded retries");
}

/// <u, v> = u* v as a scalar.
Scalar column_dot(const MatrixElement& u, const MatrixElement& v) {
    return (u.star() * v).at(0, 0);
}

MatrixElement column_of(const MatrixElement& m, int j) {
    MatrixElement c(m.ring(), m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) c.at(i, 0) = m.at(i, j);
    return c;
}

} // namespace

MatrixElement projector_from_basis(const MatrixElement& basis) {
    require_field_ring(basis.ring(), "projector_from_basis");
    if (basis.cols() == 0) return MatrixElement::zero(basis.ring());
    const MatrixElement bs = basis.star();
    auto gram_inv = matrix_inverse(bs * basis);
    if (!gram_inv) throw ContextError("projector_from_basis: basis is not full column rank");
    return basis * *gram_inv * bs;
}

MatrixElement cayley_orthogonal(const MatrixElement& skew) {
    require_field_ring(skew.ring(), "cayley_orthogonal");
    if (skew.star() != -skew) throw ContextError("cayley_orthogonal: S* = -S required");
    const MatrixElement id = MatrixElement::identity(skew.ring());
    auto inv = matrix_inverse(id + skew);
    if (!inv) throw std::logic_error("I + S must be invertible for skew-adjoint S");
    return (id - skew) * *inv;
}

MatrixElement random_projector(const GeneratorSpec& spec, std::uint64_t index) {
    require_field_ring(spec.ring, "random_projector");
    Rng rng(spec.seed, index, 0x70726f6a); // "proj"
    return projector_with_rank(spec.ring, rng, draw_rank(spec, rng));
}

std::pair<MatrixElement, MatrixElement> random_pair(const GeneratorSpec& spec,
                                                    std::uint64_t index) {
    require_field_ring(spec.ring, "random_pair");
    Rng rng(spec.seed, index, 0x70616972); // "pair"
    const RingContext& ring = spec.ring;

    switch (spec.kind) {
        case PairKind::generic: {
            MatrixElement p = projector_with_rank(ring, rng, draw_rank(spec, rng));
            MatrixElement q = projector_with_rank(ring, rng, draw_rank(spec, rng));
            return {std::move(p), std::move(q)};
        }
        case PairKind::equal: {
            MatrixElement p = projector_with_rank(ring, rng, draw_rank(spec, rng));
            return {p, p};
        }
        case PairKind::complement: {
            MatrixElement p = projector_with_rank(ring, rng, draw_rank(spec, rng));
            MatrixElement q = one_minus(p);
            return {std::move(p), std::move(q)};
        }
        case PairKind::diagonal: {
            MatrixElement p = random_diagonal_projector(ring, rng, draw_rank(spec, rng));
            MatrixElement q = random_diagonal_projector(ring, rng, draw_rank(spec, rng));
            return {std::move(p), std::move(q)};
        }
        case PairKind::commuting: {
            // Diagonal 0/1 pair conjugated by one Cayley rotation stays a
            // commuting projector pair.
            MatrixElement d1 = random_diagonal_projector(ring, rng, draw_rank(spec, rng));
            MatrixElement d2 = random_diagonal_projector(ring, rng, draw_rank(spec, rng));
            MatrixElement qrot = cayley_orthogonal(random_skew_adjoint(ring, rng));
            MatrixElement qs = qrot.star();
            return {qrot * d1 * qs, qrot * d2 * qs};
        }
        case PairKind::orthogonal: {
            int k1 = draw_rank(spec, rng);
            int k2 = std::min(draw_rank(spec, rng), ring.n - k1);
            for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
                MatrixElement b1 = random_basis(ring, rng, k1);
                if (k1 > 0 && linalg_detail::rank(b1) != k1) continue;

                // Exact Gram-Schmidt of fresh random columns against b1 and
                // the columns accepted so far.
                std::vector<MatrixElement> ortho;
                for (int j = 0; j < k1; ++j) ortho.push_back(column_of(b1, j));
                // b1's own columns need not be orthogonal among themselves;
                // orthogonalize a working copy for the projection step.
                for (std::size_t j = 1; j < ortho.size(); ++j)
                    for (std::size_t i = 0; i < j; ++i) {
                        Scalar coeff = column_dot(ortho[i], ortho[j]) / column_dot(ortho[i], ortho[i]);
                        ortho[j] = ortho[j] - ortho[i].scalar_mul(coeff);
                    }

                MatrixElement b2(ring, ring.n, k2);
                int accepted = 0;
                int tries = 0;
                while (accepted < k2 && tries++ < kMaxRetries) {
                    MatrixElement v(ring, ring.n, 1);
                    for (int i = 0; i < ring.n; ++i) v.at(i, 0) = random_entry(ring, rng, kEntryBound);
                    for (const MatrixElement& u : ortho) {
                        Scalar denom = column_dot(u, u);
                        if (denom.is_zero()) continue;
                        Scalar coeff = column_dot(u, v) / denom;
                        v = v - u.scalar_mul(coeff);
                    }
                    if (v.is_zero()) continue;
                    for (int i = 0; i < ring.n; ++i) b2.at(i, accepted) = v.at(i, 0);
                    ortho.push_back(v);
                    ++accepted;
                }
                if (accepted < k2) continue;

                MatrixElement p = k1 == 0 ? MatrixElement::zero(ring) : projector_from_basis(b1);
                MatrixElement q = k2 == 0 ? MatrixElement::zero(ring) : projector_from_basis(b2);
                if (!(p * q).is_zero()) throw std::logic_error("orthogonal pair construction broke");
                return {std::move(p), std::move(q)};
            }
            throw std::runtime_error("could not sample an orthogonal pair after bounded retries");
        }
    }
    throw ContextError("unknown pair kind");
}

std::vector<MatrixElement> enumerate_projectors(const RingContext& ring) {
    if (!ring.is_finite())
        throw UnsupportedRing("projector enumeration requires a finite ring, got " + ring.id());
    zm::Kernel k{ring.n, ring.modulus};
    auto space = k.space_size(kEnumerationBudget);
    if (!space)
        throw SearchBudgetExceeded("enumerate_projectors: |M_" + std::to_string(ring.n) + "(Z_" +
                                   std::to_string(ring.modulus) + ")| exceeds budget " +
                                   std::to_string(kEnumerationBudget));
    std::vector<MatrixElement> out;
    for (std::uint64_t code = 0; code < *space; ++code) {
        zm::Flat cand = k.decode(code);
        if (!k.is_symmetric(cand)) continue;
        if (k.mul(cand, cand) != cand) continue;
        out.push_back(k.to_element(cand, ring));
    }
    return out;
}

CounterexampleReport integer_counterexample_demo() {
    CounterexampleReport rep;
    const RingContext zz = RingContext::make("ZZ", 1);
    const MatrixElement p = MatrixElement::identity(zz); // p = q = 1

    const MatrixElement diff = p - p;
    MpResult diff_mp = mp_inverse(diff);
    rep.difference_invertible = diff_mp.exists && diff_mp.inverse->is_zero();

    const MatrixElement sum = p + p;
    MpResult sum_mp = mp_inverse(sum);
    rep.sum_has_no_inverse = !sum_mp.exists;

    const RingContext qq = RingContext::make("QQ", 1);
    MatrixElement two(qq, 1, 1);
    two.at(0, 0) = qq.from_int(2);
    MpResult half = mp_inverse(two);
    rep.rational_half = half.exists && half.inverse->at(0, 0) == Scalar::rational(1, 2);

    rep.text =
        "Counterexample ring: Z (1x1 integer matrices, identity involution), p = q = 1.\n"
        "  p - q = 0 is MP-invertible: (p - q)^+ = 0, all four Penrose equations hold.\n"
        "  p + q = 2 has no MP-inverse in Z: 2 is not invertible, and no integer b\n"
        "  satisfies 2b2 = 2.\n"
        "Same element over Q: 2^+ = 1/2 exists. MP-invertibility of p + q depends on\n"
        "the ambient ring even when p - q = 0 is trivially MP-invertible.\n";
    return rep;
}

} // namespace mpring
