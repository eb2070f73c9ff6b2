#include "mpring/scalar.hpp"

#include <cctype>
#include <numeric>

namespace mpring {

namespace {

std::int64_t normalize_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

/// Extended Euclid: inverse of a mod m when gcd(a, m) = 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = normalize_mod(a, m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) return std::nullopt;
    return normalize_mod(t, m);
}

ScalarKind kind_of(const std::variant<BigRat, GaussRat, ModVal, BigInt>& v) {
    switch (v.index()) {
        case 0: return ScalarKind::rational;
        case 1: return ScalarKind::gaussian_rational;
        case 2: return ScalarKind::mod_int;
        default: return ScalarKind::integer;
    }
}

[[noreturn]] void kind_mismatch(const Scalar& a, const Scalar& b) {
    throw ContextError("scalar kind mismatch: " + to_string(a.kind()) + " vs " +
                       to_string(b.kind()));
}

void check_same_mod(const ModVal& a, const ModVal& b) {
    if (a.modulus != b.modulus)
        throw ContextError("modulus mismatch: " + std::to_string(a.modulus) + " vs " +
                           std::to_string(b.modulus));
}

} // namespace

std::string to_string(ScalarKind kind) {
    switch (kind) {
        case ScalarKind::rational: return "rational";
        case ScalarKind::gaussian_rational: return "gaussian_rational";
        case ScalarKind::mod_int: return "mod_int";
        case ScalarKind::integer: return "integer";
    }
    return "?";
}

Scalar Scalar::mod(std::int64_t value, std::int64_t modulus) {
    if (modulus < 2) throw ContextError("modulus must be >= 2");
    return Scalar(ModVal{normalize_mod(value, modulus), modulus});
}

ScalarKind Scalar::kind() const { return kind_of(v_); }

std::int64_t Scalar::modulus() const {
    if (auto* m = std::get_if<ModVal>(&v_)) return m->modulus;
    return 0;
}

bool Scalar::is_zero() const {
    switch (kind()) {
        case ScalarKind::rational: return as_rational() == 0;
        case ScalarKind::gaussian_rational: return as_gaussian().re == 0 && as_gaussian().im == 0;
        case ScalarKind::mod_int: return as_mod().value == 0;
        case ScalarKind::integer: return as_integer() == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (kind()) {
        case ScalarKind::rational: return as_rational() == 1;
        case ScalarKind::gaussian_rational: return as_gaussian().re == 1 && as_gaussian().im == 0;
        case ScalarKind::mod_int: return as_mod().value == 1 % as_mod().modulus;
        case ScalarKind::integer: return as_integer() == 1;
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    if (kind() != rhs.kind()) kind_mismatch(*this, rhs);
    switch (kind()) {
        case ScalarKind::rational:
            return rational(as_rational() + rhs.as_rational());
        case ScalarKind::gaussian_rational: {
            const auto& a = as_gaussian();
            const auto& b = rhs.as_gaussian();
            return gaussian(a.re + b.re, a.im + b.im);
        }
        case ScalarKind::mod_int: {
            const auto& a = as_mod();
            const auto& b = rhs.as_mod();
            check_same_mod(a, b);
            return mod(normalize_mod(a.value + b.value, a.modulus), a.modulus);
        }
        case ScalarKind::integer:
            return integer(as_integer() + rhs.as_integer());
    }
    kind_mismatch(*this, rhs);
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    if (kind() != rhs.kind()) kind_mismatch(*this, rhs);
    switch (kind()) {
        case ScalarKind::rational:
            return rational(as_rational() * rhs.as_rational());
        case ScalarKind::gaussian_rational: {
            const auto& a = as_gaussian();
            const auto& b = rhs.as_gaussian();
            return gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
        }
        case ScalarKind::mod_int: {
            const auto& a = as_mod();
            const auto& b = rhs.as_mod();
            check_same_mod(a, b);
            return mod(mul_mod(a.value, b.value, a.modulus), a.modulus);
        }
        case ScalarKind::integer:
            return integer(as_integer() * rhs.as_integer());
    }
    kind_mismatch(*this, rhs);
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case ScalarKind::rational: return rational(-as_rational());
        case ScalarKind::gaussian_rational: return gaussian(-as_gaussian().re, -as_gaussian().im);
        case ScalarKind::mod_int: return mod(-as_mod().value, as_mod().modulus);
        case ScalarKind::integer: return integer(-as_integer());
    }
    return *this;
}

Scalar Scalar::conj() const {
    if (kind() == ScalarKind::gaussian_rational)
        return gaussian(as_gaussian().re, -as_gaussian().im);
    return *this;
}

std::optional<Scalar> Scalar::inverse() const {
    switch (kind()) {
        case ScalarKind::rational: {
            if (is_zero()) return std::nullopt;
            return rational(BigRat(1) / as_rational());
        }
        case ScalarKind::gaussian_rational: {
            if (is_zero()) return std::nullopt;
            const auto& g = as_gaussian();
            BigRat norm = g.re * g.re + g.im * g.im;
            return gaussian(g.re / norm, -g.im / norm);
        }
        case ScalarKind::mod_int: {
            auto inv = inverse_mod(as_mod().value, as_mod().modulus);
            if (!inv) return std::nullopt;
            return mod(*inv, as_mod().modulus);
        }
        case ScalarKind::integer: {
            if (as_integer() == 1 || as_integer() == -1) return *this;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    auto inv = rhs.inverse();
    if (!inv) throw ContextError("division by non-unit scalar " + rhs.to_string());
    return *this * *inv;
}

const BigRat& Scalar::as_rational() const { return std::get<BigRat>(v_); }
const GaussRat& Scalar::as_gaussian() const { return std::get<GaussRat>(v_); }
const ModVal& Scalar::as_mod() const { return std::get<ModVal>(v_); }
const BigInt& Scalar::as_integer() const { return std::get<BigInt>(v_); }

std::string rational_to_string(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

namespace {

/// Imaginary part rendered without a redundant unit coefficient: 1 -> "i",
/// -1 -> "-i", 3/4 -> "3/4i".
std::string imag_to_string(const BigRat& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rational_to_string(im) + "i";
}

} // namespace

std::string Scalar::to_string() const {
    switch (kind()) {
        case ScalarKind::rational:
            return rational_to_string(as_rational());
        case ScalarKind::gaussian_rational: {
            const auto& g = as_gaussian();
            if (g.im == 0) return rational_to_string(g.re);
            if (g.re == 0) return imag_to_string(g.im);
            if (g.im > 0) return rational_to_string(g.re) + "+" + imag_to_string(g.im);
            return rational_to_string(g.re) + "-" + imag_to_string(-g.im);
        }
        case ScalarKind::mod_int:
            return std::to_string(as_mod().value);
        case ScalarKind::integer:
            return as_integer().str();
    }
    return "?";
}

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

BigRat parse_big_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_text(text)) throw ParseError("bad rational: '" + text + "'");
        return BigRat(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw ParseError("bad rational: '" + text + "'");
    BigInt d(den);
    if (d <= 0) throw ParseError("denominator must be positive: '" + text + "'");
    return BigRat(BigInt(num), d); // cpp_rational reduces to lowest terms
}

namespace {

/// One additive term of a Gaussian rational, e.g. "3/4i", "-i", "1/2".
GaussRat parse_gaussian_term(std::string term) {
    if (!term.empty() && term.back() == 'i') {
        term.pop_back();
        if (term.empty() || term == "+") return GaussRat{0, 1};
        if (term == "-") return GaussRat{0, -1};
        return GaussRat{0, parse_big_rational(term)};
    }
    return GaussRat{parse_big_rational(term), 0};
}

GaussRat parse_gaussian(const std::string& text) {
    if (text.empty()) throw ParseError("empty gaussian rational");
    // Split at the top-level '+'/'-' separating the two terms. Signs can only
    // otherwise appear at position 0, since rationals contain digits and '/'.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] == '+' || text[i] == '-') {
            if (split != std::string::npos)
                throw ParseError("bad gaussian rational: '" + text + "'");
            split = i;
        }
    }
    if (split == std::string::npos) return parse_gaussian_term(text);
    GaussRat lhs = parse_gaussian_term(text.substr(0, split));
    GaussRat rhs = parse_gaussian_term(text.substr(split)); // keeps the sign
    if ((lhs.im != 0 && rhs.im != 0) || (lhs.im == 0 && rhs.im == 0))
        throw ParseError("bad gaussian rational: '" + text + "'");
    return GaussRat{lhs.re + rhs.re, lhs.im + rhs.im};
}

} // namespace

Scalar parse_scalar(ScalarKind kind, const std::string& text, std::int64_t modulus) {
    switch (kind) {
        case ScalarKind::rational:
            return Scalar::rational(parse_big_rational(text));
        case ScalarKind::gaussian_rational: {
            GaussRat g = parse_gaussian(text);
            return Scalar::gaussian(std::move(g.re), std::move(g.im));
        }
        case ScalarKind::mod_int: {
            if (!valid_integer_text(text)) throw ParseError("bad residue: '" + text + "'");
            BigInt v(text);
            BigInt m(modulus);
            BigInt r = v % m;
            if (r < 0) r += m;
            return Scalar::mod(static_cast<std::int64_t>(r), modulus);
        }
        case ScalarKind::integer: {
            if (!valid_integer_text(text)) throw ParseError("bad integer: '" + text + "'");
            return Scalar::integer(BigInt(text));
        }
    }
    throw ParseError("unknown scalar kind");
}

} // namespace mpring
