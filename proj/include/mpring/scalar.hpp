#ifndef MPRING_SCALAR_HPP
#define MPRING_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "mpring/errors.hpp"

namespace mpring {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class ScalarKind { rational, gaussian_rational, mod_int, integer };

std::string to_string(ScalarKind kind);

/// Gaussian rational a + bi. The involution conjugates.
struct GaussRat {
    BigRat re;
    BigRat im;
    bool operator==(const GaussRat&) const = default;
};

/// Residue in Z_m, stored canonically in [0, m). Operations require equal moduli.
struct ModVal {
    std::int64_t value = 0;
    std::int64_t modulus = 0;
    bool operator==(const ModVal&) const = default;
};

/// Exact ring scalar: big-integer rational, Gaussian rational, residue mod m,
/// or plain big integer. Rationals are always kept in lowest terms with a
/// positive denominator (cpp_rational maintains this canonical form).
class Scalar {
public:
    Scalar() : v_(BigRat(0)) {}

    static Scalar rational(BigRat r) { return Scalar(std::move(r)); }
    static Scalar rational(long num, long den = 1) { return Scalar(BigRat(num, den)); }
    static Scalar gaussian(BigRat re, BigRat im) { return Scalar(GaussRat{std::move(re), std::move(im)}); }
    static Scalar mod(std::int64_t value, std::int64_t modulus);
    static Scalar integer(BigInt z) { return Scalar(std::move(z)); }

    ScalarKind kind() const;
    /// Modulus for mod_int scalars; 0 otherwise.
    std::int64_t modulus() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;

    /// The ring involution on scalars: complex conjugation for Gaussian
    /// rationals, the identity on the other kinds.
    Scalar conj() const;

    /// Multiplicative inverse, or nullopt when the scalar is not a unit.
    std::optional<Scalar> inverse() const;

    /// Exact division; throws ContextError when rhs is not a unit.
    Scalar operator/(const Scalar& rhs) const;

    bool operator==(const Scalar& rhs) const { return v_ == rhs.v_; }
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    const BigRat& as_rational() const;
    const GaussRat& as_gaussian() const;
    const ModVal& as_mod() const;
    const BigInt& as_integer() const;

    /// Canonical text form; parse_scalar round-trips it bit-exactly.
    std::string to_string() const;

private:
    explicit Scalar(BigRat r) : v_(std::move(r)) {}
    explicit Scalar(GaussRat g) : v_(std::move(g)) {}
    explicit Scalar(ModVal m) : v_(m) {}
    explicit Scalar(BigInt z) : v_(std::move(z)) {}

    std::variant<BigRat, GaussRat, ModVal, BigInt> v_;
};

/// Parse a scalar of the given kind from its text form.
///   rational:          "p/q" or "p"
///   gaussian_rational: "a/b+c/di" with either part omittable ("3", "-i", "1/2-3/4i")
///   mod_int:           decimal string, reduced into [0, m)
///   integer:           decimal string
Scalar parse_scalar(ScalarKind kind, const std::string& text, std::int64_t modulus = 0);

BigRat parse_big_rational(const std::string& text);
std::string rational_to_string(const BigRat& r);

} // namespace mpring

#endif
