#include "mpring/ring.hpp"

#include <numeric>

namespace mpring {

Scalar RingContext::from_int(std::int64_t k) const {
    switch (kind) {
        case ScalarKind::rational: return Scalar::rational(BigRat(k));
        case ScalarKind::gaussian_rational: return Scalar::gaussian(BigRat(k), BigRat(0));
        case ScalarKind::mod_int: return Scalar::mod(k, modulus);
        case ScalarKind::integer: return Scalar::integer(BigInt(k));
    }
    throw ContextError("unknown scalar kind");
}

bool RingContext::integer_is_unit(std::int64_t k) const {
    return from_int(k).inverse().has_value();
}

std::string RingContext::id() const {
    switch (kind) {
        case ScalarKind::rational: return "QQ";
        case ScalarKind::gaussian_rational: return "QI";
        case ScalarKind::mod_int: return "Zm:" + std::to_string(modulus);
        case ScalarKind::integer: return "ZZ";
    }
    return "?";
}

RingContext RingContext::make(const std::string& ring_id, int n) {
    if (n < 1) throw ParseError("matrix dimension must be >= 1");
    if (ring_id == "QQ") return RingContext{ScalarKind::rational, n, 0};
    if (ring_id == "QI") return RingContext{ScalarKind::gaussian_rational, n, 0};
    if (ring_id == "ZZ") return RingContext{ScalarKind::integer, n, 0};
    if (ring_id.rfind("Zm:", 0) == 0) {
        const std::string digits = ring_id.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad modulus in ring id '" + ring_id + "'");
        BigInt m(digits);
        if (m < 2) throw ParseError("modulus must be >= 2");
        if (m > BigInt(std::int64_t(1) << 62))
            throw ParseError("modulus too large: '" + ring_id + "'");
        return RingContext{ScalarKind::mod_int, n, static_cast<std::int64_t>(m)};
    }
    throw ParseError("unknown ring id '" + ring_id + "' (expected QQ, QI, Zm:<m>, ZZ)");
}

} // namespace mpring
