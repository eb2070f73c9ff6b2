#include "zm_kernel.hpp"

namespace mpring::zm {

Flat Kernel::from_element(const MatrixElement& a) const {
    Flat out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i) * n + j] = a.at(i, j).as_mod().value;
    return out;
}

MatrixElement Kernel::to_element(const Flat& a, const RingContext& ring) const {
    MatrixElement out(ring, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = Scalar::mod(a[static_cast<std::size_t>(i) * n + j], m);
    return out;
}

Flat Kernel::mul(const Flat& a, const Flat& b) const {
    Flat out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::int64_t aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                std::size_t idx = static_cast<std::size_t>(i) * n + j;
                out[idx] = static_cast<std::int64_t>(
                    (out[idx] + static_cast<__int128>(aik) * b[static_cast<std::size_t>(k) * n + j]) % m);
            }
        }
    return out;
}

Flat Kernel::transpose(const Flat& a) const {
    Flat out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(j) * n + i] = a[static_cast<std::size_t>(i) * n + j];
    return out;
}

bool Kernel::is_symmetric(const Flat& a) const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[static_cast<std::size_t>(i) * n + j] != a[static_cast<std::size_t>(j) * n + i])
                return false;
    return true;
}

std::uint64_t Kernel::encode(const Flat& a) const {
    std::uint64_t code = 0;
    for (std::int64_t v : a) code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v);
    return code;
}

Flat Kernel::decode(std::uint64_t code) const {
    Flat out(static_cast<std::size_t>(n) * n);
    for (int k = static_cast<int>(out.size()) - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(m));
        code /= static_cast<std::uint64_t>(m);
    }
    return out;
}

bool Kernel::penrose(const Flat& a, const Flat& b) const {
    Flat ab = mul(a, b);
    if (ab != transpose(ab)) return false;
    if (mul(ab, a) != a) return false;
    Flat ba = mul(b, a);
    if (ba != transpose(ba)) return false;
    if (mul(ba, b) != b) return false;
    return true;
}

std::optional<std::uint64_t> Kernel::space_size(std::uint64_t cap) const {
    std::uint64_t size = 1;
    for (int k = 0; k < n * n; ++k) {
        if (size > cap / static_cast<std::uint64_t>(m)) return std::nullopt;
        size *= static_cast<std::uint64_t>(m);
        if (size > cap) return std::nullopt;
    }
    return size;
}

} // namespace mpring::zm
