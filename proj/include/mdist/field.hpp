#pragma once

#include <cstdint>
#include <stdexcept>

namespace mdist {

/// Arithmetic in the prime field F_p. Scalars are plain residues 0 <= v < p.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t prime = 2) : p_(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("field characteristic must be prime");
    }

    [[nodiscard]] std::uint32_t prime() const { return p_; }

    [[nodiscard]] std::uint32_t reduce(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(p_);
        v %= p;
        return static_cast<std::uint32_t>(v < 0 ? v + p : v);
    }
    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        // a^(p-2)
        std::uint64_t result = 1;
        std::uint64_t base = a;
        std::uint32_t e = p_ - 2;
        while (e != 0) {
            if (e & 1U) result = (result * base) % p_;
            base = (base * base) % p_;
            e >>= 1U;
        }
        return static_cast<std::uint32_t>(result);
    }
    [[nodiscard]] std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace mdist
