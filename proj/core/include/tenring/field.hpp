#pragma once

#include <cstdint>
#include <stdexcept>

namespace tenring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Prime field F_p. All arithmetic is on residues in [0, p).
struct FieldSpec {
    std::uint32_t p = 7;

    FieldSpec() = default;
    explicit FieldSpec(std::uint32_t prime) : p(prime) {
        if (!is_prime(prime)) throw Error("FieldSpec: modulus must be a prime >= 2");
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p, base = a % p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p == 0) throw Error("FieldSpec: inverse of zero");
        return pow(a, p - 2);
    }

    bool operator==(const FieldSpec&) const = default;
};

}  // namespace tenring
