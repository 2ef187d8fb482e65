#pragma once

#include <cstdint>

#include "tenring/matrix.hpp"

namespace tenring {

/// Deterministic splitmix64-based generator; identical seeds give identical
/// streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    std::uint32_t field_element(const FieldSpec& f) {
        return static_cast<std::uint32_t>(below(f.p));
    }

    ExactMatrix matrix(std::size_t rows, std::size_t cols, const FieldSpec& f) {
        ExactMatrix m(rows, cols, f);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.set(i, j, field_element(f));
        return m;
    }

    /// Random invertible matrix (rejection sampling).
    ExactMatrix invertible(std::size_t n, const FieldSpec& f) {
        for (;;) {
            ExactMatrix m = matrix(n, n, f);
            if (m.inverse()) return m;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace tenring
