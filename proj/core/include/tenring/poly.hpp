#pragma once

#include <tuple>
#include <vector>

#include "tenring/matrix.hpp"

namespace tenring {

/// Dense univariate polynomial over F_p, coefficients low-degree first.
/// The zero polynomial has an empty coefficient vector.
class Poly {
public:
    explicit Poly(FieldSpec f) : f_(f) {}
    Poly(std::vector<std::uint32_t> coeffs, FieldSpec f) : f_(f), c_(std::move(coeffs)) {
        trim();
    }
    static Poly x(FieldSpec f) { return Poly({0, 1}, f); }
    static Poly constant(std::uint32_t v, FieldSpec f) { return Poly({v % f.p}, f); }

    const FieldSpec& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(std::uint32_t v) const;
    Poly monic() const;

    /// Quotient and remainder by a nonzero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly derivative() const;
    static Poly gcd(Poly a, Poly b);
    /// (g, s, t) with g = s*a + t*b and g monic (or zero).
    static std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b);

    /// Evaluate at a square matrix (Horner).
    ExactMatrix eval(const ExactMatrix& m) const;
    std::uint32_t eval(std::uint32_t v) const;

    /// a^e mod m.
    static Poly powmod(Poly a, std::uint64_t e, const Poly& m);

private:
    FieldSpec f_;
    std::vector<std::uint32_t> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Characteristic polynomial of a square matrix (Hessenberg reduction,
/// valid over any prime field). Monic of degree n.
Poly char_poly(const ExactMatrix& m);

/// Monic irreducible factors with multiplicities (Berlekamp; deterministic
/// for a fixed input).
std::vector<std::pair<Poly, std::size_t>> factor_poly(const Poly& f);

}  // namespace tenring
