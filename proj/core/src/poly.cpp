#include "tenring/poly.hpp"

#include <algorithm>

namespace tenring {

Poly Poly::operator+(const Poly& o) const {
    std::vector<std::uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.add(coeff(i), o.coeff(i));
    return Poly(std::move(c), f_);
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<std::uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.sub(coeff(i), o.coeff(i));
    return Poly(std::move(c), f_);
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<std::uint32_t> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = f_.add(c[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return Poly(std::move(c), f_);
}

Poly Poly::scaled(std::uint32_t v) const {
    std::vector<std::uint32_t> c(c_);
    for (auto& x : c) x = f_.mul(x, v);
    return Poly(std::move(c), f_);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_.inv(c_.back()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("Poly: division by zero");
    std::vector<std::uint32_t> rem(c_);
    std::vector<std::uint32_t> quo;
    int dd = d.degree();
    std::uint32_t lead_inv = f_.inv(d.c_.back());
    int rd = static_cast<int>(rem.size()) - 1;
    if (rd >= dd) quo.assign(rd - dd + 1, 0);
    for (int i = rd; i >= dd; --i) {
        std::uint32_t c = rem[i];
        if (!c) continue;
        std::uint32_t q = f_.mul(c, lead_inv);
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] = f_.sub(rem[i - dd + j], f_.mul(q, d.c_[j]));
    }
    return {Poly(std::move(quo), f_), Poly(std::move(rem), f_)};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<std::uint32_t> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = f_.mul(c_[i], static_cast<std::uint32_t>(i % f_.p));
    return Poly(std::move(c), f_);
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(Poly a, Poly b) {
    FieldSpec f = a.field();
    Poly s0 = Poly::constant(1, f), s1 = Poly(f);
    Poly t0 = Poly(f), t1 = Poly::constant(1, f);
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.is_zero()) {
        std::uint32_t inv = f.inv(a.coeffs().back());
        a = a.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {a, s0, t0};
}

ExactMatrix Poly::eval(const ExactMatrix& m) const {
    if (m.rows() != m.cols()) throw Error("Poly: eval needs square matrix");
    ExactMatrix r = ExactMatrix::zero(m.rows(), m.cols(), f_);
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = r * m;
        ExactMatrix c = ExactMatrix::identity(m.rows(), f_).scaled(c_[i]);
        r = r + c;
    }
    return r;
}

std::uint32_t Poly::eval(std::uint32_t v) const {
    std::uint32_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, v), c_[i]);
    return r;
}

Poly Poly::powmod(Poly a, std::uint64_t e, const Poly& m) {
    Poly r = Poly::constant(1, a.field());
    a = a % m;
    while (e) {
        if (e & 1) r = (r * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return r;
}

Poly char_poly(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw Error("char_poly: matrix not square");
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(1, f);

    // Similarity reduction to upper Hessenberg form.
    std::vector<std::vector<std::uint32_t>> h(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = m.at(i, j);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && h[piv][k] == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            std::swap(h[piv], h[k + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
        }
        std::uint32_t inv = f.inv(h[k + 1][k]);
        for (std::size_t i = k + 2; i < n; ++i) {
            std::uint32_t c = f.mul(h[i][k], inv);
            if (!c) continue;
            for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(c, h[k + 1][j]));
            for (std::size_t j = 0; j < n; ++j) h[j][k + 1] = f.add(h[j][k + 1], f.mul(c, h[j][i]));
        }
    }

    // p_m = (x - h[m][m]) p_{m-1} - sum_i h[i][m] (prod_{j=i+1..m} h[j][j-1]) p_{i-1}
    std::vector<Poly> p;
    p.push_back(Poly::constant(1, f));
    for (std::size_t mm = 1; mm <= n; ++mm) {
        Poly xm = Poly({f.neg(h[mm - 1][mm - 1]), 1}, f);
        Poly pm = xm * p[mm - 1];
        std::uint32_t prod = 1;
        for (std::size_t i = mm - 1; i >= 1; --i) {
            prod = f.mul(prod, h[i][i - 1]);  // h[i+1][i] 1-based
            if (!prod) break;
            std::uint32_t c = f.mul(h[i - 1][mm - 1], prod);
            if (c) pm = pm - p[i - 1].scaled(c);
        }
        p.push_back(pm);
    }
    return p[n];
}

namespace {

std::vector<Poly> berlekamp_squarefree(const Poly& f) {
    const FieldSpec fld = f.field();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    if (n <= 1) return {f.monic()};

    // Berlekamp matrix: column i = x^{ip} mod f.
    ExactMatrix B(n, n, fld);
    Poly xp = Poly::powmod(Poly::x(fld), fld.p, f);
    Poly cur = Poly::constant(1, fld);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) B.set(j, i, cur.coeff(j));
        cur = (cur * xp) % f;
    }
    ExactMatrix K = (B - ExactMatrix::identity(n, fld)).kernel_basis();
    std::size_t r = K.cols();
    std::vector<Poly> factors = {f.monic()};
    if (r <= 1) return factors;

    for (std::size_t vi = 0; vi < K.cols() && factors.size() < r; ++vi) {
        std::vector<std::uint32_t> vc(n);
        for (std::size_t j = 0; j < n; ++j) vc[j] = K.at(j, vi);
        Poly v(std::move(vc), fld);
        if (v.degree() <= 0) continue;
        std::vector<Poly> next;
        for (const Poly& u : factors) {
            if (u.degree() <= 1 || factors.size() + next.size() >= r + 1) {
                next.push_back(u);
                continue;
            }
            Poly rest = u;
            for (std::uint32_t s = 0; s < fld.p && rest.degree() > 0; ++s) {
                Poly g = Poly::gcd(rest, v - Poly::constant(s, fld));
                if (g.degree() > 0 && g.degree() < rest.degree()) {
                    next.push_back(g);
                    rest = rest.divmod(g).first.monic();
                }
            }
            if (rest.degree() > 0) next.push_back(rest);
        }
        factors = std::move(next);
    }
    return factors;
}

void merge_factor(std::vector<std::pair<Poly, std::size_t>>& out, const Poly& g,
                  std::size_t mult) {
    for (auto& [h, m] : out)
        if (h == g) {
            m += mult;
            return;
        }
    out.emplace_back(g, mult);
}

}  // namespace

std::vector<std::pair<Poly, std::size_t>> factor_poly(const Poly& fin) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const FieldSpec fld = fin.field();
    Poly f = fin.monic();
    if (f.degree() <= 0) return out;

    Poly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); over the prime field the coefficients transfer directly.
        std::vector<std::uint32_t> gc;
        for (int i = 0; i <= f.degree(); i += fld.p) gc.push_back(f.coeff(i));
        for (auto& [g, m] : factor_poly(Poly(std::move(gc), fld)))
            merge_factor(out, g, m * fld.p);
        return out;
    }
    Poly g = Poly::gcd(f, d);
    if (g.degree() == 0) {
        for (const Poly& u : berlekamp_squarefree(f)) merge_factor(out, u, 1);
        return out;
    }
    for (auto& [u, m] : factor_poly(f.divmod(g).first)) merge_factor(out, u, m);
    for (auto& [u, m] : factor_poly(g)) merge_factor(out, u, m);
    return out;
}

}  // namespace tenring
