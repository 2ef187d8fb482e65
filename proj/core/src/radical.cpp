#include "tenring/algebra.hpp"
#include "tenring/poly.hpp"
#include "tenring/rng.hpp"

namespace tenring {

namespace {

ExactMatrix alg_pow(const FinDimAlgebra& a, ExactMatrix base, std::uint64_t e,
                    const ExactMatrix& identity) {
    ExactMatrix r = identity;
    while (e) {
        if (e & 1) r = a.mul(r, base);
        base = a.mul(base, base);
        e >>= 1;
    }
    return r;
}

}  // namespace

ExactMatrix radical_basis(const FinDimAlgebra& a) {
    const std::size_t n = a.dim();
    const FieldSpec f = a.field();
    ExactMatrix V = ExactMatrix::identity(n, f);

    // One chain step per characteristic-polynomial coefficient index
    // 1, p, p^2, ..., the largest power of p that is <= n.
    std::uint64_t idx = 1;
    for (;;) {
        std::size_t m = V.cols();
        if (m == 0) break;
        ExactMatrix T(m, m, f);
        for (std::size_t s = 0; s < m; ++s) {
            ExactMatrix as = V.column(s);
            for (std::size_t t = 0; t < m; ++t) {
                ExactMatrix prod = a.mul(as, V.column(t));
                Poly cp = char_poly(a.left_mult(prod));
                T.set(t, s, cp.coeff(n - static_cast<std::size_t>(idx)));
            }
        }
        V = V * T.kernel_basis();
        if (idx > n / f.p) break;  // next p-power would exceed n
        idx *= f.p;
    }
    return V.column_space();
}

QuotientAlgebra quotient_algebra(const FinDimAlgebra& a, const ExactMatrix& ideal) {
    const std::size_t n = a.dim();
    const FieldSpec f = a.field();
    ExactMatrix I = ideal.column_space();
    const std::size_t r = I.cols();

    auto pivots = I.transpose().rref().second;  // pivot coordinate positions
    std::vector<bool> is_piv(n, false);
    for (auto p : pivots) is_piv[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_piv[j]) comp.push_back(j);
    if (comp.size() != n - r) throw Error("quotient_algebra: ideal basis degenerate");

    ExactMatrix section(n, comp.size(), f);
    for (std::size_t j = 0; j < comp.size(); ++j) section.set(comp[j], j, 1);
    ExactMatrix T = I.hstack(section);
    auto Tinv = T.inverse();
    if (!Tinv) throw Error("quotient_algebra: internal basis completion failed");
    ExactMatrix projection = Tinv->submatrix(r, 0, n - r, n);

    const std::size_t d = n - r;
    std::vector<std::vector<std::vector<std::uint32_t>>> mult(
        d, std::vector<std::vector<std::uint32_t>>(d, std::vector<std::uint32_t>(d)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ExactMatrix prod = projection * a.mul(section.column(i), section.column(j));
            for (std::size_t k = 0; k < d; ++k) mult[i][j][k] = prod.at(k, 0);
        }
    ExactMatrix ubar = projection * a.unit();
    std::vector<std::uint32_t> unit(d);
    for (std::size_t k = 0; k < d; ++k) unit[k] = ubar.at(k, 0);
    return {FinDimAlgebra(std::move(mult), std::move(unit), f), projection, section};
}

Poly minimal_poly(const FinDimAlgebra& a, const ExactMatrix& elem,
                  const ExactMatrix& identity) {
    const FieldSpec f = a.field();
    ExactMatrix W = identity;  // columns: identity, elem, elem^2, ...
    ExactMatrix cur = identity;
    for (;;) {
        cur = a.mul(elem, cur);
        auto x = W.solve(cur);
        if (x) {
            std::vector<std::uint32_t> c(W.cols() + 1);
            for (std::size_t i = 0; i < W.cols(); ++i) c[i] = f.neg(x->at(i, 0));
            c[W.cols()] = 1;
            return Poly(std::move(c), f);
        }
        W = W.hstack(cur);
        if (W.cols() > a.dim() + 1) throw Error("minimal_poly: no dependency found (bug)");
    }
}

namespace {

/// Try to write e = f + (e - f) with f a nontrivial idempotent of eBe.
std::optional<ExactMatrix> find_split(const FinDimAlgebra& B, const ExactMatrix& e,
                                      Rng& rng) {
    const FieldSpec f = B.field();
    // Basis of the corner algebra eBe.
    ExactMatrix C(B.dim(), 0, f);
    for (std::size_t i = 0; i < B.dim(); ++i)
        C = C.hstack(B.mul(B.mul(e, B.basis_element(i)), e));
    C = C.column_space();
    const std::size_t m = C.cols();
    if (m <= 1) return std::nullopt;  // eBe = span{e}: primitive

    auto try_candidate = [&](const ExactMatrix& c) -> std::optional<ExactMatrix> {
        if (c.is_zero()) return std::nullopt;
        Poly mp = minimal_poly(B, c, e);
        auto fac = factor_poly(mp);
        if (fac.size() < 2) return std::nullopt;
        Poly F = Poly::constant(1, f);
        for (std::size_t i = 0; i < fac[0].second; ++i) F = F * fac[0].first;
        Poly G = Poly::constant(1, f);
        for (std::size_t i = 1; i < fac.size(); ++i)
            for (std::size_t j = 0; j < fac[i].second; ++j) G = G * fac[i].first;
        auto [g, s, t] = Poly::xgcd(F, G);
        if (g.degree() != 0) return std::nullopt;
        Poly u = (t * G) % mp;  // u == 1 mod F, u == 0 mod G
        ExactMatrix idem = B.eval_poly(u, c, e);
        if (idem.is_zero() || idem == e) return std::nullopt;
        if (!(B.mul(idem, idem) == idem)) return std::nullopt;
        return idem;
    };

    for (std::size_t i = 0; i < m; ++i)
        if (auto r = try_candidate(C.column(i))) return r;
    for (int trial = 0; trial < 256; ++trial)
        if (auto r = try_candidate(C * rng.matrix(m, 1, f))) return r;

    // No split found: accept as primitive when the corner is commutative
    // (a finite field); otherwise we cannot certify anything.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!(B.mul(C.column(i), C.column(j)) == B.mul(C.column(j), C.column(i))))
                throw Error("idempotent-lifting failure: non-commutative corner resists splitting");
    return std::nullopt;
}

}  // namespace

std::vector<ExactMatrix> primitive_orthogonal_idempotents(const FinDimAlgebra& a) {
    const FieldSpec f = a.field();
    ExactMatrix rad = radical_basis(a);
    QuotientAlgebra Q = quotient_algebra(a, rad);
    const FinDimAlgebra& B = Q.algebra;

    Rng rng(0x1d3a5c0ffeeULL + a.dim());
    std::vector<ExactMatrix> prim_bar;
    std::vector<ExactMatrix> work = {B.unit()};
    while (!work.empty()) {
        ExactMatrix e = work.back();
        work.pop_back();
        if (auto split = find_split(B, e, rng)) {
            work.push_back(*split);
            work.push_back(e - *split);
        } else {
            prim_bar.push_back(e);
        }
    }

    // Nilpotency index of the radical.
    std::size_t nil_index = 1;
    {
        ExactMatrix P = rad;
        while (!(P.cols() == 0)) {
            ExactMatrix nxt(a.dim(), 0, f);
            for (std::size_t i = 0; i < P.cols(); ++i)
                for (std::size_t j = 0; j < rad.cols(); ++j)
                    nxt = nxt.hstack(a.mul(P.column(i), rad.column(j)));
            P = nxt.column_space();
            ++nil_index;
            if (nil_index > a.dim() + 1)
                throw Error("primitive_orthogonal_idempotents: radical is not nilpotent (bug)");
        }
    }
    std::uint64_t q = 1;
    while (q < nil_index) q *= f.p;

    ExactMatrix one = a.unit();
    ExactMatrix s(a.dim(), 1, f);
    std::vector<ExactMatrix> prim;
    for (const ExactMatrix& ebar : prim_bar) {
        ExactMatrix t = one - s;
        ExactMatrix cand = a.mul(a.mul(t, Q.section * ebar), t);
        ExactMatrix e = alg_pow(a, cand, q, one);
        if (!(a.mul(e, e) == e)) throw Error("idempotent-lifting failure: lift not idempotent");
        if (!(Q.projection * e == ebar))
            throw Error("idempotent-lifting failure: lift drifted mod radical");
        prim.push_back(e);
        s = s + e;
    }
    if (!(s == one)) throw Error("idempotent-lifting failure: lifts do not sum to 1");
    return prim;
}

}  // namespace tenring
