#include "tenring/algebra.hpp"

#include "tenring/poly.hpp"

namespace tenring {

FinDimAlgebra::FinDimAlgebra(
    std::vector<std::vector<std::vector<std::uint32_t>>> mult,
    std::vector<std::uint32_t> unit, FieldSpec f, std::vector<std::string> labels)
    : f_(f), dim_(mult.size()), unit_(std::move(unit)), labels_(std::move(labels)) {
    if (unit_.size() != dim_) throw Error("FinDimAlgebra: unit length mismatch");
    lm_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (mult[i].size() != dim_) throw Error("FinDimAlgebra: mult shape");
        ExactMatrix L(dim_, dim_, f_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (mult[i][j].size() != dim_) throw Error("FinDimAlgebra: mult shape");
            for (std::size_t k = 0; k < dim_; ++k) L.set(k, j, mult[i][j][k]);
        }
        lm_.push_back(std::move(L));
    }
}

ExactMatrix FinDimAlgebra::unit() const {
    ExactMatrix u(dim_, 1, f_);
    for (std::size_t i = 0; i < dim_; ++i) u.set(i, 0, unit_[i]);
    return u;
}

ExactMatrix FinDimAlgebra::basis_element(std::size_t i) const {
    ExactMatrix v(dim_, 1, f_);
    v.set(i, 0, 1);
    return v;
}

ExactMatrix FinDimAlgebra::left_mult(const ExactMatrix& a) const {
    if (a.rows() != dim_ || a.cols() != 1) throw Error("left_mult: bad element");
    ExactMatrix L(dim_, dim_, f_);
    for (std::size_t i = 0; i < dim_; ++i) {
        std::uint32_t c = a.at(i, 0);
        if (c) L = L + lm_[i].scaled(c);
    }
    return L;
}

ExactMatrix FinDimAlgebra::right_mult(const ExactMatrix& a) const {
    if (a.rows() != dim_ || a.cols() != 1) throw Error("right_mult: bad element");
    // (x * a)_k = sum_{i,j} x_i a_j c_{ij}^k
    ExactMatrix R(dim_, dim_, f_);
    for (std::size_t i = 0; i < dim_; ++i) {
        ExactMatrix col = lm_[i] * a;  // b_i * a
        for (std::size_t k = 0; k < dim_; ++k) R.set(k, i, col.at(k, 0));
    }
    return R;
}

void FinDimAlgebra::validate() const {
    ExactMatrix u = unit();
    for (std::size_t i = 0; i < dim_; ++i) {
        ExactMatrix bi = basis_element(i);
        if (!(mul(u, bi) == bi) || !(mul(bi, u) == bi))
            throw Error("FinDimAlgebra: unit is not two-sided");
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            ExactMatrix bij = lm_[i] * basis_element(j);
            for (std::size_t k = 0; k < dim_; ++k) {
                ExactMatrix bk = basis_element(k);
                if (!(left_mult(bij) * bk == lm_[i] * (lm_[j] * bk)))
                    throw Error("FinDimAlgebra: associativity fails");
            }
        }
}

ExactMatrix FinDimAlgebra::eval_poly(const Poly& p, const ExactMatrix& a,
                                     const ExactMatrix& identity) const {
    ExactMatrix r(dim_, 1, f_);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        r = mul(a, r) + identity.scaled(p.coeff(i));
    }
    return r;
}

PathAlgebra path_algebra(const QuiverPreset& q) {
    if (q.h < 2 || q.h > q.n) throw Error("path_algebra: require 2 <= h <= n");
    const std::size_t n = q.n, h = q.h;
    const std::size_t dim = n * h;
    // Basis index of the path starting at v (0-based) of length l.
    auto idx = [&](std::size_t v, std::size_t l) { return v * h + l; };

    std::vector<std::vector<std::vector<std::uint32_t>>> mult(
        dim, std::vector<std::vector<std::uint32_t>>(dim, std::vector<std::uint32_t>(dim, 0)));
    // p * q = "q then p": defined iff source(p) == target(q).
    for (std::size_t v1 = 0; v1 < n; ++v1)
        for (std::size_t l1 = 0; l1 < h; ++l1)
            for (std::size_t v2 = 0; v2 < n; ++v2)
                for (std::size_t l2 = 0; l2 < h; ++l2) {
                    if (v1 != (v2 + l2) % n) continue;
                    if (l1 + l2 >= h) continue;
                    mult[idx(v1, l1)][idx(v2, l2)][idx(v2, l1 + l2)] = 1;
                }

    std::vector<std::uint32_t> unit(dim, 0);
    for (std::size_t v = 0; v < n; ++v) unit[idx(v, 0)] = 1;

    std::vector<std::string> labels(dim);
    std::vector<std::pair<std::size_t, std::size_t>> basis_path(dim);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t l = 0; l < h; ++l) {
            std::string s = l == 0 ? "e" + std::to_string(v + 1) : "p" + std::to_string(v + 1);
            for (std::size_t t = 1; t <= l; ++t) s += ">" + std::to_string((v + t) % n + 1);
            labels[idx(v, l)] = s;
            basis_path[idx(v, l)] = {v, l};
        }

    PathAlgebra out{FinDimAlgebra(std::move(mult), std::move(unit), q.field, std::move(labels)), {}, std::move(basis_path)};
    for (std::size_t v = 0; v < n; ++v)
        out.idempotents.push_back(out.algebra.basis_element(idx(v, 0)));
    return out;
}

namespace {
std::vector<std::vector<std::vector<std::uint32_t>>> mult_table(const FinDimAlgebra& a) {
    std::size_t d = a.dim();
    std::vector<std::vector<std::vector<std::uint32_t>>> m(
        d, std::vector<std::vector<std::uint32_t>>(d, std::vector<std::uint32_t>(d)));
    for (std::size_t i = 0; i < d; ++i) {
        ExactMatrix L = a.left_mult(a.basis_element(i));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) m[i][j][k] = L.at(k, j);
    }
    return m;
}
}  // namespace

FinDimAlgebra opposite(const FinDimAlgebra& a) {
    auto m = mult_table(a);
    std::size_t d = a.dim();
    std::vector<std::vector<std::vector<std::uint32_t>>> om(m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) om[i][j] = m[j][i];
    std::vector<std::uint32_t> unit(d);
    for (std::size_t i = 0; i < d; ++i) unit[i] = a.unit().at(i, 0);
    return FinDimAlgebra(std::move(om), std::move(unit), a.field(), a.labels());
}

FinDimAlgebra product_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b) {
    if (!(a.field() == b.field())) throw Error("product_algebra: field mismatch");
    std::size_t da = a.dim(), db = b.dim(), d = da + db;
    auto ma = mult_table(a);
    auto mb = mult_table(b);
    std::vector<std::vector<std::vector<std::uint32_t>>> m(
        d, std::vector<std::vector<std::uint32_t>>(d, std::vector<std::uint32_t>(d, 0)));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) m[i][j][k] = ma[i][j][k];
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) m[da + i][da + j][da + k] = mb[i][j][k];
    std::vector<std::uint32_t> unit(d, 0);
    for (std::size_t i = 0; i < da; ++i) unit[i] = a.unit().at(i, 0);
    for (std::size_t i = 0; i < db; ++i) unit[da + i] = b.unit().at(i, 0);
    std::vector<std::string> labels;
    if (a.labels().size() == da && b.labels().size() == db) {
        for (auto& l : a.labels()) labels.push_back("A." + l);
        for (auto& l : b.labels()) labels.push_back("B." + l);
    }
    return FinDimAlgebra(std::move(m), std::move(unit), a.field(), std::move(labels));
}

FinDimAlgebra scalar_algebra(FieldSpec f) {
    return FinDimAlgebra({{{1}}}, {1}, f, {"1"});
}

}  // namespace tenring
