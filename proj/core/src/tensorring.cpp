#include "tenring/tensorring.hpp"

namespace tenring {

namespace {

std::vector<std::uint32_t> column_coords(const ExactMatrix& m, std::size_t j) {
    std::vector<std::uint32_t> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.at(i, j);
    return out;
}

}  // namespace

ExactMatrix TensorRingContext::embed(std::size_t layer, const ExactMatrix& v) const {
    ExactMatrix out(ring.dim(), v.cols(), base.field());
    for (std::size_t i = 0; i < grading[layer]; ++i)
        for (std::size_t j = 0; j < v.cols(); ++j)
            out.set(offsets[layer] + i, j, v.at(i, j));
    return out;
}

ExactMatrix TensorRingContext::component(std::size_t layer,
                                         const ExactMatrix& t) const {
    return t.submatrix(offsets[layer], 0, grading[layer], t.cols());
}

TensorRingContext tensor_ring(const FinDimAlgebra& r, const FdBimodule& m,
                              std::size_t nil_bound) {
    if (!(m.left.algebra == r) || !(m.right.algebra == r))
        throw Error("tensor_ring: bimodule is not over the base algebra");
    FieldSpec f = r.field();
    TensorRingContext ctx;
    ctx.base = r;
    ctx.m = m;
    ctx.layers.push_back(regular_bimodule(r));

    for (std::size_t i = 1;; ++i) {
        const FdBimodule& prev = ctx.layers.back();
        TensorOverR sp;
        if (i == 1) {
            // Layer 1 is M itself; the balanced projection M (x)_k R -> M
            // is the right action, its section is m -> m (x) 1.
            sp.dim = m.dim();
            sp.projection = ExactMatrix(m.dim(), m.dim() * r.dim(), f);
            for (std::size_t ri = 0; ri < r.dim(); ++ri)
                for (std::size_t mi = 0; mi < m.dim(); ++mi)
                    for (std::size_t k = 0; k < m.dim(); ++k)
                        sp.projection.set(k, mi * r.dim() + ri,
                                          m.right.action[ri].at(k, mi));
            sp.section = ExactMatrix::identity(m.dim(), f).kron(r.unit());
        } else {
            sp = tensor_over_R(m.right, prev.left);
        }
        if (sp.dim == 0) break;
        if (i > nil_bound)
            throw Error("NotNilpotent: tensor powers still nonzero at the bound");
        FdBimodule layer;
        if (i == 1) {
            layer = m;
        } else {
            ExactMatrix il = ExactMatrix::identity(prev.dim(), f);
            ExactMatrix im = ExactMatrix::identity(m.dim(), f);
            FdModule left{r, Side::left, sp.dim, {}};
            FdModule right{r, Side::right, sp.dim, {}};
            for (std::size_t b = 0; b < r.dim(); ++b) {
                left.action.push_back(
                    induced_on_tensor(sp, m.left.action[b].kron(il)));
                right.action.push_back(
                    induced_on_tensor(sp, im.kron(prev.right.action[b])));
            }
            layer = FdBimodule{left, right};
        }
        ctx.layers.push_back(layer);
        ctx.lambda.push_back(sp.projection);
        ctx.sigma.push_back(sp.section);
    }

    std::size_t total = 0;
    for (const auto& l : ctx.layers) {
        ctx.offsets.push_back(total);
        ctx.grading.push_back(l.dim());
        total += l.dim();
    }
    std::size_t n = ctx.layers.size() - 1;  // nilpotency degree N

    // Layer-pair product maps P[i][j]: L_i (x)_k L_j -> L_{i+j}.
    std::vector<std::vector<ExactMatrix>> prod(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const FdBimodule& lj = ctx.layers[j];
        ExactMatrix p0(lj.dim(), r.dim() * lj.dim(), f);
        for (std::size_t b = 0; b < r.dim(); ++b)
            for (std::size_t l = 0; l < lj.dim(); ++l)
                for (std::size_t k = 0; k < lj.dim(); ++k)
                    p0.set(k, b * lj.dim() + l, lj.left.action[b].at(k, l));
        prod[0].push_back(p0);
    }
    ExactMatrix im = ExactMatrix::identity(m.dim(), f);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            ExactMatrix ilj = ExactMatrix::identity(ctx.grading[j], f);
            ExactMatrix p = ctx.lambda[i + j - 1] * im.kron(prod[i - 1][j]) *
                            ctx.sigma[i - 1].kron(ilj);
            prod[i].push_back(p);
        }
    }

    std::vector<std::vector<std::vector<std::uint32_t>>> mult(
        total, std::vector<std::vector<std::uint32_t>>(
                   total, std::vector<std::uint32_t>(total, 0)));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t a = 0; a < ctx.grading[i]; ++a)
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t b = 0; b < ctx.grading[j]; ++b) {
                    if (i + j > n) continue;  // product truncates to zero
                    ExactMatrix col =
                        prod[i][j].column(a * ctx.grading[j] + b);
                    auto& entry = mult[ctx.offsets[i] + a][ctx.offsets[j] + b];
                    for (std::size_t k = 0; k < ctx.grading[i + j]; ++k)
                        entry[ctx.offsets[i + j] + k] = col.at(k, 0);
                }

    std::vector<std::uint32_t> unit(total, 0);
    ExactMatrix ru = r.unit();
    for (std::size_t k = 0; k < r.dim(); ++k) unit[k] = ru.at(k, 0);

    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t k = 0; k < ctx.grading[i]; ++k)
            labels.push_back(i == 0 && r.labels().size() == r.dim()
                                 ? r.labels()[k]
                                 : "t" + std::to_string(i) + "_" + std::to_string(k));

    ctx.ring = FinDimAlgebra(std::move(mult), std::move(unit), f, std::move(labels));
    return ctx;
}

FinDimAlgebra trivial_extension(const FinDimAlgebra& r, const FdBimodule& m) {
    if (!(m.left.algebra == r) || !(m.right.algebra == r))
        throw Error("trivial_extension: bimodule is not over the base algebra");
    FieldSpec f = r.field();
    std::size_t dr = r.dim(), dm = m.dim(), total = dr + dm;
    std::vector<std::vector<std::vector<std::uint32_t>>> mult(
        total, std::vector<std::vector<std::uint32_t>>(
                   total, std::vector<std::uint32_t>(total, 0)));
    for (std::size_t i = 0; i < dr; ++i)
        for (std::size_t j = 0; j < dr; ++j) {
            auto col = column_coords(r.mul(r.basis_element(i), r.basis_element(j)), 0);
            for (std::size_t k = 0; k < dr; ++k) mult[i][j][k] = col[k];
        }
    for (std::size_t i = 0; i < dr; ++i)
        for (std::size_t j = 0; j < dm; ++j)
            for (std::size_t k = 0; k < dm; ++k)
                mult[i][dr + j][dr + k] = m.left.action[i].at(k, j);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dr; ++j)
            for (std::size_t k = 0; k < dm; ++k)
                mult[dr + i][j][dr + k] = m.right.action[j].at(k, i);
    std::vector<std::uint32_t> unit(total, 0);
    ExactMatrix ru = r.unit();
    for (std::size_t k = 0; k < dr; ++k) unit[k] = ru.at(k, 0);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < dr; ++k)
        labels.push_back(r.labels().size() == dr ? r.labels()[k]
                                                 : "r" + std::to_string(k));
    for (std::size_t k = 0; k < dm; ++k) labels.push_back("m" + std::to_string(k));
    return FinDimAlgebra(std::move(mult), std::move(unit), f, std::move(labels));
}

void MoritaData::validate() const {
    u.validate();
    v.validate();
    if (!(u.left.algebra == b) || !(u.right.algebra == a) ||
        !(v.left.algebra == a) || !(v.right.algebra == b))
        throw Error("MoritaData: bimodule algebras do not match");
    FieldSpec f = a.field();
    std::size_t du = u.dim(), dv = v.dim();
    if (phi.rows() != b.dim() || phi.cols() != du * dv ||
        psi.rows() != a.dim() || psi.cols() != dv * du)
        throw Error("MoritaData: pairing shapes wrong");
    ExactMatrix iu = ExactMatrix::identity(du, f);
    ExactMatrix iv = ExactMatrix::identity(dv, f);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        // phi balanced over A: phi(u.a (x) v) = phi(u (x) a.v).
        if (!((phi * (u.right.action[i].kron(iv) - iu.kron(v.left.action[i])))
                  .is_zero()))
            throw Error("MoritaData: phi not A-balanced");
        // psi is a map of A-bimodules.
        if (!(psi * v.left.action[i].kron(iu) == a.left_mult(a.basis_element(i)) * psi))
            throw Error("MoritaData: psi not left A-linear");
        if (!(psi * iv.kron(u.right.action[i]) ==
              a.right_mult(a.basis_element(i)) * psi))
            throw Error("MoritaData: psi not right A-linear");
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (!((psi * (v.right.action[i].kron(iu) - iv.kron(u.left.action[i])))
                  .is_zero()))
            throw Error("MoritaData: psi not B-balanced");
        if (!(phi * u.left.action[i].kron(iv) == b.left_mult(b.basis_element(i)) * phi))
            throw Error("MoritaData: phi not left B-linear");
        if (!(phi * iu.kron(v.right.action[i]) ==
              b.right_mult(b.basis_element(i)) * phi))
            throw Error("MoritaData: phi not right B-linear");
    }
    // Compatibility: phi(u (x) v).u' = u.psi(v (x) u') and
    // v.phi(u (x) v') = psi(v (x) u).v' on all basis triples.
    for (std::size_t iu_ = 0; iu_ < du; ++iu_)
        for (std::size_t iv_ = 0; iv_ < dv; ++iv_) {
            ExactMatrix pb = phi.column(iu_ * dv + iv_);
            ExactMatrix pa = psi.column(iv_ * du + iu_);
            for (std::size_t ju = 0; ju < du; ++ju) {
                ExactMatrix eju(du, 1, f);
                eju.set(ju, 0, 1);
                ExactMatrix lhs = u.left.act(pb) * eju;  // phi(u (x) v).u'
                ExactMatrix eiu(du, 1, f);
                eiu.set(iu_, 0, 1);
                // u.psi(v (x) u'):
                ExactMatrix rhs = u.right.act(psi.column(iv_ * du + ju)) * eiu;
                if (!(lhs == rhs))
                    throw Error("MoritaData: compatibility (phi side) fails");
            }
            for (std::size_t jv = 0; jv < dv; ++jv) {
                ExactMatrix ev(dv, 1, f);
                ev.set(jv, 0, 1);
                ExactMatrix lhs = v.left.act(pa) * ev;  // psi(v(x)u).v'
                ExactMatrix pb2 = phi.column(iu_ * dv + jv);
                ExactMatrix ev0(dv, 1, f);
                ev0.set(iv_, 0, 1);
                ExactMatrix rhs = v.right.act(pb2) * ev0;  // v.phi(u(x)v')
                if (!(lhs == rhs))
                    throw Error("MoritaData: compatibility (psi side) fails");
            }
        }
}

MoritaData morita_zero(const FinDimAlgebra& a, const FinDimAlgebra& b,
                       const FdBimodule& u, const FdBimodule& v) {
    FieldSpec f = a.field();
    return MoritaData{a, b, u, v,
                      ExactMatrix(b.dim(), u.dim() * v.dim(), f),
                      ExactMatrix(a.dim(), v.dim() * u.dim(), f)};
}

FinDimAlgebra morita_ring(const MoritaData& d) {
    d.validate();
    FieldSpec f = d.a.field();
    std::size_t da = d.a.dim(), dv = d.v.dim(), du = d.u.dim(), db = d.b.dim();
    std::size_t total = da + dv + du + db;
    std::size_t oa = 0, ov = da, ou = da + dv, ob = da + dv + du;
    std::vector<std::vector<std::vector<std::uint32_t>>> mult(
        total, std::vector<std::vector<std::uint32_t>>(
                   total, std::vector<std::uint32_t>(total, 0)));

    auto put = [&](std::size_t i, std::size_t j, std::size_t off,
                   const ExactMatrix& col) {
        for (std::size_t k = 0; k < col.rows(); ++k)
            mult[i][j][off + k] = col.at(k, 0);
    };
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j)
            put(oa + i, oa + j, oa, d.a.mul(d.a.basis_element(i), d.a.basis_element(j)));
        for (std::size_t j = 0; j < dv; ++j)
            put(oa + i, ov + j, ov, d.v.left.action[i].column(j));
    }
    for (std::size_t i = 0; i < dv; ++i) {
        for (std::size_t j = 0; j < db; ++j)
            put(ov + i, ob + j, ov, d.v.right.action[j].column(i));
        for (std::size_t j = 0; j < du; ++j)
            put(ov + i, ou + j, oa, d.psi.column(i * du + j));
    }
    for (std::size_t i = 0; i < du; ++i) {
        for (std::size_t j = 0; j < da; ++j)
            put(ou + i, oa + j, ou, d.u.right.action[j].column(i));
        for (std::size_t j = 0; j < dv; ++j)
            put(ou + i, ov + j, ob, d.phi.column(i * dv + j));
    }
    for (std::size_t i = 0; i < db; ++i) {
        for (std::size_t j = 0; j < db; ++j)
            put(ob + i, ob + j, ob, d.b.mul(d.b.basis_element(i), d.b.basis_element(j)));
        for (std::size_t j = 0; j < du; ++j)
            put(ob + i, ou + j, ou, d.u.left.action[i].column(j));
    }

    std::vector<std::uint32_t> unit(total, 0);
    ExactMatrix ua = d.a.unit(), ub = d.b.unit();
    for (std::size_t k = 0; k < da; ++k) unit[oa + k] = ua.at(k, 0);
    for (std::size_t k = 0; k < db; ++k) unit[ob + k] = ub.at(k, 0);

    std::vector<std::string> labels;
    for (std::size_t k = 0; k < da; ++k) labels.push_back("a" + std::to_string(k));
    for (std::size_t k = 0; k < dv; ++k) labels.push_back("v" + std::to_string(k));
    for (std::size_t k = 0; k < du; ++k) labels.push_back("u" + std::to_string(k));
    for (std::size_t k = 0; k < db; ++k) labels.push_back("b" + std::to_string(k));
    return FinDimAlgebra(std::move(mult), std::move(unit), f, std::move(labels));
}

FdBimodule morita_bimodule(const MoritaData& d) {
    FinDimAlgebra c = product_algebra(d.a, d.b);
    FieldSpec f = d.a.field();
    std::size_t du = d.u.dim(), dv = d.v.dim(), n = du + dv;
    auto block = [&](const ExactMatrix* ublk, const ExactMatrix* vblk) {
        ExactMatrix m(n, n, f);
        if (ublk)
            for (std::size_t r = 0; r < du; ++r)
                for (std::size_t cc = 0; cc < du; ++cc)
                    m.set(r, cc, ublk->at(r, cc));
        if (vblk)
            for (std::size_t r = 0; r < dv; ++r)
                for (std::size_t cc = 0; cc < dv; ++cc)
                    m.set(du + r, du + cc, vblk->at(r, cc));
        return m;
    };
    FdModule left{c, Side::left, n, {}};
    FdModule right{c, Side::right, n, {}};
    for (std::size_t i = 0; i < d.a.dim(); ++i) {
        left.action.push_back(block(nullptr, &d.v.left.action[i]));
        right.action.push_back(block(&d.u.right.action[i], nullptr));
    }
    for (std::size_t i = 0; i < d.b.dim(); ++i) {
        left.action.push_back(block(&d.u.left.action[i], nullptr));
        right.action.push_back(block(nullptr, &d.v.right.action[i]));
    }
    return FdBimodule{left, right};
}

ExactMatrix mu_iso(const MoritaData& d) {
    if (!d.phi.is_zero() || !d.psi.is_zero())
        throw Error("mu_iso: requires zero pairings");
    FinDimAlgebra lam = morita_ring(d);
    FinDimAlgebra ext = trivial_extension(product_algebra(d.a, d.b),
                                          morita_bimodule(d));
    FieldSpec f = d.a.field();
    std::size_t da = d.a.dim(), dv = d.v.dim(), du = d.u.dim(), db = d.b.dim();
    std::size_t total = da + dv + du + db;
    // Source order A, V, U, B; target order A, B, U, V.
    ExactMatrix p(total, total, f);
    for (std::size_t k = 0; k < da; ++k) p.set(k, k, 1);
    for (std::size_t k = 0; k < dv; ++k) p.set(da + db + du + k, da + k, 1);
    for (std::size_t k = 0; k < du; ++k) p.set(da + db + k, da + dv + k, 1);
    for (std::size_t k = 0; k < db; ++k) p.set(da + k, da + dv + du + k, 1);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) {
            ExactMatrix lhs = p * lam.mul(lam.basis_element(i), lam.basis_element(j));
            ExactMatrix rhs = ext.mul(p * lam.basis_element(i),
                                      p * lam.basis_element(j));
            if (!(lhs == rhs)) throw Error("mu_iso: multiplicativity fails");
        }
    return p;
}

}  // namespace tenring
