#include "tenring/paircat.hpp"

namespace tenring {

namespace {

ExactMatrix unvec_rowmajor(const ExactMatrix& v, std::size_t rows,
                           std::size_t cols, FieldSpec f) {
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, v.at(i * cols + j, 0));
    return m;
}

}  // namespace

PairModule make_pair_module(const TensorRingContext& ctx, const FdModule& base,
                            const ExactMatrix& u) {
    TensorModule tm = tensor_bimodule_left(ctx.m, base);
    PairModule p{base, tm.space, tm.module, u};
    p.validate();
    return p;
}

ExactMatrix CoPairModule::eval(const ExactMatrix& y) const {
    FieldSpec f = base.algebra.field();
    ExactMatrix coords = v * y;
    ExactMatrix g(base.dim, m_dim, f);
    for (std::size_t t = 0; t < hom.basis.size(); ++t)
        g = g + hom.basis[t].scaled(coords.at(t, 0));
    return g;
}

CoPairModule make_co_pair_module(const TensorRingContext& ctx,
                                 const FdModule& base, const ExactMatrix& v) {
    HomOverRop h = hom_over_Rop(ctx.m, base);
    CoPairModule c{base, h, v, ctx.m.dim()};
    c.validate();
    return c;
}

FdModule pair_to_module(const TensorRingContext& ctx, const PairModule& p) {
    const FinDimAlgebra& r = ctx.base;
    FieldSpec f = r.field();
    std::size_t dx = p.base.dim;
    std::size_t n = ctx.nilpotency();
    ExactMatrix ix = ExactMatrix::identity(dx, f);
    ExactMatrix im = ExactMatrix::identity(ctx.m.dim(), f);

    // a[i]: L_i (x)_k X -> X, iterated action through u.
    std::vector<ExactMatrix> a;
    ExactMatrix a0(dx, r.dim() * dx, f);
    for (std::size_t ri = 0; ri < r.dim(); ++ri)
        for (std::size_t j = 0; j < dx; ++j)
            for (std::size_t k = 0; k < dx; ++k)
                a0.set(k, ri * dx + j, p.base.action[ri].at(k, j));
    a.push_back(a0);
    for (std::size_t i = 1; i <= n; ++i)
        a.push_back(p.u * p.mx.projection * im.kron(a[i - 1]) *
                    ctx.sigma[i - 1].kron(ix));

    FdModule out{ctx.ring, Side::left, dx, {}};
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t b = 0; b < ctx.grading[i]; ++b)
            out.action.push_back(a[i].submatrix(0, b * dx, dx, dx));
    return out;
}

PairModule module_to_pair(const TensorRingContext& ctx, const FdModule& t_module) {
    const FinDimAlgebra& r = ctx.base;
    FieldSpec f = r.field();
    std::size_t dx = t_module.dim;
    FdModule base{r, Side::left, dx, {}};
    for (std::size_t i = 0; i < r.dim(); ++i)
        base.action.push_back(t_module.action[ctx.offsets[0] + i]);

    std::size_t dm = ctx.m.dim();
    ExactMatrix u_tilde(dx, dm * dx, f);
    std::size_t m_layer = ctx.grading.size() > 1 ? ctx.grading[1] : 0;
    for (std::size_t a = 0; a < m_layer; ++a)
        for (std::size_t j = 0; j < dx; ++j)
            for (std::size_t k = 0; k < dx; ++k)
                u_tilde.set(k, a * dx + j,
                            t_module.action[ctx.offsets[1] + a].at(k, j));
    // Balancedness: u~ must kill the middle-linearity relations.
    ExactMatrix ix = ExactMatrix::identity(dx, f);
    ExactMatrix im = ExactMatrix::identity(dm, f);
    for (std::size_t b = 0; b < r.dim(); ++b) {
        ExactMatrix rel = ctx.m.right.action[b].kron(ix) - im.kron(base.action[b]);
        if (!(u_tilde * rel).is_zero())
            throw Error("module_to_pair: layer-1 action is not R-balanced");
    }
    TensorModule tm = tensor_bimodule_left(ctx.m, base);
    return PairModule{base, tm.space, tm.module, u_tilde * tm.space.section};
}

FdModule co_pair_to_module(const TensorRingContext& ctx, const CoPairModule& c) {
    const FinDimAlgebra& r = ctx.base;
    FieldSpec f = r.field();
    std::size_t dy = c.base.dim;
    std::size_t n = ctx.nilpotency();

    // One-step right action by layer-1 basis elements: y -> v(y)(m_a).
    std::size_t dm = ctx.m.dim();
    std::vector<ExactMatrix> act1;
    for (std::size_t a = 0; a < dm; ++a) {
        ExactMatrix m1(dy, dy, f);
        for (std::size_t y = 0; y < dy; ++y) {
            ExactMatrix ey(dy, 1, f);
            ey.set(y, 0, 1);
            ExactMatrix g = c.eval(ey);  // dy x dm
            for (std::size_t k = 0; k < dy; ++k) m1.set(k, y, g.at(k, a));
        }
        act1.push_back(m1);
    }

    // acts[i][b]: right action of the layer-i basis element b.
    std::vector<std::vector<ExactMatrix>> acts(n + 1);
    for (std::size_t ri = 0; ri < r.dim(); ++ri)
        acts[0].push_back(c.base.action[ri]);
    if (n >= 1) acts[1] = act1;
    for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t t = 0; t < ctx.grading[i]; ++t) {
            // sigma decomposes the basis element into m (x) (layer i-1).
            ExactMatrix et(ctx.grading[i], 1, f);
            et.set(t, 0, 1);
            ExactMatrix dec = ctx.sigma[i - 1] * et;  // (dm * dim L_{i-1}) x 1
            ExactMatrix m(dy, dy, f);
            for (std::size_t a = 0; a < dm; ++a)
                for (std::size_t b = 0; b < ctx.grading[i - 1]; ++b) {
                    std::uint32_t cfield = dec.at(a * ctx.grading[i - 1] + b, 0);
                    if (cfield == 0) continue;
                    // y.(m (x) t') = (y.m).t'
                    m = m + (acts[i - 1][b] * act1[a]).scaled(cfield);
                }
            acts[i].push_back(m);
        }

    FdModule out{ctx.ring, Side::right, dy, {}};
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t b = 0; b < acts[i].size(); ++b)
            out.action.push_back(acts[i][b]);
    return out;
}

CoPairModule module_to_co_pair(const TensorRingContext& ctx,
                               const FdModule& t_module) {
    const FinDimAlgebra& r = ctx.base;
    FieldSpec f = r.field();
    std::size_t dy = t_module.dim;
    FdModule base{r, Side::right, dy, {}};
    for (std::size_t i = 0; i < r.dim(); ++i)
        base.action.push_back(t_module.action[ctx.offsets[0] + i]);

    HomOverRop h = hom_over_Rop(ctx.m, base);
    ExactMatrix v(h.module.dim, dy, f);
    std::size_t m_layer = ctx.grading.size() > 1 ? ctx.grading[1] : 0;
    for (std::size_t y = 0; y < dy; ++y) {
        ExactMatrix g(dy, ctx.m.dim(), f);
        ExactMatrix ey(dy, 1, f);
        ey.set(y, 0, 1);
        for (std::size_t a = 0; a < m_layer; ++a) {
            ExactMatrix img = t_module.action[ctx.offsets[1] + a] * ey;
            for (std::size_t k = 0; k < dy; ++k) g.set(k, a, img.at(k, 0));
        }
        auto coords = express_in_span(h.basis, g);
        if (!coords)
            throw Error("module_to_co_pair: layer-1 action not right R-linear");
        for (std::size_t t = 0; t < coords->size(); ++t) v.set(t, y, (*coords)[t]);
    }
    return CoPairModule{base, h, v, ctx.m.dim()};
}

PairModule functor_S(const TensorRingContext& ctx, const FdModule& x) {
    TensorModule tm = tensor_bimodule_left(ctx.m, x);
    return PairModule{x, tm.space, tm.module,
                      ExactMatrix(x.dim, tm.module.dim, x.algebra.field())};
}

FdModule functor_C(const TensorRingContext& ctx, const PairModule& p) {
    (void)ctx;
    return cokernel(p.u_hom()).module;
}

FdModule functor_U(const PairModule& p) { return p.base; }

PairModule functor_Ind(const TensorRingContext& ctx, const FdModule& x) {
    FieldSpec f = x.algebra.field();
    std::size_t n = ctx.nilpotency();
    std::vector<FdModule> terms{x};
    std::vector<TensorModule> steps;
    for (std::size_t i = 1; i <= n; ++i) {
        TensorModule t = tensor_bimodule_left(ctx.m, terms.back());
        steps.push_back(t);
        terms.push_back(t.module);
        if (t.module.dim == 0) break;
    }
    DirectSum sum = direct_sum(terms);
    TensorModule tm = tensor_bimodule_left(ctx.m, sum.module);
    // The shift: m (x) (component i) lands in component i+1.
    ExactMatrix im = ExactMatrix::identity(ctx.m.dim(), f);
    ExactMatrix u_tilde(sum.module.dim, ctx.m.dim() * sum.module.dim, f);
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        u_tilde = u_tilde + sum.injections[i + 1].matrix *
                                steps[i].space.projection *
                                im.kron(sum.projections[i].matrix);
    return PairModule{sum.module, tm.space, tm.module,
                      u_tilde * tm.space.section};
}

FdModule functor_K(const TensorRingContext& ctx, const CoPairModule& c) {
    (void)ctx;
    return kernel(c.v_hom()).module;
}

CoPairModule functor_Coind(const TensorRingContext& ctx, const FdModule& y_right) {
    FieldSpec f = y_right.algebra.field();
    std::size_t n = ctx.nilpotency();
    std::vector<FdModule> terms{y_right};
    std::vector<HomOverRop> steps;  // steps[i] = Hom(M, terms[i]) = terms[i+1]
    for (std::size_t i = 1; i <= n; ++i) {
        HomOverRop h = hom_over_Rop(ctx.m, terms.back());
        steps.push_back(h);
        terms.push_back(h.module);
        if (h.module.dim == 0) break;
    }
    DirectSum sum = direct_sum(terms);
    HomOverRop hs = hom_over_Rop(ctx.m, sum.module);
    ExactMatrix v(hs.module.dim, sum.module.dim, f);
    for (std::size_t j = 1; j < terms.size(); ++j)
        for (std::size_t w = 0; w < terms[j].dim; ++w) {
            // Basis element w of H_j is a hom M -> H_{j-1}; its image under
            // the canonical map is that hom followed by the inclusion.
            ExactMatrix g = sum.injections[j - 1].matrix * steps[j - 1].basis[w];
            auto coords = express_in_span(hs.basis, g);
            if (!coords) throw Error("Coind: span not closed");  // unreachable
            std::size_t col = 0;
            for (std::size_t jj = 0; jj < j; ++jj) col += terms[jj].dim;
            for (std::size_t t = 0; t < coords->size(); ++t)
                v.set(t, col + w, (*coords)[t]);
        }
    return CoPairModule{sum.module, hs, v, ctx.m.dim()};
}

std::vector<ExactMatrix> hom_gamma(const TensorRingContext& ctx,
                                   const PairModule& p, const PairModule& q) {
    const FinDimAlgebra& r = ctx.base;
    FieldSpec f = r.field();
    std::size_t dx = p.base.dim, dy = q.base.dim;
    std::size_t nv = dy * dx;
    if (nv == 0) return {};
    ExactMatrix ix = ExactMatrix::identity(dx, f);
    ExactMatrix iy = ExactMatrix::identity(dy, f);
    ExactMatrix sys(0, nv, f);
    for (std::size_t i = 0; i < r.dim(); ++i)
        sys = sys.vstack(iy.kron(p.base.action[i].transpose()) -
                         q.base.action[i].kron(ix));
    // Commuting square: f . u_p = u_q . (M (x) f).
    // vec(f u_p) = (I (x) u_p^T) vec f; u_q.(M(x)f) = sum_s A_s f B_s with
    // A = u_q pi_q and B = sigma_p sliced along the M index.
    ExactMatrix a = q.u * q.mx.projection;  // dy x (dm * dy)
    const ExactMatrix& bmat = p.mx.section;  // (dm * dx) x mx_p
    std::size_t mxp = p.mx.dim;
    ExactMatrix square = iy.kron(p.u.transpose());  // (dy*mxp) x nv
    for (std::size_t s = 0; s < ctx.m.dim(); ++s) {
        ExactMatrix as = a.submatrix(0, s * dy, dy, dy);
        ExactMatrix bs = bmat.submatrix(s * dx, 0, dx, mxp);
        square = square - as.kron(bs.transpose());
    }
    sys = sys.vstack(square);
    ExactMatrix k = sys.kernel_basis();
    std::vector<ExactMatrix> out;
    for (std::size_t j = 0; j < k.cols(); ++j)
        out.push_back(unvec_rowmajor(k.column(j), dy, dx, f));
    return out;
}

TensorOverT tensor_over_T(const TensorRingContext& ctx, const CoPairModule& c,
                          const PairModule& p) {
    FieldSpec f = ctx.base.field();
    std::size_t dy = c.base.dim, dx = p.base.dim, dm = ctx.m.dim();
    TensorOverR yx = tensor_over_R(c.base, p.base);
    ExactMatrix h(yx.dim, 0, f);
    for (std::size_t y = 0; y < dy; ++y) {
        ExactMatrix ey(dy, 1, f);
        ey.set(y, 0, 1);
        ExactMatrix g = c.eval(ey);  // v(y): M -> Y
        for (std::size_t a = 0; a < dm; ++a) {
            ExactMatrix w = g.column(a);  // v(y)(m_a)
            for (std::size_t x = 0; x < dx; ++x) {
                ExactMatrix ex(dx, 1, f);
                ex.set(x, 0, 1);
                ExactMatrix em(dm, 1, f);
                em.set(a, 0, 1);
                ExactMatrix z = p.u * p.mx.projection * em.kron(ex);  // u(m(x)x)
                ExactMatrix rel = yx.projection * (w.kron(ex) - ey.kron(z));
                h = h.hstack(rel);
            }
        }
    }
    auto qs = quotient_by(h.column_space(), yx.dim, f);
    return TensorOverT{qs.projection.rows(), qs.projection, yx};
}

PhiResult phi_membership(const TensorRingContext& ctx, const PairModule& p,
                         const std::function<bool(const FdModule&)>& class_test) {
    (void)ctx;
    ModuleHom u = p.u_hom();
    bool monic = u.matrix.kernel_basis().cols() == 0;
    FdModule cok = cokernel(u).module;
    return PhiResult{monic && class_test(cok), monic, cok};
}

PairModule random_pair(const TensorRingContext& ctx, Rng& rng,
                       std::size_t max_dim) {
    FdModule base = random_module(ctx.base, Side::left, rng, max_dim);
    TensorModule tm = tensor_bimodule_left(ctx.m, base);
    auto homs = hom_space(tm.module, base);
    ExactMatrix u(base.dim, tm.module.dim, ctx.base.field());
    for (const auto& hmat : homs) u = u + hmat.scaled(rng.field_element(ctx.base.field()));
    return PairModule{base, tm.space, tm.module, u};
}

}  // namespace tenring
