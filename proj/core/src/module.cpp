#include "tenring/module.hpp"

namespace tenring {

QuotientSpace quotient_by(const ExactMatrix& subspace_cols, std::size_t ambient,
                          FieldSpec f) {
    ExactMatrix h = subspace_cols.rows() == ambient
                        ? subspace_cols.column_space()
                        : ExactMatrix(ambient, 0, f);
    if (subspace_cols.rows() != ambient)
        throw Error("quotient_by: subspace has wrong ambient dimension");
    // Complement the pivot rows of the echelon basis by standard vectors.
    auto pivots = h.transpose().rref().second;
    std::vector<bool> used(ambient, false);
    for (auto pr : pivots) used[pr] = true;
    std::size_t q = ambient - h.cols();
    ExactMatrix section(ambient, q, f);
    std::size_t c = 0;
    for (std::size_t i = 0; i < ambient; ++i)
        if (!used[i]) section.set(i, c++, 1);
    ExactMatrix t = h.hstack(section);
    auto tinv = t.inverse();
    if (!tinv) throw Error("quotient_by: complement is not a complement");
    QuotientSpace out{tinv->submatrix(h.cols(), 0, q, ambient), section};
    return out;
}

ExactMatrix FdModule::act(const ExactMatrix& elem) const {
    if (elem.rows() != algebra.dim() || elem.cols() != 1)
        throw Error("FdModule: element has wrong shape");
    ExactMatrix out(dim, dim, algebra.field());
    for (std::size_t i = 0; i < action.size(); ++i)
        out = out + action[i].scaled(elem.at(i, 0));
    return out;
}

void FdModule::validate() const {
    const auto& a = algebra;
    if (action.size() != a.dim()) throw Error("FdModule: wrong action count");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim)
            throw Error("FdModule: action matrix has wrong shape");
    if (!(act(a.unit()) == ExactMatrix::identity(dim, a.field())))
        throw Error("FdModule: unit does not act as identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            ExactMatrix prod = act(a.mul(a.basis_element(i), a.basis_element(j)));
            ExactMatrix comp = side == Side::left ? action[i] * action[j]
                                                  : action[j] * action[i];
            if (!(prod == comp)) throw Error("FdModule: action not multiplicative");
        }
}

void FdBimodule::validate() const {
    if (left.side != Side::left || right.side != Side::right)
        throw Error("FdBimodule: sides are swapped");
    if (left.dim != right.dim) throw Error("FdBimodule: dimension mismatch");
    left.validate();
    right.validate();
    for (const auto& la : left.action)
        for (const auto& ra : right.action)
            if (!(la * ra == ra * la))
                throw Error("FdBimodule: actions do not commute");
}

void ModuleHom::validate() const {
    if (matrix.rows() != target.dim || matrix.cols() != source.dim)
        throw Error("ModuleHom: wrong shape");
    if (!(source.algebra == target.algebra) || source.side != target.side)
        throw Error("ModuleHom: modules not over the same algebra/side");
    for (std::size_t i = 0; i < source.algebra.dim(); ++i)
        if (!(matrix * source.action[i] == target.action[i] * matrix))
            throw Error("ModuleHom: does not intertwine the actions");
}

FdModule regular_module(const FinDimAlgebra& a, Side side) {
    FdModule x{a, side, a.dim(), {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        x.action.push_back(side == Side::left ? a.left_mult(a.basis_element(i))
                                              : a.right_mult(a.basis_element(i)));
    return x;
}

FdBimodule regular_bimodule(const FinDimAlgebra& a) {
    return FdBimodule{regular_module(a, Side::left), regular_module(a, Side::right)};
}

FdModule zero_module(const FinDimAlgebra& a, Side side) {
    FdModule x{a, side, 0, {}};
    x.action.assign(a.dim(), ExactMatrix(0, 0, a.field()));
    return x;
}

SubmoduleResult submodule(const FdModule& x, const ExactMatrix& generators) {
    if (generators.rows() != x.dim)
        throw Error("submodule: generators have wrong ambient dimension");
    ExactMatrix s = generators.column_space();
    for (;;) {
        ExactMatrix next = s;
        for (const auto& a : x.action) next = sum_columns(next, a * s);
        if (next.cols() == s.cols()) break;
        s = next;
    }
    FdModule sub{x.algebra, x.side, s.cols(), {}};
    for (const auto& a : x.action) {
        auto coords = s.solve(a * s);
        if (!coords) throw Error("submodule: closure failed");  // unreachable
        sub.action.push_back(*coords);
    }
    return SubmoduleResult{sub, ModuleHom{sub, x, s}};
}

QuotientModuleResult quotient_module(const FdModule& x, const ExactMatrix& subspace) {
    auto qs = quotient_by(subspace, x.dim, x.algebra.field());
    FdModule q{x.algebra, x.side, qs.projection.rows(), {}};
    for (const auto& a : x.action)
        q.action.push_back(qs.projection * a * qs.section);
    return QuotientModuleResult{q, ModuleHom{x, q, qs.projection}, qs.section};
}

DirectSum direct_sum(const std::vector<FdModule>& parts) {
    if (parts.empty()) throw Error("direct_sum: no summands");
    const auto& a = parts.front().algebra;
    FieldSpec f = a.field();
    std::size_t total = 0;
    for (const auto& m : parts) {
        if (!(m.algebra == a) || m.side != parts.front().side)
            throw Error("direct_sum: mixed algebras or sides");
        total += m.dim;
    }
    FdModule sum{a, parts.front().side, total, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        ExactMatrix blk(total, total, f);
        std::size_t off = 0;
        for (const auto& m : parts) {
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t c = 0; c < m.dim; ++c)
                    blk.set(off + r, off + c, m.action[i].at(r, c));
            off += m.dim;
        }
        sum.action.push_back(blk);
    }
    DirectSum out{sum, {}, {}};
    std::size_t off = 0;
    for (const auto& m : parts) {
        ExactMatrix inj(total, m.dim, f), prj(m.dim, total, f);
        for (std::size_t r = 0; r < m.dim; ++r) {
            inj.set(off + r, r, 1);
            prj.set(r, off + r, 1);
        }
        out.injections.push_back(ModuleHom{m, sum, inj});
        out.projections.push_back(ModuleHom{sum, m, prj});
        off += m.dim;
    }
    return out;
}

FdModule k_dual(const FdModule& x) {
    FdModule d{x.algebra, x.side == Side::left ? Side::right : Side::left,
               x.dim, {}};
    for (const auto& a : x.action) d.action.push_back(a.transpose());
    return d;
}

ModuleHom k_dual(const ModuleHom& f) {
    return ModuleHom{k_dual(f.target), k_dual(f.source), f.matrix.transpose()};
}

ExactMatrix radical_subspace(const FdModule& x) {
    ExactMatrix rad = radical_basis(x.algebra);
    ExactMatrix span(x.dim, 0, x.algebra.field());
    for (std::size_t j = 0; j < rad.cols(); ++j)
        span = span.hstack(x.act(rad.column(j)));
    return span.column_space();
}

FdModule simple_of_idempotent(const FinDimAlgebra& a, const ExactMatrix& idem) {
    FdModule reg = regular_module(a, Side::left);
    auto p = submodule(reg, a.right_mult(idem));  // A e = image of x -> x*e
    return quotient_module(p.module, radical_subspace(p.module)).module;
}

FdModule random_module(const FinDimAlgebra& a, Side side, Rng& rng,
                       std::size_t max_dim) {
    FdModule reg = regular_module(a, side);
    std::optional<FdModule> fallback;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::size_t copies = 1 + rng.below(2);
        FdModule free = copies == 1 ? reg : direct_sum({reg, reg}).module;
        ExactMatrix gens = rng.matrix(free.dim, 1 + rng.below(2), a.field());
        auto sub = submodule(free, gens);
        FdModule cand;
        switch (rng.below(3)) {
            case 0: cand = sub.module; break;
            case 1: cand = quotient_module(free, sub.inclusion.matrix).module; break;
            default: {
                if (sub.module.dim == 0) continue;
                auto inner = submodule(sub.module,
                                       rng.matrix(sub.module.dim, 1, a.field()));
                cand = quotient_module(sub.module, inner.inclusion.matrix).module;
            }
        }
        if (cand.dim >= 1 && cand.dim <= max_dim) return cand;
        if (cand.dim >= 1 && (!fallback || cand.dim < fallback->dim))
            fallback = cand;
    }
    if (fallback) return *fallback;
    return reg;  // degenerate algebra; give the caller something valid
}

FdBimodule bimodule_tensor_k(const FdModule& left_part, const FdModule& right_part) {
    if (left_part.side != Side::left || right_part.side != Side::right)
        throw Error("bimodule_tensor_k: sides are swapped");
    FieldSpec f = left_part.algebra.field();
    std::size_t n = left_part.dim * right_part.dim;
    ExactMatrix il = ExactMatrix::identity(left_part.dim, f);
    ExactMatrix ir = ExactMatrix::identity(right_part.dim, f);
    FdModule l{left_part.algebra, Side::left, n, {}};
    for (const auto& a : left_part.action) l.action.push_back(a.kron(ir));
    FdModule r{right_part.algebra, Side::right, n, {}};
    for (const auto& a : right_part.action) r.action.push_back(il.kron(a));
    return FdBimodule{l, r};
}

FdModule flip_side(const FdModule& x, const FinDimAlgebra& opposite_algebra) {
    FdModule out = x;
    out.algebra = opposite_algebra;
    out.side = x.side == Side::left ? Side::right : Side::left;
    return out;
}

}  // namespace tenring
