#include "tenring/tensor.hpp"

namespace tenring {

TensorOverR tensor_over_R(const FdModule& y_right, const FdModule& x_left) {
    if (!(y_right.algebra == x_left.algebra))
        throw Error("tensor_over_R: algebras differ");
    if (y_right.side != Side::right || x_left.side != Side::left)
        throw Error("tensor_over_R: need a right and a left module");
    FieldSpec f = x_left.algebra.field();
    std::size_t n = y_right.dim * x_left.dim;
    ExactMatrix iy = ExactMatrix::identity(y_right.dim, f);
    ExactMatrix ix = ExactMatrix::identity(x_left.dim, f);
    // Middle linearity: span of the images of (y.r ⊗ x) - (y ⊗ r.x).
    ExactMatrix h(n, 0, f);
    for (std::size_t i = 0; i < x_left.algebra.dim(); ++i) {
        ExactMatrix op = y_right.action[i].kron(ix) - iy.kron(x_left.action[i]);
        h = h.hstack(op);
    }
    auto qs = quotient_by(h.column_space(), n, f);
    return TensorOverR{qs.projection.rows(), qs.projection, qs.section};
}

ExactMatrix induced_on_tensor(const TensorOverR& t, const ExactMatrix& op) {
    return t.projection * op * t.section;
}

TensorModule tensor_bimodule_left(const FdBimodule& m, const FdModule& x_left) {
    TensorOverR sp = tensor_over_R(m.right, x_left);
    const FinDimAlgebra& a = m.left.algebra;
    FieldSpec f = a.field();
    ExactMatrix ix = ExactMatrix::identity(x_left.dim, f);
    FdModule out{a, Side::left, sp.dim, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        out.action.push_back(induced_on_tensor(sp, m.left.action[i].kron(ix)));
    return TensorModule{out, sp};
}

TensorModule tensor_bimodule_right(const FdModule& y_right, const FdBimodule& m) {
    TensorOverR sp = tensor_over_R(y_right, m.left);
    const FinDimAlgebra& b = m.right.algebra;
    FieldSpec f = b.field();
    ExactMatrix iy = ExactMatrix::identity(y_right.dim, f);
    FdModule out{b, Side::right, sp.dim, {}};
    for (std::size_t i = 0; i < b.dim(); ++i)
        out.action.push_back(induced_on_tensor(sp, iy.kron(m.right.action[i])));
    return TensorModule{out, sp};
}

ExactMatrix tensor_map_left(const FdBimodule& m, const TensorOverR& src,
                            const TensorOverR& dst, const ExactMatrix& f) {
    ExactMatrix im = ExactMatrix::identity(m.dim(), f.field());
    return dst.projection * im.kron(f) * src.section;
}

HomOverRop hom_over_Rop(const FdBimodule& m, const FdModule& y_right) {
    if (!(m.right.algebra == y_right.algebra))
        throw Error("hom_over_Rop: algebras differ");
    const FinDimAlgebra& r = y_right.algebra;
    auto basis = hom_space(m.right, y_right);
    FdModule out{r, Side::right, basis.size(), {}};
    // (f.r)(x) = f(r.x): precompose with the left action on M.
    for (std::size_t i = 0; i < r.dim(); ++i) {
        ExactMatrix act(basis.size(), basis.size(), r.field());
        for (std::size_t t = 0; t < basis.size(); ++t) {
            auto coords = express_in_span(basis, basis[t] * m.left.action[i]);
            if (!coords) throw Error("hom_over_Rop: span not closed");  // unreachable
            for (std::size_t s = 0; s < basis.size(); ++s)
                act.set(s, t, (*coords)[s]);
        }
        out.action.push_back(act);
    }
    return HomOverRop{out, basis};
}

}  // namespace tenring
