#include "tenring/resolution.hpp"

namespace tenring {

IndecProjectives indecomposable_projectives(const FinDimAlgebra& a, Side side) {
    IndecProjectives out;
    out.idempotents = primitive_orthogonal_idempotents(a);
    FdModule reg = regular_module(a, side);
    for (const auto& e : out.idempotents) {
        // Ae = image of x -> xe; eA = image of x -> ex.
        ExactMatrix span = side == Side::left ? a.right_mult(e) : a.left_mult(e);
        out.projectives.push_back(submodule(reg, span).module);
    }
    Rng rng(0x1503);
    out.iso_class.assign(out.projectives.size(), 0);
    std::size_t next_class = 0;
    for (std::size_t i = 0; i < out.projectives.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < i && !found; ++j)
            if (is_isomorphic(out.projectives[i], out.projectives[j], rng)) {
                out.iso_class[i] = out.iso_class[j];
                found = true;
            }
        if (!found) out.iso_class[i] = next_class++;
    }
    return out;
}

Cover projective_cover(const FdModule& x) {
    const FinDimAlgebra& a = x.algebra;
    FieldSpec f = a.field();
    auto ip = indecomposable_projectives(a, x.side);
    FdModule reg = regular_module(a, x.side);

    // Greedy top covering: grow past rad(X) one local generator at a time.
    ExactMatrix covered = radical_subspace(x);
    std::vector<std::pair<std::size_t, ExactMatrix>> gens;  // (idempotent, v)
    bool grew = true;
    while (covered.cols() < x.dim && grew) {
        grew = false;
        for (std::size_t i = 0; i < ip.idempotents.size() && covered.cols() < x.dim;
             ++i) {
            ExactMatrix part = (x.act(ip.idempotents[i])).column_space();
            for (std::size_t j = 0; j < part.cols(); ++j) {
                ExactMatrix v = part.column(j);
                if (columns_contained(v, covered)) continue;
                gens.emplace_back(i, v);
                covered = sum_columns(covered, submodule(x, v).inclusion.matrix);
                grew = true;
                if (covered.cols() == x.dim) break;
            }
        }
    }
    if (covered.cols() < x.dim)
        throw Error("projective_cover: generators do not span");  // unreachable

    std::vector<FdModule> parts;
    std::vector<std::size_t> summands;
    for (const auto& [i, v] : gens) {
        parts.push_back(ip.projectives[i]);
        summands.push_back(i);
    }
    if (parts.empty()) {
        FdModule z = zero_module(a, x.side);
        return Cover{ModuleHom{z, x, ExactMatrix(x.dim, 0, f)}, {}};
    }
    DirectSum sum = direct_sum(parts);
    ExactMatrix m(x.dim, sum.module.dim, f);
    std::size_t off = 0;
    for (std::size_t t = 0; t < gens.size(); ++t) {
        // Basis of P(e_i) consists of algebra elements s; send s to s acting
        // on the chosen generator.
        ExactMatrix basis =
            submodule(reg, x.side == Side::left
                               ? a.right_mult(ip.idempotents[gens[t].first])
                               : a.left_mult(ip.idempotents[gens[t].first]))
                .inclusion.matrix;
        for (std::size_t c = 0; c < basis.cols(); ++c) {
            ExactMatrix img = x.act(basis.column(c)) * gens[t].second;
            for (std::size_t r = 0; r < x.dim; ++r)
                m.set(r, off + c, img.at(r, 0));
        }
        off += basis.cols();
    }
    ModuleHom cover{sum.module, x, m};
    return Cover{cover, summands};
}

Resolution minimal_projective_resolution(const FdModule& x, std::size_t depth) {
    Resolution res;
    res.module = x;
    Cover c0 = projective_cover(x);
    res.terms.push_back(c0.map.source);
    res.maps.push_back(c0.map);
    auto syz = kernel(c0.map);
    for (std::size_t d = 0; d < depth; ++d) {
        if (syz.module.dim == 0) {
            res.terminated = true;
            return res;
        }
        Cover c = projective_cover(syz.module);
        ModuleHom diff = compose(syz.inclusion, c.map);
        res.terms.push_back(c.map.source);
        res.maps.push_back(diff);
        syz = kernel(c.map);
    }
    res.terminated = syz.module.dim == 0;
    return res;
}

std::optional<std::size_t> tor(const FdModule& y_right, const FdModule& x_left,
                               std::size_t i, std::size_t max_depth) {
    if (i == 0) return tensor_over_R(y_right, x_left).dim;
    if (i > max_depth) return std::nullopt;
    Resolution res = minimal_projective_resolution(x_left, i + 1);
    if (!res.terminated && res.terms.size() < i + 2) return std::nullopt;

    auto induced = [&](std::size_t j) -> std::optional<ExactMatrix> {
        // id_Y tensor d_j on the balanced tensor spaces, or nullopt if the
        // term past the end of a terminated resolution (zero map).
        if (j >= res.maps.size() || j == 0) return std::nullopt;
        TensorOverR src = tensor_over_R(y_right, res.terms[j]);
        TensorOverR dst = tensor_over_R(y_right, res.terms[j - 1]);
        ExactMatrix iy = ExactMatrix::identity(y_right.dim, y_right.algebra.field());
        return dst.projection * iy.kron(res.maps[j].matrix) * src.section;
    };

    std::size_t dim_i =
        i < res.terms.size() ? tensor_over_R(y_right, res.terms[i]).dim : 0;
    auto d_i = induced(i);
    auto d_next = induced(i + 1);
    std::size_t z = d_i ? d_i->kernel_basis().cols() : dim_i;
    std::size_t b = d_next ? d_next->rank() : 0;
    return z - b;
}

std::optional<std::size_t> ext(const FdModule& x, const FdModule& y,
                               std::size_t i, std::size_t max_depth) {
    if (i > max_depth) return std::nullopt;
    Resolution res = minimal_projective_resolution(x, i + 1);
    if (!res.terminated && res.terms.size() < i + 2) return std::nullopt;

    std::vector<std::vector<ExactMatrix>> homs;  // Hom(P_j, Y), j = 0..i+1
    for (std::size_t j = 0; j <= i + 1; ++j)
        homs.push_back(j < res.terms.size() ? hom_space(res.terms[j], y)
                                            : std::vector<ExactMatrix>{});
    FieldSpec f = x.algebra.field();
    auto delta = [&](std::size_t j) -> ExactMatrix {
        // Hom(P_{j-1}, Y) -> Hom(P_j, Y), F -> F o d_j, in hom-basis coords.
        ExactMatrix m(homs[j].size(), homs[j - 1].size(), f);
        if (j >= res.maps.size()) return m;
        for (std::size_t c = 0; c < homs[j - 1].size(); ++c) {
            auto coords = express_in_span(homs[j],
                                          homs[j - 1][c] * res.maps[j].matrix);
            if (!coords) throw Error("ext: hom span not closed");  // unreachable
            for (std::size_t r = 0; r < homs[j].size(); ++r)
                m.set(r, c, (*coords)[r]);
        }
        return m;
    };

    ExactMatrix d_out = delta(i + 1);  // Hom(P_i,Y) -> Hom(P_{i+1},Y)
    std::size_t z = d_out.kernel_basis().cols();
    std::size_t b = i == 0 ? 0 : delta(i).rank();
    return z - b;
}

PdResult pd_bounded(const FdModule& x, std::size_t bound) {
    Resolution res = minimal_projective_resolution(x, bound);
    if (!res.terminated) return PdResult{false, 0};
    return PdResult{true, res.terms.size() - 1};
}

bool is_projective(const FdModule& x) {
    if (x.dim == 0) return true;
    Cover c = projective_cover(x);
    return c.map.matrix.kernel_basis().cols() == 0;
}

bool is_injective(const FdModule& x) { return is_projective(k_dual(x)); }

std::vector<FdModule> indecomposable_injectives(const FinDimAlgebra& a, Side side) {
    Side other = side == Side::left ? Side::right : Side::left;
    auto ip = indecomposable_projectives(a, other);
    std::vector<FdModule> out;
    for (const auto& p : ip.projectives) out.push_back(k_dual(p));
    return out;
}

}  // namespace tenring
