#include "tenring/hom.hpp"

namespace tenring {

namespace {

// Row-major vec: vec(F A) = (I ⊗ A^T) vec(F), vec(B F) = (B ⊗ I) vec(F).
ExactMatrix vec_rowmajor(const ExactMatrix& m) {
    ExactMatrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

ExactMatrix unvec_rowmajor(const ExactMatrix& v, std::size_t rows,
                           std::size_t cols) {
    ExactMatrix m(rows, cols, v.field());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, v.at(i * cols + j, 0));
    return m;
}

}  // namespace

std::vector<ExactMatrix> hom_space(const FdModule& x, const FdModule& y) {
    if (!(x.algebra == y.algebra) || x.side != y.side)
        throw Error("hom_space: modules not over the same algebra/side");
    FieldSpec f = x.algebra.field();
    std::size_t n = y.dim * x.dim;
    if (n == 0) return {};
    ExactMatrix iy = ExactMatrix::identity(y.dim, f);
    ExactMatrix ix = ExactMatrix::identity(x.dim, f);
    ExactMatrix sys(0, n, f);
    for (std::size_t i = 0; i < x.algebra.dim(); ++i) {
        // F * actX(b) - actY(b) * F = 0 on vec(F).
        ExactMatrix row = iy.kron(x.action[i].transpose()) - y.action[i].kron(ix);
        sys = sys.vstack(row);
    }
    ExactMatrix k = sys.rows() == 0 ? ExactMatrix::identity(n, f)
                                    : sys.kernel_basis();
    std::vector<ExactMatrix> out;
    for (std::size_t j = 0; j < k.cols(); ++j)
        out.push_back(unvec_rowmajor(k.column(j), y.dim, x.dim));
    return out;
}

ModuleHom compose(const ModuleHom& second, const ModuleHom& first) {
    return ModuleHom{first.source, second.target, second.matrix * first.matrix};
}

ModuleHom identity_hom(const FdModule& x) {
    return ModuleHom{x, x, ExactMatrix::identity(x.dim, x.algebra.field())};
}

ModuleHom zero_hom(const FdModule& x, const FdModule& y) {
    return ModuleHom{x, y, ExactMatrix(y.dim, x.dim, x.algebra.field())};
}

SubmoduleResult kernel(const ModuleHom& f) {
    return submodule(f.source, f.matrix.kernel_basis());
}

SubmoduleResult image(const ModuleHom& f) {
    return submodule(f.target, f.matrix.column_space());
}

QuotientModuleResult cokernel(const ModuleHom& f) {
    return quotient_module(f.target, f.matrix.column_space());
}

bool is_isomorphic(const FdModule& x, const FdModule& y, Rng& rng) {
    if (x.dim != y.dim) return false;
    if (x.dim == 0) return true;
    auto basis = hom_space(x, y);
    if (basis.empty()) return false;
    std::uint32_t p = x.algebra.field().p;
    auto try_combo = [&](const std::vector<std::uint32_t>& c) {
        ExactMatrix m(y.dim, x.dim, x.algebra.field());
        for (std::size_t t = 0; t < basis.size(); ++t)
            m = m + basis[t].scaled(c[t]);
        return m.inverse().has_value();
    };
    if (basis.size() <= 4) {
        std::vector<std::uint32_t> c(basis.size(), 0);
        std::uint64_t total = 1;
        for (std::size_t t = 0; t < basis.size(); ++t) total *= p;
        for (std::uint64_t w = 1; w < total; ++w) {
            std::uint64_t v = w;
            for (std::size_t t = 0; t < basis.size(); ++t) {
                c[t] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (try_combo(c)) return true;
        }
        return false;
    }
    std::vector<std::uint32_t> c(basis.size());
    for (int trial = 0; trial < (1 << 14); ++trial) {
        for (auto& e : c) e = rng.field_element(x.algebra.field());
        if (try_combo(c)) return true;
    }
    return false;
}

std::optional<std::vector<std::uint32_t>> express_in_span(
    const std::vector<ExactMatrix>& basis, const ExactMatrix& target) {
    FieldSpec f = target.field();
    std::size_t n = target.rows() * target.cols();
    ExactMatrix sys(n, basis.size(), f);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        ExactMatrix v = vec_rowmajor(basis[j]);
        for (std::size_t i = 0; i < n; ++i) sys.set(i, j, v.at(i, 0));
    }
    auto sol = sys.solve(vec_rowmajor(target));
    if (!sol) return std::nullopt;
    std::vector<std::uint32_t> out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) out[j] = sol->at(j, 0);
    return out;
}

}  // namespace tenring
