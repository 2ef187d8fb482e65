#include <doctest.h>

#include "tenring/hom.hpp"
#include "tenring/tensor.hpp"

using namespace tenring;

namespace {

const FieldSpec F7{7};

struct Nakayama {
    PathAlgebra pa = path_algebra({3, 2, F7});
    FdModule reg_left = regular_module(pa.algebra, Side::left);
    FdModule reg_right = regular_module(pa.algebra, Side::right);

    FdModule proj(std::size_t v) const {  // A e_v
        return submodule(reg_left, pa.algebra.right_mult(pa.idempotents[v])).module;
    }
    FdModule simple(std::size_t v) const {
        return simple_of_idempotent(pa.algebra, pa.idempotents[v]);
    }
    // Re_i (x)_k e_j R, the bimodule of the worked example.
    FdBimodule arrow_bimodule(std::size_t i, std::size_t j) const {
        FdModule re = proj(i);
        FdModule er = submodule(reg_right,
                                pa.algebra.left_mult(pa.idempotents[j])).module;
        return bimodule_tensor_k(re, er);
    }
};

}  // namespace

TEST_CASE("regular modules and bimodules validate") {
    Nakayama nk;
    nk.reg_left.validate();
    nk.reg_right.validate();
    regular_bimodule(nk.pa.algebra).validate();
    CHECK(nk.reg_left.dim == 6);
    FdBimodule m = nk.arrow_bimodule(0, 2);
    m.validate();
    CHECK(m.dim() == 4);  // dim Re_1 = 2, dim e_3 R = 2
}

TEST_CASE("hom_space basics") {
    Nakayama nk;
    auto endos = hom_space(nk.reg_left, nk.reg_left);
    CHECK(express_in_span(endos, ExactMatrix::identity(6, F7)).has_value());
    // End(A A) = A^op, so the hom space has the full dimension.
    CHECK(endos.size() == 6);

    CHECK(hom_space(nk.simple(0), nk.simple(2)).empty());

    Rng rng(11);
    for (int t = 0; t < 5; ++t) {
        FdModule x = random_module(nk.pa.algebra, Side::left, rng);
        x.validate();
        CHECK(hom_space(nk.reg_left, x).size() == x.dim);
        for (const auto& h : hom_space(x, x))
            ModuleHom{x, x, h}.validate();
    }
}

TEST_CASE("kernel, image, cokernel") {
    Nakayama nk;
    FdModule p1 = nk.proj(0);
    auto id = identity_hom(p1);
    CHECK(kernel(id).module.dim == 0);
    CHECK(cokernel(id).module.dim == 0);

    auto z = zero_hom(p1, nk.reg_left);
    CHECK(kernel(z).module.dim == p1.dim);
    CHECK(cokernel(z).module.dim == nk.reg_left.dim);
    CHECK(image(z).module.dim == 0);

    // rad(P1) -> P1 has cokernel the simple at vertex 1.
    auto rad = submodule(p1, radical_subspace(p1));
    auto cok = cokernel(rad.inclusion);
    CHECK(cok.module.dim == 1);
    Rng rng(5);
    CHECK(is_isomorphic(cok.module, nk.simple(0), rng));
    rad.inclusion.validate();
    cok.projection.validate();
}

TEST_CASE("exactness of ker -> src -> tgt -> coker") {
    Nakayama nk;
    Rng rng(17);
    for (int t = 0; t < 5; ++t) {
        FdModule x = random_module(nk.pa.algebra, Side::left, rng);
        FdModule y = random_module(nk.pa.algebra, Side::left, rng);
        auto homs = hom_space(x, y);
        if (homs.empty()) continue;
        ExactMatrix m(y.dim, x.dim, F7);
        for (const auto& h : homs) m = m + h.scaled(rng.field_element(F7));
        ModuleHom f{x, y, m};
        f.validate();
        auto ker = kernel(f);
        auto img = image(f);
        auto cok = cokernel(f);
        CHECK(x.dim == ker.module.dim + img.module.dim);
        CHECK(y.dim == img.module.dim + cok.module.dim);
    }
}

TEST_CASE("tensor over R with the regular bimodule is the identity") {
    Nakayama nk;
    FdBimodule r = regular_bimodule(nk.pa.algebra);
    Rng rng(23);
    for (int t = 0; t < 5; ++t) {
        FdModule x = random_module(nk.pa.algebra, Side::left, rng);
        auto tx = tensor_bimodule_left(r, x);
        tx.module.validate();
        CHECK(tx.module.dim == x.dim);
        CHECK(is_isomorphic(tx.module, x, rng));
    }
}

TEST_CASE("arrow bimodule tensored with simples") {
    Nakayama nk;
    FdBimodule m = nk.arrow_bimodule(0, 2);  // Re_1 (x) e_3 R
    Rng rng(29);

    auto ms3 = tensor_bimodule_left(m, nk.simple(2));
    CHECK(ms3.module.dim == 2);
    CHECK(is_isomorphic(ms3.module, nk.proj(0), rng));

    auto ms1 = tensor_bimodule_left(m, nk.simple(0));
    CHECK(ms1.module.dim == 0);
}

TEST_CASE("tensor is functorial on maps") {
    Nakayama nk;
    FdBimodule m = nk.arrow_bimodule(0, 2);
    Rng rng(31);
    for (int t = 0; t < 8; ++t) {
        FdModule x = random_module(nk.pa.algebra, Side::left, rng);
        FdModule y = random_module(nk.pa.algebra, Side::left, rng);
        FdModule z = random_module(nk.pa.algebra, Side::left, rng);
        auto fs = hom_space(x, y);
        auto gs = hom_space(y, z);
        if (fs.empty() || gs.empty()) continue;
        const auto& f = fs[rng.below(fs.size())];
        const auto& g = gs[rng.below(gs.size())];
        auto tx = tensor_bimodule_left(m, x);
        auto ty = tensor_bimodule_left(m, y);
        auto tz = tensor_bimodule_left(m, z);
        ExactMatrix lhs = tensor_map_left(m, tx.space, tz.space, g * f);
        ExactMatrix rhs = tensor_map_left(m, ty.space, tz.space, g) *
                          tensor_map_left(m, tx.space, ty.space, f);
        CHECK(lhs == rhs);
        // Induced maps intertwine the induced module structures.
        ModuleHom{tx.module, ty.module,
                  tensor_map_left(m, tx.space, ty.space, f)}.validate();
    }
}

TEST_CASE("hom over the opposite ring") {
    Nakayama nk;
    FdBimodule r = regular_bimodule(nk.pa.algebra);
    Rng rng(37);
    for (int t = 0; t < 5; ++t) {
        FdModule y = random_module(nk.pa.algebra, Side::right, rng);
        auto h = hom_over_Rop(r, y);
        h.module.validate();
        CHECK(h.module.dim == y.dim);
        CHECK(is_isomorphic(h.module, y, rng));
    }
    FdBimodule zero{zero_module(nk.pa.algebra, Side::left),
                    zero_module(nk.pa.algebra, Side::right)};
    FdModule y = random_module(nk.pa.algebra, Side::right, rng);
    CHECK(hom_over_Rop(zero, y).module.dim == 0);

    // Adjunction oracle: dim Hom_{R^op}(M, Y) = dim D(M (x)_R D(Y)).
    FdBimodule m = nk.arrow_bimodule(0, 2);
    for (int t = 0; t < 5; ++t) {
        FdModule yy = random_module(nk.pa.algebra, Side::right, rng);
        auto lhs = hom_over_Rop(m, yy);
        auto rhs = tensor_bimodule_left(m, k_dual(yy));
        CHECK(lhs.module.dim == rhs.module.dim);
    }
}

TEST_CASE("field dual") {
    Nakayama nk;
    Rng rng(41);
    FdModule zero = zero_module(nk.pa.algebra, Side::left);
    CHECK(k_dual(zero).dim == 0);
    for (int t = 0; t < 5; ++t) {
        FdModule x = random_module(nk.pa.algebra, Side::left, rng);
        FdModule d = k_dual(x);
        d.validate();
        CHECK(d.dim == x.dim);
        CHECK(d.side == Side::right);
        CHECK(is_isomorphic(k_dual(d), x, rng));
    }
}

TEST_CASE("isomorphism testing") {
    Nakayama nk;
    Rng rng(43);
    CHECK_FALSE(is_isomorphic(nk.simple(0), nk.simple(1), rng));
    FdModule a = direct_sum({nk.proj(0), nk.proj(1)}).module;
    FdModule b = direct_sum({nk.proj(1), nk.proj(0)}).module;
    CHECK(is_isomorphic(a, b, rng));
    CHECK_FALSE(is_isomorphic(a, nk.reg_left, rng));  // dims 4 vs 6
}

TEST_CASE("random modules are deterministic per seed") {
    Nakayama nk;
    Rng a(99), b(99);
    for (int t = 0; t < 4; ++t) {
        FdModule x = random_module(nk.pa.algebra, Side::left, a);
        FdModule y = random_module(nk.pa.algebra, Side::left, b);
        CHECK(x.dim == y.dim);
        REQUIRE(x.action.size() == y.action.size());
        for (std::size_t i = 0; i < x.action.size(); ++i)
            CHECK(x.action[i] == y.action[i]);
        CHECK(x.dim >= 1);
        CHECK(x.dim <= 6);
    }
}
