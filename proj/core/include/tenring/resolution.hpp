#pragma once

#include "tenring/tensor.hpp"

namespace tenring {

/// The modules A e (left) or e A (right) for a complete set of primitive
/// orthogonal idempotents, plus iso-class grouping.
struct IndecProjectives {
    std::vector<FdModule> projectives;
    std::vector<ExactMatrix> idempotents;
    std::vector<std::size_t> iso_class;  // same value <=> isomorphic
};
IndecProjectives indecomposable_projectives(const FinDimAlgebra& a,
                                            Side side = Side::left);

/// Projective cover: epi from a direct sum of indecomposable projectives
/// whose kernel lies in the radical of the source.
struct Cover {
    ModuleHom map;                       // cover -> x, surjective
    std::vector<std::size_t> summands;   // idempotent indices used
};
Cover projective_cover(const FdModule& x);

/// Minimal projective resolution ... -> P1 -> P0 -> X -> 0 up to `depth`.
/// maps[0]: P0 -> X, maps[i]: Pi -> P_{i-1}. terminated means the last
/// syzygy is zero, so the resolution is complete.
struct Resolution {
    FdModule module;
    std::vector<FdModule> terms;
    std::vector<ModuleHom> maps;
    bool terminated = false;
};
Resolution minimal_projective_resolution(const FdModule& x, std::size_t depth = 20);

/// Dimension of Tor_i(Y, X). nullopt = the resolution did not reach far
/// enough within max_depth (explicit "insufficient depth", never silent 0).
std::optional<std::size_t> tor(const FdModule& y_right, const FdModule& x_left,
                               std::size_t i, std::size_t max_depth = 20);

/// Dimension of Ext^i(X, Y) for modules on the same side.
std::optional<std::size_t> ext(const FdModule& x, const FdModule& y,
                               std::size_t i, std::size_t max_depth = 20);

struct PdResult {
    bool finite = false;
    std::size_t value = 0;  // meaningful when finite
};
PdResult pd_bounded(const FdModule& x, std::size_t bound = 20);

bool is_projective(const FdModule& x);
bool is_injective(const FdModule& x);

/// Indecomposable injectives as duals of the opposite-side projectives.
std::vector<FdModule> indecomposable_injectives(const FinDimAlgebra& a,
                                                Side side = Side::right);

}  // namespace tenring
