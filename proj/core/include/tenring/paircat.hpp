#pragma once

#include <functional>

#include "tenring/resolution.hpp"
#include "tenring/tensorring.hpp"

namespace tenring {

/// A pair (X, u) with X a left R-module and u: M (x)_R X -> X an R-map,
/// equivalent to a left module over the tensor ring.
struct PairModule {
    FdModule base;       // X
    TensorOverR mx;      // the space M (x)_R X
    FdModule mx_module;  // M (x)_R X as a left R-module
    ExactMatrix u;       // base.dim x mx.dim

    ModuleHom u_hom() const { return ModuleHom{mx_module, base, u}; }
    void validate() const { u_hom().validate(); }
};

PairModule make_pair_module(const TensorRingContext& ctx, const FdModule& base,
                            const ExactMatrix& u);

/// A co-pair [Y, v] with Y a right R-module and v: Y -> Hom_{R^op}(M, Y),
/// equivalent to a right module over the tensor ring.
struct CoPairModule {
    FdModule base;   // Y
    HomOverRop hom;  // Hom_{R^op}(M, Y) with its basis of matrices
    ExactMatrix v;   // hom.module.dim x base.dim
    std::size_t m_dim = 0;  // dim of M, for evaluating zero hom spaces

    ModuleHom v_hom() const { return ModuleHom{base, hom.module, v}; }
    void validate() const { v_hom().validate(); }
    /// The hom v(y): M -> Y, as a dim Y x dim M matrix, for a coordinate
    /// column y.
    ExactMatrix eval(const ExactMatrix& y) const;
};

CoPairModule make_co_pair_module(const TensorRingContext& ctx,
                                 const FdModule& base, const ExactMatrix& v);

/// The equivalence: a pair becomes a left T-module on the same space,
/// layer-i basis elements acting by iterated u.
FdModule pair_to_module(const TensorRingContext& ctx, const PairModule& p);
PairModule module_to_pair(const TensorRingContext& ctx, const FdModule& t_module);

/// And its right-module counterpart for co-pairs.
FdModule co_pair_to_module(const TensorRingContext& ctx, const CoPairModule& c);
CoPairModule module_to_co_pair(const TensorRingContext& ctx,
                               const FdModule& t_module);

// --- The six functors ---

PairModule functor_S(const TensorRingContext& ctx, const FdModule& x);
FdModule functor_C(const TensorRingContext& ctx, const PairModule& p);
FdModule functor_U(const PairModule& p);
PairModule functor_Ind(const TensorRingContext& ctx, const FdModule& x);
FdModule functor_K(const TensorRingContext& ctx, const CoPairModule& c);
CoPairModule functor_Coind(const TensorRingContext& ctx, const FdModule& y_right);

/// Morphisms of pairs: R-maps commuting with u. Cross-checked against
/// hom_space over T via the equivalence in tests.
std::vector<ExactMatrix> hom_gamma(const TensorRingContext& ctx,
                                   const PairModule& p, const PairModule& q);

/// [Y,v] (x)_T (X,u) = (Y (x)_R X) / span{v(y)(m) (x) x - y (x) u(m (x) x)}.
struct TensorOverT {
    std::size_t dim = 0;
    ExactMatrix projection;  // from the Y (x)_R X coordinates
    TensorOverR yx;          // the Y (x)_R X space
};
TensorOverT tensor_over_T(const TensorRingContext& ctx, const CoPairModule& c,
                          const PairModule& p);

struct PhiResult {
    bool member = false;
    bool u_monic = false;
    FdModule cokernel;  // witness
};
PhiResult phi_membership(const TensorRingContext& ctx, const PairModule& p,
                         const std::function<bool(const FdModule&)>& class_test);

/// Seeded random pair over the context (random base + random R-linear u).
PairModule random_pair(const TensorRingContext& ctx, Rng& rng,
                       std::size_t max_dim = 6);

}  // namespace tenring
