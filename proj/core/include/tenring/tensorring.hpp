#pragma once

#include "tenring/tensor.hpp"

namespace tenring {

/// The tensor ring T = R (+) M (+) M^{(x)2} (+) ... with full layer data:
/// each layer as an R-bimodule, plus the maps lambda_i identifying
/// M (x)_k L_i -> L_{i+1} (projection) and their sections.
struct TensorRingContext {
    FinDimAlgebra ring;   // T itself
    FinDimAlgebra base;   // R
    FdBimodule m;
    std::vector<std::size_t> grading;  // grading[i] = dim of layer i
    std::vector<std::size_t> offsets;  // basis offset of layer i in T
    std::vector<FdBimodule> layers;    // layer i as an R-bimodule
    std::vector<ExactMatrix> lambda;   // dim L_{i+1} x (dim M * dim L_i)
    std::vector<ExactMatrix> sigma;    // linear sections of lambda

    std::size_t nilpotency() const { return grading.size() - 1; }  // N
    /// Embed a coordinate column of layer i into T.
    ExactMatrix embed(std::size_t layer, const ExactMatrix& v) const;
    /// Extract the layer-i component of an element of T.
    ExactMatrix component(std::size_t layer, const ExactMatrix& t) const;
};

/// Throws Error("NotNilpotent...") if layer nilBound is still nonzero.
TensorRingContext tensor_ring(const FinDimAlgebra& r, const FdBimodule& m,
                              std::size_t nil_bound = 16);

/// R x M with multiplication (r1,m1)(r2,m2) = (r1 r2, r1 m2 + m1 r2).
FinDimAlgebra trivial_extension(const FinDimAlgebra& r, const FdBimodule& m);

/// Morita context: U a (B,A)-bimodule, V an (A,B)-bimodule, pairings
/// phi: U (x)_A V -> B and psi: V (x)_B U -> A given on the k-tensor
/// squares (they must kill the balancing relations).
struct MoritaData {
    FinDimAlgebra a;
    FinDimAlgebra b;
    FdBimodule u;  // left B, right A
    FdBimodule v;  // left A, right B
    ExactMatrix phi;  // dim B x (dim U * dim V)
    ExactMatrix psi;  // dim A x (dim V * dim U)
    void validate() const;
};

/// Zero-pairing Morita data over the given algebras and bimodules.
MoritaData morita_zero(const FinDimAlgebra& a, const FinDimAlgebra& b,
                       const FdBimodule& u, const FdBimodule& v);

/// The ring (A V / U B) on basis(A) ⊔ basis(V) ⊔ basis(U) ⊔ basis(B).
FinDimAlgebra morita_ring(const MoritaData& d);

/// (A x B)-bimodule structure on U (+) V: (a,b).(u,v) = (b.u, a.v),
/// (u,v).(a,b) = (u.a, v.b).
FdBimodule morita_bimodule(const MoritaData& d);

/// For phi = psi = 0: the basis bijection morita_ring(d) ->
/// trivial_extension(A x B, U (+) V), verified multiplicative.
ExactMatrix mu_iso(const MoritaData& d);

}  // namespace tenring
