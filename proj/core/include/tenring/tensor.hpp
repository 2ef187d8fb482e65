#pragma once

#include "tenring/hom.hpp"

namespace tenring {

/// Y tensor_R X as a quotient of Y tensor_k X. Basis convention for the
/// ambient space: (i_y, i_x) -> i_y * dim(X) + i_x, matching kron of
/// column vectors with the Y factor on the left.
struct TensorOverR {
    std::size_t dim = 0;
    ExactMatrix projection;  // dim x (dimY * dimX)
    ExactMatrix section;     // (dimY * dimX) x dim
};

/// y_right: right R-module, x_left: left R-module over the same algebra.
TensorOverR tensor_over_R(const FdModule& y_right, const FdModule& x_left);

/// Push an operator op on Y tensor_k X (which preserves the middle-linearity
/// subspace) down to the quotient.
ExactMatrix induced_on_tensor(const TensorOverR& t, const ExactMatrix& op);

/// (A,R)-bimodule M tensored with a left R-module X, as a left A-module.
struct TensorModule {
    FdModule module;  // left module over A
    TensorOverR space;
};
TensorModule tensor_bimodule_left(const FdBimodule& m, const FdModule& x_left);

/// Right R-module Y tensored with an (R,B)-bimodule M, as a right B-module.
TensorModule tensor_bimodule_right(const FdModule& y_right, const FdBimodule& m);

/// Functorial action on maps: id_M tensor f for a hom of left modules.
ExactMatrix tensor_map_left(const FdBimodule& m, const TensorOverR& src,
                            const TensorOverR& dst, const ExactMatrix& f);

/// Hom over R-op: maps of right R-modules M -> Y, carrying the right
/// R-module structure (f.r)(m) = f(r.m) induced by the left action on M.
struct HomOverRop {
    FdModule module;                 // right R-module
    std::vector<ExactMatrix> basis;  // dimY x dimM matrices
};
HomOverRop hom_over_Rop(const FdBimodule& m, const FdModule& y_right);

}  // namespace tenring
