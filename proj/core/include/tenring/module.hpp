#pragma once

#include <optional>

#include "tenring/algebra.hpp"
#include "tenring/rng.hpp"

namespace tenring {

enum class Side { left, right };

/// Quotient of F_p^n by a subspace: projection and a section with
/// projection * section = id.
struct QuotientSpace {
    ExactMatrix projection;
    ExactMatrix section;
};
QuotientSpace quotient_by(const ExactMatrix& subspace_cols, std::size_t ambient,
                          FieldSpec f);

/// Finite-dimensional module given by one action matrix per algebra basis
/// element. Left: act(ab) = act(a)act(b); right: act(ab) = act(b)act(a).
struct FdModule {
    FinDimAlgebra algebra;
    Side side = Side::left;
    std::size_t dim = 0;
    std::vector<ExactMatrix> action;

    ExactMatrix act(const ExactMatrix& elem) const;
    void validate() const;
    bool is_zero() const { return dim == 0; }
};

/// Left A-module and right B-module on the same space, actions commuting.
struct FdBimodule {
    FdModule left;   // side == left, over A
    FdModule right;  // side == right, over B
    std::size_t dim() const { return left.dim; }
    void validate() const;
};

struct ModuleHom {
    FdModule source;
    FdModule target;
    ExactMatrix matrix;  // target.dim x source.dim
    void validate() const;
};

FdModule regular_module(const FinDimAlgebra& a, Side side);
/// The regular bimodule of A over itself.
FdBimodule regular_bimodule(const FinDimAlgebra& a);

FdModule zero_module(const FinDimAlgebra& a, Side side);

/// Submodule generated by the given columns: closure under the action,
/// canonical echelon basis. Returns the module plus its inclusion.
struct SubmoduleResult {
    FdModule module;
    ModuleHom inclusion;
};
SubmoduleResult submodule(const FdModule& x, const ExactMatrix& generators);

struct QuotientModuleResult {
    FdModule module;
    ModuleHom projection;
    ExactMatrix section;  // linear section of the projection
};
/// Quotient by an action-stable subspace.
QuotientModuleResult quotient_module(const FdModule& x, const ExactMatrix& subspace);

struct DirectSum {
    FdModule module;
    std::vector<ModuleHom> injections;
    std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<FdModule>& parts);

/// Field dual: flips the side, transposes all actions.
FdModule k_dual(const FdModule& x);
/// Dual of a hom: k_dual(f): k_dual(target) -> k_dual(source).
ModuleHom k_dual(const ModuleHom& f);

/// rad(A) * X as a column subspace of X.
ExactMatrix radical_subspace(const FdModule& x);

/// The simple module top(A e) for a primitive idempotent e.
FdModule simple_of_idempotent(const FinDimAlgebra& a, const ExactMatrix& idem);

/// Seeded random module: a subquotient of a small free module, retried
/// until its dimension lands in [1, max_dim] (best effort).
FdModule random_module(const FinDimAlgebra& a, Side side, Rng& rng,
                       std::size_t max_dim = 6);

/// Outer tensor over the base field: a left A-module and a right B-module
/// give an (A,B)-bimodule on their k-tensor product (left factor major).
FdBimodule bimodule_tensor_k(const FdModule& left_part, const FdModule& right_part);

/// Treat a right A-module as a left module over opposite(A), or back.
FdModule flip_side(const FdModule& x, const FinDimAlgebra& opposite_algebra);

}  // namespace tenring
