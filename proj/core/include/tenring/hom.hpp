#pragma once

#include "tenring/module.hpp"

namespace tenring {

/// Basis of the space of module homomorphisms X -> Y (same algebra, same
/// side), as target.dim x source.dim matrices in canonical order.
std::vector<ExactMatrix> hom_space(const FdModule& x, const FdModule& y);

ModuleHom compose(const ModuleHom& second, const ModuleHom& first);
ModuleHom identity_hom(const FdModule& x);
ModuleHom zero_hom(const FdModule& x, const FdModule& y);

SubmoduleResult kernel(const ModuleHom& f);
SubmoduleResult image(const ModuleHom& f);
QuotientModuleResult cokernel(const ModuleHom& f);

bool is_isomorphic(const FdModule& x, const FdModule& y, Rng& rng);

/// Coordinates of `target` in the span of `basis` (all same shape), if any.
std::optional<std::vector<std::uint32_t>> express_in_span(
    const std::vector<ExactMatrix>& basis, const ExactMatrix& target);

}  // namespace tenring
