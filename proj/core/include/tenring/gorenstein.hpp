#pragma once

#include <string>

#include "tenring/paircat.hpp"

namespace tenring {

struct ConditionTWitness {
    std::size_t layer = 0;       // i in M^(x)i
    std::size_t degree = 0;      // Tor degree
    std::size_t projective = 0;  // index of the indecomposable projective
    std::size_t tor_dim = 0;
};

struct ConditionTReport {
    bool holds = false;
    std::size_t degree_bound = 0;
    std::size_t layers_checked = 0;
    std::size_t projectives_checked = 0;
    std::optional<ConditionTWitness> witness;
};

/// Tor_j(M, M^(x)i (x) P) = 0 for every indecomposable projective P,
/// 1 <= i <= N, 1 <= j <= degree_bound.
ConditionTReport check_condition_T(const TensorRingContext& ctx,
                                   std::size_t degree_bound = 6);

enum class Verdict { yes, no, inconclusive };
enum class GKind { GP, PGF, GF };

struct GorensteinVerdict {
    GKind kind = GKind::GP;
    Verdict verdict = Verdict::inconclusive;
    std::size_t window = 0;
    std::string witness;  // obstruction, or a description of the checked window
};

/// Totally-reflexive window test: Ext-vanishing against the ring plus a
/// projective coresolution built from minimal injective envelopes, each
/// required to be projective.
GorensteinVerdict is_gorenstein_projective(const FdModule& x,
                                           std::size_t window = 8);

/// GP plus exactness of E (x) P^* within the window for every
/// indecomposable injective right module E.
GorensteinVerdict is_pgf(const FdModule& x, std::size_t window = 8);

/// Flat = projective here, so the complex search coincides with is_pgf;
/// reported separately with kind GF.
GorensteinVerdict is_gf(const FdModule& x, std::size_t window = 8);

struct VerifyReport {
    bool hypotheses_ok = false;
    std::string hypothesis_failure;
    std::size_t samples = 0;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t inconclusive = 0;
    std::vector<std::string> details;  // one line per disagreement
};

/// PGF(T) = Phi(PGF(R)) on stratified random pairs.
VerifyReport verify_theorem_A(const TensorRingContext& ctx,
                              std::size_t samples, std::uint64_t seed);

/// X GF over R <=> Ind(X) GF over T (and the PGF variant).
VerifyReport verify_theorem_B(const TensorRingContext& ctx,
                              std::size_t samples, std::uint64_t seed);

struct Section4Report {
    bool hypotheses_ok = false;
    std::string hypothesis_failure;
    bool mu_roundtrip_ok = false;
    VerifyReport membership;        // Theorem A comparator on the reduction
    std::size_t gf_instance_samples = 0;   // (X, U (x) X, 1, 0) must be GF
    std::size_t gf_instance_failures = 0;
};

/// Reduce a zero-pairing Morita context through mu to a trivial extension
/// and run the membership comparisons plus the canonical GF instances.
Section4Report verify_section4(const MoritaData& d, std::size_t samples,
                               std::uint64_t seed);

struct Corollary47Report {
    std::size_t cases = 0;
    std::size_t disagreements = 0;
    // Over the hereditary triangular algebra the PGF modules are exactly the
    // projectives; counts cases where the two predicates differ.
    std::size_t projective_mismatches = 0;
    std::vector<std::string> details;
};

/// Exhaustive sweep over the triangular 2x2 algebra: quadruples (X, Y, f, 0)
/// with dim X, dim Y <= max_dim, one representative per rank of f; PGF
/// membership must equal "f is monic".
Corollary47Report verify_corollary_47(FieldSpec f, std::size_t max_dim = 3);

}  // namespace tenring
