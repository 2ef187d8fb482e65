#pragma once

#include <string>
#include <vector>

#include "tenring/matrix.hpp"

namespace tenring {

/// Finite-dimensional associative unital algebra over F_p, given by a basis
/// and structure constants. mult(i, j) is the coordinate column of b_i * b_j.
class FinDimAlgebra {
public:
    FinDimAlgebra() = default;
    /// mult[i][j] = coordinates of b_i * b_j (each a dim-vector).
    FinDimAlgebra(std::vector<std::vector<std::vector<std::uint32_t>>> mult,
                  std::vector<std::uint32_t> unit, FieldSpec f,
                  std::vector<std::string> labels = {});

    const FieldSpec& field() const { return f_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    ExactMatrix unit() const;
    ExactMatrix basis_element(std::size_t i) const;

    /// Matrix of left multiplication by the element with coordinate column a.
    ExactMatrix left_mult(const ExactMatrix& a) const;
    /// Matrix of right multiplication (x -> x*a).
    ExactMatrix right_mult(const ExactMatrix& a) const;

    ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) const {
        return left_mult(a) * b;
    }

    /// Exhaustive associativity + two-sided-unit check over all basis triples.
    void validate() const;

    /// Horner evaluation of a polynomial at an element, with the given
    /// identity element standing in for the constant term.
    ExactMatrix eval_poly(const class Poly& p, const ExactMatrix& a,
                          const ExactMatrix& identity) const;

    bool operator==(const FinDimAlgebra& o) const {
        return dim_ == o.dim_ && f_ == o.f_ && lm_ == o.lm_ && unit_ == o.unit_;
    }

private:
    FieldSpec f_;
    std::size_t dim_ = 0;
    std::vector<ExactMatrix> lm_;  // lm_[i] = left multiplication by b_i
    std::vector<std::uint32_t> unit_;
    std::vector<std::string> labels_;
};

/// Cyclic Nakayama quiver data: vertices 1..n in a cycle, truncation J^h.
struct QuiverPreset {
    std::size_t n;
    std::size_t h;
    FieldSpec field;
};

struct PathAlgebra {
    FinDimAlgebra algebra;
    /// Coordinate columns of the vertex idempotents e_1..e_n.
    std::vector<ExactMatrix> idempotents;
    /// basis_path[k] = (source vertex 0-based, length) of basis element k.
    std::vector<std::pair<std::size_t, std::size_t>> basis_path;
};

/// Path algebra kQ/J^h of the cyclic quiver on n vertices. Basis = paths of
/// length < h ordered by (source vertex, length). In a product p*q the path
/// q is traversed first, so e_j * p * e_i != 0 exactly for paths i -> j.
PathAlgebra path_algebra(const QuiverPreset& q);

FinDimAlgebra opposite(const FinDimAlgebra& a);

/// A x B on basis(A) ⊔ basis(B).
FinDimAlgebra product_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b);

/// The base field as a one-dimensional algebra.
FinDimAlgebra scalar_algebra(FieldSpec f);

// --- Radical and idempotents (substrate for projective covers) ---

/// Canonical column basis of the Jacobson radical (characteristic-p chain of
/// characteristic-polynomial trace forms on the regular representation).
ExactMatrix radical_basis(const FinDimAlgebra& a);

struct QuotientAlgebra {
    FinDimAlgebra algebra;     // A / I
    ExactMatrix projection;    // dim(A/I) x dim(A)
    ExactMatrix section;       // dim(A) x dim(A/I), projection * section = id
};

/// Quotient by a two-sided ideal given as a column basis.
QuotientAlgebra quotient_algebra(const FinDimAlgebra& a, const ExactMatrix& ideal);

/// A complete set of primitive orthogonal idempotents (coordinate columns),
/// found by splitting A/rad and lifting along the radical. Throws on
/// pathological inputs that resist splitting.
std::vector<ExactMatrix> primitive_orthogonal_idempotents(const FinDimAlgebra& a);

/// Minimal polynomial of an element relative to the given identity.
class Poly minimal_poly(const FinDimAlgebra& a, const ExactMatrix& elem,
                        const ExactMatrix& identity);

}  // namespace tenring
