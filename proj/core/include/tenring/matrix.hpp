#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "tenring/field.hpp"

namespace tenring {

/// Dense matrix over a prime field, row-major. Immutable in spirit: all
/// operations return new values.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec f)
        : rows_(rows), cols_(cols), f_(f), e_(rows * cols, 0) {}
    ExactMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                FieldSpec f);

    static ExactMatrix identity(std::size_t n, FieldSpec f);
    static ExactMatrix zero(std::size_t rows, std::size_t cols, FieldSpec f) {
        return ExactMatrix(rows, cols, f);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return f_; }

    std::uint32_t at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t v) { e_[i * cols_ + j] = f_.reduce(v); }

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && e_ == o.e_;
    }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(std::uint32_t c) const;
    ExactMatrix transpose() const;

    /// Kronecker product, lexicographic on index pairs, left factor major.
    ExactMatrix kron(const ExactMatrix& o) const;

    ExactMatrix hstack(const ExactMatrix& o) const;
    ExactMatrix vstack(const ExactMatrix& o) const;
    ExactMatrix submatrix(std::size_t r0, std::size_t c0,
                          std::size_t nrows, std::size_t ncols) const;
    ExactMatrix column(std::size_t j) const { return submatrix(0, j, rows_, 1); }
    ExactMatrix select_columns(const std::vector<std::size_t>& js) const;

    /// Reduced row-echelon form together with the pivot columns.
    std::pair<ExactMatrix, std::vector<std::size_t>> rref() const;
    std::size_t rank() const { return rref().second.size(); }

    /// Canonical basis of the right kernel {x : m x = 0}, one column per
    /// free variable, echelon-normalized.
    ExactMatrix kernel_basis() const;

    /// One solution of m x = b (free variables zero), or nullopt when
    /// inconsistent. Row counts must agree.
    std::optional<ExactMatrix> solve(const ExactMatrix& b) const;

    std::optional<ExactMatrix> inverse() const;

    /// Canonical column-echelon basis of the column space; subspace equality
    /// becomes matrix equality.
    ExactMatrix column_space() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec f_;
    std::vector<std::uint32_t> e_;

    void check_field(const ExactMatrix& o) const {
        if (!(f_ == o.f_)) throw Error("ExactMatrix: field mismatch");
    }
};

/// Solution space of a homogeneous system given as the kernel of `m`,
/// reinterpreted: intersect_columns(a, b) returns a canonical basis of
/// col(a) ∩ col(b).
ExactMatrix intersect_columns(const ExactMatrix& a, const ExactMatrix& b);

/// Canonical basis of the sum of two column spaces.
ExactMatrix sum_columns(const ExactMatrix& a, const ExactMatrix& b);

/// True iff every column of `v` lies in the column space of `space`.
bool columns_contained(const ExactMatrix& v, const ExactMatrix& space);

}  // namespace tenring
