#include "tenring/matrix.hpp"

#include <algorithm>

namespace tenring {

ExactMatrix::ExactMatrix(
    std::initializer_list<std::initializer_list<std::int64_t>> rows, FieldSpec f)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), f_(f) {
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ExactMatrix: ragged initializer");
        for (auto v : r) e_.push_back(f_.reduce(v));
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n, FieldSpec f) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1 % f.p;
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("ExactMatrix: shape mismatch in +");
    ExactMatrix r(rows_, cols_, f_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.add(e_[i], o.e_[i]);
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("ExactMatrix: shape mismatch in -");
    ExactMatrix r(rows_, cols_, f_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.sub(e_[i], o.e_[i]);
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw Error("ExactMatrix: shape mismatch in *");
    ExactMatrix r(rows_, o.cols_, f_);
    const std::uint64_t p = f_.p;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = e_[i * cols_ + k];
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.e_[i * o.cols_ + j] = static_cast<std::uint32_t>(
                    (r.e_[i * o.cols_ + j] + a * o.e_[k * o.cols_ + j]) % p);
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(std::uint32_t c) const {
    ExactMatrix r(rows_, cols_, f_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.mul(e_[i], c);
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_, f_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
    return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    check_field(o);
    ExactMatrix r(rows_ * o.rows_, cols_ * o.cols_, f_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            std::uint32_t a = e_[i * cols_ + j];
            if (!a) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r.e_[(i * o.rows_ + k) * r.cols_ + (j * o.cols_ + l)] =
                        f_.mul(a, o.e_[k * o.cols_ + l]);
        }
    return r;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& o) const {
    check_field(o);
    if (rows_ != o.rows_) throw Error("ExactMatrix: hstack row mismatch");
    ExactMatrix r(rows_, cols_ + o.cols_, f_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.e_[i * r.cols_ + j] = e_[i * cols_ + j];
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.e_[i * r.cols_ + cols_ + j] = o.e_[i * o.cols_ + j];
    }
    return r;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
    check_field(o);
    if (cols_ != o.cols_) throw Error("ExactMatrix: vstack col mismatch");
    ExactMatrix r(rows_ + o.rows_, cols_, f_);
    std::copy(e_.begin(), e_.end(), r.e_.begin());
    std::copy(o.e_.begin(), o.e_.end(), r.e_.begin() + e_.size());
    return r;
}

ExactMatrix ExactMatrix::submatrix(std::size_t r0, std::size_t c0,
                                   std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw Error("ExactMatrix: submatrix out of range");
    ExactMatrix r(nrows, ncols, f_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            r.e_[i * ncols + j] = e_[(r0 + i) * cols_ + (c0 + j)];
    return r;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& js) const {
    ExactMatrix r(rows_, js.size(), f_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < js.size(); ++j)
            r.e_[i * js.size() + j] = e_[i * cols_ + js[j]];
    return r;
}

std::pair<ExactMatrix, std::vector<std::size_t>> ExactMatrix::rref() const {
    ExactMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && m.e_[piv * cols_ + col] == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.e_[piv * cols_ + j], m.e_[row * cols_ + j]);
        std::uint32_t inv = f_.inv(m.e_[row * cols_ + col]);
        for (std::size_t j = col; j < cols_; ++j)
            m.e_[row * cols_ + j] = f_.mul(m.e_[row * cols_ + j], inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            std::uint32_t c = m.e_[i * cols_ + col];
            if (!c) continue;
            for (std::size_t j = col; j < cols_; ++j)
                m.e_[i * cols_ + j] =
                    f_.sub(m.e_[i * cols_ + j], f_.mul(c, m.e_[row * cols_ + j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

ExactMatrix ExactMatrix::kernel_basis() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    ExactMatrix k(cols_, free_cols.size(), f_);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t j = free_cols[fi];
        k.set(j, fi, 1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            k.set(pivots[pi], fi, -static_cast<std::int64_t>(r.at(pi, j)));
    }
    return k;
}

std::optional<ExactMatrix> ExactMatrix::solve(const ExactMatrix& b) const {
    check_field(b);
    if (b.rows() != rows_) throw Error("ExactMatrix: solve row mismatch");
    auto [r, pivots] = hstack(b).rref();
    // Inconsistent iff a pivot lands in the b-block.
    for (auto c : pivots)
        if (c >= cols_) return std::nullopt;
    ExactMatrix x(cols_, b.cols(), f_);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.e_[pivots[pi] * b.cols() + j] = r.at(pi, cols_ + j);
    return x;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(rows_, f_));
    if (!x) return std::nullopt;
    if (!((*x) * (*this) == identity(rows_, f_))) return std::nullopt;
    return x;
}

ExactMatrix ExactMatrix::column_space() const {
    auto [r, pivots] = transpose().rref();
    return r.submatrix(0, 0, pivots.size(), r.cols()).transpose();
}

ExactMatrix intersect_columns(const ExactMatrix& a, const ExactMatrix& b) {
    // x in col(a) ∩ col(b)  <=>  x = a s = b t; kernel of [a | -b].
    if (a.cols() == 0 || b.cols() == 0)
        return ExactMatrix(a.rows(), 0, a.field());
    ExactMatrix k = a.hstack(b.scaled(a.field().p - 1)).kernel_basis();
    ExactMatrix s = k.submatrix(0, 0, a.cols(), k.cols());
    return (a * s).column_space();
}

ExactMatrix sum_columns(const ExactMatrix& a, const ExactMatrix& b) {
    return a.hstack(b).column_space();
}

bool columns_contained(const ExactMatrix& v, const ExactMatrix& space) {
    return space.solve(v).has_value();
}

}  // namespace tenring
