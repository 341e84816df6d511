#include "seifert/exact/int_matrix.hpp"

#include "seifert/errors.hpp"

namespace seifert::exact {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("IntMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols) {
    IntMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Int& IntMatrix::operator()(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("IntMatrix: index out of range");
    return data_[i * cols_ + j];
}

const Int& IntMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("IntMatrix: index out of range");
    return data_[i * cols_ + j];
}

void IntMatrix::append_row(const std::vector<Int>& row) {
    if (row.size() != cols_)
        throw DimensionMismatch("IntMatrix: appended row has wrong length");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(data_[i * cols_ + k], data_[j * cols_ + k]);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(data_[k * cols_ + i], data_[k * cols_ + j]);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t k = 0; k < cols_; ++k)
        data_[dst * cols_ + k] += q * data_[src * cols_ + k];
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t k = 0; k < rows_; ++k)
        data_[k * cols_ + dst] += q * data_[k * cols_ + src];
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) data_[i * cols_ + k] = -data_[i * cols_ + k];
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) data_[k * cols_ + j] = -data_[k * cols_ + j];
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i * cols_ + j];
    return t;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = data_[i * cols_ + j];
    return r;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("IntMatrix: incompatible product shapes");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Int> matrix_apply(const IntMatrix& a, const std::vector<Int>& x) {
    if (x.size() != a.cols())
        throw DimensionMismatch("matrix_apply: vector length does not match matrix");
    std::vector<Int> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace seifert::exact
