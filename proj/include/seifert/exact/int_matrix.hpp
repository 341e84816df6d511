#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "seifert/exact/numtheory.hpp"

namespace seifert::exact {

// Dense integer matrix, row-major, dimensions fixed at construction
// (append_row is the one growth point, used when assembling relation
// matrices). Zero-row and zero-column shapes are valid.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j);
    const Int& operator()(std::size_t i, std::size_t j) const;

    void append_row(const std::vector<Int>& row);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    IntMatrix transposed() const;
    std::vector<Int> row(std::size_t i) const;

    bool is_zero() const;
    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// matrix * column vector
std::vector<Int> matrix_apply(const IntMatrix& a, const std::vector<Int>& x);

}  // namespace seifert::exact
