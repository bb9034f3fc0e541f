#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace brq {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    /// col_i += c * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    void set_column(std::size_t j, const std::vector<Int>& v);

    /// Matrix-vector product (column vector convention).
    std::vector<Int> apply(const std::vector<Int>& v) const;

    /// Horizontal concatenation [A | B]; row counts must agree.
    static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

    /// Matrix whose columns are the given vectors (all of length dim).
    static IntMatrix from_columns(std::size_t dim, const std::vector<std::vector<Int>>& cols);

    /// Exact determinant (square only), Bareiss fraction-free elimination.
    Int determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

}  // namespace brq
