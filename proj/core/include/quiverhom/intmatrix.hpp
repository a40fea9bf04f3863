#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverhom {

using Int = boost::multiprecision::cpp_int;

/// Raised when an input value violates one of its documented invariants.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void internal_error(const std::string& what) {
    throw std::logic_error("internal error: " + what);
}

/**
 * Dense matrix over arbitrary-precision integers.
 *
 * Zero-row and zero-column shapes are first-class citizens: empty kernels,
 * empty relation sets and chain groups outside the support all show up as
 * matrices with a zero dimension.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix column(const std::vector<Int>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix scaled(const Int& c) const;

    std::vector<Int> col(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    void set_col(std::size_t j, const std::vector<Int>& v);

    IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i -= q * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& q);
    /// col i -= q * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v);

}  // namespace quiverhom
