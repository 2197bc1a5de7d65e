#pragma once

#include "wassoc/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace wassoc {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    /// Rows given as vectors of equal length; an empty list yields 0 x cols.
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const;
    Vec column(std::size_t c) const;

    void append_row(const Vec& v);
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

struct RrefResult {
    std::size_t rank = 0;
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form. Pivot = first nonzero entry (top to bottom) in the
/// leftmost remaining column, so the output is deterministic. Row elimination
/// below and above the pivot runs in parallel.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per free column (standard
/// parametrisation: free variable = 1, other free variables = 0).
std::vector<Vec> kernel_basis(const Matrix& m);

/// Row-space basis in reduced form (nonzero rows of rref).
std::vector<Vec> row_space_basis(const std::vector<Vec>& vectors, std::size_t dim);

/// True iff v lies in the rational span of basis (vectors of length v.size()).
bool in_span(const Vec& v, const std::vector<Vec>& basis);

/// Inverse of a square matrix. Throws std::invalid_argument if singular.
Matrix inverse(const Matrix& m);

/// Equality of the spans of two families in K^dim.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);

namespace reference {

/// Single-threaded elimination, same pivot rule as wassoc::rref.
RrefResult rref_serial(const Matrix& m);

}  // namespace reference

}  // namespace wassoc
