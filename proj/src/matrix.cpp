#include "wassoc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace wassoc {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row_vec(std::size_t r) const
{
    auto s = row(r);
    return Vec(s.begin(), s.end());
}

Vec Matrix::column(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::append_row(const Vec& v)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = v.size();
    if (v.size() != cols_)
        throw std::invalid_argument("Matrix::append_row: length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    p(i, j) += aik * b(k, j);
        }
    return p;
}

Vec operator*(const Matrix& a, const Vec& v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && v[k] != 0)
                out[i] += a(i, k) * v[k];
    return out;
}

namespace {

// Shared elimination skeleton; `parallel` only toggles the OpenMP pragma on the
// row-update loop, the arithmetic is identical.
RrefResult eliminate(const Matrix& m, bool parallel)
{
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pivot_row = 0;

    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (a(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == rows)
            continue;
        if (sel != pivot_row)
            for (std::size_t c = col; c < cols; ++c)
                std::swap(a(sel, c), a(pivot_row, c));

        const Rational inv = 1 / a(pivot_row, col);
        for (std::size_t c = col; c < cols; ++c)
            if (a(pivot_row, c) != 0)
                a(pivot_row, c) *= inv;

        const std::size_t pr = pivot_row;
        auto update = [&](std::size_t r) {
            if (r == pr || a(r, col) == 0)
                return;
            const Rational f = a(r, col);
            for (std::size_t c = col; c < cols; ++c)
                if (a(pr, c) != 0)
                    a(r, c) -= f * a(pr, c);
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (std::size_t r = 0; r < rows; ++r)
                update(r);
        } else {
            for (std::size_t r = 0; r < rows; ++r)
                update(r);
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

}  // namespace

RrefResult rref(const Matrix& m)
{
    return eliminate(m, true);
}

namespace reference {

RrefResult rref_serial(const Matrix& m)
{
    return eliminate(m, false);
}

}  // namespace reference

std::size_t rank(const Matrix& m)
{
    return rref(m).rank;
}

std::vector<Vec> kernel_basis(const Matrix& m)
{
    const RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots)
        is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> row_space_basis(const std::vector<Vec>& vectors, std::size_t dim)
{
    const RrefResult r = rref(Matrix::from_rows(vectors, dim));
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r.rank; ++i)
        out.push_back(r.reduced.row_vec(i));
    return out;
}

bool in_span(const Vec& v, const std::vector<Vec>& basis)
{
    if (is_zero(v))
        return true;
    Matrix m = Matrix::from_rows(basis, v.size());
    const std::size_t before = rank(m);
    m.append_row(v);
    return rank(m) == before;
}

Matrix inverse(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::invalid_argument("inverse: matrix is not square");
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const RrefResult red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] >= n)
        throw std::invalid_argument("inverse: matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = red.reduced(r, n + c);
    return inv;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim)
{
    const std::size_t ra = rank(Matrix::from_rows(a, dim));
    const std::size_t rb = rank(Matrix::from_rows(b, dim));
    if (ra != rb)
        return false;
    std::vector<Vec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(Matrix::from_rows(both, dim)) == ra;
}

}  // namespace wassoc
