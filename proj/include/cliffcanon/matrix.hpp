#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cliffcanon/errors.hpp"

namespace cliffcanon {

// Dense real matrix, row-major.  Everything in this library is small
// (N <= 256), so the kernels below are straightforward loops; the
// multiply skips zero entries, which makes products of signed
// permutation matrices effectively O(N^2).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }

    Matrix transpose() const;
    double trace() const;
    double max_abs() const;
    bool all_finite() const;

    std::vector<double> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<double>& v);

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);

// Columns of `blocks` side by side.
Matrix hcat(const std::vector<Matrix>& blocks);

// Entrywise absolute-value and rank thresholds.  atol is the absolute
// tolerance for max-norm checks, rank_rtol the relative cutoff for
// numerical rank (against the leading pivot / singular value).
struct Tolerance {
    double atol;
    double rank_rtol;

    Tolerance(double atol, double rank_rtol);
};

// atol = 1e-9 * n, rank_rtol = 1e-10.  Canonical data is integer-valued
// and gets perturbed only by orthogonal conjugation, so error growth
// stays mild and the defaults are generous.
Tolerance default_tolerance(std::size_t n);

// Kronecker product: block (i,j) of the result is a(i,j) * b, so the
// left factor indexes the blocks.
Matrix kron(const Matrix& a, const Matrix& b);

// Orthonormal basis of range(q): Householder QR with column pivoting
// (largest remaining column norm, lowest index on ties), columns flipped
// so the R diagonal is positive.  Column count is the numerical rank
// under tol.rank_rtol; deterministic for a given input.
Matrix orth(const Matrix& q, const Tolerance& tol);
Matrix orth(const Matrix& q);

// Upper-triangular R with R^T R = s (Cholesky).  Throws NotSpdError on a
// nonpositive pivot or an asymmetric input.
Matrix spd_factor(const Matrix& s, const Tolerance& tol);
Matrix spd_factor(const Matrix& s);

// max |a - b| entrywise; shapes must agree.
double residual_max(const Matrix& a, const Matrix& b);

bool is_orthogonal(const Matrix& p, const Tolerance& tol);
bool anticommutes(const Matrix& a, const Matrix& b, const Tolerance& tol);

// P^T * a * P.
Matrix conjugate_orthogonal(const Matrix& a, const Matrix& p);

// Solve x * r = b for upper-triangular r, i.e. x = b * r^{-1}.
Matrix solve_right_upper(const Matrix& b, const Matrix& r);

// Solve r * x = b for upper-triangular r, i.e. x = r^{-1} * b.
Matrix solve_left_upper(const Matrix& r, const Matrix& b);

namespace pauli {
// sigma = (1 0; 0 -1), epsilon = (0 1; -1 0), tau = (0 1; 1 0).
Matrix sigma();
Matrix epsilon();
Matrix tau();
} // namespace pauli

} // namespace cliffcanon
