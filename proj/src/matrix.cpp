#include "cliffcanon/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cliffcanon {

namespace {

std::string shape_str(const Matrix& m) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%zux%zu", m.rows(), m.cols());
    return buf;
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatchError(std::string(op) + ": shapes " + shape_str(a) + " and " + shape_str(b) + " differ");
    }
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows.begin() == rows.end() ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeMismatchError("matrix literal: ragged rows");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::trace() const {
    double t = 0.0;
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

std::vector<double> Matrix::col(std::size_t j) const {
    std::vector<double> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const std::vector<double>& v) {
    if (v.size() != rows_) throw ShapeMismatchError("set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeMismatchError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                                 std::to_string(b.rows()) + " differ");
    }
    Matrix out(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row_ptr(i);
        double* orow = out.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double v = arow[k];
            if (v == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < n; ++j) orow[j] += v * brow[j];
        }
    }
    return out;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= s;
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "subtract");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

Matrix operator-(const Matrix& a) { return -1.0 * a; }

Matrix hcat(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != blocks.front().rows()) throw ShapeMismatchError("hcat: row counts differ");
        cols += b.cols();
    }
    Matrix out(blocks.front().rows(), cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, at + j) = b(i, j);
        at += b.cols();
    }
    return out;
}

Tolerance::Tolerance(double atol_in, double rank_rtol_in) : atol(atol_in), rank_rtol(rank_rtol_in) {
    if (!(atol > 0.0) || !(rank_rtol > 0.0)) throw Error("tolerance: atol and rank_rtol must be positive");
}

Tolerance default_tolerance(std::size_t n) {
    return Tolerance(1e-9 * static_cast<double>(std::max<std::size_t>(n, 1)), 1e-10);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double v = a(i, j);
            if (v == 0.0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
        }
    return out;
}

namespace {

double col_norm_below(const Matrix& a, std::size_t j, std::size_t from) {
    double s = 0.0;
    for (std::size_t i = from; i < a.rows(); ++i) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

struct Reflector {
    std::size_t offset; // first affected row
    std::vector<double> v;
    double vtv;
};

// Apply H = I - 2 v v^T / v^T v to columns [col_from, cols) of a, rows offset..
void apply_reflector(Matrix& a, const Reflector& h, std::size_t col_from) {
    if (h.vtv == 0.0) return;
    for (std::size_t j = col_from; j < a.cols(); ++j) {
        double dot = 0.0;
        for (std::size_t i = 0; i < h.v.size(); ++i) dot += h.v[i] * a(h.offset + i, j);
        const double f = 2.0 * dot / h.vtv;
        for (std::size_t i = 0; i < h.v.size(); ++i) a(h.offset + i, j) -= f * h.v[i];
    }
}

} // namespace

Matrix orth(const Matrix& q, const Tolerance& tol) {
    if (q.empty()) throw ZeroMatrixError("orth: empty matrix");
    if (q.max_abs() <= tol.atol) throw ZeroMatrixError("orth: matrix is zero up to tolerance");

    Matrix a = q;
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t steps = std::min(m, n);
    std::vector<Reflector> refl;
    std::vector<double> rdiag;

    double pivot0 = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
        // Column pivot: largest remaining norm, lowest index on ties.
        std::size_t best = k;
        double best_norm = col_norm_below(a, k, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            const double nj = col_norm_below(a, j, k);
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (k == 0) pivot0 = best_norm;
        if (best_norm <= pivot0 * tol.rank_rtol || best_norm == 0.0) break;
        if (best != k) {
            for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, best));
        }

        Reflector h;
        h.offset = k;
        h.v.resize(m - k);
        for (std::size_t i = k; i < m; ++i) h.v[i - k] = a(i, k);
        const double alpha = (h.v[0] >= 0.0 ? -best_norm : best_norm);
        h.v[0] -= alpha;
        h.vtv = 0.0;
        for (double x : h.v) h.vtv += x * x;
        apply_reflector(a, h, k);
        rdiag.push_back(a(k, k));
        refl.push_back(std::move(h));
    }

    const std::size_t rank = refl.size();
    if (rank == 0) throw ZeroMatrixError("orth: rank zero under tolerance");

    // Assemble the first `rank` columns of Q = H_0 H_1 ... H_{rank-1}.
    Matrix qcols(m, rank);
    for (std::size_t j = 0; j < rank; ++j) qcols(j, j) = 1.0;
    for (std::size_t k = rank; k-- > 0;) apply_reflector(qcols, refl[k], 0);

    // Fix signs so the implied R diagonal is positive.
    for (std::size_t j = 0; j < rank; ++j) {
        if (rdiag[j] < 0.0) {
            for (std::size_t i = 0; i < m; ++i) qcols(i, j) = -qcols(i, j);
        }
    }
    return qcols;
}

Matrix orth(const Matrix& q) { return orth(q, default_tolerance(std::max(q.rows(), q.cols()))); }

Matrix spd_factor(const Matrix& s, const Tolerance& tol) {
    if (s.rows() != s.cols()) throw NotSpdError("spd_factor: matrix is not square");
    const std::size_t n = s.rows();
    if (residual_max(s, s.transpose()) > tol.atol * (1.0 + s.max_abs())) {
        throw NotSpdError("spd_factor: matrix is not symmetric within tolerance");
    }
    Matrix r(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = s(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= r(k, j) * r(k, j);
        if (d <= 0.0) throw NotSpdError("spd_factor: nonpositive pivot at index " + std::to_string(j));
        r(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = s(j, i);
            for (std::size_t k = 0; k < j; ++k) v -= r(k, j) * r(k, i);
            r(j, i) = v / r(j, j);
        }
    }
    return r;
}

Matrix spd_factor(const Matrix& s) { return spd_factor(s, default_tolerance(s.rows())); }

double residual_max(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "residual_max");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j) - b(i, j)));
    return m;
}

bool is_orthogonal(const Matrix& p, const Tolerance& tol) {
    if (p.rows() != p.cols()) return false;
    return residual_max(p.transpose() * p, Matrix::identity(p.rows())) <= tol.atol;
}

bool anticommutes(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    require_same_shape(a, b, "anticommutes");
    if (a.rows() != a.cols()) throw ShapeMismatchError("anticommutes: matrices must be square");
    return (a * b + b * a).max_abs() <= tol.atol;
}

Matrix conjugate_orthogonal(const Matrix& a, const Matrix& p) { return p.transpose() * a * p; }

Matrix solve_right_upper(const Matrix& b, const Matrix& r) {
    if (r.rows() != r.cols() || b.cols() != r.rows()) throw ShapeMismatchError("solve_right_upper: bad shapes");
    Matrix x = b;
    const std::size_t n = r.rows();
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = x(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= x(i, k) * r(k, j);
            x(i, j) = v / r(j, j);
        }
    }
    return x;
}

Matrix solve_left_upper(const Matrix& r, const Matrix& b) {
    if (r.rows() != r.cols() || b.rows() != r.rows()) throw ShapeMismatchError("solve_left_upper: bad shapes");
    Matrix x = b;
    const std::size_t n = r.rows();
    for (std::size_t j = 0; j < x.cols(); ++j) {
        for (std::size_t i = n; i-- > 0;) {
            double v = x(i, j);
            for (std::size_t k = i + 1; k < n; ++k) v -= r(i, k) * x(k, j);
            x(i, j) = v / r(i, i);
        }
    }
    return x;
}

namespace pauli {

Matrix sigma() { return Matrix{{1, 0}, {0, -1}}; }
Matrix epsilon() { return Matrix{{0, 1}, {-1, 0}}; }
Matrix tau() { return Matrix{{0, 1}, {1, 0}}; }

} // namespace pauli

} // namespace cliffcanon
