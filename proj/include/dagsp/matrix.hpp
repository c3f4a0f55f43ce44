#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "dagsp/errors.hpp"

namespace dagsp {

/// Dense row-major matrix of doubles. Just enough linear algebra for this
/// library; triangular solves live here because they are the workhorse.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* row(int i) { return d_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row(int i) const { return d_.data() + static_cast<std::size_t>(i) * cols_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : d_) m = std::max(m, std::abs(v));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(errc::dimension_mismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            const double* ai = a.row(i);
            double* ci = c.row(i);
            for (int k = 0; k < a.cols_; ++k) {
                const double aik = ai[k];
                if (aik == 0.0) continue;
                const double* bk = b.row(k);
                for (int j = 0; j < b.cols_; ++j) ci[j] += aik * bk[j];
            }
        }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            fail(errc::dimension_mismatch, "matrix difference shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] -= b.d_[i];
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            fail(errc::dimension_mismatch, "matrix sum shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] += b.d_[i];
        return c;
    }

    std::vector<double> operator*(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            fail(errc::dimension_mismatch, "matrix-vector shape mismatch");
        std::vector<double> y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            const double* ri = row(i);
            double acc = 0.0;
            for (int j = 0; j < cols_; ++j) acc += ri[j] * x[j];
            y[i] = acc;
        }
        return y;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> d_;
};

/// Solves L x = b where L is unit lower triangular (diagonal entries are
/// assumed 1 and not read). O(n^2) with skips over structural zeros.
inline std::vector<double> solve_unit_lower(const Matrix& l, const std::vector<double>& b) {
    const int n = l.rows();
    if (l.cols() != n || static_cast<int>(b.size()) != n)
        fail(errc::dimension_mismatch, "triangular solve shape mismatch");
    std::vector<double> x(b);
    for (int i = 0; i < n; ++i) {
        const double* ri = l.row(i);
        double acc = x[i];
        for (int j = 0; j < i; ++j) {
            if (ri[j] != 0.0) acc -= ri[j] * x[j];
        }
        x[i] = acc;
    }
    return x;
}

/// Inverse of a unit lower triangular matrix, by columnwise forward substitution.
inline Matrix invert_unit_lower(const Matrix& l) {
    const int n = l.rows();
    Matrix inv(n, n);
    std::vector<double> col(n);
    for (int j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        for (int i = j + 1; i < n; ++i) {
            const double* ri = l.row(i);
            double acc = 0.0;
            for (int k = j; k < i; ++k) {
                if (ri[k] != 0.0) acc -= ri[k] * col[k];
            }
            col[i] = acc;
        }
        for (int i = j; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

inline double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace dagsp
