#ifndef SPECCOL_MATRIX_HPP
#define SPECCOL_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace speccol {

// Dense row-major matrix. Deliberately unclever: everything in this library
// runs at desk scale (a few hundred rows at most).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    // Largest absolute entry. All residual thresholds in this library are
    // entrywise-max norms.
    double max_abs() const {
        double m = 0.0;
        for (double x : data_) m = std::max(m, std::abs(x));
        return m;
    }

    double trace() const {
        double t = 0.0;
        const int d = std::min(rows_, cols_);
        for (int i = 0; i < d; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) c(i, j) = a(i, j) - b(i, j);
        return c;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

} // namespace speccol

#endif // SPECCOL_MATRIX_HPP
