#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "rescurv/errors.hpp"
#include "rescurv/rational.hpp"

namespace rescurv {

/// Dense row-major matrix. Sized for desk-scale graphs (n <= ~20); all
/// elimination routines work for exact rationals and for doubles.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw ParameterError("matrix product dimension mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (ScalarTraits<T>::is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ParameterError("matrix sum dimension mismatch");
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ParameterError("matrix difference dimension mismatch");
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r = *this;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    std::vector<T> mul(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw ParameterError("matrix-vector dimension mismatch");
        std::vector<T> r(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_symmetric(double tol = 0.0) const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!ScalarTraits<T>::close((*this)(i, j), (*this)(j, i), tol)) return false;
        return true;
    }

    T sum() const {
        T s(0);
        for (const auto& v : a_) s += v;
        return s;
    }

    std::vector<T> row_sums() const {
        std::vector<T> r(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j);
        return r;
    }

    Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Mat r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

namespace detail {
// Pivot choice: exact scalars take the first nonzero (any nonzero pivot is
// as good as another); doubles take the largest magnitude for stability.
template <class T>
int pick_pivot(const Mat<T>& m, int col, int from_row) {
    if constexpr (ScalarTraits<T>::exact) {
        for (int i = from_row; i < m.rows(); ++i)
            if (m(i, col) != T(0)) return i;
        return -1;
    } else {
        int best = -1;
        double best_abs = 0.0;
        for (int i = from_row; i < m.rows(); ++i) {
            double a = std::fabs(ScalarTraits<T>::to_double(m(i, col)));
            if (a > best_abs) {
                best_abs = a;
                best = i;
            }
        }
        return best;
    }
}
} // namespace detail

/// Gauss-Jordan inverse. Empty optional when singular (exact mode) or when a
/// pivot vanishes (numeric mode).
template <class T>
std::optional<Mat<T>> inverse(Mat<T> m) {
    if (m.rows() != m.cols()) throw ParameterError("inverse of non-square matrix");
    const int n = m.rows();
    Mat<T> inv = Mat<T>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = detail::pick_pivot(m, col, col);
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        T d = m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            T f = m(i, col);
            if (ScalarTraits<T>::is_zero(f)) continue;
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class T>
T determinant(Mat<T> m) {
    if (m.rows() != m.cols()) throw ParameterError("determinant of non-square matrix");
    const int n = m.rows();
    T det(1);
    for (int col = 0; col < n; ++col) {
        int piv = detail::pick_pivot(m, col, col);
        if (piv < 0) return T(0);
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (ScalarTraits<T>::is_zero(m(i, col))) continue;
            T f = m(i, col) / m(col, col);
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// Exact rank over the rationals.
inline int rank(Mat<Rat> m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(r, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace rescurv
