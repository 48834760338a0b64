#pragma once

#include "gengeo/scalar_expr.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace gengeo {

namespace field {
// The two coefficient fields used throughout: exact rationals and exact
// rational functions. These shims give DenseMatrix a single code path.
inline Rational zero(const Rational&) { return Rational(0); }
inline Rational one(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline ScalarExpr zero(const ScalarExpr& proto) { return ScalarExpr::zero(proto.chart()); }
inline ScalarExpr one(const ScalarExpr& proto) { return ScalarExpr::constant(proto.chart(), Rational(1)); }
inline bool is_zero(const ScalarExpr& x) { return x.is_zero(); }
} // namespace field

/// Dense matrix over an exact field (Rational or ScalarExpr).
///
/// Determinants use cofactor expansion with subset memoization for small
/// sizes and fraction-free Bareiss elimination beyond. For ScalarExpr
/// entries both det() and inverse() clear denominators and eliminate at
/// the polynomial level, so intermediate entries are minors rather than
/// towers of fractions.
template <class F>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols, const F& fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static DenseMatrix identity(int n, const F& proto) {
        DenseMatrix m(n, n, field::zero(proto));
        for (int i = 0; i < n; ++i) m.at(i, i) = field::one(proto);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const F& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    DenseMatrix operator+(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
        return r;
    }

    DenseMatrix operator-(const DenseMatrix& o) const {
        check_same_shape(o);
        DenseMatrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
        return r;
    }

    DenseMatrix operator-() const {
        DenseMatrix r = *this;
        for (auto& x : r.data_) x = field::zero(x) - x;
        return r;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        if (data_.empty() || o.data_.empty()) throw std::invalid_argument("empty matrix product");
        DenseMatrix r(rows_, o.cols_, field::zero(data_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& a = at(i, k);
                if (field::is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (field::is_zero(o.at(k, j))) continue;
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
                }
            }
        return r;
    }

    DenseMatrix scaled(const F& c) const {
        DenseMatrix r = *this;
        for (auto& x : r.data_) x = x * c;
        return r;
    }

    DenseMatrix transposed() const {
        DenseMatrix r(cols_, rows_, data_.empty() ? F() : field::zero(data_[0]));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!field::is_zero(x)) return false;
        return true;
    }

    bool equals(const DenseMatrix& o) const { return (*this - o).is_zero_matrix(); }

    bool is_symmetric() const { return equals(transposed()); }
    bool is_skew() const { return (*this + transposed()).is_zero_matrix(); }

    DenseMatrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
        DenseMatrix r(static_cast<int>(rs.size()), static_cast<int>(cs.size()),
                      field::zero(data_.at(0)));
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j)
                r.at(static_cast<int>(i), static_cast<int>(j)) = at(rs[i], cs[j]);
        return r;
    }

    /// Exact determinant; square matrices only.
    F det() const;

    bool invertible() const { return !field::is_zero(det()); }

    /// Exact inverse; throws std::domain_error when singular.
    DenseMatrix inverse() const;

private:
    void check_same_shape(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    // Laplace expansion along rows with memoization on column subsets:
    // O(2^n * n) field products, no divisions.
    F det_subset_dp() const {
        int n = rows_;
        const F zero = field::zero(data_[0]);
        std::vector<F> memo(static_cast<size_t>(1) << n, zero);
        std::vector<bool> seen(static_cast<size_t>(1) << n, false);
        std::function<F(unsigned)> rec = [&](unsigned colmask) -> F {
            int row = __builtin_popcount(colmask);
            if (colmask == (1u << n) - 1u) return field::one(data_[0]);
            if (seen[colmask]) return memo[colmask];
            F acc = zero;
            int sign = 1;
            for (int c = 0; c < n; ++c) {
                if (colmask & (1u << c)) continue;
                const F& a = at(row, c);
                if (!field::is_zero(a)) {
                    F term = a * rec(colmask | (1u << c));
                    if (sign > 0) acc = acc + term;
                    else acc = acc - term;
                }
                sign = -sign;
            }
            seen[colmask] = true;
            memo[colmask] = acc;
            return acc;
        };
        return rec(0);
    }

    // Fraction-free elimination; divisions are exact.
    F det_bareiss() const {
        int n = rows_;
        DenseMatrix a = *this;
        F prev = field::one(data_[0]);
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (field::is_zero(a.at(k, k))) {
                int pivot = -1;
                for (int r = k + 1; r < n; ++r)
                    if (!field::is_zero(a.at(r, k))) { pivot = r; break; }
                if (pivot < 0) return field::zero(data_[0]);
                for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            prev = a.at(k, k);
        }
        F d = a.at(n - 1, n - 1);
        if (sign > 0) return d;
        return field::zero(data_[0]) - d;
    }

    DenseMatrix gauss_jordan_inverse() const {
        int n = rows_;
        DenseMatrix a = *this;
        DenseMatrix inv = identity(n, data_[0]);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (!field::is_zero(a.at(r, col))) { pivot = r; break; }
            if (pivot < 0) throw std::domain_error("matrix is singular");
            if (pivot != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(a.at(pivot, j), a.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            F d = a.at(col, col);
            for (int j = 0; j < n; ++j) {
                a.at(col, j) = a.at(col, j) / d;
                inv.at(col, j) = inv.at(col, j) / d;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || field::is_zero(a.at(r, col))) continue;
                F f = a.at(r, col);
                for (int j = 0; j < n; ++j) {
                    a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                    inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    int rows_, cols_;
    std::vector<F> data_;
};

template <class F>
F DenseMatrix<F>::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) throw std::invalid_argument("determinant of empty matrix");
    if (rows_ == 1) return at(0, 0);
    if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (rows_ <= 7) return det_subset_dp();
    return det_bareiss();
}

template <class F>
DenseMatrix<F> DenseMatrix<F>::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    return gauss_jordan_inverse();
}

// ScalarExpr matrices eliminate at the polynomial level (see matrix.cpp).
template <>
ScalarExpr DenseMatrix<ScalarExpr>::det() const;
template <>
DenseMatrix<ScalarExpr> DenseMatrix<ScalarExpr>::inverse() const;

using RatMatrix = DenseMatrix<Rational>;
using ExprMatrix = DenseMatrix<ScalarExpr>;

inline ExprMatrix expr_zero_matrix(const ChartPtr& chart, int rows, int cols) {
    return ExprMatrix(rows, cols, ScalarExpr::zero(chart));
}

inline ExprMatrix expr_identity(const ChartPtr& chart, int n) {
    return ExprMatrix::identity(n, ScalarExpr::zero(chart));
}

inline ExprMatrix to_expr_matrix(const ChartPtr& chart, const RatMatrix& m) {
    ExprMatrix r = expr_zero_matrix(chart, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = ScalarExpr::constant(chart, m.at(i, j));
    return r;
}

/// Evaluate every entry at an exact point.
inline RatMatrix eval_matrix(const ExprMatrix& m, const std::vector<Rational>& point) {
    RatMatrix r(m.rows(), m.cols(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(point);
    return r;
}

} // namespace gengeo
