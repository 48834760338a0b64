#include "gengeo/matrix.hpp"

namespace gengeo {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Row-wise denominator clearing: returns B = diag(d_0..d_{n-1}) * A with
// polynomial entries, together with the row factors d_i.
void clear_denominators(const ExprMatrix& a, PolyMatrix& b, std::vector<Poly>& row_factor) {
    int rows = a.rows(), cols = a.cols();
    int nv = a.at(0, 0).chart()->dim();
    b.assign(static_cast<size_t>(rows), std::vector<Poly>(static_cast<size_t>(cols), Poly(nv)));
    row_factor.assign(static_cast<size_t>(rows), Poly(nv, Rational(1)));
    for (int i = 0; i < rows; ++i) {
        // product of distinct denominators; repeated dens (e.g. a shared
        // adjugate determinant) must not inflate the degree
        std::vector<const Poly*> unique_dens;
        for (int j = 0; j < cols; ++j) {
            const Poly& den = a.at(i, j).den();
            if (den.is_constant() && den.constant_value() == 1) continue;
            bool seen = false;
            for (const Poly* u : unique_dens)
                if (*u == den) { seen = true; break; }
            if (!seen) unique_dens.push_back(&den);
        }
        Poly d(nv, Rational(1));
        for (const Poly* u : unique_dens) d = d * *u;
        row_factor[static_cast<size_t>(i)] = d;
        for (int j = 0; j < cols; ++j) {
            const ScalarExpr& e = a.at(i, j);
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                e.num() * d.divide_exact(e.den());
        }
    }
}

// Fraction-free Bareiss determinant of a polynomial matrix.
Poly bareiss_det(PolyMatrix a, int nv) {
    int n = static_cast<int>(a.size());
    Poly prev(nv, Rational(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) { pivot = r; break; }
            if (pivot < 0) return Poly(nv);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
        prev = a[k][k];
    }
    Poly d = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign > 0 ? d : -d;
}

// Montante (Bareiss-Jordan) elimination on [A | I]: fraction-free full
// pivoting pass that ends with det(A) on the whole diagonal of the left
// half and adj(A) in the right half.
bool montante_adjugate(PolyMatrix a, int nv, PolyMatrix& adj, Poly& det) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        a[static_cast<size_t>(i)].resize(static_cast<size_t>(2 * n), Poly(nv));
        a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = Poly(nv, Rational(1));
    }
    Poly prev(nv, Rational(1));
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) { pivot = r; break; }
            if (pivot < 0) return false;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
            }
            a[i][k] = Poly(nv);
        }
        prev = a[k][k];
    }
    det = sign > 0 ? a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)]
                   : -a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    adj.assign(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n), Poly(nv)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            adj[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                sign > 0 ? a[static_cast<size_t>(i)][static_cast<size_t>(n + j)]
                         : -a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
    return true;
}

bool all_polynomial(const ExprMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_polynomial()) return false;
    return true;
}

} // namespace

template <>
ScalarExpr DenseMatrix<ScalarExpr>::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) throw std::invalid_argument("determinant of empty matrix");
    const ChartPtr& chart = data_[0].chart();
    int nv = chart->dim();
    if (rows_ == 1) return at(0, 0);
    if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (rows_ <= 7 && all_polynomial(*this)) return det_subset_dp();
    PolyMatrix b;
    std::vector<Poly> row_factor;
    clear_denominators(*this, b, row_factor);
    Poly d = bareiss_det(std::move(b), nv);
    ScalarExpr result(chart, std::move(d), Poly(nv, Rational(1)));
    for (const auto& f : row_factor)
        if (!(f.is_constant() && f.constant_value() == 1))
            result = result / ScalarExpr(chart, f, Poly(nv, Rational(1)));
    return result;
}

template <>
DenseMatrix<ScalarExpr> DenseMatrix<ScalarExpr>::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    if (rows_ == 0) throw std::invalid_argument("inverse of empty matrix");
    const ChartPtr& chart = data_[0].chart();
    int nv = chart->dim();
    PolyMatrix b;
    std::vector<Poly> row_factor;
    clear_denominators(*this, b, row_factor);
    PolyMatrix adj;
    Poly det(nv);
    if (!montante_adjugate(std::move(b), nv, adj, det) || det.is_zero())
        throw std::domain_error("matrix is singular");
    // A = D^{-1} B  =>  A^{-1} = B^{-1} D = (adj(B)/det(B)) D.
    DenseMatrix<ScalarExpr> result(rows_, cols_, ScalarExpr::zero(chart));
    ScalarExpr det_e(chart, det, Poly(nv, Rational(1)));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            ScalarExpr entry(chart, adj[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                        row_factor[static_cast<size_t>(j)],
                             Poly(nv, Rational(1)));
            result.at(i, j) = entry / det_e;
        }
    return result;
}

} // namespace gengeo
