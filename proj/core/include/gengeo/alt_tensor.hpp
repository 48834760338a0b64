#pragma once

#include "gengeo/matrix.hpp"
#include "gengeo/multi_index.hpp"

#include <map>

namespace gengeo {

enum class Variance { Form, Vector };

/// A p-form or p-vector: sparse map from strictly ordered multi-indices to
/// exact coefficients. The stored representation already encodes the full
/// antisymmetry; absent keys are zero.
class AltTensor {
public:
    AltTensor() = default;
    AltTensor(ChartPtr chart, int degree, Variance variance);

    static AltTensor zero(const ChartPtr& chart, int degree, Variance v) {
        return AltTensor(chart, degree, v);
    }
    /// Coordinate basis form dy^I or basis multivector (d/dy)_I.
    static AltTensor basis(const ChartPtr& chart, const MultiIndex& I, Variance v);
    static AltTensor from_function(const ChartPtr& chart, const ScalarExpr& f, Variance v);

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    Variance variance() const { return variance_; }
    bool is_form() const { return variance_ == Variance::Form; }
    bool is_zero() const;

    const std::map<MultiIndex, ScalarExpr>& components() const { return comp_; }

    /// Coefficient at a strictly ordered multi-index (zero when absent).
    ScalarExpr coeff(const MultiIndex& I) const;
    /// Coefficient at an arbitrary index tuple, resolved by antisymmetry.
    ScalarExpr coeff_signed(const std::vector<int>& raw) const;
    void set_coeff(const MultiIndex& I, const ScalarExpr& v);
    void add_coeff(const MultiIndex& I, const ScalarExpr& v);
    /// Adds sign(sort) * v at sort(raw); no-op if raw has repeats.
    void add_signed(const std::vector<int>& raw, const ScalarExpr& v);

    AltTensor operator+(const AltTensor& o) const;
    AltTensor operator-(const AltTensor& o) const;
    AltTensor operator-() const;
    AltTensor operator*(const ScalarExpr& f) const;
    AltTensor operator*(const Rational& c) const;

    bool equals(const AltTensor& o) const { return (*this - o).is_zero(); }

    /// Components as a C(n,p) column in multi-index rank order.
    ExprMatrix to_column() const;
    static AltTensor from_column(const ChartPtr& chart, int degree, Variance v,
                                 const ExprMatrix& col);

    std::string str() const;

private:
    ChartPtr chart_;
    int degree_ = 0;
    Variance variance_ = Variance::Form;
    std::map<MultiIndex, ScalarExpr> comp_;
};

/// Exterior product; same variance family required. Degrees above the chart
/// dimension give the zero tensor.
AltTensor wedge(const AltTensor& a, const AltTensor& b);

/// Interior product of a vector into a form, or of a covector (degree-1
/// form) into a multivector: insertion in the first slot.
AltTensor insert(const AltTensor& x, const AltTensor& t);

/// Full contraction of a p-vector with a p-form: sum over strictly ordered
/// multi-indices of products of components.
ScalarExpr full_contract(const AltTensor& multivector, const AltTensor& form);

/// Hom blocks: C in Hom(Lambda^p TM, T*M) stored as an n x C(n,p) matrix of
/// components C_{iJ}, and Pi in Hom(Lambda^p T*M, TM) stored likewise as
/// Pi^{iJ}. These are not forced to come from forms or multivectors.
struct HomBlock {
    ChartPtr chart;
    int p = 1;          // degree of the multi-index slot
    ExprMatrix m;       // n rows, C(n,p) columns

    bool is_zero() const { return m.is_zero_matrix(); }
    bool equals(const HomBlock& o) const { return p == o.p && m.equals(o.m); }
};

/// Component block of a (p+1)-form: (i, J) -> C_{iJ}.
HomBlock hom_from_form(const AltTensor& c);
/// Component block of a (p+1)-vector: (i, J) -> Pi^{iJ}.
HomBlock hom_from_multivector(const AltTensor& pi);

/// True when the block satisfies i_X block(Y) + i_Y block(X) = 0, i.e. it is
/// induced by a (p+1)-form (resp. (p+1)-vector); returns the inducing tensor.
std::optional<AltTensor> form_inducing(const HomBlock& c);
std::optional<AltTensor> multivector_inducing(const HomBlock& pi);

/// flat map: Q -> Q^J C_{iJ} dy^i for a (p+1)-form C and p-vector Q.
AltTensor flat_map(const AltTensor& c, const AltTensor& q);
AltTensor flat_map(const HomBlock& c, const AltTensor& q);

/// sharp map: xi -> xi_J Pi^{iJ} d_i for a (p+1)-vector Pi and p-form xi.
AltTensor sharp_map(const AltTensor& pi, const AltTensor& xi);
AltTensor sharp_map(const HomBlock& pi, const AltTensor& xi);

/// transpose map: C^T(X) = i_X C.
AltTensor transpose_map(const AltTensor& c, const AltTensor& x);

/// Transpose action of a hom block: X -> X^i C_{iJ} dy^J (a p-form), and
/// alpha -> alpha_i Pi^{iJ} d_J (a p-vector).
AltTensor hom_transpose_apply(const HomBlock& block, const AltTensor& single, Variance out);

/// Apply an n x n matrix to a degree-1 tensor: out[i] = sum_j a(i,j) v[j],
/// with the stated output variance (e.g. a metric sends vectors to forms).
AltTensor apply_matrix(const ExprMatrix& a, const AltTensor& v, Variance out);

} // namespace gengeo
