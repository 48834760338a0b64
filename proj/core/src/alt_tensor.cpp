#include "gengeo/alt_tensor.hpp"

#include <sstream>

namespace gengeo {

AltTensor::AltTensor(ChartPtr chart, int degree, Variance variance)
    : chart_(std::move(chart)), degree_(degree), variance_(variance) {
    if (degree < 0) throw std::invalid_argument("negative tensor degree");
}

AltTensor AltTensor::basis(const ChartPtr& chart, const MultiIndex& I, Variance v) {
    AltTensor t(chart, I.degree(), v);
    t.set_coeff(I, ScalarExpr::constant(chart, Rational(1)));
    return t;
}

AltTensor AltTensor::from_function(const ChartPtr& chart, const ScalarExpr& f, Variance v) {
    AltTensor t(chart, 0, v);
    t.set_coeff(MultiIndex(std::vector<int>{}), f);
    return t;
}

bool AltTensor::is_zero() const {
    for (const auto& [I, c] : comp_)
        if (!c.is_zero()) return false;
    return true;
}

ScalarExpr AltTensor::coeff(const MultiIndex& I) const {
    auto it = comp_.find(I);
    if (it == comp_.end()) return ScalarExpr::zero(chart_);
    return it->second;
}

ScalarExpr AltTensor::coeff_signed(const std::vector<int>& raw) const {
    auto s = sort_sign(raw);
    if (!s) return ScalarExpr::zero(chart_);
    ScalarExpr c = coeff(s->second);
    return s->first > 0 ? c : -c;
}

void AltTensor::set_coeff(const MultiIndex& I, const ScalarExpr& v) {
    if (I.degree() != degree_) throw std::invalid_argument("multi-index degree mismatch");
    if (v.is_zero()) comp_.erase(I);
    else comp_[I] = v;
}

void AltTensor::add_coeff(const MultiIndex& I, const ScalarExpr& v) {
    if (I.degree() != degree_) throw std::invalid_argument("multi-index degree mismatch");
    if (v.is_zero()) return;
    auto it = comp_.find(I);
    if (it == comp_.end()) comp_.emplace(I, v);
    else {
        it->second += v;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

void AltTensor::add_signed(const std::vector<int>& raw, const ScalarExpr& v) {
    auto s = sort_sign(raw);
    if (!s) return;
    add_coeff(s->second, s->first > 0 ? v : -v);
}

AltTensor AltTensor::operator+(const AltTensor& o) const {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_ || variance_ != o.variance_)
        throw std::invalid_argument("tensor degree/variance mismatch in sum");
    AltTensor r = *this;
    for (const auto& [I, c] : o.comp_) r.add_coeff(I, c);
    return r;
}

AltTensor AltTensor::operator-(const AltTensor& o) const { return *this + (-o); }

AltTensor AltTensor::operator-() const {
    AltTensor r(chart_, degree_, variance_);
    for (const auto& [I, c] : comp_) r.comp_.emplace(I, -c);
    return r;
}

AltTensor AltTensor::operator*(const ScalarExpr& f) const {
    AltTensor r(chart_, degree_, variance_);
    if (f.is_zero()) return r;
    for (const auto& [I, c] : comp_) {
        ScalarExpr v = c * f;
        if (!v.is_zero()) r.comp_.emplace(I, std::move(v));
    }
    return r;
}

AltTensor AltTensor::operator*(const Rational& c) const {
    return *this * ScalarExpr::constant(chart_, c);
}

ExprMatrix AltTensor::to_column() const {
    int n = chart_->dim();
    int rows = static_cast<int>(binomial(n, degree_));
    ExprMatrix col = expr_zero_matrix(chart_, rows, 1);
    for (const auto& [I, c] : comp_) col.at(rank_of(I, n), 0) = c;
    return col;
}

AltTensor AltTensor::from_column(const ChartPtr& chart, int degree, Variance v,
                                 const ExprMatrix& col) {
    AltTensor t(chart, degree, v);
    int n = chart->dim();
    for (int r = 0; r < col.rows(); ++r)
        if (!col.at(r, 0).is_zero()) t.set_coeff(unrank(n, degree, r), col.at(r, 0));
    return t;
}

std::string AltTensor::str() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, c] : comp_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (I.degree() > 0) {
            os << (variance_ == Variance::Form ? "*dy" : "*d/dy") << I.str();
        }
    }
    return os.str();
}

AltTensor wedge(const AltTensor& a, const AltTensor& b) {
    require_same_chart(a.chart(), b.chart());
    if (a.variance() != b.variance())
        throw std::invalid_argument("wedge needs a common variance family");
    int deg = a.degree() + b.degree();
    // degree overflow past the chart dimension yields the zero tensor:
    // every concatenated index tuple then has a repeat and add_signed skips it
    AltTensor r(a.chart(), deg, a.variance());
    std::vector<int> raw;
    for (const auto& [I, ca] : a.components())
        for (const auto& [J, cb] : b.components()) {
            raw = I.indices();
            raw.insert(raw.end(), J.indices().begin(), J.indices().end());
            r.add_signed(raw, ca * cb);
        }
    return r;
}

AltTensor insert(const AltTensor& x, const AltTensor& t) {
    require_same_chart(x.chart(), t.chart());
    if (x.degree() != 1) throw std::invalid_argument("insertion slot must have degree 1");
    if (x.variance() == t.variance())
        throw std::invalid_argument("insertion pairs a vector with a form");
    if (t.degree() == 0) return AltTensor(t.chart(), 0, t.variance());
    AltTensor r(t.chart(), t.degree() - 1, t.variance());
    for (const auto& [I, c] : t.components()) {
        for (int k = 0; k < I.degree(); ++k) {
            ScalarExpr xi = x.coeff(MultiIndex({I[k]}));
            if (xi.is_zero()) continue;
            ScalarExpr v = xi * c;
            if (k % 2 != 0) v = -v;
            r.add_coeff(I.without(k), v);
        }
    }
    return r;
}

ScalarExpr full_contract(const AltTensor& multivector, const AltTensor& form) {
    require_same_chart(multivector.chart(), form.chart());
    if (multivector.degree() != form.degree())
        throw std::invalid_argument("full contraction needs equal degrees");
    if (multivector.variance() != Variance::Vector || form.variance() != Variance::Form)
        throw std::invalid_argument("full contraction pairs a multivector with a form");
    ScalarExpr acc = ScalarExpr::zero(form.chart());
    for (const auto& [I, c] : multivector.components()) {
        ScalarExpr f = form.coeff(I);
        if (!f.is_zero()) acc += c * f;
    }
    return acc;
}

HomBlock hom_from_form(const AltTensor& c) {
    if (c.variance() != Variance::Form || c.degree() < 1)
        throw std::invalid_argument("hom_from_form needs a form of degree >= 1");
    const ChartPtr& chart = c.chart();
    int n = chart->dim();
    int p = c.degree() - 1;
    HomBlock h{chart, p, expr_zero_matrix(chart, n, static_cast<int>(binomial(n, p)))};
    for (const auto& J : all_multi_indices(n, p)) {
        int col = rank_of(J, n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> raw{i};
            raw.insert(raw.end(), J.indices().begin(), J.indices().end());
            ScalarExpr v = c.coeff_signed(raw);
            if (!v.is_zero()) h.m.at(i, col) = v;
        }
    }
    return h;
}

HomBlock hom_from_multivector(const AltTensor& pi) {
    if (pi.variance() != Variance::Vector || pi.degree() < 1)
        throw std::invalid_argument("hom_from_multivector needs a multivector of degree >= 1");
    AltTensor as_form(pi.chart(), pi.degree(), Variance::Form);
    for (const auto& [I, c] : pi.components()) as_form.set_coeff(I, c);
    HomBlock h = hom_from_form(as_form);
    return h;
}

namespace {

std::optional<AltTensor> inducing_tensor(const HomBlock& b, Variance v) {
    const ChartPtr& chart = b.chart;
    int n = chart->dim();
    AltTensor cand(chart, b.p + 1, v);
    // candidate from components with i < min(J)
    for (const auto& K : all_multi_indices(n, b.p + 1)) {
        MultiIndex J = K.without(0);
        cand.set_coeff(K, b.m.at(K[0], rank_of(J, n)));
    }
    // consistency: every (i, J) entry must match the candidate with sign
    for (const auto& J : all_multi_indices(n, b.p)) {
        int col = rank_of(J, n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> raw{i};
            raw.insert(raw.end(), J.indices().begin(), J.indices().end());
            if (!cand.coeff_signed(raw).equals(b.m.at(i, col))) return std::nullopt;
        }
    }
    return cand;
}

} // namespace

std::optional<AltTensor> form_inducing(const HomBlock& c) {
    return inducing_tensor(c, Variance::Form);
}

std::optional<AltTensor> multivector_inducing(const HomBlock& pi) {
    return inducing_tensor(pi, Variance::Vector);
}

AltTensor flat_map(const AltTensor& c, const AltTensor& q) {
    return flat_map(hom_from_form(c), q);
}

AltTensor flat_map(const HomBlock& c, const AltTensor& q) {
    require_same_chart(c.chart, q.chart());
    if (q.variance() != Variance::Vector || q.degree() != c.p)
        throw std::invalid_argument("flat map expects a p-vector");
    const ChartPtr& chart = c.chart;
    int n = chart->dim();
    AltTensor r(chart, 1, Variance::Form);
    for (int i = 0; i < n; ++i) {
        ScalarExpr acc = ScalarExpr::zero(chart);
        for (const auto& [J, qc] : q.components()) acc += qc * c.m.at(i, rank_of(J, n));
        if (!acc.is_zero()) r.set_coeff(MultiIndex({i}), acc);
    }
    return r;
}

AltTensor sharp_map(const AltTensor& pi, const AltTensor& xi) {
    return sharp_map(hom_from_multivector(pi), xi);
}

AltTensor sharp_map(const HomBlock& pi, const AltTensor& xi) {
    require_same_chart(pi.chart, xi.chart());
    if (xi.variance() != Variance::Form || xi.degree() != pi.p)
        throw std::invalid_argument("sharp map expects a p-form");
    const ChartPtr& chart = pi.chart;
    int n = chart->dim();
    AltTensor r(chart, 1, Variance::Vector);
    for (int i = 0; i < n; ++i) {
        ScalarExpr acc = ScalarExpr::zero(chart);
        for (const auto& [J, xc] : xi.components()) acc += xc * pi.m.at(i, rank_of(J, n));
        if (!acc.is_zero()) r.set_coeff(MultiIndex({i}), acc);
    }
    return r;
}

AltTensor transpose_map(const AltTensor& c, const AltTensor& x) {
    return insert(x, c);
}

AltTensor hom_transpose_apply(const HomBlock& block, const AltTensor& single, Variance out) {
    require_same_chart(block.chart, single.chart());
    if (single.degree() != 1)
        throw std::invalid_argument("hom transpose acts on a degree-1 argument");
    const ChartPtr& chart = block.chart;
    int n = chart->dim();
    AltTensor r(chart, block.p, out);
    for (const auto& J : all_multi_indices(n, block.p)) {
        ScalarExpr acc = ScalarExpr::zero(chart);
        int col = rank_of(J, n);
        for (const auto& [I, xc] : single.components())
            acc += xc * block.m.at(I[0], col);
        if (!acc.is_zero()) r.set_coeff(J, acc);
    }
    return r;
}

AltTensor apply_matrix(const ExprMatrix& a, const AltTensor& v, Variance out) {
    if (v.degree() != 1) throw std::invalid_argument("apply_matrix acts on degree-1 tensors");
    const ChartPtr& chart = v.chart();
    int n = chart->dim();
    AltTensor r(chart, 1, out);
    for (int i = 0; i < n; ++i) {
        ScalarExpr acc = ScalarExpr::zero(chart);
        for (const auto& [J, c] : v.components()) acc += a.at(i, J[0]) * c;
        if (!acc.is_zero()) r.set_coeff(MultiIndex({i}), acc);
    }
    return r;
}

} // namespace gengeo
