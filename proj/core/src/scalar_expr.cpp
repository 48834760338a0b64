#include "gengeo/scalar_expr.hpp"

#include <ostream>
#include <sstream>

namespace gengeo {

ScalarExpr::ScalarExpr(ChartPtr chart, Poly num, Poly den)
    : chart_(std::move(chart)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by the zero polynomial");
    canonicalize();
}

ScalarExpr ScalarExpr::zero(const ChartPtr& chart) {
    return constant(chart, Rational(0));
}

ScalarExpr ScalarExpr::constant(const ChartPtr& chart, const Rational& c) {
    return ScalarExpr(chart, Poly(chart->dim(), c), Poly(chart->dim(), Rational(1)));
}

ScalarExpr ScalarExpr::coordinate(const ChartPtr& chart, int i) {
    return ScalarExpr(chart, Poly::variable(chart->dim(), i), Poly(chart->dim(), Rational(1)));
}

void ScalarExpr::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(num_.nvars(), Rational(1));
        return;
    }
    // common monomial factor
    Exponents gn = num_.monomial_gcd();
    Exponents gd = den_.monomial_gcd();
    Exponents g(gn.size());
    bool nontrivial = false;
    for (size_t i = 0; i < g.size(); ++i) {
        g[i] = std::min(gn[i], gd[i]);
        nontrivial = nontrivial || g[i] > 0;
    }
    if (nontrivial) {
        num_ = num_.divide_monomial(g);
        den_ = den_.divide_monomial(g);
    }
    // numerator proportional to denominator -> constant
    if (num_.term_count() == den_.term_count()) {
        Rational ratio = 0;
        bool proportional = true;
        auto itn = num_.terms().begin();
        auto itd = den_.terms().begin();
        for (; itn != num_.terms().end(); ++itn, ++itd) {
            if (itn->first != itd->first) { proportional = false; break; }
            Rational r = itn->second / itd->second;
            if (ratio == 0) ratio = r;
            else if (r != ratio) { proportional = false; break; }
        }
        if (proportional) {
            num_ = Poly(num_.nvars(), ratio);
            den_ = Poly(num_.nvars(), Rational(1));
            return;
        }
    }
    // monic denominator
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

ScalarExpr ScalarExpr::operator-() const {
    return ScalarExpr(chart_, -num_, den_);
}

ScalarExpr ScalarExpr::operator+(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return ScalarExpr(chart_, num_ + o.num_, den_);
    return ScalarExpr(chart_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarExpr ScalarExpr::operator-(const ScalarExpr& o) const {
    return *this + (-o);
}

ScalarExpr ScalarExpr::operator*(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_);
    if (is_zero() || o.is_zero()) return zero(chart_);
    return ScalarExpr(chart_, num_ * o.num_, den_ * o.den_);
}

ScalarExpr ScalarExpr::operator/(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_);
    if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
    return ScalarExpr(chart_, num_ * o.den_, den_ * o.num_);
}

ScalarExpr ScalarExpr::operator*(const Rational& c) const {
    return ScalarExpr(chart_, num_ * c, den_);
}

ScalarExpr ScalarExpr::pow(int k) const {
    if (k >= 0) {
        return ScalarExpr(chart_, num_.pow(static_cast<unsigned>(k)),
                          den_.pow(static_cast<unsigned>(k)));
    }
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return ScalarExpr(chart_, den_.pow(static_cast<unsigned>(-k)),
                      num_.pow(static_cast<unsigned>(-k)));
}

ScalarExpr ScalarExpr::partial(int coord) const {
    Poly dn = num_.partial(coord);
    if (den_.is_constant())
        return ScalarExpr(chart_, std::move(dn), den_);
    Poly dd = den_.partial(coord);
    return ScalarExpr(chart_, dn * den_ - num_ * dd, den_ * den_);
}

Rational ScalarExpr::eval(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<size_t>(chart_->dim()))
        throw EvalError("point dimension does not match chart");
    Rational d = den_.eval(point);
    if (d == 0) {
        std::ostringstream msg;
        msg << "singular point (";
        for (size_t i = 0; i < point.size(); ++i)
            msg << (i ? "," : "") << to_string(point[i]);
        msg << ")";
        throw EvalError(msg.str());
    }
    return num_.eval(point) / d;
}

double ScalarExpr::eval(const std::vector<double>& point) const {
    if (point.size() != static_cast<size_t>(chart_->dim()))
        throw EvalError("point dimension does not match chart");
    double d = den_.eval(point);
    if (d == 0.0) throw EvalError("singular point");
    return num_.eval(point) / d;
}

ScalarExpr ScalarExpr::substitute(int coord, const Rational& value) const {
    Poly d = den_.substitute(coord, value);
    if (d.is_zero()) throw EvalError("substitution hits the singular locus");
    return ScalarExpr(chart_, num_.substitute(coord, value), std::move(d));
}

ScalarExpr ScalarExpr::on_chart(const ChartPtr& bigger) const {
    int m = bigger->dim();
    for (int i = 0; i < chart_->dim(); ++i)
        if (bigger->name(i) != chart_->name(i))
            throw ChartMismatch("chart extension must keep existing coordinates in place");
    return ScalarExpr(bigger, num_.lift_to(m), den_.lift_to(m));
}

bool ScalarExpr::equals(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_);
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string ScalarExpr::str() const {
    const auto& names = chart_->names();
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

std::ostream& operator<<(std::ostream& os, const ScalarExpr& e) {
    return os << e.str();
}

} // namespace gengeo
