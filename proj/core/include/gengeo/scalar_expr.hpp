#pragma once

#include "gengeo/chart.hpp"
#include "gengeo/polynomial.hpp"

#include <iosfwd>
#include <optional>

namespace gengeo {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational function over a coordinate chart.
///
/// Canonical form: common monomial factors and the numeric content are
/// removed, the denominator is monic in grlex order, zero is 0/1, and a
/// numerator proportional to the denominator collapses to a constant.
/// No multivariate GCD is attempted; `equals` decides equality by
/// cross-multiplied expansion.
class ScalarExpr {
public:
    ScalarExpr() = default;
    ScalarExpr(ChartPtr chart, Poly num, Poly den);

    static ScalarExpr zero(const ChartPtr& chart);
    static ScalarExpr constant(const ChartPtr& chart, const Rational& c);
    static ScalarExpr coordinate(const ChartPtr& chart, int i);

    const ChartPtr& chart() const { return chart_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_.is_constant(); }

    ScalarExpr operator-() const;
    ScalarExpr operator+(const ScalarExpr& o) const;
    ScalarExpr operator-(const ScalarExpr& o) const;
    ScalarExpr operator*(const ScalarExpr& o) const;
    ScalarExpr operator/(const ScalarExpr& o) const;
    ScalarExpr operator*(const Rational& c) const;
    ScalarExpr pow(int k) const;

    ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
    ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }

    /// Partial derivative (quotient rule), canonicalized.
    ScalarExpr partial(int coord) const;

    /// Exact evaluation; throws EvalError at points of the singular locus.
    Rational eval(const std::vector<Rational>& point) const;
    /// Floating evaluation; throws EvalError when the denominator vanishes.
    double eval(const std::vector<double>& point) const;

    ScalarExpr substitute(int coord, const Rational& value) const;
    /// Same expression on a chart extended with extra trailing coordinates.
    ScalarExpr on_chart(const ChartPtr& bigger) const;

    /// True iff a - b is identically zero, by cross-multiplied expansion.
    bool equals(const ScalarExpr& o) const;

    /// Canonical printing; output reparses to the same value.
    std::string str() const;

private:
    void canonicalize();

    ChartPtr chart_;
    Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const ScalarExpr& e);

/// Parses the expression grammar: rationals, coordinate names, + - * /,
/// ^ with integer exponent, parentheses. Errors carry the input position.
ScalarExpr parse_expr(const std::string& text, const ChartPtr& chart);

} // namespace gengeo
