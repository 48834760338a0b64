#pragma once

#include "gengeo/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gengeo {

/// Exponent vector of a monomial; length equals the chart dimension.
using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic
/// by coordinate index. Deterministic printing and hashing rely on it.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted in grlex order; zero coefficients are never stored.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, const Rational& c);

    static Poly variable(int nvars, int i);
    static Poly constant(int nvars, const Rational& c) { return Poly(nvars, c); }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the whole value when is_constant()).
    Rational constant_value() const;

    int total_degree() const;
    size_t term_count() const { return terms_.size(); }

    const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }

    /// Leading monomial/coefficient in grlex order. Polynomial must be nonzero.
    const Exponents& leading_monomial() const;
    const Rational& leading_coefficient() const;

    void add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(unsigned k) const;

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Partial derivative with respect to coordinate i.
    Poly partial(int i) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;

    /// Substitute coordinate i by an exact rational constant (drops no variables).
    Poly substitute(int i, const Rational& value) const;

    /// Substitute x_i -> sum_j A[i][j] x_j + b[i] (affine change of arguments).
    Poly substitute_affine(const std::vector<std::vector<Rational>>& A,
                           const std::vector<Rational>& b) const;

    /// Polynomial with nvars+1 variables, same terms (new variable unused).
    Poly lift_to(int new_nvars) const;

    /// Exact division: *this = q * divisor with zero remainder.
    /// Throws std::domain_error when the division is not exact.
    Poly divide_exact(const Poly& divisor) const;

    /// Componentwise min of exponent vectors over all terms (monomial content).
    Exponents monomial_gcd() const;
    /// Divide all terms by a monomial that divides every term.
    Poly divide_monomial(const Exponents& m) const;

    /// Printed in grlex-descending order; output reparses to the same value.
    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Exponents, Rational, GrlexLess> terms_;
};

} // namespace gengeo
