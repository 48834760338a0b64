#include "gengeo/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gengeo {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Exponents(static_cast<size_t>(nvars), 0u), c);
}

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
    Poly p(nvars);
    Exponents e(static_cast<size_t>(nvars), 0u);
    e[static_cast<size_t>(i)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (unsigned x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

const Exponents& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    Exponents e(static_cast<size_t>(nvars_), 0u);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r(nvars_, Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

Poly Poly::partial(int i) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        unsigned k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<size_t>(i)] = k - 1;
        r.add_term(d, c * Rational(k));
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

double Poly::eval(const std::vector<double>& point) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = to_double(c);
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(int i, const Rational& value) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rational f = c;
        for (unsigned k = 0; k < e[static_cast<size_t>(i)]; ++k) f *= value;
        if (f == 0) continue;
        Exponents d = e;
        d[static_cast<size_t>(i)] = 0;
        r.add_term(d, f);
    }
    return r;
}

Poly Poly::substitute_affine(const std::vector<std::vector<Rational>>& A,
                             const std::vector<Rational>& b) const {
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        Poly img(nvars_, b[static_cast<size_t>(i)]);
        for (int j = 0; j < nvars_; ++j) {
            const Rational& a = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (a != 0) img = img + Poly::variable(nvars_, j) * a;
        }
        images.push_back(std::move(img));
    }
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Poly t(nvars_, c);
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * images[i];
        r = r + t;
    }
    return r;
}

Poly Poly::lift_to(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("lift_to cannot drop variables");
    Poly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d.resize(static_cast<size_t>(new_nvars), 0u);
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

Poly Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    Poly quot(nvars_);
    const Exponents& dlm = divisor.leading_monomial();
    const Rational& dlc = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const Exponents& rlm = rem.leading_monomial();
        Exponents q(static_cast<size_t>(nvars_), 0u);
        bool divisible = true;
        for (size_t i = 0; i < q.size(); ++i) {
            if (rlm[i] < dlm[i]) { divisible = false; break; }
            q[i] = rlm[i] - dlm[i];
        }
        if (!divisible) throw std::domain_error("polynomial division is not exact");
        Rational c = rem.leading_coefficient() / dlc;
        Poly mono(nvars_);
        mono.terms_.emplace(q, c);
        quot = quot + mono;
        rem = rem - mono * divisor;
    }
    return quot;
}

Exponents Poly::monomial_gcd() const {
    if (terms_.empty()) return Exponents(static_cast<size_t>(nvars_), 0u);
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Poly Poly::divide_monomial(const Exponents& m) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        for (size_t i = 0; i < d.size(); ++i) {
            if (d[i] < m[i]) throw std::domain_error("monomial does not divide all terms");
            d[i] -= m[i];
        }
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // grlex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        bool coeff_printed = false;
        if (!has_vars || a != 1) {
            out << to_string(a);
            coeff_printed = true;
        }
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (coeff_printed || !first_var) out << "*";
            out << names[i];
            if (e[i] > 1) out << "^" << e[i];
            first_var = false;
            coeff_printed = true;
        }
    }
    return out.str();
}

} // namespace gengeo
