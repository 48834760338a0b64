#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gengeo {

/// Exact rational number with arbitrary precision.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline int sign_of(const Rational& r) {
    return r.sign();
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

} // namespace gengeo
