#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace braidlat {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps denominator > 0 and gcd-reduced.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace braidlat
