#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace isogsieve {

// All exact arithmetic in the library runs on these two types. cpp_int keeps
// the whole stack header-only; the magnitudes involved stay far below the
// sizes where a GMP backend would start to matter.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer pow_int(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline Integer abs_int(const Integer& n) {
    return boost::multiprecision::abs(n);
}

// multiplicity of the prime q in n; n must be nonzero
inline int valuation(Integer n, const Integer& q) {
    if (n == 0) throw std::invalid_argument("valuation: zero input");
    int v = 0;
    while (n % q == 0) {
        n /= q;
        ++v;
    }
    return v;
}

}  // namespace isogsieve
