#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace twistcover {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "a/b" with positive denominator; plain "a" when the denominator is 1.
inline std::string rat_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

}  // namespace twistcover
