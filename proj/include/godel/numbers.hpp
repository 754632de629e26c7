#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace godel {

// Counts can exceed 64-bit range well before the underlying enumerations
// become infeasible, so all counting results are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// "p" for integers, "p/q" otherwise; q always positive.
inline std::string to_ratio(const Rational& v) { return v.str(); }

}  // namespace godel
