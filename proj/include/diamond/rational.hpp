#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace diamond {

/// Arbitrary-precision rational scalar for exact LP pivoting. Doubles are
/// dyadic rationals, so conversion from the stored link strengths is exact.
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_rational(double x) { return Rational(x); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string rational_string(const Rational& q) { return q.str(); }

}  // namespace diamond
