#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace uncrossed {

using Rational = boost::rational<std::int64_t>;

// Accepts "P/Q", an integer, or a plain decimal such as "0.15"; decimals are
// converted exactly (0.15 -> 3/20).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// ceil(v), except that a value within 1e-9 of an integer is snapped to that
// integer first. Exact-integer cases such as 48.0 computed through sqrt
// otherwise risk an off-by-one from rounding noise.
std::int64_t guarded_ceil(double v);

inline constexpr double kIntegerGuard = 1e-9;

}  // namespace uncrossed
