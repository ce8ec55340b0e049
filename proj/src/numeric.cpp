#include "uncrossed/numeric.hpp"

#include <charconv>
#include <cmath>

#include "uncrossed/error.hpp"

namespace uncrossed {
namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidParameter("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), text), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw InvalidParameter("too many decimals in '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t int_part = (whole.empty() || whole == "-") ? 0 : parse_int(whole, text);
    std::int64_t frac_part = frac.empty() ? 0 : parse_int(frac, text);
    if (frac_part < 0) throw InvalidParameter("not a rational number: '" + std::string(text) + "'");
    std::int64_t num = std::abs(int_part) * scale + frac_part;
    return Rational(negative ? -num : num, scale);
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::int64_t guarded_ceil(double v) {
  const double nearest = std::round(v);
  if (std::abs(v - nearest) <= kIntegerGuard) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::ceil(v));
}

}  // namespace uncrossed
