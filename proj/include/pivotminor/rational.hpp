#pragma once

// Exact rational arithmetic over 64-bit integers.

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "pivotminor/error.hpp"

namespace pivotminor {

// Compare only Rational against Rational. Boost 1.74's mixed
// rational/integer comparison operators recurse forever under C++20's
// rewritten-operator rules.
using Rational = boost::rational<std::int64_t>;

/// Accepts "p/q", "p" and finite decimals such as "0.7".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::MalformedInput, "not a rational: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> std::int64_t {
    if (s.empty()) fail();
    bool neg = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      s.remove_prefix(1);
      if (s.empty()) fail();
    }
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') fail();
      if (v > (INT64_MAX - (c - '0')) / 10) fail();
      v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
  };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t p = parse_int(text.substr(0, slash), true);
    const std::int64_t q = parse_int(text.substr(slash + 1), false);
    if (q == 0) fail();
    return Rational(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (frac.size() > 17) fail();
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole, false);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac, false);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(w) + Rational(f, scale);
    return neg ? -r : r;
  }
  return Rational(parse_int(text, true));
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace pivotminor
