#include "qclock/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace qclock {

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (a.empty() || b.empty()) throw ParseError("bad rational: " + text);
    return Rational(std::strtoll(a.c_str(), nullptr, 10),
                    std::strtoll(b.c_str(), nullptr, 10));
  }

  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::int64_t num = 0, den = 1;
  bool digits = false, frac = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (frac) throw ParseError("bad rational: " + text);
      frac = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad rational: " + text);
    digits = true;
    num = num * 10 + (s[i] - '0');
    if (frac) den *= 10;
    if (num < 0 || den < 0) throw ParseError("rational overflow: " + text);
  }
  if (!digits) throw ParseError("bad rational: " + text);
  return Rational(neg ? -num : num, den);
}

Rational Rational::from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw ParseError("non-finite clock parameter");
  const bool neg = x < 0;
  double v = std::abs(x);

  // Continued-fraction convergents p/q, stopping at max_den or when the
  // approximation is exact to double precision.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(frac);
    if (fl > 9.2e18) break;
    const std::int64_t a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0;
    std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den || p2 < 0 || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - v) <= 1e-12 * std::max(1.0, v)) break;
    const double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(neg ? -1 : 1, 1);
  return Rational(neg ? -p1 : p1, q1);
}

}  // namespace qclock
