#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "qclock/errors.hpp"

namespace qclock {

/// Exact rational with int64 numerator/denominator, always normalised
/// (den > 0, gcd(num, den) == 1). Used for clock grid parameters so that
/// the grid volume omega_uv * omega_ir stays exactly integral for rational
/// inputs instead of drifting in floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    normalise();
  }
  explicit Rational(std::int64_t n) : num_(n), den_(1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool positive() const { return num_ > 0; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep intermediates in range.
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    return Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
  }

  Rational reciprocal() const {
    if (num_ == 0) throw InvalidDimension("reciprocal of zero");
    return Rational(den_, num_);
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "3", "-2.5", "7/2". Decimal strings become exact rationals
  /// (digits over a power of ten).
  static Rational parse(const std::string& text);

  /// Best rational approximation of x with denominator <= max_den
  /// (continued fractions). Exact for decimals and small fractions.
  static Rational from_double(double x, std::int64_t max_den = 1000000000);

 private:
  void normalise() {
    if (den_ == 0) throw InvalidDimension("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace qclock
