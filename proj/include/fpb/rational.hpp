#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fpb {

// Exact rational arithmetic on 64-bit numerator/denominator.
// All boundary metrics produce values of the form 2^-l or n/(1+|n|),
// so magnitudes stay tiny; comparisons cross-multiply in 128 bits.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  static Rational pow2(int e) {
    // 2^e for |e| < 63
    if (e >= 63 || e <= -63) throw std::overflow_error("Rational::pow2 exponent");
    if (e >= 0) return Rational(std::int64_t(1) << e);
    return Rational(1, std::int64_t(1) << (-e));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(checked(num_ * (__int128)o.den_ + (__int128)o.num_ * den_),
                    checked((__int128)den_ * o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked(num_ * (__int128)o.den_ - (__int128)o.num_ * den_),
                    checked((__int128)den_ * o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(checked((__int128)num_ * o.num_), checked((__int128)den_ * o.den_));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational division by zero");
    return Rational(checked((__int128)num_ * o.den_), checked((__int128)den_ * o.num_));
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  static std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational overflow");
    return (std::int64_t)v;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace fpb
