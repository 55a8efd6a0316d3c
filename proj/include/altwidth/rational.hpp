#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "altwidth/error.hpp"

namespace altwidth {

// Exact rational over int64, enough for the bound arithmetic in this library
// (numerators stay around 4 * word_length, nowhere near the overflow guard).
// Comparisons and arithmetic go through __int128 so they are exact.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw InvalidArgumentError("rational: zero denominator");
    normalize(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  // Smallest integer >= value.
  std::int64_t ceil() const {
    if (num_ >= 0) return (num_ + den_ - 1) / den_;
    return num_ / den_;  // truncation rounds toward zero = up for negatives
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  static Rational make(i128 num, i128 den) {
    Rational r;
    r.normalize(num, den);
    return r;
  }

  void normalize(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 g = 1;
    if (a != 0) {
      // gcd via uint64 is fine: inputs are products of two int64s, reduce first
      // by repeated binary steps only if needed; in practice values are tiny.
      i128 b = den;
      while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
      }
      g = a;
    } else {
      den = 1;
    }
    num /= g;
    den /= g;
    constexpr i128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim)
      throw Error("rational overflow");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// ceil(a / b) for positive integers, used for the Proposition-style lower bound.
inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

}  // namespace altwidth
