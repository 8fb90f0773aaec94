// Copyright 2026 The ifsquant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ifsq {

using BigInt = mpz_class;

// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "num/den" or an integer; throws std::invalid_argument.
  static Rational parse(std::string_view text);

  // 2^exponent, exponent may be negative.
  static Rational pow2(std::int64_t exponent);

  [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  // "num/den", or just "num" when the denominator is 1.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

// Always "num/den", including "1/1" for integers. This is the wire form.
[[nodiscard]] std::string to_fraction_string(const Rational& q);

// Decimal rendering rounded to nearest (ties away from zero) with the given
// number of significant digits, in positional notation.
[[nodiscard]] std::string to_decimal(const Rational& q, int significant_digits = 10);

[[nodiscard]] Rational abs(const Rational& q);

[[nodiscard]] BigInt binomial(unsigned long n, unsigned long k);

}  // namespace ifsq
