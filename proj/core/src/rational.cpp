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

#include "ifsquant/rational.hpp"

#include <stdexcept>

namespace ifsq {

namespace {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("invalid integer \"" + std::string(text) + "\"");
  }
  return BigInt(std::string(text), 10);
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), BigInt(1));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::pow2(std::int64_t exponent) {
  mpq_class q(1);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(10); }

std::string to_fraction_string(const Rational& q) {
  return q.numerator().get_str(10) + "/" + q.denominator().get_str(10);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::string to_decimal(const Rational& q, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (q.is_zero()) return "0";
  const bool negative = q.sign() < 0;
  const BigInt num = abs(q).numerator();
  const BigInt den = q.denominator();

  // Smallest e with num/den < 10^(e+1), i.e. 10^e <= |q| < 10^(e+1).
  long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
  auto below = [&](long ex) {  // |q| < 10^ex
    return ex >= 0 ? num < den * pow10(static_cast<unsigned long>(ex))
                   : num * pow10(static_cast<unsigned long>(-ex)) < den;
  };
  while (!below(e + 1)) ++e;
  while (below(e)) --e;

  // mantissa = round(|q| * 10^(digits-1-e)), ties away from zero.
  const long shift = significant_digits - 1 - e;
  BigInt n = num, d = den;
  if (shift >= 0) n *= pow10(static_cast<unsigned long>(shift));
  else d *= pow10(static_cast<unsigned long>(-shift));
  BigInt mantissa = (2 * n + d) / (2 * d);
  long point = e;
  if (mantissa == pow10(static_cast<unsigned long>(significant_digits))) {
    mantissa /= 10;
    ++point;
  }

  std::string digits = mantissa.get_str(10);
  std::string out;
  if (point < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point - 1), '0') + digits;
  } else if (static_cast<std::size_t>(point) + 1 >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(point) + 1 - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(point) + 1) + "." +
          digits.substr(static_cast<std::size_t>(point) + 1);
  }
  return negative ? "-" + out : out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ifsq
