// Copyright 2026 The corrpoly Authors
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

#include "corrpoly/rational.hpp"

#include <ostream>
#include <utility>

#include "corrpoly/error.hpp"

namespace corrpoly {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

// round(num / den) with ties away from zero; num, den > 0.
mpz_class round_half_up(const mpz_class& num, const mpz_class& den) {
  mpz_class q = num / den;
  mpz_class r = num % den;
  if (2 * r >= den) q += 1;
  return q;
}

// Renders the nonnegative integer n scaled by 10^-places.
std::string fixed_point(const mpz_class& n, long places) {
  std::string digits = n.get_str();
  if (places <= 0) {
    return digits + std::string(static_cast<std::size_t>(-places), '0');
  }
  auto p = static_cast<std::size_t>(places);
  if (digits.size() <= p) digits.insert(0, p - digits.size() + 1, '0');
  std::string out = digits.substr(0, digits.size() - p) + "." + digits.substr(digits.size() - p);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
    if (!all_digits(frac_part)) {
      throw ParseError("invalid decimal literal '" + std::string(text) + "'");
    }
  }
  if (!all_digits(int_part)) {
    throw ParseError("invalid decimal literal '" + std::string(text) + "'");
  }
  mpz_class num(std::string(int_part) + std::string(frac_part), 10);
  if (negative) num = -num;
  return Rational(mpq_class(num, pow10(frac_part.size())));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw ParseError("invalid fraction '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("fraction with zero denominator '" + std::string(text) + "'");
  mpz_class n(std::string(num_digits), 10);
  if (num.front() == '-') n = -n;
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::to_string() const { return value_.get_str(); }

std::string Rational::to_decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";
  mpz_class num = ::abs(value_.get_num());
  const mpz_class& den = value_.get_den();

  // Decimal exponent e with 10^e <= |v| < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto below = [&](long exp) {  // |v| < 10^exp
    if (exp >= 0) return num < den * pow10(static_cast<unsigned long>(exp));
    return num * pow10(static_cast<unsigned long>(-exp)) < den;
  };
  while (below(e)) --e;
  while (!below(e + 1)) ++e;

  long places = significant_digits - 1 - e;
  mpz_class scaled;
  if (places >= 0) {
    scaled = round_half_up(num * pow10(static_cast<unsigned long>(places)), den);
  } else {
    scaled = round_half_up(num, den * pow10(static_cast<unsigned long>(-places)));
  }
  if (scaled == pow10(static_cast<unsigned long>(significant_digits))) {
    scaled /= 10;
    --places;
  }
  std::string out = fixed_point(scaled, places);
  return sign() < 0 ? "-" + out : out;
}

std::string Rational::to_exact_decimal() const {
  mpz_class den = value_.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_string();
  unsigned long places = std::max(twos, fives);
  mpz_class scaled = ::abs(value_.get_num()) * pow10(places) / value_.get_den();
  std::string out = fixed_point(scaled, static_cast<long>(places));
  return sign() < 0 ? "-" + out : out;
}

double Rational::to_double() const { return value_.get_d(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace corrpoly
