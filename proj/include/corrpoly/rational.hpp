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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace corrpoly {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always held in canonical form: positive denominator, numerator and
/// denominator coprime. Equality is therefore structural. Nothing in this
/// type rounds; the only lossy operations are the explicit renderings
/// (to_double, to_decimal).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);

  /// Exact value of a decimal literal: optional sign, digits, optional
  /// fractional part ("-0.25", "1", "0.9744"). Exponents are rejected.
  static Rational parse_decimal(std::string_view text);

  /// Accepts either a decimal literal or a fraction "p/q".
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  bool is_integer() const;

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  /// Fixed-point rendering with the given number of significant digits,
  /// rounded half away from zero, trailing zeros removed. Exact rounding
  /// on the underlying fraction, so the output is platform independent.
  std::string to_decimal(int significant_digits = 6) const;

  /// Exact decimal expansion when the denominator has only factors 2 and
  /// 5; falls back to to_string() otherwise.
  std::string to_exact_decimal() const;

  double to_double() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace corrpoly
