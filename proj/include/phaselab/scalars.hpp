// Copyright 2026 The PhaseLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <gmpxx.h>

namespace phaselab {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a ring identity that must hold for valid inputs is violated.
class RingError : public std::logic_error {
 public:
  explicit RingError(const std::string& message) : std::logic_error(message) {}
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long numerator, long denominator = 1);
  explicit Rational(mpq_class value);
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  Rational dagger() const { return *this; }

  /// Always "p/q", including integers ("3/1").
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// An element of Z[w][1/sqrt2] with w a primitive 8th root of unity (w^4 = -1).
///
/// The value is (c0 + c1 w + c2 w^2 + c3 w^3) / sqrt2^k. Every instance is kept in
/// canonical form: either k = 0 or the numerator is not divisible by
/// sqrt2 = w - w^3 in Z[w]. Zero is stored with k = 0. Canonical form is unique,
/// so equality is member-wise.
class CycloScalar {
 public:
  using Coeffs = std::array<BigInt, 4>;

  CycloScalar() = default;
  CycloScalar(Coeffs numerator, unsigned root2_exp);
  CycloScalar(long c0, long c1, long c2, long c3, unsigned root2_exp = 0);

  static CycloScalar zero() { return {}; }
  static CycloScalar one() { return CycloScalar(1, 0, 0, 0); }
  static CycloScalar integer(long value) { return CycloScalar(value, 0, 0, 0); }
  /// w^power for any integer power (taken mod 8).
  static CycloScalar omega(int power);
  /// sqrt2^exponent; negative exponents give 1/sqrt2^|exponent|.
  static CycloScalar root2_power(int exponent);
  static CycloScalar from_rational(const Rational& q);

  /// The 8 unit phases w^0 .. w^7, in that order.
  static std::span<const CycloScalar> unit_phases();

  const Coeffs& coeffs() const { return c_; }
  unsigned root2_exp() const { return k_; }

  bool is_zero() const;
  /// True iff the value is a strictly positive real rational.
  bool is_positive() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o) { return *this += -o; }
  CycloScalar& operator*=(const CycloScalar& o);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }

  /// Complex conjugate: w -> w^7.
  CycloScalar dagger() const;

  /// Exact quotient this / divisor when it lies in the ring, nullopt otherwise
  /// (including division by zero).
  std::optional<CycloScalar> divide(const CycloScalar& divisor) const;

  /// The value as a rational when it is real and rational.
  std::optional<Rational> to_rational() const;

  /// |a|^2 = dagger(a) * a as a rational. Throws RingError if the product is
  /// not a real rational, which cannot happen for stabiliser amplitudes.
  Rational squared_modulus() const;

  /// Positive square root, when it exists in the ring. Only values of the form
  /// q > 0 rational with sqrt(q) in Z[1/sqrt2, sqrt2] are handled.
  static std::optional<CycloScalar> sqrt_of(const CycloScalar& value);

  std::string str() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
    return a.k_ == b.k_ && a.c_ == b.c_;
  }
  /// Total order on canonical representations (k first, then coefficients).
  friend std::strong_ordering operator<=>(const CycloScalar& a, const CycloScalar& b);
  friend std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.str(); }

 private:
  void canonicalize();

  Coeffs c_{};
  unsigned k_ = 0;
};

/// A two-valued scalar of the relational theory: + is OR, * is AND.
class BoolScalar {
 public:
  constexpr BoolScalar() = default;
  constexpr explicit BoolScalar(bool value) : value_(value) {}

  static constexpr BoolScalar zero() { return BoolScalar(false); }
  static constexpr BoolScalar one() { return BoolScalar(true); }
  static std::span<const BoolScalar> unit_phases();

  constexpr bool value() const { return value_; }
  constexpr bool is_zero() const { return !value_; }
  constexpr bool is_positive() const { return value_; }
  constexpr BoolScalar dagger() const { return *this; }

  BoolScalar& operator+=(const BoolScalar& o) {
    value_ = value_ || o.value_;
    return *this;
  }
  BoolScalar& operator*=(const BoolScalar& o) {
    value_ = value_ && o.value_;
    return *this;
  }
  friend constexpr BoolScalar operator+(BoolScalar a, BoolScalar b) { return BoolScalar(a.value_ || b.value_); }
  friend constexpr BoolScalar operator*(BoolScalar a, BoolScalar b) { return BoolScalar(a.value_ && b.value_); }

  /// a / b exists only for b = 1.
  std::optional<BoolScalar> divide(const BoolScalar& divisor) const {
    if (!divisor.value_) return std::nullopt;
    return *this;
  }
  static std::optional<BoolScalar> sqrt_of(const BoolScalar& value) { return value; }

  std::string str() const { return value_ ? "1" : "0"; }

  friend constexpr bool operator==(BoolScalar a, BoolScalar b) = default;
  friend constexpr auto operator<=>(BoolScalar a, BoolScalar b) = default;
  friend std::ostream& operator<<(std::ostream& os, BoolScalar s) { return os << s.str(); }

 private:
  bool value_ = false;
};

/// Commutative semiring with an involution, as used by the matrix engine.
template <class S>
concept Scalar = std::regular<S> && std::totally_ordered<S> && requires(const S& a, const S& b) {
  { a + b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a.dagger() } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_positive() } -> std::convertible_to<bool>;
  { a.divide(b) } -> std::same_as<std::optional<S>>;
  { a.str() } -> std::convertible_to<std::string>;
  { S::zero() } -> std::convertible_to<S>;
  { S::one() } -> std::convertible_to<S>;
  { S::unit_phases() } -> std::convertible_to<std::span<const S>>;
  { S::sqrt_of(a) } -> std::same_as<std::optional<S>>;
};

static_assert(Scalar<CycloScalar>);
static_assert(Scalar<BoolScalar>);

template <class S>
inline constexpr const char* scalar_kind_name = "unknown";
template <>
inline constexpr const char* scalar_kind_name<CycloScalar> = "cyclotomic";
template <>
inline constexpr const char* scalar_kind_name<BoolScalar> = "boolean";

}  // namespace phaselab
