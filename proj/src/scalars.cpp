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

#include "phaselab/scalars.hpp"

#include <sstream>

namespace phaselab {

namespace {

using Coeffs = CycloScalar::Coeffs;

mpz_class to_mpz(const BigInt& v) { return mpz_class(v.str()); }

bool is_even(const BigInt& v) { return (v % 2) == 0; }

// sqrt2 * a, using sqrt2 = w - w^3.
Coeffs mul_root2(const Coeffs& a) {
  return {a[1] - a[3], a[0] + a[2], a[1] + a[3], a[2] - a[0]};
}

bool divisible_by_root2(const Coeffs& a) {
  return is_even(a[0] - a[2]) && is_even(a[1] - a[3]);
}

Coeffs div_root2(const Coeffs& a) {
  Coeffs r = mul_root2(a);
  for (auto& c : r) c /= 2;
  return r;
}

Coeffs mul_coeffs(const Coeffs& a, const Coeffs& b) {
  Coeffs r{};
  for (int i = 0; i < 4; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b[j] == 0) continue;
      int n = i + j;
      if (n < 4) {
        r[n] += a[i] * b[j];
      } else {
        r[n - 4] -= a[i] * b[j];
      }
    }
  }
  return r;
}

Coeffs conj_coeffs(const Coeffs& a) { return {a[0], -a[3], -a[2], -a[1]}; }

// The automorphism w -> w^3. It fixes i and sends sqrt2 to -sqrt2.
Coeffs galois3_coeffs(const Coeffs& a) { return {a[0], a[3], -a[2], a[1]}; }

bool all_zero(const Coeffs& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0; }

BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  return Rational(q);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

// ---------------------------------------------------------------------------
// CycloScalar

CycloScalar::CycloScalar(Coeffs numerator, unsigned root2_exp)
    : c_(std::move(numerator)), k_(root2_exp) {
  canonicalize();
}

CycloScalar::CycloScalar(long c0, long c1, long c2, long c3, unsigned root2_exp)
    : c_{BigInt(c0), BigInt(c1), BigInt(c2), BigInt(c3)}, k_(root2_exp) {
  canonicalize();
}

void CycloScalar::canonicalize() {
  if (all_zero(c_)) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && divisible_by_root2(c_)) {
    c_ = div_root2(c_);
    --k_;
  }
}

CycloScalar CycloScalar::omega(int power) {
  int p = ((power % 8) + 8) % 8;
  Coeffs c{};
  if (p < 4) {
    c[p] = 1;
  } else {
    c[p - 4] = -1;
  }
  return CycloScalar(c, 0);
}

CycloScalar CycloScalar::root2_power(int exponent) {
  if (exponent <= 0) return CycloScalar(1, 0, 0, 0, static_cast<unsigned>(-exponent));
  Coeffs c{pow2(static_cast<unsigned>(exponent) / 2), 0, 0, 0};
  if (exponent % 2 == 1) c = mul_root2(c);
  return CycloScalar(c, 0);
}

CycloScalar CycloScalar::from_rational(const Rational& q) {
  mpz_class den = q.denominator();
  unsigned twos = 0;
  while (mpz_even_p(den.get_mpz_t())) {
    den /= 2;
    ++twos;
  }
  if (den != 1) throw RingError("rational " + q.str() + " has a non-dyadic denominator");
  return CycloScalar({BigInt(q.numerator().get_str()), 0, 0, 0}, 2 * twos);
}

std::span<const CycloScalar> CycloScalar::unit_phases() {
  static const std::array<CycloScalar, 8> phases = [] {
    std::array<CycloScalar, 8> p;
    for (int j = 0; j < 8; ++j) p[j] = omega(j);
    return p;
  }();
  return phases;
}

bool CycloScalar::is_zero() const { return all_zero(c_); }

bool CycloScalar::is_positive() const {
  auto q = to_rational();
  return q && q->sign() > 0;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Coeffs a = c_;
  Coeffs b = o.c_;
  unsigned k = std::max(k_, o.k_);
  for (unsigned e = k_; e < k; ++e) a = mul_root2(a);
  for (unsigned e = o.k_; e < k; ++e) b = mul_root2(b);
  for (int i = 0; i < 4; ++i) a[i] += b[i];
  c_ = std::move(a);
  k_ = k;
  canonicalize();
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = CycloScalar();
  c_ = mul_coeffs(c_, o.c_);
  k_ += o.k_;
  canonicalize();
  return *this;
}

CycloScalar CycloScalar::dagger() const {
  CycloScalar r;
  r.c_ = conj_coeffs(c_);
  r.k_ = k_;
  return r;
}

std::optional<CycloScalar> CycloScalar::divide(const CycloScalar& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return CycloScalar();
  // A/B = A * conj(B) * g(B conj(B)) / N, with g the w -> w^3 automorphism and
  // N = (B conj B)(g(B conj B)) a positive integer.
  const Coeffs& b = divisor.c_;
  Coeffs real = mul_coeffs(b, conj_coeffs(b));
  Coeffs real_conj = galois3_coeffs(real);
  Coeffs norm = mul_coeffs(real, real_conj);
  BigInt n = norm[0];
  Coeffs num = mul_coeffs(mul_coeffs(c_, conj_coeffs(b)), real_conj);
  unsigned twos = 0;
  while (is_even(n)) {
    n /= 2;
    ++twos;
  }
  for (auto& c : num) {
    if (c % n != 0) return std::nullopt;
    c /= n;
  }
  // value = num / 2^twos * sqrt2^(divisor.k - k)
  long exp = static_cast<long>(k_) + 2L * twos - static_cast<long>(divisor.k_);
  if (exp < 0) {
    for (long e = 0; e < -exp; ++e) num = mul_root2(num);
    exp = 0;
  }
  return CycloScalar(num, static_cast<unsigned>(exp));
}

std::optional<Rational> CycloScalar::to_rational() const {
  if (is_zero()) return Rational(0);
  if (k_ % 2 == 0) {
    if (c_[1] != 0 || c_[2] != 0 || c_[3] != 0) return std::nullopt;
    return Rational(c_[0], pow2(k_ / 2));
  }
  // odd k: numerator must be s * sqrt2 = (0, s, 0, -s)
  if (c_[0] != 0 || c_[2] != 0 || c_[3] != -c_[1]) return std::nullopt;
  return Rational(c_[1], pow2((k_ - 1) / 2));
}

Rational CycloScalar::squared_modulus() const {
  auto q = (dagger() * *this).to_rational();
  if (!q) throw RingError("squared modulus of " + str() + " is not a real rational");
  return *q;
}

std::optional<CycloScalar> CycloScalar::sqrt_of(const CycloScalar& value) {
  auto q = value.to_rational();
  if (!q || q->sign() < 0) return std::nullopt;
  if (q->is_zero()) return CycloScalar();
  mpz_class num = q->numerator();
  mpz_class den = q->denominator();
  int exponent = 0;
  while (mpz_even_p(num.get_mpz_t())) {
    num /= 2;
    ++exponent;
  }
  while (mpz_even_p(den.get_mpz_t())) {
    den /= 2;
    --exponent;
  }
  if (den != 1 || !mpz_perfect_square_p(num.get_mpz_t())) return std::nullopt;
  mpz_class root = sqrt(num);
  return CycloScalar({BigInt(root.get_str()), 0, 0, 0}, 0) * root2_power(exponent);
}

std::string CycloScalar::str() const {
  std::ostringstream os;
  os << "[" << c_[0] << "," << c_[1] << "," << c_[2] << "," << c_[3] << "]";
  if (k_ != 0) os << "/r2^" << k_;
  return os.str();
}

std::strong_ordering operator<=>(const CycloScalar& a, const CycloScalar& b) {
  if (a.k_ != b.k_) return a.k_ <=> b.k_;
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
    if (b.c_[i] < a.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// BoolScalar

std::span<const BoolScalar> BoolScalar::unit_phases() {
  static constexpr std::array<BoolScalar, 1> phases{BoolScalar(true)};
  return phases;
}

}  // namespace phaselab
