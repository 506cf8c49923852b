/*
   Copyright 2026 The bifurcata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace bifurcata {

/// Arbitrary precision rational; gmpxx keeps it canonical (gcd 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_structural_zero(const Rational& q) { return sgn(q) == 0; }
inline int sign(const Rational& q) { return sgn(q); }
inline Rational inv(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("division by zero");
  return 1 / q;
}
inline Rational exact_div(const Rational& a, const Rational& b) { return a * inv(b); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// 2^k as a rational (k may be negative).
inline Rational pow2(long k) {
  Rational r(1);
  if (k >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  r.canonicalize();
  return r;
}

inline Integer floor_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_int(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Largest multiple of 2^-bits that is <= q.
inline Rational round_down(const Rational& q, long bits) {
  if (q.get_den() == 1) return q;
  Rational scaled = q * pow2(bits);
  return Rational(floor_int(scaled)) * pow2(-bits);
}

/// Smallest multiple of 2^-bits that is >= q.
inline Rational round_up(const Rational& q, long bits) {
  if (q.get_den() == 1) return q;
  Rational scaled = q * pow2(bits);
  return Rational(ceil_int(scaled)) * pow2(-bits);
}

/// Rational lower bound of sqrt(q) with absolute error <= 2^-bits (q >= 0).
inline Rational sqrt_down(const Rational& q, long bits) {
  if (sgn(q) < 0) throw std::domain_error("sqrt of negative rational");
  // floor(sqrt(q * 4^bits)) / 2^bits
  Rational scaled = q * pow2(2 * bits);
  Integer fl = floor_int(scaled);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  return Rational(root) * pow2(-bits);
}

inline Rational sqrt_up(const Rational& q, long bits) {
  if (sgn(q) < 0) throw std::domain_error("sqrt of negative rational");
  Rational scaled = q * pow2(2 * bits);
  Integer cl = ceil_int(scaled);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), cl.get_mpz_t());
  if (root * root < cl) root += 1;
  return Rational(root) * pow2(-bits);
}

/// The rational with smallest denominator in the closed interval [lo, hi].
inline Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  // Continued-fraction descent for 0 < lo <= hi.
  Integer fl = floor_int(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational rest = simplest_between(1 / (hi - Rational(fl)), 1 / (lo - Rational(fl)));
  return Rational(fl) + 1 / rest;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Closed interval with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  /// +1 / -1 when the interval excludes zero, 0 otherwise.
  int certain_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }
  Rational mag() const { return std::max(abs(lo), abs(hi)); }

  /// Outward rounding to multiples of 2^-bits, keeping endpoint sizes bounded.
  Interval rounded(long bits) const { return {round_down(lo, bits), round_up(hi, bits)}; }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
inline Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}
inline Interval operator*(const Rational& s, const Interval& a) {
  if (sgn(s) >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

inline Interval square(const Interval& a) {
  if (a.contains_zero()) return {Rational(0), std::max(a.lo * a.lo, a.hi * a.hi)};
  Rational l = a.lo * a.lo, h = a.hi * a.hi;
  return {std::min(l, h), std::max(l, h)};
}

inline Interval enclose(const Rational& q, long /*bits*/) { return Interval(q); }

}  // namespace bifurcata
