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

// Disk radius eps0 and parameter half-height delta around a candidate
// (p, lambda), in the chart coordinates (x, z) of p. Both are rational lower
// bounds of the exact quantities.

#include <optional>
#include <utility>
#include <vector>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/errors.hpp"
#include "bifurcata/infinity_scan.hpp"
#include "bifurcata/system.hpp"

namespace bifurcata {

constexpr long kBoxBits = 32;

struct DiskBox {
  InfinityPoint point;
  AlgebraicNumber lambda;
  Rational epsilon0;
  Rational delta;
  Rational t_minus;
  Rational t_plus;
};

/// z g_x - x g_z
template <class T>
BiPoly<T> angular_derivative(const BiPoly<T>& g) {
  return BiPoly<T>::y() * partial_derivative(g, Var::X) - BiPoly<T>::x() * partial_derivative(g, Var::Y);
}

/// g_t = f_hat - t z^d
inline BiPoly<Alg> fiber_family(const LocalizedFamily& fam, const Alg& t) {
  return fam.f_hat - BiPoly<Alg>::monomial(t, 0, fam.d);
}

/// Rounds a positive rational down to a multiple of 2^-bits, using finer
/// dyadics when the result would be zero.
inline Rational round_down_positive(const Rational& q, long bits = kBoxBits) {
  if (sgn(q) <= 0) throw InvariantViolation("rounding a non-positive bound");
  for (long b = bits;; b += bits) {
    Rational r = round_down(q, b);
    if (sgn(r) > 0) return r;
  }
}

/// A small-height rational in [7q/8, q] with denominator at most 2^bits, or
/// the dyadic rounding of q when none is that simple. eps0 enters the circle
/// equation of every later system, so its height matters.
inline Rational simple_lower_bound(const Rational& q, long bits = kBoxBits) {
  const Rational r = simplest_between(q * Rational(7, 8), q);
  if (sgn(r) > 0 && mpz_sizeinbase(r.get_den_mpz_t(), 2) <= static_cast<std::size_t>(bits)) return r;
  return round_down_positive(q, bits);
}

/// Rational in (0, |(x, z)|] for a point other than the origin.
inline Rational norm_lower_bound(const EnclosedPoint& p) {
  for (long bits = 32;; bits *= 2) {
    const Interval v = square(enclose(p.x, bits)) + square(p.z(bits));
    if (sgn(v.lo) > 0) {
      Rational r = sqrt_down(v.lo, bits);
      if (sgn(r) > 0) return r;
    }
  }
}

struct RadiusResult {
  Rational epsilon0;
  std::vector<EnclosedPoint> solutions;  // A, including the origin if present
  bool empty = true;                 // A minus the origin is empty
};

/// eps0 from the real solutions of {g = 0, z g_x - x g_z = 0}.
inline RadiusResult milnor_disk_radius(const BiPoly<Alg>& g_lambda, long bits = kBoxBits) {
  RadiusResult r;
  const BiPoly<Alg> g = squarefree_part(g_lambda);
  r.solutions = solve_real_system_enclosed(g, angular_derivative(g));
  std::optional<Rational> best;
  for (const auto& pt : r.solutions) {
    if (is_zero(pt.x) && pt.z_is_zero()) continue;
    r.empty = false;
    Rational norm_lo = norm_lower_bound(pt);
    if (!best || norm_lo < *best) best = norm_lo;
  }
  r.epsilon0 = best ? simple_lower_bound(*best / 2, bits) : Rational(1, 2);
  return r;
}

/// Enclosure of p(x, z) from enclosures of the point and of the coefficients.
inline Interval enclose_at(const BiPoly<Alg>& p, const EnclosedPoint& pt, long bits) {
  const Interval ix = enclose(pt.x, bits), iz = pt.z(bits);
  std::vector<Interval> px{Interval(Rational(1))}, pz{Interval(Rational(1))};
  Interval acc(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    while (static_cast<int>(px.size()) <= e.first) px.push_back((px.back() * ix).rounded(bits + 16));
    while (static_cast<int>(pz.size()) <= e.second) pz.push_back((pz.back() * iz).rounded(bits + 16));
    acc = (acc + enclose(c, bits) * px[static_cast<std::size_t>(e.first)] * pz[static_cast<std::size_t>(e.second)]).rounded(bits + 16);
  }
  return acc;
}

/// Positive rational lower bound of g^2 + a^2 at (x, z); exact evaluation
/// only when intervals cannot separate the value from zero.
inline Rational positive_lower_bound(const BiPoly<Alg>& g, const BiPoly<Alg>& a, const EnclosedPoint& pt) {
  for (long prec = 64; prec <= 1024; prec *= 2) {
    const Interval v = square(enclose_at(g, pt, prec)) + square(enclose_at(a, pt, prec));
    if (sgn(v.lo) > 0) return v.lo;
  }
  const Alg z = pt.z_exact();
  const Alg gv = g(pt.x, z), av = a(pt.x, z);
  const Alg v = gv * gv + av * av;
  if (is_zero(v)) throw InvariantViolation("curve is not transversal to the disk boundary (s = 0)");
  for (long prec = 32;; prec *= 2) {
    const Interval iv = enclose(v, prec);
    if (sgn(iv.lo) > 0) return iv.lo;
  }
}

/// delta from the minimum of H = g^2 + (z g_x - x g_z)^2 on the circle of radius eps0.
inline Rational tube_height(const BiPoly<Alg>& g_lambda, const Rational& eps0, int d, long bits = kBoxBits) {
  const BiPoly<Alg> g = squarefree_part(g_lambda);
  const BiPoly<Alg> a = angular_derivative(g);
  const BiPoly<Alg> H = g * g + a * a;
  const BiPoly<Alg> circle = BiPoly<Alg>::x() * BiPoly<Alg>::x() + BiPoly<Alg>::y() * BiPoly<Alg>::y() -
                             BiPoly<Alg>(Alg(eps0 * eps0));
  const BiPoly<Alg> crit = angular_derivative(H);
  std::optional<Rational> s_lower;
  auto consider = [&](const EnclosedPoint& pt) {
    const Rational v = positive_lower_bound(g, a, pt);
    if (!s_lower || v < *s_lower) s_lower = v;
  };
  if (is_zero(crit) || have_common_component(crit, circle)) {
    consider({Alg(eps0), Alg(Rational(0)), Alg(Rational(1))});  // H is constant on the circle
  } else {
    for (const auto& pt : solve_real_system_enclosed(crit, circle)) consider(pt);
  }
  if (!s_lower) throw InvariantViolation("no critical point of H on the circle");
  Rational root = Rational(0);
  for (long prec = 32; sgn(root) <= 0; prec *= 2) root = sqrt_down(*s_lower, prec);
  Rational denom = Rational(d + 1);
  for (int i = 0; i < d; ++i) denom *= eps0;
  return round_down_positive(root / denom, bits);
}

/// Rationals lambda - delta < t_minus < lambda < t_plus < lambda + delta: the
/// simplest rationals within delta/8 of lambda -+ delta/2. Small heights keep
/// the fibre polynomials g_t cheap.
inline std::pair<Rational, Rational> choose_side_samples(const AlgebraicNumber& lambda, const Rational& delta) {
  if (sgn(delta) <= 0) throw InvariantViolation("delta must be positive");
  AlgebraicNumber l = lambda.refine(delta / 8);
  const Rational mid = (l.lo() + l.hi()) / 2, slack = delta / 8;
  const Rational lo = mid - delta / 2, hi = mid + delta / 2;
  return {simplest_between(lo - slack, lo + slack), simplest_between(hi - slack, hi + slack)};
}

/// Tower element for lambda over the chart level of `fam`.
inline Alg lambda_element(const LocalizedFamily& fam, const AlgebraicNumber& lambda) {
  if (lambda.is_rational()) return Alg(lambda.rational_value());
  return Alg::generator(make_anchored_level(fam.base, to_alg(lambda.defining()), lambda.lo(), lambda.hi()));
}

inline DiskBox compute_disk_box(const LocalizedFamily& fam, const AlgebraicNumber& lambda, long bits = kBoxBits) {
  DiskBox box;
  box.point = fam.point;
  box.lambda = lambda;
  const BiPoly<Alg> g = fiber_family(fam, lambda_element(fam, lambda));
  box.epsilon0 = milnor_disk_radius(g, bits).epsilon0;
  box.delta = tube_height(g, box.epsilon0, fam.d, bits);
  std::tie(box.t_minus, box.t_plus) = choose_side_samples(lambda, box.delta);
  return box;
}

}  // namespace bifurcata
