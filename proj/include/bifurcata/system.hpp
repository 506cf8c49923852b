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

// Real solutions of two bivariate equations. x-values come from the
// resultant in y; each one is adjoined as an anchored tower level and the
// y-values are the real roots of gcd(p(a, y), q(a, y)) over that level.

#include <algorithm>
#include <utility>
#include <vector>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/errors.hpp"
#include "bifurcata/real_root.hpp"
#include "bifurcata/tower.hpp"

namespace bifurcata {

/// Element denoting an isolated real root of a polynomial over a tower.
inline Alg adjoin_root(const RealRoot<Alg>& r) {
  if (r.exact()) return Alg(r.lo);
  NodePtr parent;
  for (const auto& c : r.poly.coeffs())
    if (c.node() && (!parent || c.node()->depth > parent->depth)) parent = c.node();
  return Alg::generator(make_anchored_level(parent, r.poly, r.lo, r.hi));
}

/// Real roots of p over an anchored tower, as tower elements, ascending.
inline std::vector<Alg> real_root_elements(const Poly<Alg>& p) {
  std::vector<Alg> out;
  for (const auto& r : isolate_real_roots(p)) out.push_back(adjoin_root(r));
  return out;
}

/// True when p and q share a factor of positive degree.
inline bool have_common_component(const BiPoly<Alg>& p, const BiPoly<Alg>& q) {
  auto P = as_poly_in_y(p), Q = as_poly_in_y(q);
  P.normalize();
  Q.normalize();
  if (P.empty() || Q.empty()) return true;
  auto g = gcd(P, Q);
  if (g.degree() > 0) return true;
  return !g.empty() && g.lead().degree() > 0;
}

/// Exact quotient of bivariate polynomials.
inline BiPoly<Alg> exact_quotient(const BiPoly<Alg>& p, const BiPoly<Alg>& q) {
  auto P = as_poly_in_y(p), Q = as_poly_in_y(q);
  P.normalize();
  Q.normalize();
  return from_poly_in_y(exact_div(P, Q));
}

/// Gcd of bivariate polynomials over a field (up to a unit).
inline BiPoly<Alg> bivariate_gcd(const BiPoly<Alg>& p, const BiPoly<Alg>& q) {
  return from_poly_in_y(gcd(as_poly_in_y(p), as_poly_in_y(q)));
}

/// p / gcd(p, p_x, p_y)
inline BiPoly<Alg> squarefree_part(const BiPoly<Alg>& p) {
  BiPoly<Alg> g = bivariate_gcd(bivariate_gcd(p, partial_derivative(p, Var::X)), partial_derivative(p, Var::Y));
  g.normalize();
  if (g.total_degree() <= 0) return p;
  return exact_quotient(p, g);
}

/// Real solution whose second coordinate is kept as the quotient num / den
/// (den != 0), so that lifting needs no inversion in the tower.
struct EnclosedPoint {
  Alg x;
  Alg num;
  Alg den;

  bool z_is_zero() const { return is_zero(num); }
  Alg z_exact() const { return den.is_rational() && den.rational() == 1 ? num : num * inv(den); }
  Interval z(long bits) const {
    for (long prec = bits;; prec *= 2) {
      const Interval d = enclose(den, prec);
      if (d.certain_sign() == 0) continue;
      const Interval n = enclose(num, prec);
      const Interval r = n * Interval(std::min(1 / d.lo, 1 / d.hi), std::max(1 / d.lo, 1 / d.hi));
      return r.rounded(bits + 16);
    }
  }
};

namespace system_detail {

/// h(-r0 / r1) * r1^deg h, zero iff r1 y + r0 divides h.
inline Alg homogeneous_value(const Poly<Alg>& h, const Alg& r0, const Alg& r1) {
  Alg acc(Rational(0)), pw(Rational(1));
  const Alg m = -r0;
  for (int i = h.degree(); i >= 0; --i) {
    acc = acc * m + h[static_cast<std::size_t>(i)] * pw;
    pw = pw * r1;
  }
  return acc;
}

template <class C>
Alg evaluate_at(const Poly<C>& p, const Alg& a) {
  Alg acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + Alg(p[static_cast<std::size_t>(i)]);
  return acc;
}

}  // namespace system_detail

/// All real common zeros of p and q over an anchored tower, with the second
/// coordinate left as a quotient. Throws DegenerateGeometry when the solution
/// set is infinite.
inline std::vector<EnclosedPoint> solve_real_system_enclosed(const BiPoly<Alg>& p, const BiPoly<Alg>& q) {
  if (have_common_component(p, q)) throw DegenerateGeometry("polynomial system has a common component");
  auto P = as_poly_in_y(p), Q = as_poly_in_y(q);
  P.normalize();
  Q.normalize();
  std::vector<EnclosedPoint> out;
  if (P.degree() == 0 && Q.degree() == 0) return out;  // coprime univariate polynomials in x
  Poly<Alg> R = resultant(P, Q);
  R.normalize();
  if (R.empty()) throw DegenerateGeometry("vanishing resultant");
  // S_1 from the chain, when its predecessor has degree 2
  const auto chain = subresultant_prs(P, Q);
  const Poly<Poly<Alg>>* s1 = nullptr;
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i].degree() == 1 && chain[i - 1].degree() == 2) s1 = &chain[i];
  for (const Alg& a : real_root_elements(R)) {
    if (s1 && !is_zero(system_detail::evaluate_at(chain[0].lead(), a))) {
      // the chain specialises at a, and psc_1(a) != 0 with res(a) = 0 means a linear gcd
      const Alg lead = system_detail::evaluate_at((*s1)[1], a);
      if (!is_zero(lead)) {
        out.push_back({a, -system_detail::evaluate_at((*s1)[0], a), lead});
        continue;
      }
    }
    Poly<Alg> u = substitute_x(p, a), v = substitute_x(q, a);
    u.normalize();
    v.normalize();
    if (u.empty() && v.empty()) throw DegenerateGeometry("system vanishes on a vertical line");
    if (u.empty()) std::swap(u, v);
    if (v.empty()) {
      for (const Alg& b : real_root_elements(u)) out.push_back({a, b, Alg(Rational(1))});
      continue;
    }
    if (u.degree() < v.degree()) std::swap(u, v);
    // Euclid until the divisor is linear, then test divisibility without inverting
    while (v.degree() >= 2) {
      Poly<Alg> r = rem(u, v);
      r.normalize();
      u = std::move(v);
      v = r.empty() || r.degree() < 1 ? std::move(r) : monic(std::move(r));
      if (v.empty()) break;
    }
    if (v.empty()) {
      for (const Alg& b : real_root_elements(u)) out.push_back({a, b, Alg(Rational(1))});
      continue;
    }
    if (v.degree() < 1) continue;
    if (!is_zero(system_detail::homogeneous_value(u, v[0], v[1]))) continue;
    out.push_back({a, -v[0], v[1]});
  }
  return out;
}

using RealPoint = std::pair<Alg, Alg>;

/// solve_real_system_enclosed with exact second coordinates.
inline std::vector<RealPoint> solve_real_system(const BiPoly<Alg>& p, const BiPoly<Alg>& q) {
  std::vector<RealPoint> out;
  for (const auto& pt : solve_real_system_enclosed(p, q)) out.emplace_back(pt.x, pt.z_exact());
  return out;
}

inline std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>> solve_real_system(const BiPoly<Rational>& p,
                                                                                 const BiPoly<Rational>& q) {
  std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>> out;
  for (const auto& [a, b] : solve_real_system(to_alg(p), to_alg(q)))
    out.emplace_back(to_algebraic_number(a), to_algebraic_number(b));
  return out;
}

}  // namespace bifurcata
