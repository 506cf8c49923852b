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

// Points at infinity of the Milnor set, charts centred at them, and the
// finite limits of f along Milnor branches (candidate pairs (p, lambda)).

#include <algorithm>
#include <string>
#include <vector>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/errors.hpp"
#include "bifurcata/puiseux.hpp"
#include "bifurcata/real_root.hpp"
#include "bifurcata/tower.hpp"

namespace bifurcata {

struct MilnorSet {
  BiPoly<Rational> h;
  bool primitive = false;
};

/// h = y f_x - x f_y
inline MilnorSet milnor_polynomial(const BiPoly<Rational>& f) {
  MilnorSet m;
  m.h = BiPoly<Rational>::y() * partial_derivative(f, Var::X) - BiPoly<Rational>::x() * partial_derivative(f, Var::Y);
  m.primitive = !m.h.empty();
  return m;
}

enum class Chart { Y, X };  // [a : 1 : 0] and [1 : b : 0]

struct InfinityPoint {
  Chart chart = Chart::Y;
  AlgebraicNumber coordinate;
};

inline std::string to_string(const InfinityPoint& p) {
  const std::string c = decimal_text(p.coordinate);
  return p.chart == Chart::Y ? "[" + c + ":1:0]" : "[1:" + c + ":0]";
}

inline int compare(const InfinityPoint& a, const InfinityPoint& b) {
  if (a.chart != b.chart) return a.chart == Chart::Y ? -1 : 1;
  return compare(a.coordinate, b.coordinate);
}

/// Dehomogenised top form: F(x, 1) as a polynomial in x.
inline Poly<Rational> top_form_at_y_one(const BiPoly<Rational>& p) {
  const int D = p.total_degree();
  std::vector<Rational> v(static_cast<std::size_t>(D) + 1, Rational(0));
  for (const auto& [k, c] : p.terms())
    if (k.first + k.second == D) v[static_cast<std::size_t>(k.first)] = c;
  return Poly<Rational>(std::move(v));
}

/// Real points of the projective closure of {h = 0} on the line at infinity.
inline std::vector<InfinityPoint> milnor_points_at_infinity(const MilnorSet& m) {
  if (!m.primitive) throw DegenerateGeometry("non-primitive polynomial: the Milnor set is the whole plane");
  std::vector<InfinityPoint> out;
  Poly<Rational> H1 = top_form_at_y_one(m.h);
  for (auto& a : real_roots(H1)) out.push_back({Chart::Y, a});
  const int D = m.h.total_degree();
  if (sgn(m.h.coeff(D, 0)) == 0) out.push_back({Chart::X, AlgebraicNumber(Rational(0))});
  return out;
}

/// Does the top-degree form of f vanish at p?
inline bool top_form_vanishes(const BiPoly<Rational>& f, const InfinityPoint& p) {
  if (p.chart == Chart::X) return sgn(f.coeff(f.total_degree(), 0)) == 0;
  Poly<Rational> F1 = top_form_at_y_one(f);
  if (p.coordinate.is_rational()) return sign_at(F1, p.coordinate.rational_value()) == 0;
  return sign_at_root(F1, p.coordinate.root()) == 0;
}

struct LocalizedFamily {
  InfinityPoint point;
  BiPoly<Alg> f_hat;  // (u, z)
  BiPoly<Alg> h_hat;  // (u, z)
  int d = 0;
  NodePtr base;       // level of the chart coordinate; null when rational
  Alg alpha;
};

/// Chart translation without checking f_d(p) = 0.
inline LocalizedFamily translate_to_chart(const BiPoly<Rational>& f, const InfinityPoint& p) {
  LocalizedFamily fam;
  fam.point = p;
  fam.d = f.total_degree();
  const MilnorSet m = milnor_polynomial(f);
  const TriPoly<Rational> ft = homogenize(f);
  BiPoly<Rational> fh, hh;
  if (p.chart == Chart::Y) {
    fh = ft.at_y_one();
    if (m.primitive) hh = homogenize(m.h).at_y_one();
  } else {
    fh = ft.at_x_one();
    if (m.primitive) hh = homogenize(m.h).at_x_one();
  }
  fam.alpha = p.coordinate.to_alg();
  fam.base = fam.alpha.node();
  fam.f_hat = translate(to_alg(fh), fam.alpha, Alg(0));
  fam.h_hat = translate(to_alg(hh), fam.alpha, Alg(0));
  return fam;
}

/// Chart family centred at p; requires f_d(p) = 0.
inline LocalizedFamily localize_at(const BiPoly<Rational>& f, const InfinityPoint& p) {
  if (!top_form_vanishes(f, p))
    throw DegenerateGeometry("top-degree form does not vanish at " + to_string(p) + ": no finite limits there");
  return translate_to_chart(f, p);
}

/// Newton interpolation over the tower at rational nodes.
inline Poly<Alg> interpolate(const std::vector<Rational>& xs, std::vector<Alg> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) * Alg(Rational(1) / (xs[i] - xs[i - j]));
  Poly<Alg> r;
  for (std::size_t i = n; i-- > 0;) {
    r = r * Poly<Alg>(std::vector<Alg>{Alg(-xs[i]), Alg(1)}) + Poly<Alg>(ys[i]);
  }
  return r;
}

/// R_0(w): lowest z-coefficient of Res_u(h_hat, f_hat - w z^d), h_hat freed of
/// powers of z. Computed by interpolation in w.
inline Poly<Alg> limits_oracle(const LocalizedFamily& fam) {
  const BiPoly<Alg> h = puiseux_detail::strip_second(fam.h_hat);
  const auto H = as_poly_in_x(h);  // outer u, inner z
  const int m = std::max(0, H.degree());
  std::vector<Rational> ws;
  std::vector<Poly<Alg>> values;
  for (int i = 0; i <= m; ++i) {
    const Rational w(i);
    BiPoly<Alg> g = fam.f_hat - BiPoly<Alg>::monomial(Alg(w), 0, fam.d);
    ws.push_back(w);
    values.push_back(resultant(H, as_poly_in_x(g)));
  }
  int top = -1;
  for (const auto& v : values) top = std::max(top, v.degree());
  for (int j = 0; j <= top; ++j) {
    std::vector<Alg> ys;
    for (const auto& v : values) ys.push_back(v.coeff(j));
    Poly<Alg> r = interpolate(ws, ys);
    r.normalize();
    if (!r.empty()) return r;
  }
  throw DegenerateGeometry("limit eliminant vanishes identically (common component)");
}

struct PointScan {
  InfinityPoint point;
  LocalizedFamily family;
  int k = 0;  // u-order of h_hat at z = 0
  std::vector<PuiseuxBranch> branches;
  Poly<Alg> r0;
  std::vector<AlgebraicNumber> limits;  // real finite limits, ascending
};

struct CandidatePoint {
  InfinityPoint point;
  AlgebraicNumber lambda;
  std::vector<int> branches;  // indices into the point's branch list
  bool in_oracle = false;
};

struct InfinityScan {
  MilnorSet milnor;
  std::vector<InfinityPoint> points;  // all real Milnor points at infinity
  std::vector<PointScan> scans;       // those with f_d(p) = 0
  std::vector<CandidatePoint> candidates;
};

/// Branches, limits and oracle at one point at infinity.
inline PointScan scan_point(const BiPoly<Rational>& f, const InfinityPoint& p) {
  PointScan s;
  s.point = p;
  s.family = localize_at(f, p);
  const auto& fam = s.family;
  s.k = puiseux_order(fam.h_hat);
  s.branches = puiseux_branches_with_limits(fam.h_hat, fam.f_hat, fam.d, fam.base);
  s.r0 = limits_oracle(fam);
  Poly<Alg> chis(Alg(1));
  for (const auto& b : s.branches)
    if (b.limit) chis = chis * squarefree_part(b.chi);
  if (chis.degree() < 1) return s;
  Poly<Alg> g = gcd(squarefree_part(chis), s.r0);
  for (auto& r : isolate_real_roots(g)) s.limits.push_back(to_algebraic_number(r));
  return s;
}

inline InfinityScan scan_infinity(const BiPoly<Rational>& f) {
  InfinityScan out;
  out.milnor = milnor_polynomial(f);
  out.points = milnor_points_at_infinity(out.milnor);
  for (const auto& p : out.points) {
    if (!top_form_vanishes(f, p)) continue;
    out.scans.push_back(scan_point(f, p));
  }
  for (const auto& s : out.scans) {
    for (const auto& lam : s.limits) {
      CandidatePoint c;
      c.point = s.point;
      c.lambda = lam;
      c.in_oracle = true;
      for (std::size_t i = 0; i < s.branches.size(); ++i) {
        const auto& b = s.branches[i];
        if (!b.limit) continue;
        const Alg r = lam.is_rational() ? Alg(lam.rational_value()) : Alg();
        if (lam.is_rational()) {
          if (is_zero(b.chi(r))) c.branches.push_back(static_cast<int>(i));
        } else if (norm_to_rational(b.chi).degree() >= 1 &&
                   sign_at_root(norm_to_rational(b.chi), lam.root()) == 0) {
          c.branches.push_back(static_cast<int>(i));
        }
      }
      out.candidates.push_back(std::move(c));
    }
  }
  return out;
}

inline std::vector<CandidatePoint> candidate_points(const BiPoly<Rational>& f) { return scan_infinity(f).candidates; }

}  // namespace bifurcata
