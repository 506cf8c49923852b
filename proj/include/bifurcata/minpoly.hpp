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

// Minimal polynomial of a real algebraic number. Candidate factors of the
// defining polynomial are formed from conjugate-closed sets of numerically
// computed complex roots and accepted only after exact division over Z.
// If the search is inconclusive the squarefree defining polynomial is kept.

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/rational.hpp"

namespace bifurcata {

/// Scales p to a primitive integer polynomial with positive leading coefficient.
inline Poly<Rational> integer_primitive(const Poly<Rational>& p) {
  if (p.empty()) return p;
  Integer l(1), g(0);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> v;
  for (const auto& c : p.coeffs()) {
    Rational s = c * Rational(l);
    v.push_back(s);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  Rational scale(1, 1);
  scale = Rational(1) / Rational(g);
  if (sgn(v.back()) < 0) scale = -scale;
  for (auto& c : v) c *= scale;
  return Poly<Rational>(std::move(v));
}

namespace minpoly_detail {

using Complex = boost::multiprecision::cpp_complex_100;
using Real = boost::multiprecision::cpp_bin_float_100;

inline Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

/// All complex roots of a squarefree polynomial (Aberth iteration).
inline bool complex_roots(const Poly<Rational>& p, std::vector<Complex>& roots) {
  const int n = p.degree();
  std::vector<Complex> c;
  for (const auto& q : p.coeffs()) c.emplace_back(to_real(q / p.lead()));
  Real bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, Real(abs(c[static_cast<std::size_t>(i)])));
  bound += 1;
  roots.clear();
  for (int k = 0; k < n; ++k) {
    Real ang = Real(2) * boost::math::constants::pi<Real>() * Real(k) / Real(n) + Real("0.4");
    roots.emplace_back(bound * cos(ang) / 2, bound * sin(ang) / 2);
  }
  const Real tol("1e-85");
  for (int it = 0; it < 2000; ++it) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      Complex z = roots[static_cast<std::size_t>(k)];
      Complex v = c.back(), dv = 0;
      for (int i = n - 1; i >= 0; --i) {
        dv = dv * z + v;
        v = v * z + c[static_cast<std::size_t>(i)];
      }
      if (v == Complex(0)) continue;
      Complex ratio = v / dv;
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z - roots[static_cast<std::size_t>(j)]);
      Complex step = ratio / (Complex(1) - ratio * s);
      roots[static_cast<std::size_t>(k)] = z - step;
      worst = std::max(worst, Real(abs(step)) / std::max(Real(1), Real(abs(z))));
    }
    if (worst < tol) return true;
  }
  return false;
}

}  // namespace minpoly_detail

/// Minimal polynomial over Q (primitive, integer coefficients).
inline Poly<Rational> minimal_polynomial(const AlgebraicNumber& a) {
  using namespace minpoly_detail;
  if (a.is_rational()) return integer_primitive(Poly<Rational>(std::vector<Rational>{-a.rational_value(), Rational(1)}));
  Poly<Rational> p = integer_primitive(a.defining());
  const int n = p.degree();
  if (n <= 2 || n > 18) return p;
  std::vector<Complex> roots;
  if (!complex_roots(p, roots)) return p;

  // pair conjugates; each group is one real root or one conjugate pair
  const Real im_tol("1e-60");
  std::vector<std::vector<int>> groups;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = true;
    if (abs(roots[static_cast<std::size_t>(i)].imag()) < im_tol) {
      groups.push_back({i});
      continue;
    }
    int best = -1;
    Real bd = 0;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      Real d = abs(roots[static_cast<std::size_t>(j)] - conj(roots[static_cast<std::size_t>(i)]));
      if (best < 0 || d < bd) best = j, bd = d;
    }
    if (best < 0) return p;
    used[static_cast<std::size_t>(best)] = true;
    groups.push_back({i, best});
  }

  // the group holding a
  a.refine_in_place(pow2(-80));
  const Real mid = to_real(a.interval().mid());
  int home = -1;
  Real hd = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].size() != 1) continue;
    Real d = abs(roots[static_cast<std::size_t>(groups[g][0])].real() - mid);
    if (home < 0 || d < hd) home = static_cast<int>(g), hd = d;
  }
  if (home < 0) return p;

  std::vector<int> others;
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (static_cast<int>(g) != home) others.push_back(static_cast<int>(g));
  const Real L = to_real(p.lead());

  auto try_subset = [&](unsigned mask, Poly<Rational>& out) {
    std::vector<Complex> prod{Complex(1)};
    auto mul = [&](const Complex& r) {
      std::vector<Complex> next(prod.size() + 1, Complex(0));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] += prod[i];
        next[i] -= prod[i] * r;
      }
      prod = std::move(next);
    };
    for (int idx : groups[static_cast<std::size_t>(home)]) mul(roots[static_cast<std::size_t>(idx)]);
    for (std::size_t k = 0; k < others.size(); ++k)
      if (mask & (1u << k))
        for (int idx : groups[static_cast<std::size_t>(others[k])]) mul(roots[static_cast<std::size_t>(idx)]);
    std::vector<Rational> v;
    for (const auto& c : prod) {
      std::string t = Real(round(c.real() * L)).str(0, std::ios_base::fixed);
      if (auto dot = t.find('.'); dot != std::string::npos) t.erase(dot);
      if (t == "-0") t = "0";
      v.emplace_back(Integer(t));
    }
    Poly<Rational> g(std::move(v));
    if (g.degree() < 1) return false;
    if (!rem(p, g).empty()) return false;
    // the factor must vanish at a
    if (a.lo() == a.hi()) {
      if (sign_at(g, a.lo()) != 0) return false;
    } else if (sign_at(g, a.lo()) * sign_at(g, a.hi()) >= 0) {
      return false;
    }
    out = integer_primitive(g);
    return true;
  };

  const std::size_t m = others.size();
  if (m > 16) return p;
  // subsets by increasing factor degree
  std::vector<unsigned> masks(1u << m);
  for (unsigned s = 0; s < masks.size(); ++s) masks[s] = s;
  auto deg_of = [&](unsigned s) {
    int d = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (s & (1u << k)) d += static_cast<int>(groups[static_cast<std::size_t>(others[k])].size());
    return d;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](unsigned x, unsigned y) { return deg_of(x) < deg_of(y); });
  for (unsigned s : masks) {
    if (deg_of(s) + 1 >= n) break;
    Poly<Rational> g;
    if (try_subset(s, g)) return g;
  }
  return p;
}

}  // namespace bifurcata
