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

// Real root isolation over ordered fields with exact sign (Rational, or a
// tower of anchored real extensions). Descartes' rule of signs with bisection.

#include <algorithm>
#include <vector>

#include "bifurcata/poly.hpp"
#include "bifurcata/rational.hpp"
#include "bifurcata/tower.hpp"

namespace bifurcata {

/// Interval enclosure of p over the box x, with coefficient enclosures.
template <class T>
Interval enclose_eval(const Poly<T>& p, const Interval& x, long bits) {
  if (p.empty()) return Interval(Rational(0));
  Interval acc = enclose(p.lead(), bits);
  for (int i = p.degree() - 1; i >= 0; --i)
    acc = (acc * x + enclose(p[static_cast<std::size_t>(i)], bits)).rounded(bits + 16);
  return acc;
}

template <class T>
int sign_at(const Poly<T>& p, const Rational& q) {
  return sign(p(T(q)));
}

/// Number of sign changes in the coefficient sequence, zeros skipped.
template <class T>
int sign_variations(const Poly<T>& p) {
  int last = 0, v = 0;
  for (const auto& c : p.coeffs()) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Rational B, a power of two, with every real root of p inside (-B, B).
template <class T>
Rational root_bound(const Poly<T>& p) {
  const long bits = 16;
  Interval lc = enclose(p.lead(), bits);
  for (long b = 32; lc.contains_zero(); b *= 2) lc = enclose(p.lead(), b);
  Rational lmin = std::min(abs(lc.lo), abs(lc.hi));
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, enclose(p[static_cast<std::size_t>(i)], bits).mag());
  Rational b = 1 + m / lmin;
  Rational r(1);
  while (r <= b) r *= 2;
  return r;
}

/// A real root of a squarefree polynomial over T, isolated by [lo, hi].
/// Either lo == hi (exact rational root) or p(lo), p(hi) are nonzero with
/// opposite signs and no other root lies in between.
template <class T>
struct RealRoot {
  Poly<T> poly;
  Rational lo, hi;
  int sign_lo = 0;

  bool exact() const { return lo == hi; }
  Interval interval() const { return {lo, hi}; }

  /// Bisect until hi - lo <= width.
  void refine_to(const Rational& width) {
    while (lo != hi && hi - lo > width) bisect();
  }

  void bisect() {
    if (lo == hi) return;
    Rational mid = (lo + hi) / 2;
    int s = sign_at(poly, mid);
    if (s == 0) {
      lo = hi = mid;
    } else if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
};

template <class T>
RealRoot<T> make_real_root(const Poly<T>& p, const Rational& lo, const Rational& hi) {
  RealRoot<T> r{p, lo, hi, 0};
  if (lo != hi) r.sign_lo = sign_at(p, lo);
  return r;
}

namespace roots_detail {

template <class T>
int descartes_unit(const Poly<T>& q) {
  // Variations of (x+1)^n q(1/(x+1)) bound the roots in (0, 1).
  return sign_variations(taylor_shift(reversed(q), T(1)));
}

template <class T>
bool vanishes_at_one(const Poly<T>& q) {
  T s(0);
  for (const auto& c : q.coeffs()) s = s + c;
  return is_zero(s);
}

template <class T>
void isolate_unit(const Poly<T>& p, const Poly<T>& q, const Rational& a, const Rational& b,
                  std::vector<RealRoot<T>>& out) {
  const int v = descartes_unit(q);
  if (v == 0) return;
  const bool endpoint_root = is_zero(q.coeff(0)) || vanishes_at_one(q);
  if (v == 1 && !endpoint_root) {
    out.push_back(make_real_root(p, a, b));
    return;
  }
  Rational mid = (a + b) / 2;
  Poly<T> left = scale_variable(q, T(Rational(1, 2)));
  Poly<T> right = taylor_shift(left, T(1));
  isolate_unit(p, left, a, mid, out);
  if (is_zero(left(T(1)))) out.push_back(make_real_root(p, mid, mid));
  isolate_unit(p, right, mid, b, out);
}

}  // namespace roots_detail

/// All real roots of p (made squarefree internally), ascending.
template <class T>
std::vector<RealRoot<T>> isolate_real_roots(const Poly<T>& input) {
  Poly<T> p = squarefree_part(input);
  std::vector<RealRoot<T>> out;
  if (p.degree() < 1) return out;
  Rational bound = root_bound(p);
  // map (-B, B) onto (0, 1)
  Poly<T> q = scale_variable(taylor_shift(p, T(Rational(-bound))), T(Rational(2 * bound)));
  roots_detail::isolate_unit(p, q, -bound, bound, out);
  return out;
}

/// Sturm sequence of p over a field.
template <class T>
std::vector<Poly<T>> sturm_sequence(const Poly<T>& p) {
  std::vector<Poly<T>> s{p, derivative(p)};
  s[0].normalize();
  s[1].normalize();
  while (!s.back().empty() && s.back().degree() > 0) {
    Poly<T> r = -rem(s[s.size() - 2], s.back());
    r.normalize();
    if (r.empty()) break;
    s.push_back(r);
  }
  return s;
}

template <class T>
int sturm_variations_at(const std::vector<Poly<T>>& seq, const Rational& x) {
  int last = 0, v = 0;
  for (const auto& f : seq) {
    int s = sign_at(f, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Number of distinct real roots of p in the half-open interval (a, b].
template <class T>
int count_roots(const Poly<T>& p, const Rational& a, const Rational& b) {
  auto seq = sturm_sequence(squarefree_part(p));
  if (seq[0].degree() < 1) return 0;
  return sturm_variations_at(seq, a) - sturm_variations_at(seq, b);
}

/// Exact sign of r at the root.
template <class T>
int sign_at_root(const Poly<T>& r, RealRoot<T>& root) {
  if (root.exact()) return sign_at(r, root.lo);
  Poly<T> g = gcd(root.poly, r);
  if (g.degree() >= 1) {
    const int s1 = sign_at(g, root.lo);
    const int s2 = sign_at(g, root.hi);
    if (s1 * s2 < 0) return 0;
  }
  for (long bits = 24;; bits += 24) {
    root.refine_to(pow2(-bits));
    if (root.exact()) return sign_at(r, root.lo);
    int s = enclose_eval(r, root.interval(), bits + 16).certain_sign();
    if (s != 0) return s;
  }
}

/// Exact comparison of a root with a rational.
template <class T>
int compare(RealRoot<T>& root, const Rational& q) {
  if (root.exact()) return sgn(root.lo - q);
  if (q <= root.lo) return 1;
  if (q >= root.hi) return -1;
  int s = sign_at(root.poly, q);
  if (s == 0) {
    root.lo = root.hi = q;
    return 0;
  }
  if (s == root.sign_lo) {
    root.lo = q;
    return 1;
  }
  root.hi = q;
  return -1;
}

/// Exact comparison of two real roots (over the same field).
template <class T>
int compare(RealRoot<T>& a, RealRoot<T>& b) {
  if (b.exact()) return compare(a, b.lo);
  if (a.exact()) return -compare(b, a.lo);
  if (a.hi <= b.lo) return -1;
  if (b.hi <= a.lo) return 1;
  Poly<T> g = gcd(a.poly, b.poly);
  if (g.degree() >= 1 && sign_at_root(g, a) == 0) {
    // a is a root of b's polynomial: equal iff it lies inside b's interval
    if (compare(a, b.lo) <= 0) return -1;
    if (compare(a, b.hi) >= 0) return 1;
    return 0;
  }
  while (true) {
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    a.bisect();
    b.bisect();
    if (a.exact()) return -compare(b, a.lo);
    if (b.exact()) return compare(a, b.lo);
  }
}

/// A rational strictly between two roots with a < b.
template <class T>
Rational rational_between(RealRoot<T>& a, RealRoot<T>& b) {
  while (!(a.hi < b.lo)) {
    a.bisect();
    b.bisect();
  }
  const Rational lo = (2 * a.hi + b.lo) / 3, hi = (a.hi + 2 * b.lo) / 3;
  return simplest_between(lo, hi);
}

}  // namespace bifurcata
