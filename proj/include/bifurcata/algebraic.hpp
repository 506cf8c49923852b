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

#include <string>
#include <utility>
#include <vector>

#include "bifurcata/bipoly.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/rational.hpp"
#include "bifurcata/real_root.hpp"
#include "bifurcata/tower.hpp"

namespace bifurcata {

/// Characteristic polynomial det(w I - M) by Berkowitz' division-free
/// algorithm. Entries may live in any commutative ring.
template <class R>
Poly<R> characteristic_polynomial(const std::vector<std::vector<R>>& M) {
  const std::size_t n = M.size();
  // C holds the coefficient vector (highest first) of the char poly of the
  // leading r x r submatrix.
  std::vector<R> C{R(1), R(0) - M[0][0]};
  if (n == 0) return Poly<R>(R(1));
  for (std::size_t r = 1; r < n; ++r) {
    // Partition the leading (r+1)x(r+1) block as [[A, S], [Rrow, m]].
    std::vector<R> Rrow(M[r].begin(), M[r].begin() + static_cast<long>(r));
    std::vector<R> S(r);
    for (std::size_t i = 0; i < r; ++i) S[i] = M[i][r];
    const R& m = M[r][r];
    // Toeplitz column: 1, -m, -R S, -R A S, -R A^2 S, ...
    std::vector<R> col(r + 2, R(0));
    col[0] = R(1);
    col[1] = R(0) - m;
    std::vector<R> v = S;
    for (std::size_t k = 2; k < r + 2; ++k) {
      R dot(0);
      for (std::size_t i = 0; i < r; ++i) dot = dot + Rrow[i] * v[i];
      col[k] = R(0) - dot;
      std::vector<R> nv(r, R(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) nv[i] = nv[i] + M[i][j] * v[j];
      v = std::move(nv);
    }
    // new C = T * C where T is lower-triangular Toeplitz (r+2) x (r+1)
    std::vector<R> nc(r + 2, R(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] = nc[i] + col[i - j] * C[j];
    C = std::move(nc);
  }
  std::reverse(C.begin(), C.end());
  return Poly<R>(std::move(C));
}

template <class R>
R determinant(const std::vector<std::vector<R>>& M) {
  Poly<R> c = characteristic_polynomial(M);
  R d = c.coeff(0);
  return (M.size() % 2) ? R(0) - d : d;
}

namespace algebraic_detail {

inline NodePtr deepest_node(const Poly<Alg>& p) {
  NodePtr best;
  for (const auto& c : p.coeffs())
    if (c.node() && (!best || c.node()->depth > best->depth)) best = c.node();
  return best;
}

/// Norm of P in L[w] down to K[w] where L = K(theta) is the level `n`.
inline Poly<Alg> norm_one_level(const Poly<Alg>& P, const NodePtr& n) {
  const int deg = n->degree();
  if (P.degree() == 1 && P[1].is_rational() && P[1].rational() == 1) {
    // N(w - a) is the characteristic polynomial of multiplication by a, a
    // matrix over K rather than over K[w]
    auto cur = (Alg(0) - P[0]).coefficients_at(n);
    tower_detail::reduce(cur, *n);
    cur.resize(static_cast<std::size_t>(deg), Alg(0));
    std::vector<std::vector<Alg>> M(static_cast<std::size_t>(deg), std::vector<Alg>(static_cast<std::size_t>(deg)));
    for (int k = 0; k < deg; ++k) {
      for (int i = 0; i < deg; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(i)];
      const Alg top = cur[static_cast<std::size_t>(deg - 1)];
      for (int i = deg - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = Alg(0);
      for (int i = 0; i < deg; ++i)
        cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i)] - top * n->modulus[static_cast<std::size_t>(i)];
    }
    return characteristic_polynomial(M);
  }
  // element of (K[w])[theta]
  std::vector<Poly<Alg>> e(static_cast<std::size_t>(deg));
  for (int j = 0; j <= P.degree(); ++j) {
    auto rep = P[static_cast<std::size_t>(j)].coefficients_at(n);
    tower_detail::reduce(rep, *n);
    for (std::size_t i = 0; i < rep.size(); ++i) {
      Poly<Alg> t = Poly<Alg>::monomial(rep[i], j);
      e[i] = e[i] + t;
    }
  }
  // columns of the multiplication matrix: e * theta^k mod m
  std::vector<std::vector<Poly<Alg>>> M(static_cast<std::size_t>(deg), std::vector<Poly<Alg>>(static_cast<std::size_t>(deg)));
  std::vector<Poly<Alg>> cur = e;
  for (int k = 0; k < deg; ++k) {
    for (int i = 0; i < deg; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(i)];
    // multiply by theta: shift, then reduce the overflow with the monic modulus
    Poly<Alg> top = cur[static_cast<std::size_t>(deg - 1)];
    for (int i = deg - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = Poly<Alg>();
    if (!top.empty())
      for (int i = 0; i < deg; ++i)
        cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i)] - top.scaled(n->modulus[static_cast<std::size_t>(i)]);
  }
  return determinant(M);
}

}  // namespace algebraic_detail

/// Product of all conjugates of P over Q, as a polynomial in the same
/// variable with rational coefficients. Division free.
inline Poly<Rational> norm_to_rational(Poly<Alg> P) {
  while (NodePtr n = algebraic_detail::deepest_node(P)) P = algebraic_detail::norm_one_level(P, n);
  std::vector<Rational> out;
  for (const auto& c : P.coeffs()) out.push_back(c.rational());
  return Poly<Rational>(std::move(out));
}

/// Characteristic polynomial over Q of an element of a tower.
inline Poly<Rational> charpoly_over_q(const Alg& a) {
  return norm_to_rational(Poly<Alg>(std::vector<Alg>{-a, Alg(1)}));
}

/// A real algebraic number: squarefree defining polynomial over Q with a
/// rational isolating interval. Interval refinement mutates the cache, so
/// values are confined to one thread while being refined.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  explicit AlgebraicNumber(const Rational& q)
      : root_{Poly<Rational>(std::vector<Rational>{-q, Rational(1)}), q, q, 0} {}
  explicit AlgebraicNumber(RealRoot<Rational> r) : root_(std::move(r)) {
    root_.poly = squarefree_part(root_.poly);
    if (root_.exact()) return;
    if (root_.poly.degree() == 1) {
      Rational q = -root_.poly[0] / root_.poly[1];
      root_ = {root_.poly, q, q, 0};
      return;
    }
    // a rational root has denominator dividing the integer leading coefficient
    Integer l(1);
    for (const auto& c : root_.poly.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Rational lead = root_.poly.lead() * Rational(l);
    root_.refine_to(Rational(1) / (2 * lead * lead));
    if (root_.exact()) return;
    Rational q = simplest_between(root_.lo, root_.hi);
    if (sign_at(root_.poly, q) == 0) root_ = {root_.poly, q, q, 0};
  }

  /// The unique root of p (any nonzero poly) in [lo, hi]. When lo < hi the
  /// endpoints must not be roots.
  static AlgebraicNumber root_of(const Poly<Rational>& p, const Rational& lo, const Rational& hi) {
    return AlgebraicNumber(make_real_root(squarefree_part(p), lo, hi));
  }

  const Poly<Rational>& defining() const { return root_.poly; }
  const Rational& lo() const { return root_.lo; }
  const Rational& hi() const { return root_.hi; }
  bool is_rational() const { return root_.exact(); }
  const Rational& rational_value() const { return root_.lo; }
  Interval interval() const { return root_.interval(); }
  RealRoot<Rational>& root() const { return root_; }

  /// Same number with interval width at most `width`.
  AlgebraicNumber refine(const Rational& width) const {
    AlgebraicNumber r = *this;
    r.root_.refine_to(width);
    return r;
  }
  void refine_in_place(const Rational& width) const { root_.refine_to(width); }

  int sign() const { return bifurcata::compare(root_, Rational(0)); }
  double to_double() const {
    refine_in_place(pow2(-60));
    return bifurcata::to_double(root_.interval().mid());
  }

  /// Element of a tower denoting this number (new anchored level if needed).
  Alg to_alg() const {
    if (is_rational()) return Alg(root_.lo);
    return Alg::generator(make_anchored_level(nullptr, to_alg(root_.poly), root_.lo, root_.hi));
  }

 private:
  static Poly<Alg> to_alg(const Poly<Rational>& p) { return bifurcata::to_alg(p); }
  mutable RealRoot<Rational> root_;
};

/// Exact three-way comparison.
inline int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.is_rational()) return compare(a.root(), b.rational_value());
  if (a.is_rational()) return -compare(b.root(), a.rational_value());
  auto& ra = a.root();
  auto& rb = b.root();
  if (ra.hi <= rb.lo) return -1;
  if (rb.hi <= ra.lo) return 1;
  Poly<Rational> g = gcd(ra.poly, rb.poly);
  if (g.degree() >= 1 && sign_at_root(g, ra) == 0) {
    // a is a root of b's polynomial; equal iff it lies in b's interval
    if (compare(ra, rb.lo) <= 0) return -1;
    if (compare(ra, rb.hi) >= 0) return 1;
    return 0;
  }
  while (true) {
    if (ra.hi <= rb.lo) return -1;
    if (rb.hi <= ra.lo) return 1;
    ra.bisect();
    rb.bisect();
    if (ra.exact()) return -compare(rb, ra.lo);
    if (rb.exact()) return compare(ra, rb.lo);
  }
}

inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
inline bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }

/// Sign of a rational bivariate polynomial at a point with real algebraic
/// coordinates. Exact: zero is certified through the tower gcd test.
inline int sign_at(const BiPoly<Rational>& p, const AlgebraicNumber& x, const AlgebraicNumber& y) {
  Alg ax = x.to_alg();
  NodePtr base = ax.node();
  Alg ay = y.is_rational() ? Alg(y.rational_value())
                           : Alg::generator(make_anchored_level(base, to_alg(y.defining()), y.lo(), y.hi()));
  return sign(p(ax, ay));
}

/// Converts a real value given by an element of an anchored tower to an
/// AlgebraicNumber over Q.
inline AlgebraicNumber to_algebraic_number(const Alg& a) {
  if (a.is_rational()) return AlgebraicNumber(a.rational());
  Poly<Rational> N = squarefree_part(charpoly_over_q(a));
  if (N.degree() == 1) return AlgebraicNumber(-N[0] / N[1]);
  for (long bits = 16;; bits += 16) {
    Interval iv = enclose(a, bits);
    const int slo = sign_at(N, iv.lo), shi = sign_at(N, iv.hi);
    if (slo == 0 && is_zero(a - Alg(iv.lo))) return AlgebraicNumber(iv.lo);
    if (shi == 0 && is_zero(a - Alg(iv.hi))) return AlgebraicNumber(iv.hi);
    if (slo != 0 && shi != 0 && count_roots(N, iv.lo, iv.hi) == 1) return AlgebraicNumber::root_of(N, iv.lo, iv.hi);
  }
}

/// Converts a real root of a polynomial over an anchored tower.
inline AlgebraicNumber to_algebraic_number(RealRoot<Alg> r) {
  if (r.exact()) return AlgebraicNumber(r.lo);
  Poly<Rational> N = squarefree_part(norm_to_rational(r.poly));
  while (true) {
    if (r.exact()) return AlgebraicNumber(r.lo);
    if (sign_at(N, r.lo) != 0 && sign_at(N, r.hi) != 0 && count_roots(N, r.lo, r.hi) == 1)
      return AlgebraicNumber::root_of(N, r.lo, r.hi);
    r.bisect();
  }
}

/// Real roots of a polynomial over Q as algebraic numbers, ascending.
inline std::vector<AlgebraicNumber> real_roots(const Poly<Rational>& p) {
  std::vector<AlgebraicNumber> out;
  for (auto& r : isolate_real_roots(p)) out.emplace_back(std::move(r));
  return out;
}

/// Shortest decimal (at least one fractional digit) whose rounding interval
/// contains the isolating interval, after refining to width 2^-24.
inline std::string decimal_text(const AlgebraicNumber& a) {
  a.refine_in_place(pow2(-24));
  const Interval iv = a.interval();
  Integer ten_k(10);
  for (int k = 1;; ++k, ten_k *= 10) {
    Rational scale(ten_k);
    Rational m = iv.mid() * scale;
    Integer D = floor_int(m + Rational(1, 2));
    Rational half(1, 2);
    if (Rational(D) - half < iv.lo * scale && iv.hi * scale < Rational(D) + half) {
      const bool neg = D < 0;
      Integer absd = neg ? Integer(-D) : D;
      std::string digits = absd.get_str();
      if (digits.size() <= static_cast<std::size_t>(k)) digits.insert(0, static_cast<std::size_t>(k) + 1 - digits.size(), '0');
      std::string s = digits.substr(0, digits.size() - static_cast<std::size_t>(k)) + "." + digits.substr(digits.size() - static_cast<std::size_t>(k));
      return (neg ? "-" : "") + s;
    }
    if (k > 80) return bifurcata::to_string(iv.mid());
  }
}

}  // namespace bifurcata
