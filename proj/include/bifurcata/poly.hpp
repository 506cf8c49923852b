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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "bifurcata/rational.hpp"

namespace bifurcata {

/// Dense univariate polynomial over a commutative ring T.
///
/// T must be constructible from int and provide the free functions
/// is_zero (semantic), is_structural_zero and exact_div. Field algorithms
/// (divrem, gcd, squarefree) additionally need inv. Nested use such as
/// Poly<Poly<Rational>> gives recursive multivariate polynomials; the outer
/// variable is always the main one.
template <class T>
class Poly {
 public:
  using coeff_type = T;

  Poly() = default;
  Poly(const T& c) {  // NOLINT(google-explicit-constructor)
    if (!is_structural_zero(c)) c_.push_back(c);
  }
  Poly(int c) : Poly(T(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const T& c, int k) {
    if (is_structural_zero(c)) return Poly();
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = c;
    Poly p;
    p.c_ = std::move(v);
    return p;
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool empty() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const T& lead() const { return c_.back(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(int i) const {
    if (i < 0 || i > degree()) return T(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<T>& coeffs() const { return c_; }

  void set_coeff(int i, const T& v) {
    if (i > degree()) c_.resize(static_cast<std::size_t>(i) + 1, T(0));
    c_[static_cast<std::size_t>(i)] = v;
    trim();
  }

  /// Drops structurally zero leading coefficients.
  void trim() {
    while (!c_.empty() && is_structural_zero(c_.back())) c_.pop_back();
  }

  /// Drops leading coefficients that are zero as field elements. For
  /// extension coefficients this may refine the extension (see tower.hpp).
  Poly& normalize() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    return *this;
  }

  /// Lowest index with a structurally nonzero coefficient (-1 for 0).
  int low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_structural_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  template <class U>
  U operator()(const U& at) const {
    if (c_.empty()) return U(0);
    U acc = U(c_.back());
    for (int i = degree() - 1; i >= 0; --i) acc = acc * at + U(c_[static_cast<std::size_t>(i)]);
    return acc;
  }
  T operator()(const T& at) const {
    if (c_.empty()) return T(0);
    T acc = c_.back();
    for (int i = degree() - 1; i >= 0; --i) acc = acc * at + c_[static_cast<std::size_t>(i)];
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_structural_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Coefficient-wise scaling by a ring element.
  Poly scaled(const T& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  /// x^k * p
  Poly shifted_up(int k) const {
    if (c_.empty() || k == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<std::size_t>(k), T(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  /// p / x^k for k <= low_degree().
  Poly shifted_down(int k) const {
    if (k <= 0) return *this;
    if (k > degree()) return Poly();
    return Poly(std::vector<T>(c_.begin() + k, c_.end()));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::vector<T> c_;
};

template <class T>
bool is_structural_zero(const Poly<T>& p) {
  return p.empty();
}

template <class T>
bool is_zero(const Poly<T>& p) {
  for (const auto& c : p.coeffs())
    if (!is_zero(c)) return false;
  return true;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() < 1) return Poly<T>();
  std::vector<T> r;
  r.reserve(p.size() - 1);
  for (int i = 1; i <= p.degree(); ++i) r.push_back(p[static_cast<std::size_t>(i)] * T(i));
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> pow(const Poly<T>& p, int k) {
  Poly<T> r(T(1)), base = p;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

template <class T>
T pow(const T& a, int k) {
  T r(1), base = a;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

/// p(x + c)
template <class T>
Poly<T> taylor_shift(const Poly<T>& p, const T& c) {
  std::vector<T> a = p.coeffs();
  const int n = p.degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j)
      a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] + c * a[static_cast<std::size_t>(j) + 1];
  return Poly<T>(std::move(a));
}

/// p(c * x)
template <class T>
Poly<T> scale_variable(const Poly<T>& p, const T& c) {
  std::vector<T> a = p.coeffs();
  T f(1);
  for (auto& v : a) {
    v = v * f;
    f = f * c;
  }
  return Poly<T>(std::move(a));
}

/// x^n p(1/x)
template <class T>
Poly<T> reversed(const Poly<T>& p) {
  std::vector<T> a = p.coeffs();
  std::reverse(a.begin(), a.end());
  return Poly<T>(std::move(a));
}

/// Composition p(q).
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
  Poly<T> r;
  for (int i = p.degree(); i >= 0; --i) r = r * q + Poly<T>(p[static_cast<std::size_t>(i)]);
  return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. b must be normalized.
template <class T>
Poly<T> pseudo_rem(Poly<T> a, const Poly<T>& b) {
  if (b.empty()) throw std::domain_error("pseudo_rem by zero polynomial");
  const int db = b.degree();
  int e = a.degree() - db + 1;
  if (e <= 0) return a;
  const T& lb = b.lead();
  while (!a.empty() && a.degree() >= db) {
    const int k = a.degree() - db;
    T la = a.lead();
    std::vector<T> v = a.coeffs();
    v.pop_back();
    for (auto& c : v) c = c * lb;
    for (int i = 0; i < db; ++i)
      v[static_cast<std::size_t>(i + k)] = v[static_cast<std::size_t>(i + k)] - la * b[static_cast<std::size_t>(i)];
    a = Poly<T>(std::move(v));
    --e;
  }
  if (e > 0) a = a.scaled(pow(lb, e));
  return a;
}

/// Exact quotient a / b in R[x] when R has exact division. Throws if inexact.
template <class T>
Poly<T> exact_div(Poly<T> a, Poly<T> b) {
  b.normalize();
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) {
    if (!is_zero(a)) throw std::domain_error("inexact polynomial division");
    return Poly<T>();
  }
  const int db = b.degree();
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
  a.normalize();
  while (!a.empty() && a.degree() >= db) {
    const int k = a.degree() - db;
    T c = exact_div(a.lead(), b.lead());
    q[static_cast<std::size_t>(k)] = c;
    std::vector<T> v = a.coeffs();
    v.pop_back();
    for (int i = 0; i < db; ++i)
      v[static_cast<std::size_t>(i + k)] = v[static_cast<std::size_t>(i + k)] - c * b[static_cast<std::size_t>(i)];
    a = Poly<T>(std::move(v));
    a.normalize();
  }
  if (!a.empty()) throw std::domain_error("inexact polynomial division");
  return Poly<T>(std::move(q));
}

/// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(Poly<T> a, Poly<T> b) {
  b.normalize();
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  a.normalize();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
  T ilb = inv(b.lead());
  while (!a.empty() && a.degree() >= db) {
    const int k = a.degree() - db;
    T c = a.lead() * ilb;
    q[static_cast<std::size_t>(k)] = c;
    std::vector<T> v = a.coeffs();
    v.pop_back();
    for (int i = 0; i < db; ++i)
      v[static_cast<std::size_t>(i + k)] = v[static_cast<std::size_t>(i + k)] - c * b[static_cast<std::size_t>(i)];
    a = Poly<T>(std::move(v));
    a.normalize();
  }
  return {Poly<T>(std::move(q)), a};
}

template <class T>
Poly<T> rem(const Poly<T>& a, const Poly<T>& b) {
  return divrem(a, b).second;
}

template <class T>
Poly<T> monic(Poly<T> p) {
  p.normalize();
  if (p.empty()) return p;
  return p.scaled(inv(p.lead()));
}

/// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  a.normalize();
  b.normalize();
  while (!b.empty()) {
    if (b.degree() == 0) return Poly<T>(T(1));  // a nonzero constant divides everything
    Poly<T> r = rem(a, b);
    r.normalize();
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

/// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> xgcd(Poly<T> a, Poly<T> b) {
  Poly<T> s0(T(1)), s1, t0, t1(T(1));
  a.normalize();
  b.normalize();
  while (!b.empty()) {
    auto [q, r] = divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    Poly<T> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  T il = inv(a.lead());
  return {a.scaled(il), s0.scaled(il), t0.scaled(il)};
}

/// p / gcd(p, p'), made monic.
template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
  Poly<T> q = p;
  q.normalize();
  if (q.degree() < 1) return monic(q);
  Poly<T> g = gcd(q, derivative(q));
  return monic(divrem(q, g).first);
}

/// Yun's squarefree decomposition: monic, pairwise coprime, nonconstant
/// factors whose product is the squarefree part of p.
template <class T>
std::vector<Poly<T>> squarefree_factors(const Poly<T>& p) {
  std::vector<Poly<T>> out;
  Poly<T> a = p;
  a.normalize();
  if (a.degree() < 1) return out;
  const Poly<T> da = derivative(a);
  const Poly<T> b = gcd(a, da);
  Poly<T> c = divrem(a, b).first;
  Poly<T> d = divrem(da, b).first - derivative(c);
  while (c.degree() >= 1) {
    d.normalize();
    Poly<T> g = gcd(c, d);
    if (g.degree() >= 1) out.push_back(monic(g));
    c = divrem(c, g).first;
    d = divrem(d, g).first - derivative(c);
  }
  return out;
}

/// Pairwise coprime squarefree polynomials with the same roots as the inputs.
template <class T>
std::vector<Poly<T>> coprime_basis(const std::vector<Poly<T>>& ps) {
  std::vector<Poly<T>> basis;
  for (const auto& p : ps) {
    for (Poly<T> q : squarefree_factors(p)) {
      std::vector<Poly<T>> next;
      for (auto& b : basis) {
        Poly<T> g = gcd(b, q);
        if (g.degree() < 1) {
          next.push_back(std::move(b));
          continue;
        }
        Poly<T> rest = divrem(b, g).first;
        if (rest.degree() >= 1) next.push_back(monic(rest));
        next.push_back(monic(g));
        q = divrem(q, g).first;
      }
      if (q.degree() >= 1) next.push_back(monic(q));
      basis = std::move(next);
    }
  }
  return basis;
}

/// Resultant over an integral domain via the subresultant PRS.
template <class T>
T resultant(Poly<T> a, Poly<T> b) {
  a.normalize();
  b.normalize();
  if (a.empty() || b.empty()) return T(0);
  if (a.degree() == 0 && b.degree() == 0) return T(1);
  if (a.degree() == 0) return pow(a.lead(), b.degree());
  if (b.degree() == 0) return pow(b.lead(), a.degree());
  T s(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  T g(1), h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    Poly<T> r = pseudo_rem(a, b);
    r.normalize();
    a = std::move(b);
    if (r.empty()) return T(0);
    T divisor = g * pow(h, delta);
    std::vector<T> v = r.coeffs();
    for (auto& c : v) c = exact_div(c, divisor);
    b = Poly<T>(std::move(v));
    b.normalize();
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(pow(g, delta), pow(h, delta - 1));
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      T hb = da == 1 ? b.lead() : exact_div(pow(b.lead(), da), pow(h, da - 1));
      return s * hb;
    }
  }
}

/// Subresultant PRS of a and b over an integral domain, larger degree first:
/// the scaled remainders in order. An element following one of degree k is
/// the subresultant S_(k-1) up to sign.
template <class T>
std::vector<Poly<T>> subresultant_prs(Poly<T> a, Poly<T> b) {
  a.normalize();
  b.normalize();
  if (a.degree() < b.degree()) std::swap(a, b);
  std::vector<Poly<T>> out;
  if (b.empty()) return out;
  out.push_back(a);
  out.push_back(b);
  T g(1), h(1);
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    Poly<T> r = pseudo_rem(a, b);
    r.normalize();
    a = std::move(b);
    if (r.empty()) break;
    const T divisor = g * pow(h, delta);
    std::vector<T> v = r.coeffs();
    for (auto& c : v) c = exact_div(c, divisor);
    b = Poly<T>(std::move(v));
    b.normalize();
    out.push_back(b);
    g = a.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_div(pow(g, delta), pow(h, delta - 1));
    }
  }
  return out;
}

/// Content (gcd of coefficients) for polynomials over a Euclidean domain of
/// polynomials, used by recursive gcd.
template <class T>
Poly<T> content(const Poly<Poly<T>>& p) {
  Poly<T> g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

template <class T>
Poly<Poly<T>> primitive_part(const Poly<Poly<T>>& p) {
  Poly<T> c = content(p);
  if (c.empty()) return p;
  std::vector<Poly<T>> v;
  v.reserve(p.size());
  for (const auto& e : p.coeffs()) v.push_back(divrem(e, c).first);
  return Poly<Poly<T>>(std::move(v));
}

/// Gcd in F[y][x] (outer variable x) via the primitive PRS. The result has a
/// monic leading coefficient in the inner variable.
template <class T>
Poly<Poly<T>> gcd(Poly<Poly<T>> a, Poly<Poly<T>> b) {
  a.normalize();
  b.normalize();
  if (a.empty()) return b.empty() ? b : primitive_part(b).scaled(content(b));
  if (b.empty()) return primitive_part(a).scaled(content(a));
  Poly<T> cg = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.empty() && b.degree() > 0) {
    Poly<Poly<T>> r = pseudo_rem(a, b);
    r.normalize();
    a = std::move(b);
    b = r.empty() ? r : primitive_part(r);
  }
  Poly<Poly<T>> g = b.empty() ? a : Poly<Poly<T>>(Poly<T>(T(1)));
  g = primitive_part(g).scaled(cg);
  // normalise: make leading coefficient (in the inner variable) of the lead monic
  if (!g.empty()) {
    Poly<T> lc = g.lead();
    lc.normalize();
    if (!lc.empty()) g = g.scaled(Poly<T>(inv(lc.lead())));
  }
  return g;
}

}  // namespace bifurcata
