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
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/poly.hpp"
#include "bifurcata/rational.hpp"
#include "bifurcata/tower.hpp"

namespace bifurcata {

/// Bivariate polynomial, sparse map (i, j) -> coefficient of x^i y^j.
/// The variable names are only used for printing; charts reuse the type for
/// (u, z) and (v, z).
template <class T>
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, T>;

  BiPoly() = default;
  BiPoly(const T& c) { add(0, 0, c); }  // NOLINT(google-explicit-constructor)
  BiPoly(int c) : BiPoly(T(c)) {}      // NOLINT(google-explicit-constructor)

  static BiPoly x() { return monomial(T(1), 1, 0); }
  static BiPoly y() { return monomial(T(1), 0, 1); }
  static BiPoly monomial(const T& c, int i, int j) {
    BiPoly p;
    p.add(i, j, c);
    return p;
  }

  const Map& terms() const { return m_; }
  bool empty() const { return m_.empty(); }

  T coeff(int i, int j) const {
    auto it = m_.find({i, j});
    return it == m_.end() ? T(0) : it->second;
  }

  void add(int i, int j, const T& c) {
    if (is_structural_zero(c)) return;
    auto [it, fresh] = m_.emplace(Key{i, j}, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_structural_zero(it->second)) m_.erase(it);
    }
  }

  /// Drop coefficients that vanish as field elements.
  BiPoly& normalize() {
    for (auto it = m_.begin(); it != m_.end();) {
      if (is_zero(it->second))
        it = m_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : m_) d = std::max(d, k.first + k.second);
    return d;
  }
  int degree_x() const {
    int d = -1;
    for (const auto& [k, c] : m_) d = std::max(d, k.first);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [k, c] : m_) d = std::max(d, k.second);
    return d;
  }

  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [k, c] : m_) r.m_.emplace(k, -c);
    return r;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [k, c] : b.m_) a.add(k.first, k.second, c);
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (const auto& [k, c] : b.m_) a.add(k.first, k.second, -c);
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.m_)
      for (const auto& [kb, cb] : b.m_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  BiPoly scaled(const T& s) const {
    BiPoly r;
    for (const auto& [k, c] : m_) r.add(k.first, k.second, c * s);
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return is_zero(a - b); }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Value at a point of any ring U that T converts to.
  template <class U>
  U operator()(const U& x, const U& y) const {
    U acc(0);
    for (const auto& [k, c] : m_) acc = acc + U(c) * pow(x, k.first) * pow(y, k.second);
    return acc;
  }

 private:
  Map m_;
};

template <class T>
bool is_zero(const BiPoly<T>& p) {
  for (const auto& [k, c] : p.terms())
    if (!is_zero(c)) return false;
  return true;
}

template <class T>
BiPoly<T> pow(const BiPoly<T>& p, int k) {
  BiPoly<T> r(T(1));
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

enum class Var { X, Y };

template <class T>
BiPoly<T> partial_derivative(const BiPoly<T>& p, Var v) {
  BiPoly<T> r;
  for (const auto& [k, c] : p.terms()) {
    const int e = v == Var::X ? k.first : k.second;
    if (e == 0) continue;
    if (v == Var::X)
      r.add(k.first - 1, k.second, c * T(e));
    else
      r.add(k.first, k.second - 1, c * T(e));
  }
  return r;
}

/// Exchange the two variables.
template <class T>
BiPoly<T> swap_variables(const BiPoly<T>& p) {
  BiPoly<T> r;
  for (const auto& [k, c] : p.terms()) r.add(k.second, k.first, c);
  return r;
}

/// Recursive view with y as main variable: coefficient of y^j is a poly in x.
template <class T>
Poly<Poly<T>> as_poly_in_y(const BiPoly<T>& p) {
  const int dy = p.degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<T>> rows(static_cast<std::size_t>(dy) + 1);
  for (const auto& [k, c] : p.terms()) {
    auto& row = rows[static_cast<std::size_t>(k.second)];
    if (row.size() <= static_cast<std::size_t>(k.first)) row.resize(static_cast<std::size_t>(k.first) + 1, T(0));
    row[static_cast<std::size_t>(k.first)] = c;
  }
  std::vector<Poly<T>> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return Poly<Poly<T>>(std::move(out));
}

template <class T>
Poly<Poly<T>> as_poly_in_x(const BiPoly<T>& p) {
  return as_poly_in_y(swap_variables(p));
}

template <class T>
BiPoly<T> from_poly_in_y(const Poly<Poly<T>>& p) {
  BiPoly<T> r;
  for (int j = 0; j <= p.degree(); ++j) {
    const auto& row = p[static_cast<std::size_t>(j)];
    for (int i = 0; i <= row.degree(); ++i) r.add(i, j, row[static_cast<std::size_t>(i)]);
  }
  return r;
}

template <class T>
BiPoly<T> from_poly_in_x(const Poly<Poly<T>>& p) {
  return swap_variables(from_poly_in_y(p));
}

/// Univariate poly in x embedded as a BiPoly.
template <class T>
BiPoly<T> from_univariate_x(const Poly<T>& p) {
  BiPoly<T> r;
  for (int i = 0; i <= p.degree(); ++i) r.add(i, 0, p[static_cast<std::size_t>(i)]);
  return r;
}

/// p(a, y) as a polynomial in y.
template <class T, class U>
Poly<U> substitute_x(const BiPoly<T>& p, const U& a) {
  auto rec = as_poly_in_y(p);
  std::vector<U> out;
  for (const auto& row : rec.coeffs()) out.push_back(row(a));
  Poly<U> r(std::move(out));
  r.normalize();
  return r;
}

/// p(x, b) as a polynomial in x.
template <class T, class U>
Poly<U> substitute_y(const BiPoly<T>& p, const U& b) {
  return substitute_x(swap_variables(p), b);
}

/// p(x + a, y + b).
template <class T>
BiPoly<T> translate(const BiPoly<T>& p, const T& a, const T& b) {
  BiPoly<T> X = BiPoly<T>::x() + BiPoly<T>(a), Y = BiPoly<T>::y() + BiPoly<T>(b);
  BiPoly<T> r;
  for (const auto& [k, c] : p.terms()) r = r + (pow(X, k.first) * pow(Y, k.second)).scaled(c);
  return r;
}

/// Coefficient map T -> U.
template <class U, class T, class F>
BiPoly<U> map_coefficients(const BiPoly<T>& p, F f) {
  BiPoly<U> r;
  for (const auto& [k, c] : p.terms()) r.add(k.first, k.second, f(c));
  return r;
}

inline BiPoly<Alg> to_alg(const BiPoly<Rational>& p) {
  return map_coefficients<Alg>(p, [](const Rational& c) { return Alg(c); });
}

/// Homogeneous part of degree k.
template <class T>
BiPoly<T> homogeneous_part(const BiPoly<T>& p, int k) {
  BiPoly<T> r;
  for (const auto& [e, c] : p.terms())
    if (e.first + e.second == k) r.add(e.first, e.second, c);
  return r;
}

/// Homogeneous polynomial in (x, y, z): the coefficient of x^i y^j z^(d-i-j)
/// is stored under (i, j).
template <class T>
struct TriPoly {
  int degree = 0;
  BiPoly<T> xy;

  /// f(x, 1, z) as a BiPoly in (x, z).
  BiPoly<T> at_y_one() const {
    BiPoly<T> r;
    for (const auto& [k, c] : xy.terms()) r.add(k.first, degree - k.first - k.second, c);
    return r;
  }
  /// f(1, y, z) as a BiPoly in (y, z).
  BiPoly<T> at_x_one() const {
    BiPoly<T> r;
    for (const auto& [k, c] : xy.terms()) r.add(k.second, degree - k.first - k.second, c);
    return r;
  }
  /// f(x, y, 1)
  const BiPoly<T>& at_z_one() const { return xy; }
};

/// Homogenisation with respect to the total degree of f (or a larger degree).
template <class T>
TriPoly<T> homogenize(const BiPoly<T>& f, int degree = -1) {
  if (is_zero(f)) throw std::invalid_argument("cannot homogenize the zero polynomial");
  TriPoly<T> t;
  t.degree = degree < 0 ? f.total_degree() : degree;
  if (t.degree < f.total_degree()) throw std::invalid_argument("homogenization degree below total degree");
  t.xy = f;
  return t;
}

namespace bipoly_detail {

inline std::string coefficient_text(const Rational& c) { return c.get_str(); }
inline std::string coefficient_text(const Alg& c) { return c.str(); }
inline bool is_one(const Rational& c) { return c == 1; }
inline bool is_one(const Alg& c) { return c.is_rational() && c.rational() == 1; }
inline bool is_negative(const Rational& c) { return sgn(c) < 0; }
inline bool is_negative(const Alg& c) { return c.is_rational() && sgn(c.rational()) < 0; }

}  // namespace bipoly_detail

/// Canonical text: terms by descending total degree, then descending x power.
template <class T>
std::string to_string(const BiPoly<T>& p, const char* vx = "x", const char* vy = "y") {
  using namespace bipoly_detail;
  std::vector<std::pair<std::pair<int, int>, T>> t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c0] : t) {
    T c = c0;
    const bool neg = is_negative(c);
    if (neg) c = -c;
    if (neg)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    std::vector<std::string> factors;
    const bool monic_term = is_one(c);
    if (!monic_term || (k.first == 0 && k.second == 0)) {
      factors.push_back(coefficient_text(c));
    }
    auto var = [&](const char* v, int e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
    };
    var(vx, k.first);
    var(vy, k.second);
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

/// Univariate polynomial text in descending powers.
template <class T>
std::string to_string(const Poly<T>& p, const char* v = "x") {
  BiPoly<T> b;
  for (int i = 0; i <= p.degree(); ++i) b.add(i, 0, p[static_cast<std::size_t>(i)]);
  return to_string(b, v, "y");
}

}  // namespace bifurcata
