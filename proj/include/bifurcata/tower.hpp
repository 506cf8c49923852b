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

// Towers of simple algebraic extensions Q(a1)(a2)...(ak).
//
// Each level is a TowerNode holding a squarefree monic modulus over its parent
// level. Moduli are not required to be irreducible; zero divisors are
// discovered lazily ("dynamic evaluation"):
//
//  * an anchored level denotes one specific real root, given by an isolating
//    interval. When a zero divisor shows up, the modulus is shrunk to the
//    factor vanishing at that root, in place.
//  * a generic level denotes all roots of its modulus at once (one element
//    then stands for all conjugates). A zero divisor splits the level; this is
//    reported by throwing Split and the caller restarts on each factor.
//
// Nodes are mutable (anchored moduli shrink, isolating intervals are refined)
// and therefore must stay confined to one thread.

#include <exception>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/poly.hpp"
#include "bifurcata/rational.hpp"

namespace bifurcata {

class Alg;
struct TowerNode;
using NodePtr = std::shared_ptr<TowerNode>;

struct TowerNode {
  NodePtr parent;
  int depth = 1;
  std::vector<Alg> modulus;  // monic, coefficients live at parent level
  bool anchored = false;
  Rational lo, hi;           // anchored only; lo == hi means an exact rational root
  int sign_lo = 0;           // sign of modulus at lo (anchored, lo < hi)

  int degree() const { return static_cast<int>(modulus.size()) - 1; }
};

/// Thrown when a generic level turns out to be a product of fields.
struct Split : std::exception {
  NodePtr node;
  std::vector<Alg> first, second;  // monic factors of the modulus
  const char* what() const noexcept override { return "tower level split"; }
};

/// Element of a tower field (or of Q when node() is null).
class Alg {
 public:
  Alg() = default;
  Alg(int v) : q_(v) {}                // NOLINT(google-explicit-constructor)
  Alg(const Rational& v) : q_(v) {}    // NOLINT(google-explicit-constructor)

  static Alg generator(const NodePtr& node);
  static Alg from_rep(const NodePtr& node, std::vector<Alg> rep);

  const NodePtr& node() const { return node_; }
  bool is_rational() const { return !node_; }
  const Rational& rational() const { return q_; }
  const std::vector<Alg>& rep() const { return rep_; }

  /// Coefficients of this element over the parent of `level` (an ancestor
  /// or equal level).
  std::vector<Alg> coefficients_at(const NodePtr& level) const;

  friend Alg operator+(const Alg& a, const Alg& b);
  friend Alg operator-(const Alg& a, const Alg& b);
  friend Alg operator*(const Alg& a, const Alg& b);
  Alg operator-() const;

  std::string str() const;

 private:
  NodePtr node_;
  Rational q_;
  std::vector<Alg> rep_;
};

bool is_zero(const Alg& a);
inline bool is_structural_zero(const Alg& a) { return a.is_rational() && sgn(a.rational()) == 0; }
Alg inv(const Alg& a);
inline Alg exact_div(const Alg& a, const Alg& b) { return a * inv(b); }
int sign(const Alg& a);
Interval enclose(const Alg& a, long bits);
inline bool operator==(const Alg& a, const Alg& b) { return is_zero(a - b); }
inline bool operator!=(const Alg& a, const Alg& b) { return !(a == b); }

namespace tower_detail {

inline bool is_ancestor_or_self(const TowerNode* anc, const TowerNode* n) {
  for (; n; n = n->parent.get())
    if (n == anc) return true;
  return anc == nullptr;
}

inline NodePtr common_level(const NodePtr& a, const NodePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b) return a;
  if (a->depth >= b->depth) {
    if (!is_ancestor_or_self(b.get(), a.get())) throw std::logic_error("mixing elements of unrelated extension towers");
    return a;
  }
  if (!is_ancestor_or_self(a.get(), b.get())) throw std::logic_error("mixing elements of unrelated extension towers");
  return b;
}

inline void trim(std::vector<Alg>& v) {
  while (!v.empty() && is_structural_zero(v.back())) v.pop_back();
}

/// Reduce v modulo the monic modulus of `node`.
inline void reduce(std::vector<Alg>& v, const TowerNode& node) {
  trim(v);
  const auto& m = node.modulus;
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(v.size()) - 1; i >= dm; --i) {
    Alg c = v[static_cast<std::size_t>(i)];
    if (is_structural_zero(c)) continue;
    for (int j = 0; j < dm; ++j) {
      auto& t = v[static_cast<std::size_t>(i - dm + j)];
      t = t - c * m[static_cast<std::size_t>(j)];
    }
    v[static_cast<std::size_t>(i)] = Alg();
  }
  trim(v);
}

inline std::vector<Alg> conv(const std::vector<Alg>& a, const std::vector<Alg>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Alg> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_structural_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

/// Does the polynomial g (over parent of node) vanish at the anchored root?
inline bool vanishes_at_anchor(const Poly<Alg>& g, const TowerNode& node) {
  if (node.lo == node.hi) return is_zero(g(Alg(node.lo)));
  const int s1 = sign(g(Alg(node.lo)));
  const int s2 = sign(g(Alg(node.hi)));
  return s1 * s2 < 0;
}

void shrink(TowerNode& node, const Poly<Alg>& factor);

/// Handle a proper factor g of the modulus found through a zero divisor.
/// Returns true when the anchored root is a root of g.
inline bool resolve_zero_divisor(const NodePtr& node, const Poly<Alg>& g) {
  Poly<Alg> m(node->modulus);
  Poly<Alg> cofactor = monic(divrem(m, g).first);
  if (!node->anchored) {
    Split s;
    s.node = node;
    s.first = g.coeffs();
    s.second = cofactor.coeffs();
    throw s;
  }
  if (vanishes_at_anchor(g, *node)) {
    shrink(*node, g);
    return true;
  }
  shrink(*node, cofactor);
  return false;
}

inline void shrink(TowerNode& node, const Poly<Alg>& factor) {
  Poly<Alg> f = monic(factor);
  node.modulus = f.coeffs();
  if (node.anchored && node.lo != node.hi) node.sign_lo = sign(f(Alg(node.lo)));
}

}  // namespace tower_detail

inline Alg Alg::from_rep(const NodePtr& node, std::vector<Alg> rep) {
  if (!node) return rep.empty() ? Alg() : rep[0];
  tower_detail::reduce(rep, *node);
  if (rep.size() <= 1) return rep.empty() ? Alg() : rep[0];
  Alg a;
  a.node_ = node;
  a.rep_ = std::move(rep);
  return a;
}

inline Alg Alg::generator(const NodePtr& node) { return from_rep(node, {Alg(0), Alg(1)}); }

inline std::vector<Alg> Alg::coefficients_at(const NodePtr& level) const {
  if (node_ == level) return rep_;
  if (is_structural_zero(*this)) return {};
  return {*this};
}

inline Alg operator+(const Alg& a, const Alg& b) {
  if (!a.node_ && !b.node_) return Alg(Rational(a.q_ + b.q_));
  NodePtr n = tower_detail::common_level(a.node_, b.node_);
  std::vector<Alg> ra = a.coefficients_at(n), rb = b.coefficients_at(n);
  if (ra.size() < rb.size()) ra.resize(rb.size());
  for (std::size_t i = 0; i < rb.size(); ++i) ra[i] = ra[i] + rb[i];
  return Alg::from_rep(n, std::move(ra));
}

inline Alg Alg::operator-() const {
  if (!node_) return Alg(Rational(-q_));
  std::vector<Alg> r = rep_;
  for (auto& c : r) c = -c;
  return from_rep(node_, std::move(r));
}

inline Alg operator-(const Alg& a, const Alg& b) { return a + (-b); }

inline Alg operator*(const Alg& a, const Alg& b) {
  if (!a.node_ && !b.node_) return Alg(Rational(a.q_ * b.q_));
  if (is_structural_zero(a) || is_structural_zero(b)) return Alg();
  NodePtr n = tower_detail::common_level(a.node_, b.node_);
  return Alg::from_rep(n, tower_detail::conv(a.coefficients_at(n), b.coefficients_at(n)));
}

inline Alg inv(const Alg& a) {
  if (!a.node()) return Alg(inv(a.rational()));
  NodePtr n = a.node();
  while (true) {
    Poly<Alg> M(n->modulus);
    // reduce against a possibly shrunk modulus
    auto red = a.coefficients_at(n);
    tower_detail::reduce(red, *n);
    Poly<Alg> A(red);
    A.normalize();
    if (A.empty()) throw std::domain_error("division by zero in extension field");
    auto [g, s, t] = xgcd(A, M);
    if (g.degree() == 0) return Alg::from_rep(n, s.coeffs());
    if (tower_detail::resolve_zero_divisor(n, g)) throw std::domain_error("division by zero in extension field");
  }
}

inline bool is_zero(const Alg& a) {
  if (!a.node()) return sgn(a.rational()) == 0;
  const NodePtr& n = a.node();
  if (n->anchored) {
    bool chain_anchored = true;
    for (const TowerNode* p = n.get(); p; p = p->parent.get()) chain_anchored = chain_anchored && p->anchored;
    if (chain_anchored && enclose(a, 48).certain_sign() != 0) return false;
  }
  auto red = a.coefficients_at(n);
  tower_detail::reduce(red, *n);
  Poly<Alg> A(red);
  A.normalize();
  if (A.empty()) return true;
  if (A.degree() == 0) return false;
  Poly<Alg> g = gcd(A, Poly<Alg>(n->modulus));
  if (g.degree() == 0) return false;
  if (g.degree() == n->degree()) return true;
  return tower_detail::resolve_zero_divisor(n, g);
}

namespace tower_detail {

/// Bisect the anchor interval of `node` until its width is at most `width`.
inline void refine_anchor(TowerNode& node, const Rational& width) {
  if (!node.anchored) throw std::logic_error("refining a generic tower level");
  Poly<Alg> m(node.modulus);
  while (node.lo != node.hi && node.hi - node.lo > width) {
    Rational mid = (node.lo + node.hi) / 2;
    int s = sign(m(Alg(mid)));
    if (s == 0) {
      node.lo = node.hi = mid;
      shrink(node, Poly<Alg>({Alg(Rational(-mid)), Alg(1)}));
      break;
    }
    if (s == node.sign_lo)
      node.lo = mid;
    else
      node.hi = mid;
  }
}

}  // namespace tower_detail

inline Interval enclose(const Alg& a, long bits) {
  if (!a.node()) return Interval(a.rational());
  TowerNode& n = *a.node();
  if (!n.anchored) throw std::logic_error("no real enclosure for an element of a generic extension");
  tower_detail::refine_anchor(n, pow2(-bits - 8));
  Interval x(n.lo, n.hi);
  const auto& r = a.rep();
  Interval acc = enclose(r.back(), bits + 8);
  for (int i = static_cast<int>(r.size()) - 2; i >= 0; --i)
    acc = (acc * x + enclose(r[static_cast<std::size_t>(i)], bits + 8)).rounded(bits + 16);
  return acc;
}

inline int sign(const Alg& a) {
  if (!a.node()) return sgn(a.rational());
  for (long bits = 32; bits <= 256; bits *= 2) {
    int s = enclose(a, bits).certain_sign();
    if (s != 0) return s;
  }
  if (is_zero(a)) return 0;
  for (long bits = 512;; bits *= 2) {
    int s = enclose(a, bits).certain_sign();
    if (s != 0) return s;
  }
}

inline std::string Alg::str() const {
  if (!node_) return q_.get_str();
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (i) os << " + ";
    os << rep_[i].str() << "*a" << node_->depth << "^" << i;
  }
  os << ")";
  return os.str();
}

/// Adjoin a generic root of `modulus` (squarefree over the parent level).
inline NodePtr make_generic_level(const NodePtr& parent, const Poly<Alg>& modulus) {
  auto n = std::make_shared<TowerNode>();
  n->parent = parent;
  n->depth = parent ? parent->depth + 1 : 1;
  n->modulus = monic(modulus).coeffs();
  n->anchored = false;
  return n;
}

/// Adjoin the unique root of `poly` (squarefree over parent) in [lo, hi].
/// Endpoints must not be roots unless lo == hi.
inline NodePtr make_anchored_level(const NodePtr& parent, const Poly<Alg>& poly, const Rational& lo,
                                   const Rational& hi) {
  auto n = std::make_shared<TowerNode>();
  n->parent = parent;
  n->depth = parent ? parent->depth + 1 : 1;
  n->modulus = monic(poly).coeffs();
  n->anchored = true;
  n->lo = lo;
  n->hi = hi;
  if (lo == hi) {
    n->modulus = {Alg(Rational(-lo)), Alg(1)};
  } else {
    n->sign_lo = sign(Poly<Alg>(n->modulus)(Alg(lo)));
  }
  return n;
}

inline Poly<Alg> to_alg(const Poly<Rational>& p) {
  std::vector<Alg> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return Poly<Alg>(std::move(v));
}

}  // namespace bifurcata
