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

// Exact Newton-Puiseux expansion of the branches of H(u, z) = 0 through the
// origin. A branch is kept as z = T^n, u = S(T) + T^e * x, where x(T) -> 0.
// Branch coefficients live in generic tower levels (one level per Newton
// step); a level stands for all roots of its modulus, so conjugate branches
// are carried together and only separated when a zero divisor forces it.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/errors.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/tower.hpp"

namespace bifurcata {

struct NewtonStep {
  int k;  // x-order of the current polynomial at T = 0
  int p;  // edge slope p/q
  int q;
  int m;  // exponent of T reached after the step, in units of the new T
};

struct PuiseuxBranch {
  int n = 1;                       // z = T^n
  int e = 0;                       // S holds all terms of order < e
  Poly<Alg> S;                     // u = S(T) + ...
  std::vector<NewtonStep> trace;
  NodePtr top;                     // deepest tower level used by S
  bool exact = false;              // u = S(T) exactly
  std::optional<Alg> limit;        // finite limit of f / z^d, when requested
  Poly<Alg> chi;                   // prod (w - conjugates of limit) over the base level

  /// Coefficients lambda_1 .. lambda_{d n} of S (zero padded).
  std::vector<Alg> coefficients(int d) const {
    std::vector<Alg> out;
    for (int j = 1; j <= d * n; ++j) out.push_back(S.coeff(j));
    return out;
  }
};

/// Limit of f(S(T), T^n) / T^(d n) along the branch; empty when infinite.
/// May throw Split for a level of the branch.
inline std::optional<Alg> branch_limit(const BiPoly<Alg>& f, int d, const PuiseuxBranch& b) {
  const int N = d * b.n;
  auto truncate = [N](const Poly<Alg>& p) {
    std::vector<Alg> v;
    for (int i = 0; i <= std::min(N, p.degree()); ++i) v.push_back(p[static_cast<std::size_t>(i)]);
    return Poly<Alg>(std::move(v));
  };
  Poly<Alg> S = truncate(b.S);
  std::vector<Poly<Alg>> spow{Poly<Alg>(Alg(1))};
  Poly<Alg> total;
  for (const auto& [e, a] : f.terms()) {
    while (static_cast<int>(spow.size()) <= e.first) spow.push_back(truncate(spow.back() * S));
    const int shift = b.n * e.second;
    if (shift > N) continue;
    total = total + truncate(spow[static_cast<std::size_t>(e.first)].shifted_up(shift).scaled(a));
  }
  for (int i = 0; i < N; ++i)
    if (!is_zero(total.coeff(i))) return std::nullopt;
  return total.coeff(N);
}

/// Norm of w - a over the levels above `base`, a polynomial in w over base.
inline Poly<Alg> relative_charpoly(const Alg& a, const NodePtr& base) {
  Poly<Alg> P(std::vector<Alg>{-a, Alg(1)});
  const int floor = base ? base->depth : 0;
  while (true) {
    NodePtr n = algebraic_detail::deepest_node(P);
    if (!n || n->depth <= floor) return P;
    P = algebraic_detail::norm_one_level(P, n);
  }
}

namespace puiseux_detail {

inline NodePtr deeper(const NodePtr& a, const NodePtr& b) {
  if (!a) return b;
  if (!b) return a;
  return a->depth >= b->depth ? a : b;
}

/// Divide out the largest power of the second variable.
inline BiPoly<Alg> strip_second(const BiPoly<Alg>& h) {
  int m = -1;
  for (const auto& [k, c] : h.terms()) m = m < 0 ? k.second : std::min(m, k.second);
  if (m <= 0) return h;
  BiPoly<Alg> r;
  for (const auto& [k, c] : h.terms()) r.add(k.first, k.second - m, c);
  return r;
}

inline BiPoly<Alg> strip_first(const BiPoly<Alg>& h) { return swap_variables(strip_second(swap_variables(h))); }

inline int order_first_at_zero(const BiPoly<Alg>& h) {
  int k = -1;
  for (const auto& [e, c] : h.terms())
    if (e.second == 0 && (k < 0 || e.first < k)) k = e.first;
  return k;
}

/// Lower-left Newton polygon edges with positive slope: pairs of support
/// points (i0, j0), (i1, j1) with i0 < i1, j0 > j1, ending at (k, 0).
inline std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> newton_edges(const BiPoly<Alg>& h) {
  const int k = order_first_at_zero(h);
  // minimal j for each i <= k
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i <= k; ++i) {
    int best = -1;
    for (const auto& [e, c] : h.terms())
      if (e.first == i && (best < 0 || e.second < best)) best = e.second;
    if (best >= 0) pts.emplace_back(i, best);
  }
  // lower convex hull from the leftmost point to (k, 0)
  std::vector<std::pair<int, int>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // remove b if it is not strictly below segment a-pt
      const long cross = static_cast<long>(b.first - a.first) * (pt.second - a.second) -
                         static_cast<long>(b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i)
    if (hull[i + 1].second < hull[i].second) edges.push_back({hull[i], hull[i + 1]});
  return edges;
}

/// H(T^p (c + x), T^q) / T^v where v is the edge value.
inline BiPoly<Alg> substitute_step(const BiPoly<Alg>& H, int p, int q, const Alg& c) {
  int v = -1;
  for (const auto& [e, a] : H.terms()) {
    const int val = p * e.first + q * e.second;
    if (v < 0 || val < v) v = val;
  }
  const BiPoly<Alg> shift = BiPoly<Alg>(c) + BiPoly<Alg>::x();
  std::vector<BiPoly<Alg>> powers{BiPoly<Alg>(Alg(1))};
  BiPoly<Alg> r;
  for (const auto& [e, a] : H.terms()) {
    while (static_cast<int>(powers.size()) <= e.first) powers.push_back(powers.back() * shift);
    const int texp = p * e.first + q * e.second - v;
    for (const auto& [f, b] : powers[static_cast<std::size_t>(e.first)].terms())
      r.add(f.first, f.second + texp, a * b);
  }
  r.normalize();
  return r;
}

/// S(T^q)
inline Poly<Alg> inflate(const Poly<Alg>& S, int q) {
  if (S.empty() || q == 1) return S;
  std::vector<Alg> v(static_cast<std::size_t>(S.degree() * q) + 1, Alg(0));
  for (int i = 0; i <= S.degree(); ++i) v[static_cast<std::size_t>(i * q)] = S[static_cast<std::size_t>(i)];
  return Poly<Alg>(std::move(v));
}

struct State {
  BiPoly<Alg> H;  // in (x, T)
  PuiseuxBranch branch;
};

class Expander {
 public:
  Expander(const BiPoly<Alg>* f, int d, NodePtr base) : f_(f), d_(d), base_(std::move(base)) {}

  std::vector<PuiseuxBranch> run(const BiPoly<Alg>& h) {
    State s;
    s.H = strip_second(h);
    s.branch.top = base_;
    std::vector<PuiseuxBranch> out;
    expand(s, out, 0);
    return out;
  }

 private:
  void finish(State s, std::vector<PuiseuxBranch>& out) {
    if (f_) {
      s.branch.limit = branch_limit(*f_, d_, s.branch);
      if (s.branch.limit) s.branch.chi = relative_charpoly(*s.branch.limit, base_);
    }
    out.push_back(std::move(s.branch));
  }

  void expand(State s, std::vector<PuiseuxBranch>& out, int depth) {
    if (s.branch.e >= d_ * s.branch.n) {
      finish(std::move(s), out);
      return;
    }
    check_invariant(depth <= 4 * d_ * d_ + 8, "Newton-Puiseux expansion does not terminate");
    // x | H: the tail x = 0 is an exact branch
    BiPoly<Alg> H = strip_first(s.H);
    int min_first = -1;
    for (const auto& [e, c] : s.H.terms()) min_first = min_first < 0 ? e.first : std::min(min_first, e.first);
    if (min_first > 0) {
      State exact = s;
      exact.branch.exact = true;
      finish(std::move(exact), out);
    }
    const int k = order_first_at_zero(H);
    if (k <= 0) return;
    for (const auto& edge : newton_edges(H)) {
      const auto [a, b] = edge;
      const int di = b.first - a.first, dj = a.second - b.second;
      const int g = std::gcd(di, dj);
      const int p = dj / g, q = di / g;
      // edge polynomial in c, divided by c^(a.first)
      std::vector<Alg> E(static_cast<std::size_t>(di) + 1, Alg(0));
      for (const auto& [e, c] : H.terms())
        if (e.first >= a.first && e.first <= b.first && p * e.first + q * e.second == p * a.first + q * a.second)
          E[static_cast<std::size_t>(e.first - a.first)] = c;
      Poly<Alg> edge_poly(std::move(E));
      process_edge(s, H, k, p, q, edge_poly, out, depth);
    }
  }

  // The edge polynomial is Psi(c^q); conjugate roots c, zeta c give the same
  // branch, so roots xi of Psi are enumerated and one q-th root is taken each.
  void process_edge(const State& s, const BiPoly<Alg>& H, int k, int p, int q, const Poly<Alg>& edge_poly,
                    std::vector<PuiseuxBranch>& out, int depth) {
    std::vector<Alg> psi;
    for (int i = 0; i <= edge_poly.degree(); i += q) psi.push_back(edge_poly.coeff(i));
    Poly<Alg> E = squarefree_part(Poly<Alg>(std::move(psi)));
    bool rational = true;
    for (const auto& c : E.coeffs()) rational = rational && c.is_rational();
    if (rational) {
      std::vector<Rational> rc;
      for (const auto& c : E.coeffs()) rc.push_back(c.rational());
      Poly<Rational> Er(std::move(rc));
      for (auto& r : real_roots(Er)) {
        if (!r.is_rational()) continue;
        const Rational xi = r.rational_value();
        root_step(s, H, k, p, q, Alg(xi), out, depth);
        Er = divrem(Er, Poly<Rational>(std::vector<Rational>{-xi, Rational(1)})).first;
      }
      if (Er.degree() < 1) return;
      E = to_alg(Er);
    }
    with_root(s, H, k, p, q, E, true, out, depth);
  }

  // c with c^q = xi
  void root_step(const State& s, const BiPoly<Alg>& H, int k, int p, int q, const Alg& xi,
                 std::vector<PuiseuxBranch>& out, int depth) {
    if (q == 1) {
      step(s, H, k, p, q, xi, out, depth);
      return;
    }
    std::vector<Alg> m(static_cast<std::size_t>(q) + 1, Alg(0));
    m[0] = -xi;
    m[static_cast<std::size_t>(q)] = Alg(1);
    if (xi.is_rational()) {
      std::vector<Rational> mr(static_cast<std::size_t>(q) + 1, Rational(0));
      mr[0] = -xi.rational();
      mr[static_cast<std::size_t>(q)] = Rational(1);
      for (auto& r : real_roots(Poly<Rational>(std::move(mr))))
        if (r.is_rational()) {
          step(s, H, k, p, q, Alg(r.rational_value()), out, depth);
          return;
        }
    }
    with_root(s, H, k, p, q, Poly<Alg>(std::move(m)), false, out, depth);
  }

  // A root of `modulus` on a new generic level. With all_roots, every root is
  // followed (a split continues on both factors) and becomes xi; otherwise one
  // root is followed and becomes c.
  void with_root(const State& s, const BiPoly<Alg>& H, int k, int p, int q, const Poly<Alg>& modulus, bool all_roots,
                 std::vector<PuiseuxBranch>& out, int depth) {
    Poly<Alg> m = monic(modulus);
    if (m.degree() < 1) return;
    auto follow = [&](const Alg& root, std::vector<PuiseuxBranch>& sink) {
      if (all_roots) {
        root_step(s, H, k, p, q, root, sink, depth);
      } else {
        step(s, H, k, p, q, root, sink, depth);
      }
    };
    if (m.degree() == 1) {
      follow(-m[0], out);
      return;
    }
    NodePtr parent = s.branch.top;
    for (const auto& c : m.coeffs()) parent = deeper(parent, c.node());
    NodePtr node = make_generic_level(parent, m);
    std::vector<PuiseuxBranch> local;
    try {
      follow(Alg::generator(node), local);
    } catch (const Split& sp) {
      if (sp.node != node) throw;
      with_root(s, H, k, p, q, Poly<Alg>(sp.first), all_roots, out, depth);
      if (all_roots) with_root(s, H, k, p, q, Poly<Alg>(sp.second), all_roots, out, depth);
      return;
    }
    for (auto& b : local) out.push_back(std::move(b));
  }

  void step(const State& s, const BiPoly<Alg>& H, int k, int p, int q, const Alg& c, std::vector<PuiseuxBranch>& out,
            int depth) {
    State next;
    next.H = substitute_step(H, p, q, c);
    next.branch.n = s.branch.n * q;
    next.branch.e = s.branch.e * q + p;
    next.branch.S = inflate(s.branch.S, q) + Poly<Alg>::monomial(c, next.branch.e);
    next.branch.trace = s.branch.trace;
    next.branch.trace.push_back({k, p, q, next.branch.e});
    next.branch.top = deeper(s.branch.top, c.node());
    expand(std::move(next), out, depth + 1);
  }

  const BiPoly<Alg>* f_;
  int d_;
  NodePtr base_;
};

}  // namespace puiseux_detail

/// Branches through the origin of h(u, z) = 0, truncated at order d*n.
/// Powers of z dividing h are removed first. `base` is the coefficient level
/// of h (null for rational coefficients).
inline std::vector<PuiseuxBranch> puiseux_branches(const BiPoly<Alg>& h, int d, const NodePtr& base = nullptr) {
  return puiseux_detail::Expander(nullptr, d, base).run(h);
}

/// As above, also filling limit and chi of every branch for the family f.
inline std::vector<PuiseuxBranch> puiseux_branches_with_limits(const BiPoly<Alg>& h, const BiPoly<Alg>& f, int d,
                                                               const NodePtr& base = nullptr) {
  return puiseux_detail::Expander(&f, d, base).run(h);
}

/// x-order of h at z = 0 after removing powers of z.
inline int puiseux_order(const BiPoly<Alg>& h) {
  return puiseux_detail::order_first_at_zero(puiseux_detail::strip_second(h));
}

}  // namespace bifurcata
