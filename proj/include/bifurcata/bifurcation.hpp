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

// The bifurcation set B_f = f(Sing f) + A_f: critical values, candidates at
// infinity, and the vanishing/splitting tests on both sides of each candidate.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/curve_topology.hpp"
#include "bifurcata/disk_box.hpp"
#include "bifurcata/errors.hpp"
#include "bifurcata/infinity_scan.hpp"
#include "bifurcata/system.hpp"

namespace bifurcata {

/// Sorts ascending and drops exact duplicates.
inline std::vector<AlgebraicNumber> sorted_unique(std::vector<AlgebraicNumber> v) {
  std::sort(v.begin(), v.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
  std::vector<AlgebraicNumber> out;
  for (auto& a : v)
    if (out.empty() || compare(out.back(), a) != 0) out.push_back(std::move(a));
  return out;
}

inline bool contains(const std::vector<AlgebraicNumber>& v, const AlgebraicNumber& a) {
  return std::any_of(v.begin(), v.end(), [&](const AlgebraicNumber& b) { return compare(a, b) == 0; });
}

/// True when the real locus of {H = 0} is nonempty.
inline bool has_real_point(const BiPoly<Alg>& H_in) {
  BiPoly<Alg> H = H_in;
  H.normalize();
  if (H.total_degree() < 1) return false;
  H = squarefree_part(H);
  auto P = as_poly_in_y(H);
  P.normalize();
  Poly<Alg> cont = content(P);
  if (cont.degree() >= 1 && !isolate_real_roots(cont).empty()) return true;
  P = primitive_part(P);
  if (P.degree() < 1) return false;
  const BiPoly<Alg> h = from_poly_in_y(P);
  Poly<Alg> disc = resultant(P, as_poly_in_y(partial_derivative(h, Var::Y)));
  disc.normalize();
  auto crit = disc.degree() >= 1 ? isolate_real_roots(disc) : std::vector<RealRoot<Alg>>{};
  std::vector<Alg> samples;
  if (crit.empty()) {
    samples.emplace_back(0);
  } else {
    samples.emplace_back(crit.front().lo - 1);
    for (std::size_t i = 0; i < crit.size(); ++i) {
      samples.push_back(adjoin_root(crit[i]));
      if (i + 1 < crit.size()) samples.emplace_back(rational_between(crit[i], crit[i + 1]));
    }
    samples.emplace_back(crit.back().hi + 1);
  }
  for (const auto& a : samples) {
    Poly<Alg> fiber = substitute_x(h, a);
    fiber.normalize();
    if (fiber.degree() >= 1 && !isolate_real_roots(fiber).empty()) return true;
  }
  return false;
}

/// y H_x - x H_y
inline BiPoly<Alg> radial_derivative(const BiPoly<Alg>& H) {
  return BiPoly<Alg>::y() * partial_derivative(H, Var::X) - BiPoly<Alg>::x() * partial_derivative(H, Var::Y);
}

/// True when the real locus of {H = 0} is bounded.
inline bool real_locus_bounded(const BiPoly<Alg>& H_in) {
  BiPoly<Alg> H = H_in;
  H.normalize();
  if (H.total_degree() < 1) return true;
  H = squarefree_part(H);
  // components on which the distance to 0 is constant are circles or points
  while (true) {
    BiPoly<Alg> M = radial_derivative(H);
    if (is_zero(M)) return true;
    BiPoly<Alg> c = bivariate_gcd(H, M);
    c.normalize();
    if (c.total_degree() < 1) break;
    H = exact_quotient(H, c);
    H.normalize();
    if (H.total_degree() < 1) return true;
  }
  Rational rho2(1);
  for (const auto& [x, y] : solve_real_system(H, radial_derivative(H))) {
    Rational r = enclose(x * x + y * y, 32).hi + 1;
    if (r > rho2) rho2 = r;
  }
  const BiPoly<Alg> circle = BiPoly<Alg>::x() * BiPoly<Alg>::x() + BiPoly<Alg>::y() * BiPoly<Alg>::y() - BiPoly<Alg>(Alg(rho2));
  return solve_real_system(H, circle).empty();
}

struct SingularLocus {
  BiPoly<Rational> curve;                    // gcd(f_x, f_y); constant when Sing f is finite
  std::vector<AlgebraicNumber> values;       // f(Sing f), ascending
};

namespace driver_detail {

/// Polynomial in t whose roots include every value of f on a component of
/// {G = 0} of positive degree in the eliminated variable.
inline Poly<Rational> component_values(const BiPoly<Rational>& G, const BiPoly<Rational>& f, bool eliminate_y) {
  const int m = eliminate_y ? G.degree_y() : G.degree_x();
  if (m < 1) return Poly<Rational>();
  auto lift = [&](const BiPoly<Rational>& p) { return eliminate_y ? as_poly_in_y(p) : as_poly_in_x(p); };
  std::vector<Rational> ws;
  std::vector<Poly<Rational>> rs;
  int top = -1;
  for (int i = 0; i <= m; ++i) {
    ws.emplace_back(i);
    auto A = lift(G), B = lift(f - BiPoly<Rational>(Rational(i)));
    A.normalize();
    B.normalize();
    Poly<Rational> r = resultant(A, B);
    r.normalize();
    top = std::max(top, r.degree());
    rs.push_back(std::move(r));
  }
  Poly<Rational> g;
  for (int j = 0; j <= top; ++j) {
    std::vector<Alg> ys;
    for (const auto& r : rs) ys.emplace_back(r.coeff(j));
    Poly<Alg> c = interpolate(ws, ys);
    c.normalize();
    std::vector<Rational> q;
    for (const auto& a : c.coeffs()) q.push_back(a.rational());
    g = gcd(g, Poly<Rational>(std::move(q)));
  }
  return g;
}

}  // namespace driver_detail

/// f(Sing f), exactly.
inline SingularLocus singular_locus(const BiPoly<Rational>& f) {
  SingularLocus s;
  const BiPoly<Alg> F = to_alg(f);
  const BiPoly<Alg> fx = partial_derivative(F, Var::X), fy = partial_derivative(F, Var::Y);
  std::vector<AlgebraicNumber> values;
  BiPoly<Alg> G;
  if (is_zero(fx) && is_zero(fy)) throw DegenerateGeometry("constant polynomial");
  if (is_zero(fx)) {
    G = fy;
  } else if (is_zero(fy)) {
    G = fx;
  } else {
    G = bivariate_gcd(fx, fy);
    G.normalize();
    const BiPoly<Alg> P = G.total_degree() >= 1 ? exact_quotient(fx, G) : fx;
    const BiPoly<Alg> Q = G.total_degree() >= 1 ? exact_quotient(fy, G) : fy;
    for (const auto& [a, b] : solve_real_system(P, Q)) values.push_back(to_algebraic_number(F(a, b)));
  }
  G.normalize();
  s.curve = map_coefficients<Rational>(G, [](const Alg& a) { return a.rational(); });
  if (s.curve.total_degree() >= 1) {
    Poly<Rational> T = driver_detail::component_values(s.curve, f, true);
    Poly<Rational> Tx = driver_detail::component_values(s.curve, f, false);
    std::vector<AlgebraicNumber> cand;
    if (T.degree() >= 1)
      for (auto& t : real_roots(T)) cand.push_back(t);
    if (Tx.degree() >= 1)
      for (auto& t : real_roots(Tx)) cand.push_back(t);
    for (auto& t : sorted_unique(std::move(cand))) {
      BiPoly<Alg> H = bivariate_gcd(G, F - BiPoly<Alg>(t.to_alg()));
      H.normalize();
      if (H.total_degree() >= 1 && has_real_point(H)) values.push_back(t);
    }
  }
  s.values = sorted_unique(std::move(values));
  return s;
}

inline std::vector<AlgebraicNumber> singular_values(const BiPoly<Rational>& f) { return singular_locus(f).values; }

/// True when Sing f meets f^{-1}(lambda) in a bounded set.
inline bool compact_singularity_audit(const BiPoly<Rational>& f, const AlgebraicNumber& lambda) {
  const BiPoly<Alg> F = to_alg(f);
  BiPoly<Alg> fx = partial_derivative(F, Var::X), fy = partial_derivative(F, Var::Y);
  BiPoly<Alg> G = is_zero(fx) ? fy : is_zero(fy) ? fx : bivariate_gcd(fx, fy);
  G.normalize();
  if (G.total_degree() < 1) return true;
  BiPoly<Alg> H = bivariate_gcd(G, F - BiPoly<Alg>(lambda.to_alg()));
  H.normalize();
  if (H.total_degree() < 1) return true;
  return real_locus_bounded(H);
}

struct Verdict {
  CandidatePoint candidate;
  DiskBox box;
  bool vanish_left = false, vanish_right = false;
  bool split_left = false, split_right = false;
  bool atypical = false;
};

struct BifurcationReport {
  std::string input;
  int degree = 0;
  bool primitive = false;
  std::vector<AlgebraicNumber> singular_values;
  std::vector<Verdict> candidates;
  std::vector<AlgebraicNumber> atypical_at_infinity;
  std::vector<AlgebraicNumber> bifurcation_set;
  std::vector<std::string> warnings;
};

struct DriverOptions {
  long box_bits = kBoxBits;  // eps0 and delta are multiples of 2^-box_bits
};

struct SideResult {
  bool vanish = false, split = false;
  int ovals = 0;
};

/// Vanishing and splitting of g_t in the disk of radius eps0.
inline SideResult test_side(const LocalizedFamily& fam, const Rational& eps0, const Rational& t) {
  const CurveGraph gr = curve_graph(fiber_family(fam, Alg(t)), eps0);
  const std::string bad = degree_invariant_violation(gr, fam.d);
  if (!bad.empty()) throw InvariantViolation("curve graph at t = " + t.get_str() + ": " + bad);
  return {detect_vanishing(gr), detect_splitting(gr), interior_oval_count(gr)};
}

inline Verdict judge_candidate(const BiPoly<Rational>& f, const CandidatePoint& c, const DriverOptions& opt,
                               std::vector<std::string>& warnings) {
  Verdict v;
  v.candidate = c;
  const std::string where = "candidate (" + to_string(c.point) + ", " + decimal_text(c.lambda) + ")";
  try {
    const LocalizedFamily fam = localize_at(f, c.point);
    v.box = compute_disk_box(fam, c.lambda, opt.box_bits);
    const SideResult left = test_side(fam, v.box.epsilon0, v.box.t_minus);
    const SideResult right = test_side(fam, v.box.epsilon0, v.box.t_plus);
    v.vanish_left = left.vanish;
    v.split_left = left.split;
    v.vanish_right = right.vanish;
    v.split_right = right.split;
    if (left.ovals + right.ovals > 0)
      warnings.push_back(where + ": closed oval inside the disk away from the origin (not classified)");
  } catch (const DegenerateGeometry& e) {
    throw DegenerateGeometry(where + ": " + e.what());
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(where + ": " + e.what());
  }
  v.atypical = v.vanish_left || v.vanish_right || v.split_left || v.split_right;
  return v;
}

inline BifurcationReport bifurcation_set(const BiPoly<Rational>& f, const DriverOptions& opt = {}) {
  BifurcationReport r;
  r.input = to_string(f, "x", "y");
  r.degree = f.total_degree();
  if (r.degree < 1) throw DegenerateGeometry("constant polynomial");
  r.singular_values = singular_values(f);
  const MilnorSet m = milnor_polynomial(f);
  r.primitive = m.primitive;
  if (!r.primitive) {
    r.warnings.push_back("non-primitive polynomial (a function of x^2+y^2): bifurcation set equals the singular values");
    r.bifurcation_set = r.singular_values;
    return r;
  }
  for (const auto& c : candidate_points(f)) {
    Verdict v = judge_candidate(f, c, opt, r.warnings);
    if (contains(r.singular_values, c.lambda) && !compact_singularity_audit(f, c.lambda))
      r.warnings.push_back("singular set of the fibre over " + decimal_text(c.lambda) +
                           " is unbounded: membership in the atypical set at infinity is undetermined");
    if (v.atypical) r.atypical_at_infinity.push_back(v.candidate.lambda);
    r.candidates.push_back(std::move(v));
  }
  r.atypical_at_infinity = sorted_unique(std::move(r.atypical_at_infinity));
  std::vector<AlgebraicNumber> all = r.singular_values;
  all.insert(all.end(), r.atypical_at_infinity.begin(), r.atypical_at_infinity.end());
  r.bifurcation_set = sorted_unique(std::move(all));
  for (const auto& a : r.bifurcation_set)
    check_invariant(contains(r.singular_values, a) || contains(r.atypical_at_infinity, a), "bifurcation set identity");
  return r;
}

}  // namespace bifurcata
