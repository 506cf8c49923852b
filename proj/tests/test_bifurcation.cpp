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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "bifurcata/bifurcation.hpp"
#include "bifurcata/parser.hpp"

using namespace bifurcata;

namespace {

BiPoly<Rational> P(const char* s) { return parse_polynomial(s); }

std::vector<Rational> rationals(const std::vector<AlgebraicNumber>& v) {
  std::vector<Rational> out;
  for (const auto& a : v) {
    EXPECT_TRUE(a.is_rational()) << decimal_text(a);
    if (a.is_rational()) out.push_back(a.rational_value());
  }
  return out;
}

// Critical values found by floating point Newton iteration from a grid of seeds.
std::vector<double> newton_critical_values(const BiPoly<Rational>& f) {
  auto eval = [](const BiPoly<Rational>& p, double x, double y) {
    double s = 0;
    for (const auto& [e, c] : p.terms()) s += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
    return s;
  };
  const auto fx = partial_derivative(f, Var::X), fy = partial_derivative(f, Var::Y);
  const auto fxx = partial_derivative(fx, Var::X), fxy = partial_derivative(fx, Var::Y),
             fyy = partial_derivative(fy, Var::Y);
  std::vector<double> out;
  for (int i = -6; i <= 6; ++i)
    for (int k = -6; k <= 6; ++k) {
      double x = i * 0.37, y = k * 0.37;
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const double a = eval(fxx, x, y), b = eval(fxy, x, y), d = eval(fyy, x, y);
        const double gx = eval(fx, x, y), gy = eval(fy, x, y);
        const double det = a * d - b * b;
        if (std::abs(det) < 1e-12) break;
        x -= (d * gx - b * gy) / det;
        y -= (a * gy - b * gx) / det;
        if (std::abs(x) > 50 || std::abs(y) > 50) break;
        if (std::hypot(eval(fx, x, y), eval(fy, x, y)) < 1e-11) {
          ok = true;
          break;
        }
      }
      if (ok) out.push_back(eval(f, x, y));
    }
  return out;
}

}  // namespace

TEST(SingularValues, Examples) {
  EXPECT_EQ(rationals(singular_values(P("y^3 - 3*y"))), (std::vector<Rational>{-2, 2}));
  EXPECT_EQ(rationals(singular_values(P("x^2 + y^2"))), (std::vector<Rational>{0}));
  EXPECT_EQ(rationals(singular_values(P("x^3 + y^2"))), (std::vector<Rational>{0}));
  EXPECT_EQ(rationals(singular_values(P("(x*y - 1)^2"))), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(rationals(singular_values(P("(x^2+y^2-1)*(x^2+1)"))), (std::vector<Rational>{-1}));
  EXPECT_EQ(rationals(singular_values(P("x^2*y^2-2*x*y+y^2+1"))), (std::vector<Rational>{1}));
  EXPECT_TRUE(singular_values(P("x + x^2*y")).empty());
  EXPECT_TRUE(singular_values(P("x")).empty());
  // G = x^2 + y^2 + 1 has no real point; only the origin counts
  EXPECT_EQ(rationals(singular_values(P("(x^2 + y^2 + 1)^2"))), (std::vector<Rational>{1}));
}

TEST(SingularValues, IrrationalValues) {
  // critical points at x = +-1/sqrt(3), values -+2/(3 sqrt 3)
  const auto v = singular_values(P("x^3 - x + y^2"));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_NEAR(v[0].to_double(), -2 / (3 * std::sqrt(3.0)), 1e-12);
  EXPECT_NEAR(v[1].to_double(), 2 / (3 * std::sqrt(3.0)), 1e-12);
}

TEST(SingularValues, ContainNewtonCriticalValues) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), keep(0, 1);
  for (int trial = 0; trial < 12; ++trial) {
    BiPoly<Rational> f;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j)
        if (keep(rng)) f.add(i, j, Rational(coef(rng)));
    f.normalize();
    if (f.total_degree() < 2) continue;
    const auto vals = singular_values(f);
    for (double c : newton_critical_values(f)) {
      bool found = false;
      for (const auto& a : vals) found = found || std::abs(a.to_double() - c) < 1e-6 * (1 + std::abs(c));
      EXPECT_TRUE(found) << to_string(f) << " value " << c;
    }
  }
}

TEST(CompactAudit, Examples) {
  EXPECT_TRUE(compact_singularity_audit(P("x^3 + y^2"), AlgebraicNumber(Rational(0))));
  EXPECT_TRUE(compact_singularity_audit(P("(x^2+y^2-1)*(x^2+1)"), AlgebraicNumber(Rational(-1))));
  EXPECT_FALSE(compact_singularity_audit(P("(x*y - 1)^2"), AlgebraicNumber(Rational(0))));
  EXPECT_TRUE(compact_singularity_audit(P("(x*y - 1)^2"), AlgebraicNumber(Rational(1))));
}

TEST(Driver, FixtureBifurcationSets) {
  struct Case {
    const char* f;
    std::vector<Rational> b;
  };
  for (const Case& c : std::vector<Case>{{"x + x^2*y", {0}},
                                         {"(x^2+y^2-1)*(x^2+1)", {-1}},
                                         {"2*x^2*y^3-9*x*y^2+12*y", {}},
                                         {"y*(x^2*y^2+3*x*y+3)", {}},
                                         {"x^2*y^2-2*x*y+y^2+1", {0, 1}},
                                         {"x^3 + y^2", {0}},
                                         {"y^3 - 3*y", {-2, 2}}}) {
    const auto r = bifurcation_set(P(c.f));
    EXPECT_TRUE(r.primitive) << c.f;
    EXPECT_EQ(rationals(r.bifurcation_set), c.b) << c.f;
  }
}

TEST(Driver, CandidateFlags) {
  auto r = bifurcation_set(P("x + x^2*y"));
  ASSERT_EQ(r.candidates.size(), 1u);
  const auto& v = r.candidates[0];
  EXPECT_EQ(v.candidate.point.chart, Chart::Y);
  EXPECT_TRUE(v.candidate.point.coordinate.is_rational());
  EXPECT_EQ(v.candidate.lambda.rational_value(), Rational(0));
  EXPECT_TRUE(v.split_left);
  EXPECT_TRUE(v.split_right);
  EXPECT_TRUE(v.atypical);
  EXPECT_LT(v.box.t_minus, Rational(0));
  EXPECT_GT(v.box.t_plus, Rational(0));

  r = bifurcation_set(P("2*x^2*y^3-9*x*y^2+12*y"));
  bool seen = false;
  for (const auto& w : r.candidates) {
    if (w.candidate.point.chart != Chart::X || sgn(w.candidate.lambda.rational_value()) != 0) continue;
    seen = true;
    EXPECT_FALSE(w.vanish_left || w.vanish_right || w.split_left || w.split_right);
  }
  EXPECT_TRUE(seen);

  r = bifurcation_set(P("x^2*y^2-2*x*y+y^2+1"));
  ASSERT_EQ(rationals(r.atypical_at_infinity), (std::vector<Rational>{0}));
  for (const auto& w : r.candidates) {
    if (!w.atypical) continue;
    EXPECT_FALSE(w.vanish_left);
    EXPECT_TRUE(w.vanish_right);
    EXPECT_FALSE(w.split_left || w.split_right);
  }
}

TEST(Driver, NonPrimitive) {
  const auto r = bifurcation_set(P("(x^2+y^2)^2 - x^2 - y^2"));
  EXPECT_FALSE(r.primitive);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_EQ(rationals(r.bifurcation_set), (std::vector<Rational>{Rational(-1, 4), 0}));
}

TEST(Driver, UnboundedSingularFibreWarns) {
  const auto r = bifurcation_set(P("(x*y - 1)^2"));
  EXPECT_EQ(rationals(r.bifurcation_set), (std::vector<Rational>{0, 1}));
  bool warned = false;
  for (const auto& w : r.warnings) warned = warned || w.find("unbounded") != std::string::npos;
  EXPECT_TRUE(warned);
}

TEST(Driver, ConstantIsDegenerate) { EXPECT_THROW(bifurcation_set(P("5")), DegenerateGeometry); }

TEST(Driver, BoxBitsBoundDenominators) {
  const auto r = bifurcation_set(P("x + x^2*y"), DriverOptions{8});
  ASSERT_EQ(r.candidates.size(), 1u);
  const auto& b = r.candidates[0].box;
  EXPECT_LE(b.epsilon0.get_den(), 256);
  EXPECT_EQ(Rational(b.delta * 256).get_den(), 1) << b.delta;
}

TEST(Driver, SetIdentityOnRandomPolynomials) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-5, 5), keep(0, 2);
  int done = 0;
  for (int trial = 0; trial < 30 && done < 8; ++trial) {
    BiPoly<Rational> f;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j)
        if (keep(rng) == 0) f.add(i, j, Rational(coef(rng)));
    f.normalize();
    if (f.total_degree() < 2) continue;
    BifurcationReport r;
    try {
      r = bifurcation_set(f);
    } catch (const DegenerateGeometry&) {
      continue;
    }
    ++done;
    for (const auto& a : r.bifurcation_set)
      EXPECT_TRUE(contains(r.singular_values, a) || contains(r.atypical_at_infinity, a)) << to_string(f);
    for (const auto& a : r.singular_values) EXPECT_TRUE(contains(r.bifurcation_set, a)) << to_string(f);
    for (const auto& a : r.atypical_at_infinity) EXPECT_TRUE(contains(r.bifurcation_set, a)) << to_string(f);
    for (std::size_t i = 1; i < r.bifurcation_set.size(); ++i)
      EXPECT_LT(compare(r.bifurcation_set[i - 1], r.bifurcation_set[i]), 0);
    EXPECT_LE(static_cast<int>(r.candidates.size()), r.degree) << to_string(f);
  }
  EXPECT_GE(done, 5);
}
