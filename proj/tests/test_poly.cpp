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

#include <random>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/parser.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/real_root.hpp"
#include "bifurcata/system.hpp"

using namespace bifurcata;

namespace {

Poly<Rational> P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly<Rational>(std::move(v));
}

Poly<Rational> random_poly(std::mt19937& rng, int degree, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Rational> v;
  for (int i = 0; i <= degree; ++i) v.emplace_back(coef(rng));
  if (sgn(v.back()) == 0) v.back() = 1;
  return Poly<Rational>(std::move(v));
}

// Sylvester determinant by Gaussian elimination over Q.
Rational sylvester_resultant(const Poly<Rational>& a, const Poly<Rational>& b) {
  const int m = a.degree(), n = b.degree(), N = m + n;
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[static_cast<std::size_t>(n - j)];
  Rational det(1);
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (sgn(M[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < N; ++r) {
      Rational f = M[r][c] / M[c][c];
      for (int k = c; k < N; ++k) M[r][k] -= f * M[c][k];
    }
  }
  return det;
}

// Real root count on R via Sturm, written independently of the library.
int sturm_count(const Poly<Rational>& p) {
  std::vector<Poly<Rational>> s{p, derivative(p)};
  while (s.back().degree() > 0) {
    Poly<Rational> r = rem(s[s.size() - 2], s.back());
    if (r.empty()) break;
    s.push_back(r.scaled(Rational(-1)));
  }
  auto variations = [&](bool at_plus) {
    int v = 0, last = 0;
    for (const auto& q : s) {
      int sg = sgn(q.lead());
      if (!at_plus && q.degree() % 2 == 1) sg = -sg;
      if (sg != 0 && last != 0 && sg != last) ++v;
      if (sg != 0) last = sg;
    }
    return v;
  };
  return variations(false) - variations(true);
}

}  // namespace

TEST(Parser, Examples) {
  const auto f = parse_polynomial("x + x^2*y");
  EXPECT_EQ(f.total_degree(), 3);
  EXPECT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.coeff(1, 0), 1);
  EXPECT_EQ(f.coeff(2, 1), 1);
  EXPECT_EQ(to_string(parse_polynomial("(x^2+y^2-1)*(x^2+1)")), "x^4+x^2*y^2+y^2-1");
  try {
    parse_polynomial("x^^2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_polynomial("z + 1"), ParseError);
  EXPECT_THROW(parse_polynomial("x^(1/2)"), ParseError);
  EXPECT_THROW(parse_polynomial("x^-1"), ParseError);
  EXPECT_THROW(parse_polynomial("2x"), ParseError);
  EXPECT_THROW(parse_polynomial("(x+1"), ParseError);
  EXPECT_THROW(parse_polynomial(""), ParseError);
}

TEST(Parser, RationalsAndUnaryMinus) {
  const auto f = parse_polynomial("-3/4*x^2 - -(y - 1/2)");
  EXPECT_EQ(f.coeff(2, 0), Rational(-3, 4));
  EXPECT_EQ(f.coeff(0, 1), 1);
  EXPECT_EQ(f.coeff(0, 0), Rational(-1, 2));
}

TEST(Parser, PrintReparseRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-9, 9), e(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    BiPoly<Rational> p;
    for (int k = 0; k < 5; ++k) p.add(e(rng), e(rng), make_rational(c(rng), 1 + (k % 3)));
    p.normalize();
    const std::string s = to_string(p);
    const auto q = parse_polynomial(s);
    EXPECT_EQ(q, p) << s;
    EXPECT_EQ(to_string(q), s);
  }
}

TEST(BiPoly, PartialDerivatives) {
  const auto f = parse_polynomial("x + x^2*y");
  EXPECT_EQ(partial_derivative(f, Var::X), parse_polynomial("1 + 2*x*y"));
  EXPECT_EQ(partial_derivative(f, Var::Y), parse_polynomial("x^2"));
  EXPECT_TRUE(is_zero(partial_derivative(parse_polynomial("5"), Var::X)));
}

TEST(BiPoly, Homogenize) {
  const auto t = homogenize(parse_polynomial("x + x^2*y"));
  EXPECT_EQ(t.degree, 3);
  EXPECT_EQ(t.at_z_one(), parse_polynomial("x + x^2*y"));
  // xz^2 + x^2 y at y = 1 is x z^2 + x^2 in (x, z)
  EXPECT_EQ(t.at_y_one(), parse_polynomial("x*y^2 + x^2"));
  const auto t2 = homogenize(parse_polynomial("x^4 + x^2*y^2 + y^2 - 1"));
  EXPECT_EQ(t2.at_x_one(), parse_polynomial("1 + x^2 + x^2*y^2 - y^4"));
  const auto t3 = homogenize(parse_polynomial("y"));
  EXPECT_EQ(t3.degree, 1);
  EXPECT_THROW(homogenize(BiPoly<Rational>()), std::exception);
}

TEST(BiPoly, HomogenizeRoundTrip) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-9, 9), e(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    BiPoly<Rational> p;
    for (int k = 0; k < 6; ++k) p.add(e(rng), e(rng), Rational(c(rng)));
    p.normalize();
    if (p.empty()) continue;
    EXPECT_EQ(homogenize(p).at_z_one(), p);
  }
}

TEST(Resultant, Examples) {
  EXPECT_NE(sgn(resultant(P({-1, 1}), P({-2, 1}))), 0);
  EXPECT_EQ(abs(resultant(P({-1, 1}), P({-2, 1}))), 1);
  EXPECT_EQ(sgn(resultant(P({-2, 0, 1}), P({-2, 0, 1}))), 0);
  // Res_y(y^2 - x, y) = -x up to sign
  auto A = as_poly_in_y(parse_polynomial("y^2 - x")), B = as_poly_in_y(parse_polynomial("y"));
  Poly<Rational> r = resultant(A, B);
  EXPECT_EQ(r.degree(), 1);
  EXPECT_EQ(abs(r[1]), 1);
  EXPECT_EQ(sgn(r[0]), 0);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_poly(rng, 1 + trial % 6, 9), b = random_poly(rng, 1 + (trial / 6) % 5, 9);
    const Rational r = resultant(a, b), s = sylvester_resultant(a, b);
    EXPECT_EQ(abs(r), abs(s));
  }
}

TEST(Resultant, VanishesIffCommonFactor) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, 1 + trial % 8, 5), b = random_poly(rng, 1 + (trial / 8) % 8, 5);
    if (trial % 3 == 0) {
      auto c = random_poly(rng, 1, 3);
      a = a * c;
      b = b * c;
    }
    const bool common = gcd(a, b).degree() >= 1;
    EXPECT_EQ(sgn(resultant(a, b)) == 0, common);
  }
}

TEST(Squarefree, Examples) {
  EXPECT_EQ(monic(squarefree_part(P({1, -2, 1}))), P({-1, 1}));
  EXPECT_EQ(monic(squarefree_part(P({-2, 0, 1}))), P({-2, 0, 1}));
  const auto z = squarefree_part(to_alg(parse_polynomial("y^2")));
  EXPECT_EQ(z.total_degree(), 1);
  EXPECT_EQ(z.degree_y(), 1);
}

TEST(RealRoots, Examples) {
  auto r = isolate_real_roots(P({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  for (auto& x : r) x.refine_to(Rational(1));
  EXPECT_GE(r[0].lo, -2);
  EXPECT_LE(r[0].hi, -1);
  EXPECT_GE(r[1].lo, 1);
  EXPECT_LE(r[1].hi, 2);
  EXPECT_TRUE(isolate_real_roots(P({1, 0, 1})).empty());
  auto c = isolate_real_roots(P({0, -1, 0, 1}));
  ASSERT_EQ(c.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    c[static_cast<std::size_t>(i)].refine_to(Rational(1, 1000));
    EXPECT_EQ(compare(c[static_cast<std::size_t>(i)], Rational(i - 1)), 0);
  }
}

TEST(RealRoots, CountMatchesSturmOracle) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = squarefree_part(random_poly(rng, 1 + trial % 12, 50));
    if (p.degree() < 1) continue;
    auto roots = isolate_real_roots(p);
    EXPECT_EQ(static_cast<int>(roots.size()), sturm_count(p));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) EXPECT_LE(roots[i].hi, roots[i + 1].lo);
    for (auto& r : roots) {
      if (r.exact()) {
        EXPECT_EQ(sign_at(p, r.lo), 0);
      } else {
        EXPECT_EQ(sign_at(p, r.lo) * sign_at(p, r.hi), -1);
      }
    }
  }
}

TEST(RealRoots, IntervalsAreDisjointAndAscending) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = squarefree_part(random_poly(rng, 3 + trial % 8, 20));
    auto roots = isolate_real_roots(p);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) EXPECT_LT(compare(roots[i], roots[i + 1]), 0);
  }
}

TEST(SolveSystem, Examples) {
  auto s = solve_real_system(parse_polynomial("x^2 + y^2 - 1"), parse_polynomial("y - x"));
  ASSERT_EQ(s.size(), 2u);
  const auto half_sqrt2 = AlgebraicNumber::root_of(P({-1, 0, 2}), Rational(0), Rational(1));
  EXPECT_EQ(compare(s[1].first, half_sqrt2), 0);
  EXPECT_EQ(compare(s[1].second, half_sqrt2), 0);
  EXPECT_LT(s[0].first.sign(), 0);
  auto o = solve_real_system(parse_polynomial("x"), parse_polynomial("y"));
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].first.sign(), 0);
  EXPECT_EQ(o[0].second.sign(), 0);
  EXPECT_TRUE(solve_real_system(parse_polynomial("x^2 + y^2 + 1"), parse_polynomial("x")).empty());
  EXPECT_THROW(solve_real_system(parse_polynomial("x*y"), parse_polynomial("x*(y-1)")), DegenerateGeometry);
}
