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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "bifurcata/curve_topology.hpp"
#include "bifurcata/disk_box.hpp"
#include "bifurcata/minpoly.hpp"
#include "bifurcata/parser.hpp"
#include "oracles.hpp"

using namespace bifurcata;

namespace {

BiPoly<Alg> A(const char* s) { return to_alg(parse_polynomial(s)); }

std::vector<AlgebraicNumber> abscissas(const char* g, const Rational& eps) {
  std::vector<AlgebraicNumber> out;
  for (auto& [r, a] : event_abscissas(strip_vertical_components(A(g), eps))) out.push_back(to_algebraic_number(a));
  return out;
}

const GraphVertex& vertex_of_kind(const CurveGraph& gr, VertexKind k, int nth = 0) {
  for (const auto& v : gr.vertices)
    if (v.kind == k && nth-- == 0) return v;
  throw std::runtime_error("no such vertex");
}

int count_kind(const CurveGraph& gr, VertexKind k) {
  return static_cast<int>(std::count_if(gr.vertices.begin(), gr.vertices.end(), [&](const GraphVertex& v) { return v.kind == k; }));
}

CurveGraph side_graph(const char* f, const InfinityPoint& p, bool right) {
  const auto fam = localize_at(parse_polynomial(f), p);
  const auto box = compute_disk_box(fam, AlgebraicNumber(Rational(0)));
  return curve_graph(fiber_family(fam, Alg(right ? box.t_plus : box.t_minus)), box.epsilon0);
}

}  // namespace

TEST(StripVertical, Examples) {
  auto c = strip_vertical_components(A("x*(y - x)"), Rational(1));
  ASSERT_EQ(c.vertical_lines.size(), 1u);
  EXPECT_TRUE(is_zero(c.vertical_lines[0]));
  EXPECT_EQ(c.g.total_degree(), 1);

  c = strip_vertical_components(A("(x - 1/2)*(x + 1/3)"), Rational(1));
  EXPECT_TRUE(c.empty);
  EXPECT_EQ(c.vertical_lines.size(), 2u);

  c = strip_vertical_components(A("(x^2 + 1)*y"), Rational(1));
  EXPECT_TRUE(c.vertical_lines.empty());
  EXPECT_EQ(c.g.degree_x(), 0);
}

TEST(EventAbscissas, Examples) {
  auto ev = abscissas("y^2 - x", Rational(1));
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(compare(ev[0], AlgebraicNumber(Rational(0))), 0);
  // boundary crossing at x^2 + x - 1 = 0
  EXPECT_EQ(to_string(minimal_polynomial(ev[1]), "x"), "x^2+x-1");
  EXPECT_NEAR(ev[1].to_double(), (std::sqrt(5.0) - 1) / 2, 1e-12);

  ev = abscissas("y", Rational(1, 2));
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_EQ(ev[0].rational_value(), Rational(-1, 2));
  EXPECT_EQ(ev[1].rational_value(), Rational(0));
  EXPECT_EQ(ev[2].rational_value(), Rational(1, 2));

  // a vertical line gets its own column
  ev = abscissas("x - 1/4", Rational(1));
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(ev[0].rational_value(), Rational(0));
  EXPECT_EQ(ev[1].rational_value(), Rational(1, 4));
}

TEST(FiberVertices, Examples) {
  const auto c = strip_vertical_components(A("y^2 - x"), Rational(1));
  auto f = fiber_vertices(c, Alg(Rational(1, 4)));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(compare(f[0].y, Rational(1, 2)), 0);
  EXPECT_EQ(compare(f[1].y, Rational(-1, 2)), 0);
  EXPECT_EQ(f[0].kind, VertexKind::Interior);

  f = fiber_vertices(c, Alg(Rational(0)));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].kind, VertexKind::Origin);
  EXPECT_TRUE(f[0].critical);

  EXPECT_TRUE(fiber_vertices(c, Alg(Rational(-1, 4))).empty());
  // outside the disk
  EXPECT_TRUE(fiber_vertices(strip_vertical_components(A("y - 2"), Rational(1)), Alg(Rational(0))).empty());
}

TEST(CurveGraph, Parabola) {
  const auto gr = curve_graph(A("y^2 - x"), Rational(1));
  EXPECT_EQ(gr.vertices.size(), 3u);
  EXPECT_EQ(gr.edges.size(), 2u);
  const auto& o = gr.vertices[static_cast<std::size_t>(gr.origin)];
  EXPECT_EQ(o.L, 0);
  EXPECT_EQ(o.R, 2);
  for (int i = 0; i < 2; ++i) {
    const auto& b = vertex_of_kind(gr, VertexKind::Boundary, i);
    EXPECT_EQ(b.L, 1);
    EXPECT_EQ(b.R, 0);
  }
  EXPECT_FALSE(detect_vanishing(gr));
  EXPECT_FALSE(detect_splitting(gr));
  EXPECT_EQ(component_count(gr), 1);
}

TEST(CurveGraph, LinesAndCrossings) {
  auto gr = curve_graph(A("y"), Rational(1, 2));
  EXPECT_EQ(gr.vertices.size(), 3u);
  EXPECT_EQ(gr.edges.size(), 2u);
  EXPECT_EQ(gr.vertices[static_cast<std::size_t>(gr.origin)].L, 1);
  EXPECT_EQ(gr.vertices[static_cast<std::size_t>(gr.origin)].R, 1);

  gr = curve_graph(A("x^2 - y^2"), Rational(1));
  EXPECT_EQ(gr.vertices[static_cast<std::size_t>(gr.origin)].L, 2);
  EXPECT_EQ(gr.vertices[static_cast<std::size_t>(gr.origin)].R, 2);
  EXPECT_EQ(count_kind(gr, VertexKind::Boundary), 4);
  EXPECT_FALSE(detect_splitting(gr));

  gr = curve_graph(A("x*(y - x)"), Rational(1));
  ASSERT_EQ(gr.vertical_lines.size(), 1u);
  EXPECT_FALSE(detect_splitting(gr));
}

TEST(CurveGraph, VerticalLinesJoinTheCurvesTheyMeet) {
  // x = 1/4 crosses y = 0 once: one component with four boundary points
  auto gr = curve_graph(A("(x - 1/4)*y"), Rational(1));
  ASSERT_EQ(gr.vertical_columns.size(), 1u);
  EXPECT_EQ(gr.columns[static_cast<std::size_t>(gr.vertical_columns[0])].size(), 1u);
  EXPECT_EQ(gr.line_edges.size(), 2u);
  EXPECT_EQ(component_count(gr), 1);
  EXPECT_EQ(count_kind(gr, VertexKind::Boundary), 4);
  EXPECT_EQ(degree_invariant_violation(gr, 2), "");

  // x = 0 through the origin, the other factor outside the disk
  gr = curve_graph(A("x*(4*y - 3)"), Rational(1, 2));
  EXPECT_EQ(component_count(gr), 1);
  EXPECT_FALSE(detect_splitting(gr));
  EXPECT_FALSE(detect_vanishing(gr));

  // the parabola x = y^2 - y meets x = 0 at the origin and at (0, 1); only
  // the line segment between them closes a cycle through the origin
  EXPECT_FALSE(detect_vanishing(curve_graph(A("x - y^2 + y"), Rational(2))));
  gr = curve_graph(A("x*(x - y^2 + y)"), Rational(2));
  EXPECT_TRUE(detect_vanishing(gr));
  EXPECT_TRUE(detect_splitting(gr));
  EXPECT_EQ(degree_invariant_violation(gr, 3), "");
}

TEST(CurveGraph, InteriorOvalIsADoubleEdge) {
  // the line y = 0 and a small circle away from it
  const auto gr = curve_graph(A("y*((x - 1/4)^2 + (y - 1/4)^2 - 1/64)"), Rational(1));
  EXPECT_EQ(interior_oval_count(gr), 1);
  EXPECT_EQ(component_count(gr), 2);
  std::map<std::pair<int, int>, int> mult;
  for (auto [a, b] : gr.edges) ++mult[{std::min(a, b), std::max(a, b)}];
  int doubled = 0;
  for (const auto& [e, m] : mult) doubled += m == 2;
  EXPECT_EQ(doubled, 1);
  EXPECT_FALSE(detect_vanishing(gr));
  EXPECT_FALSE(detect_splitting(gr));
}

TEST(CurveGraph, VanishingAndSplittingExamples) {
  // a loop through the origin
  EXPECT_TRUE(detect_vanishing(curve_graph(A("y^2 - x^2 - 4*x^3"), Rational(1, 2))));
  // the same node with its loop leaving the disk
  EXPECT_FALSE(detect_vanishing(curve_graph(A("y^2 - x^2 - x^3"), Rational(1, 2))));
  EXPECT_TRUE(detect_splitting(curve_graph(A("(x - 1/4)*y"), Rational(1))));
  // a vertical line off the origin, nothing else
  const auto gr = curve_graph(A("x - 1/2"), Rational(1));
  EXPECT_EQ(gr.vertices.size(), 3u);  // the isolated origin and the two ends of the line
  EXPECT_EQ(gr.line_edges.size(), 1u);
  EXPECT_EQ(component_count(gr), 2);
  EXPECT_TRUE(detect_splitting(gr));
  EXPECT_FALSE(detect_splitting(curve_graph(A("x - 2"), Rational(1))));
}

TEST(CurveGraph, FixtureSides) {
  const AlgebraicNumber zero(Rational(0));
  // x + x^2 y at [0:1:0]: splitting on both sides
  for (bool right : {false, true}) {
    const auto gr = side_graph("x + x^2*y", {Chart::Y, zero}, right);
    EXPECT_TRUE(detect_splitting(gr));
    EXPECT_FALSE(detect_vanishing(gr));
    EXPECT_EQ(degree_invariant_violation(gr, 3), "");
  }
  for (const char* f : {"2*x^2*y^3-9*x*y^2+12*y", "y*(x^2*y^2+3*x*y+3)"}) {
    for (bool right : {false, true}) {
      const auto gr = side_graph(f, {Chart::X, zero}, right);
      EXPECT_FALSE(detect_splitting(gr)) << f;
      EXPECT_FALSE(detect_vanishing(gr)) << f;
    }
  }
  EXPECT_FALSE(detect_vanishing(side_graph("x^2*y^2-2*x*y+y^2+1", {Chart::X, zero}, false)));
  EXPECT_TRUE(detect_vanishing(side_graph("x^2*y^2-2*x*y+y^2+1", {Chart::X, zero}, true)));
}

TEST(CurveGraph, ReflectionOfSymmetricCurves) {
  for (const char* g : {"y^2 - x^2 - x^3", "y^2 - x", "x*(x^2 + y^2 - 1/16) + y^4", "y^4 - x^2 + x*y^2"}) {
    const auto gr = curve_graph(A(g), Rational(1, 2));
    std::vector<int> mirror(gr.vertices.size(), -1);
    for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
      const auto& p = gr.vertices[v];
      for (std::size_t w = 0; w < gr.vertices.size(); ++w) {
        const auto& q = gr.vertices[w];
        // abscissas are shared exactly; ordinates are well separated
        if (compare(p.x_value(), q.x_value()) == 0 && std::abs(p.y_value().to_double() + q.y_value().to_double()) < 1e-9)
          mirror[v] = static_cast<int>(w);
      }
      ASSERT_GE(mirror[v], 0) << g;
      const auto& q = gr.vertices[static_cast<std::size_t>(mirror[v])];
      EXPECT_EQ(p.kind, q.kind) << g;
      EXPECT_EQ(p.L, q.L) << g;
      EXPECT_EQ(p.R, q.R) << g;
    }
    std::multiset<std::pair<int, int>> edges, reflected;
    for (auto [a, b] : gr.edges) {
      edges.insert({std::min(a, b), std::max(a, b)});
      const int ma = mirror[static_cast<std::size_t>(a)], mb = mirror[static_cast<std::size_t>(b)];
      reflected.insert({std::min(ma, mb), std::max(ma, mb)});
    }
    EXPECT_EQ(edges, reflected) << g;
  }
}

TEST(CurveGraph, BoundaryVerticesAreCircleIntersections) {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    const auto gq = oracle::random_curve(rng, 4, 4);
    const Rational eps(1, 2);
    if (!oracle::transversal_in_disk(gq, eps)) continue;
    if (!strip_vertical_components(to_alg(gq), eps).vertical_lines.empty()) continue;
    CurveGraph gr;
    try {
      gr = curve_graph(to_alg(gq), eps);
    } catch (const DegenerateGeometry&) {
      continue;
    }
    const auto circle = parse_polynomial("x^2 + y^2 - 1/4");
    const auto pts = solve_real_system(gq, circle);
    EXPECT_EQ(count_kind(gr, VertexKind::Boundary), static_cast<int>(pts.size())) << to_string(gq);
    EXPECT_EQ(count_kind(gr, VertexKind::Boundary) % 2, 0);
    EXPECT_EQ(degree_invariant_violation(gr, gq.total_degree()), "") << to_string(gq);
    ++checked;
  }
  EXPECT_GE(checked, 8);
}

TEST(CurveGraph, ComponentsAgreeWithMarchingSquares) {
  for (const char* g : {"y^2 - x", "y*(x^2 + y^2 - 1/16)", "y*((x - 1/4)^2 + (y - 1/4)^2 - 1/64)", "x^2 - y^2",
                        "y^2 - x^2 - x^3", "(x - 1/4)*y"}) {
    const auto gq = parse_polynomial(g);
    const auto gr = curve_graph(to_alg(gq), Rational(1, 2));
    const int a = oracle::marching_components(gq, 0.5, 400), b = oracle::marching_components(gq, 0.5, 800);
    ASSERT_EQ(a, b) << g;
    EXPECT_EQ(oracle::graph_components(gr), a) << g;
  }
}
