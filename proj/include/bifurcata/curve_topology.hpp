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

// Topology of a plane curve {g = 0} inside the closed disk of radius eps
// around the origin: a multigraph swept along the x-axis, plus the two
// tests used for atypical points (a cycle through the origin, and a
// boundary-to-boundary path avoiding it).

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/errors.hpp"
#include "bifurcata/real_root.hpp"
#include "bifurcata/system.hpp"
#include "bifurcata/tower.hpp"

namespace bifurcata {

struct CurveInDisk {
  BiPoly<Alg> g;  // residual curve, no vertical factors
  Rational epsilon;
  std::vector<Alg> vertical_lines;
  Poly<Alg> vertical;  // product of the vertical factors
  bool empty = false;  // no residual curve
};

/// Squarefree part of g with the factors (x - c) split off.
inline CurveInDisk strip_vertical_components(const BiPoly<Alg>& g_in, const Rational& epsilon) {
  if (is_zero(g_in)) throw InvariantViolation("curve polynomial is zero");
  CurveInDisk c;
  c.epsilon = epsilon;
  BiPoly<Alg> g = squarefree_part(g_in);
  auto P = as_poly_in_y(g);
  P.normalize();
  Poly<Alg> cont = content(P);
  if (cont.degree() >= 1) {
    c.vertical_lines = real_root_elements(cont);
    c.vertical = cont;
    P = primitive_part(P);
  }
  c.g = from_poly_in_y(P);
  c.g.normalize();
  c.empty = c.g.degree_y() < 1;
  return c;
}

enum class VertexKind { Origin, Boundary, Interior };

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Origin: return "origin";
    case VertexKind::Boundary: return "boundary";
    default: return "interior";
  }
}

struct FiberPoint {
  RealRoot<Alg> y;
  VertexKind kind = VertexKind::Interior;
  bool critical = false;  // g_y vanishes
};

struct GraphVertex {
  Alg x, y;
  int column = 0;
  VertexKind kind = VertexKind::Interior;
  int L = 0, R = 0;

  AlgebraicNumber x_value() const { return to_algebraic_number(x); }
  AlgebraicNumber y_value() const { return to_algebraic_number(y); }
};

struct CurveGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // multiset
  std::vector<std::pair<int, int>> line_edges;  // segments of vertical lines
  std::vector<Alg> abscissas;
  std::vector<std::vector<int>> columns;  // vertex ids, top to bottom
  int origin = -1;
  std::vector<Alg> vertical_lines;
  std::vector<int> vertical_columns;  // columns lying on a vertical line
  Rational epsilon;
};

namespace topology_detail {

inline Poly<Alg> disk_slack_in_y(const Rational& eps, const Alg& a) {
  return Poly<Alg>(std::vector<Alg>{Alg(eps * eps) - a * a, Alg(0), Alg(-1)});
}

struct Column {
  RealRoot<Alg> a;
  Alg x;
  std::vector<FiberPoint> points;  // descending
};

/// Number of real roots of g(s, .) in the open disk, grouped by rational
/// separators (descending); band i lies between separators i-1 and i.
inline std::vector<int> band_counts(const BiPoly<Alg>& g, const Rational& eps, const Rational& s,
                                    const std::vector<Rational>& seps) {
  std::vector<int> count(seps.size() + 1, 0);
  Poly<Alg> fiber = substitute_x(g, Alg(s));
  fiber.normalize();
  if (fiber.empty()) throw InvariantViolation("fiber vanishes at a sample abscissa");
  if (fiber.degree() < 1) return count;
  Poly<Alg> slack = disk_slack_in_y(eps, Alg(s));
  for (auto& r : isolate_real_roots(fiber)) {
    int in = sign_at_root(slack, r);
    if (in == 0) throw InvariantViolation("boundary point at a sample abscissa");
    if (in < 0) continue;
    std::size_t band = 0;
    while (band < seps.size() && compare(r, seps[band]) < 0) ++band;
    count[band]++;
  }
  return count;
}

/// Descending rational separators between the fiber points of a column; the
/// horizontal lines through them are not curve components.
inline std::vector<Rational> separators(const BiPoly<Alg>& g, Column& col) {
  std::vector<Rational> seps;
  for (std::size_t i = 0; i + 1 < col.points.size(); ++i) {
    RealRoot<Alg>& hi = col.points[i].y;
    RealRoot<Alg>& lo = col.points[i + 1].y;
    while (true) {
      Rational s = rational_between(lo, hi);
      Poly<Alg> line = substitute_y(g, Alg(s));
      line.normalize();
      if (!line.empty()) {
        seps.push_back(s);
        break;
      }
      lo.bisect();
      hi.bisect();
    }
  }
  return seps;
}

/// Real roots of g(., s) for all separators s, as x-values.
inline std::vector<RealRoot<Alg>> separator_crossings(const BiPoly<Alg>& g, const std::vector<Rational>& seps) {
  std::vector<RealRoot<Alg>> out;
  for (const auto& s : seps) {
    Poly<Alg> line = substitute_y(g, Alg(s));
    line.normalize();
    if (line.degree() < 1) continue;
    for (auto& r : isolate_real_roots(line)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace topology_detail

/// Real roots of g(a, .) in the closed disk, descending.
inline std::vector<FiberPoint> fiber_vertices(const CurveInDisk& c, const Alg& a) {
  std::vector<FiberPoint> out;
  if (c.empty) return out;
  Poly<Alg> fiber = substitute_x(c.g, a);
  fiber.normalize();
  if (fiber.empty()) throw InvariantViolation("curve contains a vertical line after stripping");
  if (fiber.degree() < 1) return out;
  Poly<Alg> slack = topology_detail::disk_slack_in_y(c.epsilon, a);
  Poly<Alg> gy = substitute_x(partial_derivative(c.g, Var::Y), a);
  gy.normalize();
  const bool at_zero = is_zero(a);
  auto roots = isolate_real_roots(fiber);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    FiberPoint p;
    p.y = *it;
    const int in = sign_at_root(slack, p.y);
    if (in < 0) continue;
    if (in == 0) {
      p.kind = VertexKind::Boundary;
    } else if (at_zero && compare(p.y, Rational(0)) == 0) {
      p.kind = VertexKind::Origin;
    }
    p.critical = gy.empty() || (gy.degree() >= 1 && sign_at_root(gy, p.y) == 0) ||
                 (gy.degree() == 0 && is_zero(gy.lead()));
    out.push_back(std::move(p));
  }
  return out;
}

/// Event abscissas: the origin, critical points of the projection and
/// boundary crossings, ascending.
inline std::vector<std::pair<RealRoot<Alg>, Alg>> event_abscissas(const CurveInDisk& c) {
  std::vector<std::pair<RealRoot<Alg>, Alg>> out;
  Poly<Alg> X(std::vector<Alg>{Alg(0), Alg(1)});
  // vertical lines get their own columns, which record where they meet the rest of the curve
  auto on_line = [&](RealRoot<Alg> r) { return c.vertical.degree() >= 1 && sign_at_root(c.vertical, r) == 0; };
  if (c.empty) {
    std::vector<RealRoot<Alg>> roots;
    for (const auto& piece : coprime_basis(std::vector<Poly<Alg>>{X, c.vertical}))
      for (auto& r : isolate_real_roots(piece)) roots.push_back(std::move(r));
    std::sort(roots.begin(), roots.end(), [](RealRoot<Alg> a, RealRoot<Alg> b) { return compare(a, b) < 0; });
    for (auto& r : roots) {
      if (compare(r, -c.epsilon) < 0 || compare(r, c.epsilon) > 0) continue;
      Alg a = adjoin_root(r);
      out.emplace_back(std::move(r), std::move(a));
    }
    return out;
  }
  auto G = as_poly_in_y(c.g);
  auto Gy = as_poly_in_y(partial_derivative(c.g, Var::Y));
  BiPoly<Alg> circle = BiPoly<Alg>::x() * BiPoly<Alg>::x() + BiPoly<Alg>::y() * BiPoly<Alg>::y() -
                       BiPoly<Alg>(Alg(c.epsilon * c.epsilon));
  G.normalize();
  Gy.normalize();
  Poly<Alg> D = resultant(G, Gy);
  Poly<Alg> B = resultant(G, as_poly_in_y(circle));
  D.normalize();
  B.normalize();
  if (D.empty() || B.empty()) throw InvariantViolation("positive-dimensional event set");
  // roots are adjoined through the smallest coprime piece that carries them
  std::vector<RealRoot<Alg>> roots;
  std::vector<Poly<Alg>> events{X, D, B};
  if (c.vertical.degree() >= 1) events.push_back(c.vertical);
  for (const auto& piece : coprime_basis(events))
    for (auto& r : isolate_real_roots(piece)) roots.push_back(std::move(r));
  std::sort(roots.begin(), roots.end(), [](RealRoot<Alg> a, RealRoot<Alg> b) { return compare(a, b) < 0; });
  for (auto& r : roots) {
    if (compare(r, -c.epsilon) < 0 || compare(r, c.epsilon) > 0) continue;
    const bool line = on_line(r);
    Alg a = adjoin_root(r);
    bool keep = line || is_zero(a);
    if (!keep) {
      for (const auto& p : fiber_vertices(c, a))
        if (p.kind != VertexKind::Interior || p.critical) keep = true;
    }
    if (keep) out.emplace_back(std::move(r), std::move(a));
  }
  return out;
}

/// Vertices, L/R counts and edges of the curve graph.
inline CurveGraph assemble_graph(const CurveInDisk& c) {
  using namespace topology_detail;
  CurveGraph gr;
  gr.epsilon = c.epsilon;
  gr.vertical_lines = c.vertical_lines;
  std::vector<Column> cols;
  for (auto& [r, a] : event_abscissas(c)) {
    if (c.vertical.degree() >= 1 && sign_at_root(c.vertical, r) == 0) gr.vertical_columns.push_back(static_cast<int>(cols.size()));
    Column col{r, a, fiber_vertices(c, a)};
    if (is_zero(a) && std::none_of(col.points.begin(), col.points.end(),
                                   [](const FiberPoint& p) { return p.kind == VertexKind::Origin; })) {
      // isolated origin of the ambient curve (e.g. on a vertical line)
      FiberPoint o;
      o.y = make_real_root(Poly<Alg>(std::vector<Alg>{Alg(0), Alg(1)}), Rational(0), Rational(0));
      o.kind = VertexKind::Origin;
      auto pos = std::find_if(col.points.begin(), col.points.end(),
                              [&](FiberPoint& p) { return compare(p.y, Rational(0)) < 0; });
      col.points.insert(pos, std::move(o));
    }
    cols.push_back(std::move(col));
  }

  for (std::size_t j = 0; j < cols.size(); ++j) {
    gr.abscissas.push_back(cols[j].x);
    std::vector<int> ids;
    for (auto& p : cols[j].points) {
      GraphVertex v;
      v.x = cols[j].x;
      v.y = adjoin_root(p.y);
      v.column = static_cast<int>(j);
      v.kind = p.kind;
      if (v.kind == VertexKind::Origin) gr.origin = static_cast<int>(gr.vertices.size());
      ids.push_back(static_cast<int>(gr.vertices.size()));
      gr.vertices.push_back(std::move(v));
    }
    gr.columns.push_back(std::move(ids));
  }
  check_invariant(gr.origin >= 0, "origin vertex missing");

  // a vertical line runs from its top circle point through its column to the bottom one
  for (int j : gr.vertical_columns) {
    const Alg& x = cols[static_cast<std::size_t>(j)].x;
    auto ends = isolate_real_roots(Poly<Alg>(std::vector<Alg>{x * x - Alg(c.epsilon * c.epsilon), Alg(0), Alg(1)}));
    std::vector<int> chain;
    for (int k = 1; k >= 0; --k) {
      GraphVertex v;
      v.x = x;
      v.y = adjoin_root(ends[static_cast<std::size_t>(k)]);
      v.column = j;
      v.kind = VertexKind::Boundary;
      if (k == 0) chain.insert(chain.end(), gr.columns[static_cast<std::size_t>(j)].begin(), gr.columns[static_cast<std::size_t>(j)].end());
      chain.push_back(static_cast<int>(gr.vertices.size()));
      gr.vertices.push_back(std::move(v));
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) gr.line_edges.emplace_back(chain[k], chain[k + 1]);
  }

  // arcs over each gap, matched to the vertices at both ends
  for (std::size_t j = 0; j + 1 < cols.size() && !c.empty; ++j) {
    Column& left = cols[j];
    Column& right = cols[j + 1];
    std::vector<Rational> sl = separators(c.g, left), sr = separators(c.g, right);
    // right side of the left column: no separator crossing in (a_j, s]
    std::optional<RealRoot<Alg>> bound_r;
    for (auto& r : separator_crossings(c.g, sl)) {
      if (compare(r, left.a) <= 0) continue;
      if (!bound_r || compare(r, *bound_r) < 0) bound_r = r;
    }
    RealRoot<Alg> ub = right.a;
    if (bound_r && compare(*bound_r, ub) < 0) ub = *bound_r;
    const Rational s_right = rational_between(left.a, ub);
    std::optional<RealRoot<Alg>> bound_l;
    for (auto& r : separator_crossings(c.g, sr)) {
      if (compare(r, right.a) >= 0) continue;
      if (!bound_l || compare(r, *bound_l) > 0) bound_l = r;
    }
    RealRoot<Alg> lb = left.a;
    if (bound_l && compare(*bound_l, lb) > 0) lb = *bound_l;
    const Rational s_left = rational_between(lb, right.a);

    std::vector<int> R = band_counts(c.g, c.epsilon, s_right, sl);
    std::vector<int> L = band_counts(c.g, c.epsilon, s_left, sr);
    int total_r = 0, total_l = 0;
    for (std::size_t i = 0; i < R.size(); ++i) {
      gr.vertices[static_cast<std::size_t>(gr.columns[j][i])].R = R[i];
      total_r += R[i];
    }
    for (std::size_t i = 0; i < L.size(); ++i) {
      gr.vertices[static_cast<std::size_t>(gr.columns[j + 1][i])].L = L[i];
      total_l += L[i];
    }
    if (total_r != total_l) throw InvariantViolation("arc count differs across a gap");
  }

  // sweep: top to bottom, each arc leaving q_j^k ends at the first vertex of
  // column j+1 with arcs still unmatched on its left
  std::vector<int> L(gr.vertices.size()), R(gr.vertices.size());
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) L[v] = gr.vertices[v].L, R[v] = gr.vertices[v].R;
  for (std::size_t j = 0; j + 1 < gr.columns.size(); ++j) {
    for (int q : gr.columns[j]) {
      while (R[static_cast<std::size_t>(q)] > 0) {
        int target = -1;
        for (int s : gr.columns[j + 1])
          if (L[static_cast<std::size_t>(s)] > 0) {
            target = s;
            break;
          }
        if (target < 0) throw InvariantViolation("unmatched arc in the sweep");
        gr.edges.emplace_back(q, target);
        --R[static_cast<std::size_t>(q)];
        --L[static_cast<std::size_t>(target)];
      }
    }
  }
  for (std::size_t v = 0; v < gr.vertices.size(); ++v)
    if (L[v] != 0 || R[v] != 0) throw InvariantViolation("residual arc counters after the sweep");
  return gr;
}

inline CurveGraph curve_graph(const BiPoly<Alg>& g, const Rational& epsilon) {
  return assemble_graph(strip_vertical_components(g, epsilon));
}

/// Empty string when the degree invariants hold, otherwise a description.
inline std::string degree_invariant_violation(const CurveGraph& gr, int d) {
  std::vector<int> on_line(gr.vertices.size(), 0);
  for (const auto& [a, b] : gr.line_edges) ++on_line[static_cast<std::size_t>(a)], ++on_line[static_cast<std::size_t>(b)];
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    const auto& q = gr.vertices[v];
    if (q.kind == VertexKind::Interior && q.L + q.R != 2) return "interior vertex " + std::to_string(v) + " has degree " + std::to_string(q.L + q.R);
    if (q.kind == VertexKind::Boundary && q.L + q.R + on_line[v] != 1) return "boundary vertex " + std::to_string(v) + " has degree " + std::to_string(q.L + q.R + on_line[v]);
  }
  if (static_cast<long>(gr.edges.size() + gr.line_edges.size()) > 3L * d * d) return "too many edges";
  return {};
}

namespace topology_detail {

/// Arcs followed by vertical line segments.
inline std::vector<std::pair<int, int>> all_edges(const CurveGraph& gr) {
  auto out = gr.edges;
  out.insert(out.end(), gr.line_edges.begin(), gr.line_edges.end());
  return out;
}

inline std::vector<std::vector<int>> adjacency(const CurveGraph& gr, int skip_edge = -1) {
  std::vector<std::vector<int>> adj(gr.vertices.size());
  const auto edges = all_edges(gr);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (static_cast<int>(e) == skip_edge) continue;
    adj[static_cast<std::size_t>(edges[e].first)].push_back(edges[e].second);
    adj[static_cast<std::size_t>(edges[e].second)].push_back(edges[e].first);
  }
  return adj;
}

/// Component labels, ignoring vertex `removed`.
inline std::vector<int> components(const std::vector<std::vector<int>>& adj, int removed = -1) {
  std::vector<int> label(adj.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (label[s] >= 0 || static_cast<int>(s) == removed) continue;
    std::vector<int> stack{static_cast<int>(s)};
    label[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w == removed || label[static_cast<std::size_t>(w)] >= 0) continue;
        label[static_cast<std::size_t>(w)] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

}  // namespace topology_detail

/// Number of connected components of the graph.
inline int component_count(const CurveGraph& gr) {
  auto label = topology_detail::components(topology_detail::adjacency(gr));
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

/// Some cycle passes through the origin: an origin edge is not a bridge.
inline bool detect_vanishing(const CurveGraph& gr) {
  const auto edges = topology_detail::all_edges(gr);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    if (a != gr.origin && b != gr.origin) continue;
    auto label = topology_detail::components(topology_detail::adjacency(gr, static_cast<int>(e)));
    if (label[static_cast<std::size_t>(a)] == label[static_cast<std::size_t>(b)]) return true;
  }
  return false;
}

/// A path between two boundary vertices avoiding the origin.
inline bool detect_splitting(const CurveGraph& gr) {
  auto label = topology_detail::components(topology_detail::adjacency(gr), gr.origin);
  std::vector<int> boundary_count(gr.vertices.size(), 0);
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    if (gr.vertices[v].kind != VertexKind::Boundary) continue;
    if (++boundary_count[static_cast<std::size_t>(label[v])] >= 2) return true;
  }
  return false;
}

/// Components touching neither the boundary nor the origin.
inline int interior_oval_count(const CurveGraph& gr) {
  auto label = topology_detail::components(topology_detail::adjacency(gr));
  int n = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<bool> anchored(static_cast<std::size_t>(n), false);
  for (std::size_t v = 0; v < gr.vertices.size(); ++v)
    if (gr.vertices[v].kind != VertexKind::Interior) anchored[static_cast<std::size_t>(label[v])] = true;
  return static_cast<int>(std::count(anchored.begin(), anchored.end(), false));
}

/// Text dump: one line per vertex, then the edge multiset.
inline std::string debug_dump(const CurveGraph& gr) {
  std::ostringstream os;
  os << "vertices " << gr.vertices.size() << "\n";
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    const auto& q = gr.vertices[v];
    os << "  " << v << " col=" << q.column << " x=" << decimal_text(q.x_value()) << " y=" << decimal_text(q.y_value())
       << " " << to_string(q.kind) << " L=" << q.L << " R=" << q.R << "\n";
  }
  auto edges = topology_detail::all_edges(gr);
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  os << "edges " << edges.size() << "\n";
  for (const auto& [a, b] : edges) os << "  " << a << "-" << b << "\n";
  if (!gr.vertical_lines.empty()) {
    os << "vertical";
    for (const auto& c : gr.vertical_lines) os << " " << decimal_text(to_algebraic_number(c));
    os << "\n";
  }
  return os.str();
}

}  // namespace bifurcata
