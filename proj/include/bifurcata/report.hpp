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

// JSON, plain text and SVG renderings of a BifurcationReport.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bifurcata/bifurcation.hpp"
#include "bifurcata/minpoly.hpp"

namespace bifurcata {

using Json = nlohmann::ordered_json;

inline Json algnum_json(const AlgebraicNumber& a) {
  const AlgebraicNumber r = a.refine(pow2(-32));
  Json j;
  j["approx"] = decimal_text(a);
  j["min_poly"] = to_string(minimal_polynomial(a), "x");
  j["interval"] = Json::array({r.lo().get_str(), r.hi().get_str()});
  return j;
}

inline Json algnum_list_json(const std::vector<AlgebraicNumber>& v) {
  Json j = Json::array();
  for (const auto& a : v) j.push_back(algnum_json(a));
  return j;
}

inline Json report_json(const BifurcationReport& r) {
  Json j;
  j["input"] = r.input;
  j["degree"] = r.degree;
  j["primitive"] = r.primitive;
  j["singular_values"] = algnum_list_json(r.singular_values);
  Json cands = Json::array();
  for (const auto& v : r.candidates) {
    Json c;
    c["point"] = {{"chart", v.candidate.point.chart == Chart::Y ? "y" : "x"},
                  {"coordinate", algnum_json(v.candidate.point.coordinate)}};
    c["lambda"] = algnum_json(v.candidate.lambda);
    c["epsilon0"] = v.box.epsilon0.get_str();
    c["delta"] = v.box.delta.get_str();
    c["t_minus"] = v.box.t_minus.get_str();
    c["t_plus"] = v.box.t_plus.get_str();
    c["vanish"] = Json::array({v.vanish_left, v.vanish_right});
    c["split"] = Json::array({v.split_left, v.split_right});
    c["atypical"] = v.atypical;
    cands.push_back(std::move(c));
  }
  j["candidates"] = std::move(cands);
  j["atypical_at_infinity"] = algnum_list_json(r.atypical_at_infinity);
  j["bifurcation_set"] = algnum_list_json(r.bifurcation_set);
  j["warnings"] = r.warnings;
  return j;
}

inline std::string render_json(const BifurcationReport& r) { return report_json(r).dump(2) + "\n"; }

inline std::string render_text(const BifurcationReport& r) {
  std::ostringstream os;
  auto list = [&](const std::vector<AlgebraicNumber>& v) {
    if (v.empty()) return std::string("(none)");
    std::string s;
    for (const auto& a : v) s += (s.empty() ? "" : ", ") + decimal_text(a) + " [" + to_string(minimal_polynomial(a), "x") + "]";
    return s;
  };
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "f = " << r.input << "\n";
  os << "degree " << r.degree << ", " << (r.primitive ? "primitive" : "not primitive") << "\n";
  os << "singular values: " << list(r.singular_values) << "\n";
  os << "candidates at infinity: " << r.candidates.size() << "\n";
  for (const auto& v : r.candidates) {
    os << "  " << to_string(v.candidate.point) << "  lambda = " << decimal_text(v.candidate.lambda) << "\n";
    os << "    eps0 = " << v.box.epsilon0 << ", delta = " << v.box.delta << "\n";
    os << "    t- = " << v.box.t_minus << ": vanish " << yn(v.vanish_left) << ", split " << yn(v.split_left) << "\n";
    os << "    t+ = " << v.box.t_plus << ": vanish " << yn(v.vanish_right) << ", split " << yn(v.split_right) << "\n";
    os << "    " << (v.atypical ? "atypical" : "not atypical") << "\n";
  }
  os << "atypical at infinity: " << list(r.atypical_at_infinity) << "\n";
  os << "bifurcation set: " << list(r.bifurcation_set) << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

namespace svg_detail {

struct DoublePoly {
  std::vector<std::pair<std::pair<int, int>, double>> terms;
  double operator()(double x, double y) const {
    double s = 0;
    for (const auto& [e, c] : terms) s += c * std::pow(x, e.first) * std::pow(y, e.second);
    return s;
  }
};

inline double approx(const Alg& a) { return to_double(enclose(a, 64).mid()); }

inline DoublePoly fiber_numeric(const LocalizedFamily& fam, double t) {
  DoublePoly p;
  for (const auto& [e, c] : fam.f_hat.terms()) p.terms.push_back({e, approx(c)});
  p.terms.push_back({{0, fam.d}, -t});
  return p;
}

/// Zero set of g in the disk of radius eps, by marching squares.
inline std::string sketch(const DoublePoly& g, double eps, const std::string& title) {
  const int n = 240;
  const double size = 480, scale = size / (2.2 * eps);
  auto sx = [&](double x) { return size / 2 + x * scale; };
  auto sy = [&](double y) { return size / 2 - y * scale; };
  std::vector<double> v(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto X = [&](int i) { return -eps + 2 * eps * i / n; };
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(i * (n + 1) + k)] = g(X(i), X(k));
  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"" << eps * scale
     << "\" fill=\"none\" stroke=\"#999\"/>\n";
  os << "<path fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" d=\"";
  auto val = [&](int i, int k) { return v[static_cast<std::size_t>(i * (n + 1) + k)]; };
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double c[4] = {val(i, k), val(i + 1, k), val(i + 1, k + 1), val(i, k + 1)};
      const double px[4] = {X(i), X(i + 1), X(i + 1), X(i)}, py[4] = {X(k), X(k), X(k + 1), X(k + 1)};
      std::vector<std::pair<double, double>> cut;
      for (int e = 0; e < 4; ++e) {
        const int f = (e + 1) % 4;
        if ((c[e] < 0) == (c[f] < 0)) continue;
        const double s = c[e] / (c[e] - c[f]);
        cut.emplace_back(px[e] + s * (px[f] - px[e]), py[e] + s * (py[f] - py[e]));
      }
      for (std::size_t m = 0; m + 1 < cut.size(); m += 2) {
        const auto [x0, y0] = cut[m];
        const auto [x1, y1] = cut[m + 1];
        if (x0 * x0 + y0 * y0 > eps * eps && x1 * x1 + y1 * y1 > eps * eps) continue;
        os << "M" << sx(x0) << " " << sy(y0) << "L" << sx(x1) << " " << sy(y1);
      }
    }
  }
  os << "\"/>\n";
  os << "<circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace svg_detail

/// Three sketches per candidate (at t-, lambda and t+); returns the paths written.
inline std::vector<std::string> write_svg(const BifurcationReport& r, const BiPoly<Rational>& f,
                                          const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& v = r.candidates[i];
    const LocalizedFamily fam = localize_at(f, v.candidate.point);
    const double eps = to_double(v.box.epsilon0);
    const std::pair<const char*, double> sides[3] = {{"tminus", to_double(v.box.t_minus)},
                                                     {"lambda", v.candidate.lambda.to_double()},
                                                     {"tplus", to_double(v.box.t_plus)}};
    for (const auto& [name, t] : sides) {
      const std::string path = (fs::path(dir) / ("candidate" + std::to_string(i) + "_" + name + ".svg")).string();
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      std::ostringstream title;
      title << to_string(v.candidate.point) << " t=" << t;
      out << svg_detail::sketch(svg_detail::fiber_numeric(fam, t), eps, title.str());
      if (!out) throw std::runtime_error("cannot write " + path);
      paths.push_back(path);
    }
  }
  return paths;
}

}  // namespace bifurcata
