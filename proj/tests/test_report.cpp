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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bifurcata/parser.hpp"
#include "bifurcata/report.hpp"

using namespace bifurcata;

namespace {

BifurcationReport run(const char* f) { return bifurcation_set(parse_polynomial(f)); }

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST(AlgNumJson, Rational) {
  const Json j = algnum_json(AlgebraicNumber(Rational(-1)));
  EXPECT_EQ(j["approx"], "-1.0");
  EXPECT_EQ(j["min_poly"], "x+1");
  ASSERT_EQ(j["interval"].size(), 2u);
  EXPECT_EQ(Rational(j["interval"][0].get<std::string>()), Rational(-1));
  EXPECT_EQ(Rational(j["interval"][1].get<std::string>()), Rational(-1));
}

TEST(AlgNumJson, Irrational) {
  Poly<Rational> p(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
  const Json j = algnum_json(AlgebraicNumber::root_of(p, Rational(1), Rational(2)));
  EXPECT_EQ(j["min_poly"], "x^2-2");
  const Rational lo(j["interval"][0].get<std::string>()), hi(j["interval"][1].get<std::string>());
  EXPECT_LT(lo * lo, 2);
  EXPECT_GT(hi * hi, 2);
  EXPECT_LE(hi - lo, pow2(-32));
  // shortest decimal whose half-unit neighbourhood still holds the interval
  EXPECT_EQ(j["approx"], "1.4");
}

TEST(ReportJson, SchemaKeysAndTypes) {
  const Json j = Json::parse(render_json(run("x + x^2*y")));
  EXPECT_EQ(keys(j), (std::vector<std::string>{"input", "degree", "primitive", "singular_values", "candidates",
                                               "atypical_at_infinity", "bifurcation_set", "warnings"}));
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["primitive"], true);
  ASSERT_EQ(j["candidates"].size(), 1u);
  const Json& c = j["candidates"][0];
  EXPECT_EQ(keys(c), (std::vector<std::string>{"point", "lambda", "epsilon0", "delta", "t_minus", "t_plus", "vanish",
                                               "split", "atypical"}));
  EXPECT_EQ(c["point"]["chart"], "y");
  EXPECT_EQ(keys(c["point"]["coordinate"]), (std::vector<std::string>{"approx", "min_poly", "interval"}));
  EXPECT_EQ(c["split"], Json::array({true, true}));
  EXPECT_EQ(c["vanish"], Json::array({false, false}));
  EXPECT_TRUE(c["epsilon0"].is_string());
  EXPECT_GT(Rational(c["delta"].get<std::string>()), 0);
  ASSERT_EQ(j["bifurcation_set"].size(), 1u);
  EXPECT_EQ(j["bifurcation_set"][0]["min_poly"], "x");
}

TEST(ReportJson, RoundTripAndDeterminism) {
  for (const char* f : {"x^2*y^2-2*x*y+y^2+1", "(x^2+y^2)^2 - x^2 - y^2", "x^3 - x + y^2"}) {
    const std::string a = render_json(run(f)), b = render_json(run(f));
    EXPECT_EQ(a, b) << f;
    EXPECT_EQ(Json::parse(a).dump(2) + "\n", a) << f;
  }
}

TEST(ReportText, ListsTheSetInOrder) {
  const std::string t = render_text(run("x^2*y^2-2*x*y+y^2+1"));
  EXPECT_NE(t.find("bifurcation set: 0.0 [x], 1.0 [x-1]"), std::string::npos) << t;
  EXPECT_NE(t.find("vanish yes"), std::string::npos);
  EXPECT_NE(render_text(run("x^3 - x + y^2")).find("[27*x^2-4]"), std::string::npos);
}

TEST(Svg, ThreeFilesPerCandidate) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bifurcata_svg_test";
  fs::remove_all(dir);
  const auto f = parse_polynomial("x + x^2*y");
  const auto paths = write_svg(bifurcation_set(f), f, dir.string());
  ASSERT_EQ(paths.size(), 3u);
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str().rfind("<svg", 0), 0u) << p;
    EXPECT_NE(ss.str().find("</svg>"), std::string::npos);
    EXPECT_NE(ss.str().find(" d=\"M"), std::string::npos) << "no curve drawn in " << p;
  }
  fs::remove_all(dir);
}
