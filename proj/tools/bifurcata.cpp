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

// Command-line front end: bifurcation set of a bivariate polynomial.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>

#include "bifurcata.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInvariant = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bifurcation set of a real bivariate polynomial"};
  std::string poly, format = "json", svg_dir;
  long max_denominator = 1L << 32;
  bool verbose = false;
  app.add_option("poly", poly, "polynomial in x and y, e.g. \"x + x^2*y\"")->required();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--svg", svg_dir, "write curve sketches for each candidate into this directory");
  app.add_option("--max-denominator", max_denominator, "largest denominator for eps0 and delta (rounded down to a power of two)")
      ->check(CLI::Range(2L, 1L << 62));
  app.add_flag("-v,--verbose", verbose, "progress and curve details on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; bad usage shares the parse-error code
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  using namespace bifurcata;
  BiPoly<Rational> f;
  try {
    f = parse_polynomial(poly);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  try {
    DriverOptions opt;
    opt.box_bits = static_cast<long>(std::floor(std::log2(static_cast<double>(max_denominator))));
    if (verbose) std::cerr << "f = " << to_string(f, "x", "y") << ", box denominators 2^" << opt.box_bits << "\n";
    const BifurcationReport r = bifurcation_set(f, opt);
    if (verbose)
      for (const auto& v : r.candidates)
        std::cerr << "candidate " << to_string(v.candidate.point) << " lambda " << decimal_text(v.candidate.lambda)
                  << ": eps0 " << v.box.epsilon0 << ", delta " << v.box.delta << "\n";
    std::cout << (format == "text" ? render_text(r) : render_json(r));
    if (!svg_dir.empty()) {
      for (const auto& p : write_svg(r, f, svg_dir))
        if (verbose) std::cerr << "wrote " << p << "\n";
    }
  } catch (const DegenerateGeometry& e) {
    std::cerr << "degenerate geometry: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
