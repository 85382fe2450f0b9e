// Command line front end: exact ROC report, SVG curve, identity check and
// the continuous tie example.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "exroc/contlab.hpp"
#include "exroc/io.hpp"
#include "exroc/report.hpp"
#include "exroc/svg.hpp"

namespace {

enum ExitCode : int { kOk = 0, kParseError = 1, kDegenerate = 2, kIdentityViolation = 3 };

struct InputOptions {
  std::string path;
  std::string format;  // empty: from extension
};

exroc::Dataset load(const InputOptions& in) {
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw exroc::ParseError(0, "cannot open '" + in.path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  std::string fmt = in.format;
  if (fmt.empty()) fmt = in.path.ends_with(".tsv") ? "tsv" : "csv";
  return exroc::parse_input(buf.str(), fmt == "tsv" ? exroc::InputFormat::tsv : exroc::InputFormat::csv);
}

void add_input(CLI::App* cmd, InputOptions& in, bool with_format) {
  cmd->add_option("--input,-i", in.path, "score,label file")->required()->check(CLI::ExistingFile);
  if (with_format)
    cmd->add_option("--format", in.format, "input format (default: from extension)")
        ->check(CLI::IsMember({"csv", "tsv"}));
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const exroc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const exroc::DegenerateClassesError& e) {
    std::cerr << "degenerate classes: " << e.what() << "\n";
    return kDegenerate;
  } catch (const exroc::IdentityViolation& e) {
    std::cerr << "internal identity violation: " << e.what() << "\n";
    return kIdentityViolation;
  }
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ROC curves, trapezoid AUC and pair probabilities with tie accounting"};
  app.require_subcommand(1);

  InputOptions report_in;
  std::string output = "json";
  auto* report = app.add_subcommand("report", "full report: auc, pair probability, ties, curve");
  add_input(report, report_in, true);
  report->add_option("--output,-o", output, "json or text")->check(CLI::IsMember({"json", "text"}));

  InputOptions curve_in;
  std::string svg_path;
  int width = 480;
  auto* curve = app.add_subcommand("curve", "render the ROC curve as SVG");
  add_input(curve, curve_in, true);
  curve->add_option("--svg", svg_path, "output SVG file")->required();
  curve->add_option("--width", width, "canvas size in pixels")->check(CLI::Range(64, 1 << 16));

  InputOptions check_in;
  auto* check = app.add_subcommand("check", "verify every exact identity on the input");
  add_input(check, check_in, true);

  double epsilon = 0.25, delta = 1e-9;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  auto* contlab = app.add_subcommand("contlab", "continuous likelihood-ratio example with an ROC jump");
  contlab->add_option("--epsilon", epsilon, "flat-ratio half width, in (0, 1/2)");
  contlab->add_option("--delta", delta, "threshold offset around the jump");
  contlab->add_option("--samples", samples, "Monte Carlo pairs")->check(CLI::Range(std::int64_t{10'000}, INT64_MAX));
  contlab->add_option("--seed", seed, "Monte Carlo seed");

  CLI11_PARSE(app, argc, argv);

  if (report->parsed()) {
    return guarded([&] {
      const auto r = exroc::run_report(load(report_in));
      std::cout << exroc::emit_report(r, output == "json" ? exroc::OutputMode::json : exroc::OutputMode::text);
      return kOk;
    });
  }
  if (curve->parsed()) {
    return guarded([&] {
      const auto c = exroc::roc_curve(load(curve_in));
      std::ofstream out(svg_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write '" << svg_path << "'\n";
        return kParseError;
      }
      out << exroc::emit_curve_svg(c, width);
      std::cout << "wrote " << c.points.size() << " curve points to " << svg_path << "\n";
      return kOk;
    });
  }
  if (check->parsed()) {
    return guarded([&] {
      const auto results = exroc::check_identities(load(check_in));
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << "\n";
        all = all && r.passed;
      }
      return all ? kOk : kIdentityViolation;
    });
  }

  try {
    const exroc::contlab::LaplaceTieModel model(epsilon);
    const auto jump = exroc::contlab::jump_certificate(model, delta);
    const auto area = exroc::contlab::area_consistency_check(model, samples, seed);
    std::cout << "epsilon:              " << g17(epsilon) << "\n"
              << "beta*:                " << g17(model.flat_ratio()) << "\n"
              << "fpr(beta* - delta):   " << g17(jump.x_minus_approx) << "\n"
              << "fpr(beta* + delta):   " << g17(jump.x_plus_approx) << "\n"
              << "1 - exp(-epsilon):    " << g17(-std::expm1(-epsilon)) << "\n"
              << "roc area (quadrature):" << " " << g17(area.area_quadrature) << "\n"
              << "pair probability (MC):" << " " << g17(area.pair_prob_mc) << "\n"
              << "gap:                  " << g17(area.gap) << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "contlab: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
