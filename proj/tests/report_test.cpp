#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "exroc/io.hpp"
#include "exroc/report.hpp"
#include "exroc/svg.hpp"
#include "support/random_datasets.hpp"

namespace exroc {
namespace {

using testing::counterexample;
using testing::make;

TEST(ParseInputTest, CounterexampleCsv) {
  const auto d = parse_input("0.35,1\n0.35,0\n", InputFormat::csv);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.observations()[0].score, Score{frac(7, 20)});
  EXPECT_TRUE(d.observations()[0].positive());
  EXPECT_FALSE(d.observations()[1].positive());
}

TEST(ParseInputTest, HeaderSkippedAndLabelSpellings) {
  const auto d = parse_input("score,label\n0.9,pos\n0.1,neg\n", InputFormat::csv);
  EXPECT_EQ(d.size(), 2u);
  const auto e = parse_input("s\tl\r\n1\tTRUE\r\n2\tFalse\r\n\n3\tPositive\n4\tNEGATIVE", InputFormat::tsv);
  EXPECT_EQ(e.positives(), 2u);
  EXPECT_EQ(e.negatives(), 2u);
}

TEST(ParseInputTest, Errors) {
  try {
    parse_input("abc,1\n", InputFormat::csv);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_input("0.1,1\n0.2,0\n0.3,maybe\n", InputFormat::csv);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_input("0.1,1,2\n", InputFormat::csv), ParseError);
  EXPECT_THROW(parse_input("0.1,1\n", InputFormat::tsv), ParseError);
  EXPECT_THROW(parse_input("0.1,1\n0.2,1\n", InputFormat::csv), DegenerateClassesError);
  EXPECT_THROW(parse_input("score,label\n", InputFormat::csv), DegenerateClassesError);
}

TEST(RunReportTest, Examples) {
  const auto c = run_report(counterexample());
  EXPECT_EQ(c.auc, frac(1, 2));
  EXPECT_EQ(c.pair_probability, Rational(0));
  EXPECT_EQ(c.tie.correction, frac(1, 2));
  EXPECT_FALSE(c.hypothesis_holds);

  const auto p = run_report(make({"0.9"}, {"0.1"}));
  EXPECT_EQ(p.auc, Rational(1));
  EXPECT_EQ(p.pair_probability, Rational(1));
  EXPECT_EQ(p.tie.correction, Rational(0));
  EXPECT_TRUE(p.hypothesis_holds);

  const auto m = run_report(make({"0.5", "0.9"}, {"0.5", "0.1"}));
  EXPECT_EQ(m.auc, frac(7, 8));
  EXPECT_EQ(m.pair_probability, frac(3, 4));
  EXPECT_EQ(m.tie.correction, frac(1, 8));
  EXPECT_EQ(m.tie.bound, frac(1, 4));
  EXPECT_EQ(m.n_pos, 2u);
  EXPECT_EQ(m.n_neg, 2u);
}

TEST(EmitReportTest, JsonFields) {
  const auto json = emit_report(run_report(counterexample()), OutputMode::json);
  EXPECT_NE(json.find(R"("auc":"1/2")"), std::string::npos);
  EXPECT_NE(json.find(R"("pair_probability":"0/1")"), std::string::npos);
  EXPECT_NE(json.find(R"("tie_correction":"1/2")"), std::string::npos);
  EXPECT_NE(json.find(R"("tie_bound":"1/2")"), std::string::npos);
  EXPECT_NE(json.find(R"("auc_decimal":"0.50000000000000000")"), std::string::npos);
  EXPECT_NE(json.find(R"("hypothesis_holds":false)"), std::string::npos);
  EXPECT_NE(json.find(R"("curve":[["1/1","1/1"],["0/1","0/1"]])"), std::string::npos);
  EXPECT_NE(json.find(R"("shared_scores":[{"score":"7/20","pos_mass":"1/1","neg_mass":"1/1"}])"), std::string::npos);

  const auto perfect = emit_report(run_report(make({"0.9"}, {"0.1"})), OutputMode::json);
  EXPECT_NE(perfect.find(R"("hypothesis_holds":true)"), std::string::npos);
}

TEST(EmitReportTest, DeterministicAndTextMode) {
  const std::string input = "score,label\n0.5,1\n0.9,1\n0.5,0\n0.1,0\n";
  const auto a = emit_report(run_report(parse_input(input, InputFormat::csv)), OutputMode::json);
  const auto b = emit_report(run_report(parse_input(input, InputFormat::csv)), OutputMode::json);
  EXPECT_EQ(a, b);
  const auto text = emit_report(run_report(parse_input(input, InputFormat::csv)), OutputMode::text);
  EXPECT_NE(text.find("auc:               7/8"), std::string::npos);
  EXPECT_NE(text.find("tie correction:    1/8"), std::string::npos);
}

TEST(CheckIdentitiesTest, AllPassOnRandomData) {
  testing::DatasetGenerator gen(5);
  for (int i = 0; i < 40; ++i)
    for (const auto& c : check_identities(gen.any(gen.size_between(2, 60)))) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

std::vector<std::pair<double, double>> polyline_points(const std::string& svg) {
  std::smatch m;
  EXPECT_TRUE(std::regex_search(svg, m, std::regex(R"re(<polyline[^>]*points="([^"]*)")re")));
  std::vector<std::pair<double, double>> pts;
  std::istringstream in(m[1].str());
  std::string pair;
  while (in >> pair) {
    const auto comma = pair.find(',');
    pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
  }
  return pts;
}

TEST(SvgTest, CounterexampleLiesOnDiagonal) {
  const auto svg = emit_curve_svg(roc_curve(counterexample()), 200);
  const auto pts = polyline_points(svg);
  ASSERT_EQ(pts.size(), 2u);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(
      svg, m, std::regex(R"re(class="diagonal" x1="([^"]+)" y1="([^"]+)" x2="([^"]+)" y2="([^"]+)")re")));
  // Curve runs (1,1) -> (0,0); the diagonal is drawn (0,0) -> (1,1).
  EXPECT_DOUBLE_EQ(pts[1].first, std::stod(m[1]));
  EXPECT_DOUBLE_EQ(pts[1].second, std::stod(m[2]));
  EXPECT_DOUBLE_EQ(pts[0].first, std::stod(m[3]));
  EXPECT_DOUBLE_EQ(pts[0].second, std::stod(m[4]));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find(">1/2</text>"), std::string::npos);
}

TEST(SvgTest, PerfectCurveThroughTopLeftCorner) {
  const auto pts = polyline_points(emit_curve_svg(roc_curve(make({"0.9"}, {"0.1"})), 400));
  ASSERT_EQ(pts.size(), 3u);
  // fpr 0 is the left edge, tpr 1 the top edge (screen y flipped).
  EXPECT_DOUBLE_EQ(pts[1].first, 50.0);
  EXPECT_DOUBLE_EQ(pts[1].second, 50.0);
  EXPECT_LT(pts[1].second, pts[2].second);
}

TEST(SvgTest, PointCountMatchesCurve) {
  testing::DatasetGenerator gen(8);
  for (int i = 0; i < 20; ++i) {
    const auto c = roc_curve(gen.any(gen.size_between(2, 100)));
    EXPECT_EQ(polyline_points(emit_curve_svg(c, 320)).size(), c.points.size());
  }
  EXPECT_THROW(emit_curve_svg(roc_curve(counterexample()), 63), std::invalid_argument);
}

}  // namespace
}  // namespace exroc
