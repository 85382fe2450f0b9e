#include <gtest/gtest.h>

#include "exroc/pairwise.hpp"
#include "exroc/roc.hpp"
#include "exroc/stieltjes.hpp"
#include "support/random_datasets.hpp"

namespace exroc {
namespace {

using testing::counterexample;
using testing::make;

const Score kC{frac(7, 20)};

TEST(StepFunctionTest, RejectsMalformed) {
  EXPECT_THROW(StepFunction({Score::parse("1")}, {Rational(1)}), std::invalid_argument);
  EXPECT_THROW(StepFunction({Score::parse("2"), Score::parse("1")}, {1, frac(1, 2), 0}), std::invalid_argument);
  EXPECT_THROW(StepFunction({Score::parse("1")}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(AtomicMeasure({{Score::parse("1"), Rational(0)}}), std::invalid_argument);
  EXPECT_THROW(AtomicMeasure({{Score::parse("1"), 1}, {Score::parse("1"), 1}}), std::invalid_argument);
}

TEST(RateStepFunctionTest, CounterexamplePositive) {
  const auto t = rate_step_function(counterexample(), Label::positive);
  EXPECT_EQ(t.breakpoints(), std::vector<Score>{kC});
  EXPECT_EQ(t(kC), Rational(1));
  EXPECT_EQ(t(Score{frac(1, 5)}), Rational(1));
  EXPECT_EQ(t(Score{frac(2, 5)}), Rational(0));
}

TEST(RateStepFunctionTest, TwoPositives) {
  const auto t = rate_step_function(make({"0.5", "0.9"}, {"0.2"}), Label::positive);
  EXPECT_EQ(t.breakpoints(), (std::vector<Score>{Score::parse("0.5"), Score::parse("0.9")}));
  EXPECT_EQ(t.values(), (std::vector<Rational>{1, frac(1, 2), 0}));
}

TEST(LimitsTest, CounterexampleJump) {
  const auto t = rate_step_function(counterexample(), Label::positive);
  EXPECT_EQ(left_limit(t, kC), Rational(1));
  EXPECT_EQ(right_limit(t, kC), Rational(0));
  EXPECT_EQ(balanced(t, kC), frac(1, 2));
}

TEST(LimitsTest, ContinuousOffBreakpoints) {
  const auto t = rate_step_function(make({"0.5", "0.9"}, {"0.2"}), Label::positive);
  const Score x = Score::parse("0.7");
  EXPECT_EQ(left_limit(t, x), t(x));
  EXPECT_EQ(right_limit(t, x), t(x));
  EXPECT_EQ(balanced(t, x), frac(1, 2));
}

TEST(NegativeDifferentialTest, Examples) {
  const auto m = negative_differential(rate_step_function(counterexample(), Label::negative));
  ASSERT_EQ(m.atoms().size(), 1u);
  EXPECT_EQ(m.atoms()[0].location, kC);
  EXPECT_EQ(m.atoms()[0].weight, Rational(1));

  const auto m2 = negative_differential(rate_step_function(make({"0.9"}, {"0.5", "0.1"}), Label::negative));
  ASSERT_EQ(m2.atoms().size(), 2u);
  EXPECT_EQ(m2.atoms()[0].location, Score::parse("0.1"));
  EXPECT_EQ(m2.atoms()[0].weight, frac(1, 2));
  EXPECT_EQ(m2.atoms()[1].location, Score::parse("0.5"));
  EXPECT_EQ(m2.atoms()[1].weight, frac(1, 2));

  EXPECT_TRUE(negative_differential(StepFunction::constant(frac(1, 3))).empty());
}

TEST(IntegrateTest, Counterexample) {
  const auto d = counterexample();
  const auto t = rate_step_function(d, Label::positive);
  const auto dF = negative_differential(rate_step_function(d, Label::negative));
  EXPECT_EQ(integrate(LimitVariant::balanced, t, dF), frac(1, 2));
  EXPECT_EQ(integrate(LimitVariant::right, t, dF), Rational(0));
  EXPECT_EQ(integrate(LimitVariant::left, t, dF), Rational(1));
}

TEST(IntegrateTest, MixedExample) {
  const auto d = make({"0.5", "0.9"}, {"0.5", "0.1"});
  const auto t = rate_step_function(d, Label::positive);
  const auto dF = negative_differential(rate_step_function(d, Label::negative));
  EXPECT_EQ(integrate(LimitVariant::balanced, t, dF), frac(7, 8));
  EXPECT_EQ(integrate(LimitVariant::right, t, dF), frac(3, 4));
}

class StieltjesPropertyTest : public ::testing::Test {
 protected:
  testing::DatasetGenerator gen{314};
};

TEST_F(StieltjesPropertyTest, IntegralsMatchAreaAndPairProbability) {
  for (int i = 0; i < 300; ++i) {
    const auto d = i % 2 ? gen.with_ties(gen.size_between(2, 120)) : gen.disjoint(gen.size_between(2, 120));
    const auto t = rate_step_function(d, Label::positive);
    const auto dF = negative_differential(rate_step_function(d, Label::negative));
    const auto bal = integrate(LimitVariant::balanced, t, dF);
    const auto right = integrate(LimitVariant::right, t, dF);
    EXPECT_EQ(bal, auc_trapezoid(roc_curve(d)));
    EXPECT_EQ(right, pair_probability_bruteforce(d));
    if (hypothesis_holds(d)) EXPECT_EQ(bal, right);
  }
}

TEST_F(StieltjesPropertyTest, RateFunctionsAgreeWithDirectCountsAndCarryUnitMass) {
  for (int i = 0; i < 100; ++i) {
    const auto d = gen.any(gen.size_between(2, 50));
    for (Label cls : {Label::positive, Label::negative}) {
      const auto g = rate_step_function(d, cls);
      EXPECT_EQ(g.leftmost(), Rational(1));
      EXPECT_EQ(g.rightmost(), Rational(0));
      EXPECT_EQ(negative_differential(g).total_mass(), Rational(1));
      for (const auto& o : d.observations()) {
        for (const Score& x : {o.score, Score{o.score.value + frac(1, 997)}}) {
          EXPECT_EQ(g(x), cls == Label::positive ? tpr_at(d, x) : fpr_at(d, x));
          EXPECT_EQ(left_limit(g, x), g(x));  // left-continuous
          EXPECT_GE(left_limit(g, x), right_limit(g, x));
        }
      }
      // Jump at a score equals that score's class mass.
      const std::size_t size = cls == Label::positive ? d.positives() : d.negatives();
      for (const auto& grp : group_by_score(d)) {
        const std::size_t here = cls == Label::positive ? grp.positives : grp.negatives;
        EXPECT_EQ(left_limit(g, grp.score) - right_limit(g, grp.score),
                  Rational(static_cast<long>(here), static_cast<long>(size)));
      }
    }
  }
}

}  // namespace
}  // namespace exroc
