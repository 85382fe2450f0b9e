#pragma once

#include <vector>

#include "exroc/dataset.hpp"

namespace exroc {

/// Left-continuous, non-increasing piecewise-constant function.
///
/// With breakpoints b_0 < ... < b_{n-1}, `values[i]` is the value on
/// (b_{i-1}, b_i] (so the function takes its left-interval value at each
/// breakpoint); `values[0]` covers (-inf, b_0] and `values[n]` covers
/// (b_{n-1}, +inf).
class StepFunction {
 public:
  /// Throws std::invalid_argument unless breakpoints are strictly
  /// increasing, values.size() == breakpoints.size() + 1 and values are
  /// non-increasing.
  StepFunction(std::vector<Score> breakpoints, std::vector<Rational> values);

  static StepFunction constant(Rational value) { return StepFunction({}, {std::move(value)}); }

  const std::vector<Score>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational operator()(const Score& x) const;
  Rational leftmost() const { return values_.front(); }
  Rational rightmost() const { return values_.back(); }

 private:
  std::vector<Score> breakpoints_;
  std::vector<Rational> values_;
};

struct Atom {
  Score location;
  Rational weight;
};

/// Finite sum of point masses with strictly increasing locations and
/// positive weights.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  Rational total_mass() const;

 private:
  std::vector<Atom> atoms_;
};

/// T_f for Label::positive, F_f for Label::negative.
StepFunction rate_step_function(const Dataset& d, Label cls);

Rational left_limit(const StepFunction& g, const Score& x);
Rational right_limit(const StepFunction& g, const Score& x);
/// (g+(x) + g-(x)) / 2
Rational balanced(const StepFunction& g, const Score& x);

/// The Lebesgue-Stieltjes measure d(-g): an atom of weight g-(a) - g+(a) at
/// every breakpoint a where g jumps.
AtomicMeasure negative_differential(const StepFunction& g);

enum class LimitVariant { left, right, balanced };

/// Sum over atoms (a, w) of w * g_variant(a).
Rational integrate(LimitVariant variant, const StepFunction& g, const AtomicMeasure& m);

}  // namespace exroc
