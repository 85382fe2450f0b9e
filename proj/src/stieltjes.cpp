#include "exroc/stieltjes.hpp"

#include <algorithm>
#include <stdexcept>

namespace exroc {

StepFunction::StepFunction(std::vector<Score> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.size() != breakpoints_.size() + 1)
    throw std::invalid_argument("step function: need exactly one more value than breakpoints");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw std::invalid_argument("step function: breakpoints must be strictly increasing");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1]) throw std::invalid_argument("step function: values must be non-increasing");
}

Rational StepFunction::operator()(const Score& x) const {
  // First breakpoint >= x; at a breakpoint this picks the left interval.
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].weight.sign() <= 0) throw std::invalid_argument("atomic measure: weights must be positive");
    if (i > 0 && !(atoms_[i - 1].location < atoms_[i].location))
      throw std::invalid_argument("atomic measure: locations must be strictly increasing");
  }
}

Rational AtomicMeasure::total_mass() const {
  Rational total;
  for (const auto& a : atoms_) total += a.weight;
  return total;
}

StepFunction rate_step_function(const Dataset& d, Label cls) {
  const long class_size = static_cast<long>(cls == Label::positive ? d.positives() : d.negatives());
  std::vector<Score> breaks;
  std::vector<Rational> values{Rational(1)};
  long above = class_size;  // members with score >= the next breakpoint
  for (const auto& g : group_by_score(d)) {
    const long here = static_cast<long>(cls == Label::positive ? g.positives : g.negatives);
    if (here == 0) continue;
    above -= here;
    breaks.push_back(g.score);
    values.emplace_back(above, class_size);
  }
  return StepFunction(std::move(breaks), std::move(values));
}

Rational left_limit(const StepFunction& g, const Score& x) { return g(x); }

Rational right_limit(const StepFunction& g, const Score& x) {
  const auto& b = g.breakpoints();
  auto it = std::upper_bound(b.begin(), b.end(), x);
  return g.values()[static_cast<std::size_t>(it - b.begin())];
}

Rational balanced(const StepFunction& g, const Score& x) {
  return (left_limit(g, x) + right_limit(g, x)) * frac(1, 2);
}

AtomicMeasure negative_differential(const StepFunction& g) {
  std::vector<Atom> atoms;
  const auto& b = g.breakpoints();
  const auto& v = g.values();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Rational jump = v[i] - v[i + 1];
    if (jump.sign() > 0) atoms.push_back({b[i], std::move(jump)});
  }
  return AtomicMeasure(std::move(atoms));
}

Rational integrate(LimitVariant variant, const StepFunction& g, const AtomicMeasure& m) {
  Rational sum;
  for (const auto& [location, weight] : m.atoms()) {
    switch (variant) {
      case LimitVariant::left: sum += weight * left_limit(g, location); break;
      case LimitVariant::right: sum += weight * right_limit(g, location); break;
      case LimitVariant::balanced: sum += weight * balanced(g, location); break;
    }
  }
  return sum;
}

}  // namespace exroc
