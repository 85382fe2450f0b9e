#include "exroc/pairwise.hpp"

namespace exroc {

namespace {

Rational pair_denominator_fraction(const BigInt& concordant, const Dataset& d) {
  return Rational(concordant, BigInt(static_cast<unsigned long>(d.positives())) *
                                  BigInt(static_cast<unsigned long>(d.negatives())));
}

}  // namespace

Rational pair_probability_bruteforce(const Dataset& d) {
  unsigned long concordant = 0;
  for (const auto& x : d.observations()) {
    if (!x.positive()) continue;
    for (const auto& y : d.observations())
      if (!y.positive() && x.score > y.score) ++concordant;
  }
  return pair_denominator_fraction(BigInt(concordant), d);
}

Rational pair_probability_fast(const Dataset& d) {
  const auto groups = group_by_score(d);
  BigInt concordant = 0;
  unsigned long pos_strictly_above = 0;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    concordant += BigInt(static_cast<unsigned long>(it->negatives)) * pos_strictly_above;
    pos_strictly_above += it->positives;
  }
  return pair_denominator_fraction(concordant, d);
}

TieReport tie_report(const Dataset& d) {
  const long n_pos = static_cast<long>(d.positives());
  const long n_neg = static_cast<long>(d.negatives());

  TieReport r;
  long b_pos = 0, b_neg = 0;
  BigInt product_sum = 0;
  for (const auto& g : group_by_score(d)) {
    if (g.positives == 0 || g.negatives == 0) continue;
    r.shared_scores.push_back(
        {g.score, Rational(static_cast<long>(g.positives), n_pos), Rational(static_cast<long>(g.negatives), n_neg)});
    b_pos += static_cast<long>(g.positives);
    b_neg += static_cast<long>(g.negatives);
    product_sum += BigInt(static_cast<unsigned long>(g.positives)) * static_cast<unsigned long>(g.negatives);
  }
  r.shared_count = static_cast<std::size_t>(b_pos + b_neg);
  r.b_given_p = Rational(b_pos, n_pos);
  r.b_given_n = Rational(b_neg, n_neg);
  r.correction = Rational(product_sum, BigInt(2) * n_pos * n_neg);
  r.bound = (r.b_given_p + r.b_given_n) * frac(1, 4);

  if (!(Rational(0) <= r.correction && r.correction <= r.bound && r.bound <= frac(1, 2)))
    throw IdentityViolation("tie report: expected 0 <= correction (" + r.correction.to_fraction_string() +
                            ") <= bound (" + r.bound.to_fraction_string() + ") <= 1/2");
  return r;
}

bool hypothesis_holds(const Dataset& d) {
  for (const auto& g : group_by_score(d))
    if (g.positives > 0 && g.negatives > 0) return false;
  return true;
}

}  // namespace exroc
