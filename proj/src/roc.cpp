#include "exroc/roc.hpp"

namespace exroc {

namespace {

Rational rate_at(const Dataset& d, const Score& tau, Label label, std::size_t class_size) {
  long hits = 0;
  for (const auto& o : d.observations())
    if (o.label == label && o.score >= tau) ++hits;
  return Rational(hits, static_cast<long>(class_size));
}

}  // namespace

Rational tpr_at(const Dataset& d, const Score& tau) { return rate_at(d, tau, Label::positive, d.positives()); }

Rational fpr_at(const Dataset& d, const Score& tau) { return rate_at(d, tau, Label::negative, d.negatives()); }

RocCurve roc_curve(const Dataset& d) {
  const auto groups = group_by_score(d);
  const long n_pos = static_cast<long>(d.positives());
  const long n_neg = static_cast<long>(d.negatives());

  RocCurve curve;
  curve.points.reserve(groups.size() + 1);
  curve.thresholds.reserve(groups.size() + 1);

  auto push = [&](const Score& t, long pos_above, long neg_above) {
    RocPoint p{Rational(neg_above, n_neg), Rational(pos_above, n_pos)};
    if (!curve.points.empty() && curve.points.back() == p) return;
    curve.points.push_back(std::move(p));
    curve.thresholds.push_back(t);
  };

  // Counts of observations with score >= the current threshold.
  long pos_above = n_pos, neg_above = n_neg;
  for (const auto& g : groups) {
    push(g.score, pos_above, neg_above);
    pos_above -= static_cast<long>(g.positives);
    neg_above -= static_cast<long>(g.negatives);
  }
  push(Score{groups.back().score.value + Rational(1)}, 0, 0);
  return curve;
}

Rational auc_trapezoid(const RocCurve& c) {
  Rational area;
  for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
    const auto& a = c.points[k];
    const auto& b = c.points[k + 1];
    area += (a.tpr + b.tpr) * (a.fpr - b.fpr);
  }
  return area * frac(1, 2);
}

}  // namespace exroc
