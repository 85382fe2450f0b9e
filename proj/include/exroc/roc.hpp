#pragma once

#include <vector>

#include "exroc/dataset.hpp"

namespace exroc {

struct RocPoint {
  Rational fpr;
  Rational tpr;

  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/// The distinct points of the ROC set, listed from (1,1) to (0,0) as the
/// threshold increases. `thresholds[k]` is the smallest threshold whose
/// rates equal `points[k]`; the last one is a sentinel above every score.
struct RocCurve {
  std::vector<RocPoint> points;
  std::vector<Score> thresholds;
};

/// True positive rate: fraction of positives with score >= tau.
Rational tpr_at(const Dataset& d, const Score& tau);

/// False positive rate: fraction of negatives with score >= tau.
Rational fpr_at(const Dataset& d, const Score& tau);

RocCurve roc_curve(const Dataset& d);

/// Trapezoid area under the polyline through `c.points`, in curve order.
Rational auc_trapezoid(const RocCurve& c);

}  // namespace exroc
