#pragma once

#include <cstdint>

namespace exroc::contlab {

/// Two-class continuous model on the real line.
///
/// Negatives follow the Laplace density (1/2) e^{-|t|}. Positives have
/// density 1 on |t| < epsilon and ((1 - 2 epsilon) e^epsilon / 2) e^{-|t|}
/// elsewhere. The likelihood ratio is flat at beta* = (1 - 2 epsilon)
/// e^epsilon on |t| >= epsilon, a region of positive mass under both
/// classes, so the ROC swept by thresholding it has a jump at beta*.
///
/// Acceptance here is strict: t is called positive iff ratio(t) > beta.
/// The discrete modules use score >= tau instead.
class LaplaceTieModel {
 public:
  /// Throws std::invalid_argument unless 0 < epsilon < 1/2.
  explicit LaplaceTieModel(double epsilon);

  double epsilon() const { return epsilon_; }
  /// (1 - 2 epsilon) e^epsilon, the infimum of the likelihood ratio.
  double flat_ratio() const;
  /// 2 e^epsilon, the supremum (not attained).
  double peak_ratio() const;

 private:
  double epsilon_;
};

double likelihood_ratio(const LaplaceTieModel& m, double t);

/// Negative-class mass of {t : ratio(t) > beta}; beta > 0.
double fpr_of_threshold(const LaplaceTieModel& m, double beta);

/// Positive-class mass of {t : ratio(t) > beta}; beta > 0.
double tpr_of_threshold(const LaplaceTieModel& m, double beta);

struct JumpCertificate {
  double x_minus_approx;  // fpr at beta* - delta, expected ~1
  double x_plus_approx;   // fpr at beta* + delta, expected ~1 - e^{-epsilon}
};

/// Requires 0 < delta <= (2 - beta*) / 4 and delta < beta*.
JumpCertificate jump_certificate(const LaplaceTieModel& m, double delta);

struct AreaConsistency {
  double area_quadrature;
  double pair_prob_mc;
  double gap;
};

/// Area under the ROC (the jump bridged by a straight segment, i.e. the
/// balanced convention) against a Monte Carlo estimate of
/// P(ratio(s) < ratio(r)) for s negative, r positive. The strict event
/// drops the tie region, so the gap is positive.
///
/// The random stream is std::mt19937_64 seeded with `seed`; uniforms take
/// the top 53 bits, exponentials are -log1p(-u). Identical arguments give
/// identical results.
AreaConsistency area_consistency_check(const LaplaceTieModel& m, std::int64_t samples, std::uint64_t seed);

}  // namespace exroc::contlab
