#include "exroc/contlab.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exroc::contlab {

LaplaceTieModel::LaplaceTieModel(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
}

double LaplaceTieModel::flat_ratio() const { return (1.0 - 2.0 * epsilon_) * std::exp(epsilon_); }

double LaplaceTieModel::peak_ratio() const { return 2.0 * std::exp(epsilon_); }

double likelihood_ratio(const LaplaceTieModel& m, double t) {
  const double a = std::fabs(t);
  return a < m.epsilon() ? 2.0 * std::exp(a) : m.flat_ratio();
}

namespace {

// Inside |t| < eps the ratio 2e^{|t|} exceeds beta iff |t| > cut.
double inner_cut(double beta) { return beta > 2.0 ? std::log(beta / 2.0) : 0.0; }

void require_positive(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("threshold must be positive");
}

}  // namespace

double fpr_of_threshold(const LaplaceTieModel& m, double beta) {
  require_positive(beta);
  const double eps = m.epsilon();
  double mass = 0.0;
  const double cut = inner_cut(beta);
  // Laplace mass of {cut < |t| < eps} = e^{-cut} - e^{-eps}.
  if (cut < eps) mass += std::exp(-cut) - std::exp(-eps);
  if (beta < m.flat_ratio()) mass += std::exp(-eps);
  return mass;
}

double tpr_of_threshold(const LaplaceTieModel& m, double beta) {
  require_positive(beta);
  const double eps = m.epsilon();
  double mass = 0.0;
  const double cut = inner_cut(beta);
  if (cut < eps) mass += 2.0 * (eps - cut);  // uniform density 1 on (-eps, eps)
  if (beta < m.flat_ratio()) mass += 1.0 - 2.0 * eps;
  return mass;
}

JumpCertificate jump_certificate(const LaplaceTieModel& m, double delta) {
  const double star = m.flat_ratio();
  if (!(delta > 0.0 && delta <= (2.0 - star) / 4.0 && delta < star))
    throw std::invalid_argument("delta must lie in (0, (2 - beta*)/4]");
  return {fpr_of_threshold(m, star - delta), fpr_of_threshold(m, star + delta)};
}

namespace {

double roc_area(const LaplaceTieModel& m) {
  // Thresholds swept from the top of the ratio's range down to just below
  // beta*. Above 2 the curve is smooth; it is sampled uniformly in the
  // log-threshold. The final segment is the jump at beta*.
  constexpr int kPanels = 1 << 14;
  const double eps = m.epsilon();
  std::vector<std::pair<double, double>> pts;  // (fpr, tpr)
  pts.reserve(kPanels + 3);
  for (int k = kPanels; k >= 0; --k) {
    const double beta = 2.0 * std::exp(eps * k / kPanels);
    pts.emplace_back(fpr_of_threshold(m, beta), tpr_of_threshold(m, beta));
  }
  const double star = m.flat_ratio();
  const double below = star / 2.0;  // any beta below beta* accepts everything
  pts.emplace_back(fpr_of_threshold(m, below), tpr_of_threshold(m, below));

  double area = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    area += 0.5 * (pts[i].second + pts[i - 1].second) * (pts[i].first - pts[i - 1].first);
  return area;
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double exponential() { return -std::log1p(-uniform()); }
  double sign() { return (engine_() >> 63) ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

AreaConsistency area_consistency_check(const LaplaceTieModel& m, std::int64_t samples, std::uint64_t seed) {
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  const double eps = m.epsilon();
  Stream rng(seed);
  std::int64_t concordant = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double s = rng.sign() * rng.exponential();
    double r;
    if (rng.uniform() < 2.0 * eps)
      r = eps * (2.0 * rng.uniform() - 1.0);
    else
      r = rng.sign() * (eps + rng.exponential());
    if (likelihood_ratio(m, s) < likelihood_ratio(m, r)) ++concordant;
  }
  const double area = roc_area(m);
  const double prob = static_cast<double>(concordant) / static_cast<double>(samples);
  return {area, prob, area - prob};
}

}  // namespace exroc::contlab
