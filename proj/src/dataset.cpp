#include "exroc/dataset.hpp"

#include <algorithm>

namespace exroc {

Dataset::Dataset(std::vector<Observation> observations) : observations_(std::move(observations)) {
  for (const auto& o : observations_) (o.positive() ? n_pos_ : n_neg_)++;
  if (n_pos_ == 0) throw DegenerateClassesError("dataset has no positive observations");
  if (n_neg_ == 0) throw DegenerateClassesError("dataset has no negative observations");
}

Dataset dataset_from_pairs(std::vector<std::pair<Score, bool>> pairs) {
  std::vector<Observation> obs;
  obs.reserve(pairs.size());
  for (auto& [score, positive] : pairs)
    obs.push_back({std::move(score), positive ? Label::positive : Label::negative});
  return Dataset(std::move(obs));
}

ClassMeasures class_measures(const Dataset& d) {
  const long n = static_cast<long>(d.size());
  return {Rational(static_cast<long>(d.positives()), n), Rational(static_cast<long>(d.negatives()), n)};
}

std::vector<ScoreGroup> group_by_score(const Dataset& d) {
  std::vector<const Observation*> sorted;
  sorted.reserve(d.size());
  for (const auto& o : d.observations()) sorted.push_back(&o);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->score < b->score; });

  std::vector<ScoreGroup> groups;
  for (const Observation* o : sorted) {
    if (groups.empty() || groups.back().score != o->score) groups.push_back({o->score});
    (o->positive() ? groups.back().positives : groups.back().negatives)++;
  }
  return groups;
}

}  // namespace exroc
