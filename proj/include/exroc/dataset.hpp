#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "exroc/rational.hpp"

namespace exroc {

/// Classifier output for one observation. Only the order of scores matters,
/// so values are not restricted to [0, 1].
struct Score {
  Rational value;

  static Score parse(std::string_view text) { return Score{Rational::parse(text)}; }

  friend bool operator==(const Score&, const Score&) = default;
  friend std::strong_ordering operator<=>(const Score& a, const Score& b) { return a.value <=> b.value; }
};

enum class Label : bool { negative = false, positive = true };

struct Observation {
  Score score;
  Label label;

  bool positive() const { return label == Label::positive; }
};

/// Thrown when a dataset has no positives or no negatives.
class DegenerateClassesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite set of scored, labelled observations containing both classes.
/// Duplicates are kept and counted with multiplicity.
class Dataset {
 public:
  explicit Dataset(std::vector<Observation> observations);

  std::span<const Observation> observations() const { return observations_; }
  std::size_t size() const { return observations_.size(); }
  std::size_t positives() const { return n_pos_; }
  std::size_t negatives() const { return n_neg_; }

 private:
  std::vector<Observation> observations_;
  std::size_t n_pos_ = 0;
  std::size_t n_neg_ = 0;
};

Dataset dataset_from_pairs(std::vector<std::pair<Score, bool>> pairs);

struct ClassMeasures {
  Rational positive;  // |P| / |Omega|
  Rational negative;  // |P^c| / |Omega|
};

ClassMeasures class_measures(const Dataset& d);

/// Observations grouped by distinct score, ascending.
struct ScoreGroup {
  Score score;
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

std::vector<ScoreGroup> group_by_score(const Dataset& d);

}  // namespace exroc
