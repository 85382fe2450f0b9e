#pragma once

#include <stdexcept>
#include <vector>

#include "exroc/dataset.hpp"

namespace exroc {

/// Raised when an exact identity that must hold by construction fails.
/// Always an implementation bug, never a data problem.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SharedScore {
  Score score;
  Rational pos_mass;  // mu(f^-1({score}) | P)
  Rational neg_mass;  // mu(f^-1({score}) | P^c)
};

/// Scores attained by both classes and the resulting gap between the
/// trapezoid area and the pair probability.
///
/// B is the set of observations whose score is attained in both classes.
/// `correction` = (1/2) sum pos_mass * neg_mass and
/// `bound` = (1/4) (mu(B|P) + mu(B|P^c)); 0 <= correction <= bound <= 1/2
/// is checked on construction.
struct TieReport {
  std::vector<SharedScore> shared_scores;
  Rational correction;
  Rational bound;
  Rational b_given_p;
  Rational b_given_n;
  std::size_t shared_count = 0;  // |B|
};

/// Fraction of (positive, negative) pairs with strictly higher positive
/// score, by explicit double loop. O(|P| |P^c|); serves as the oracle.
Rational pair_probability_bruteforce(const Dataset& d);

/// Same quantity in O(n log n) via a sort and a running count of positives
/// strictly above each negative score. Ties contribute nothing.
Rational pair_probability_fast(const Dataset& d);

TieReport tie_report(const Dataset& d);

/// True iff no positive shares a score with a negative.
bool hypothesis_holds(const Dataset& d);

}  // namespace exroc
