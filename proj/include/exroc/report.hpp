#pragma once

#include <string>
#include <vector>

#include "exroc/pairwise.hpp"
#include "exroc/roc.hpp"

namespace exroc {

struct RocReport {
  Rational auc;
  Rational pair_probability;
  TieReport tie;
  bool hypothesis_holds = false;
  RocCurve curve;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
};

/// Builds the report and verifies, exactly, that
///   auc == integral of balanced T_f against d(-F_f),
///   pair_probability == integral of T_f+ against d(-F_f),
///   auc - pair_probability == tie.correction,
///   hypothesis_holds <=> no shared scores <=> auc == pair_probability.
/// Throws IdentityViolation if any of these fail.
RocReport run_report(const Dataset& d);

enum class OutputMode { json, text };

std::string emit_report(const RocReport& r, OutputMode mode);

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Every exact identity the library guarantees, evaluated on `d`
/// (including the brute-force oracle). Used by the `check` subcommand.
std::vector<IdentityCheck> check_identities(const Dataset& d);

}  // namespace exroc
