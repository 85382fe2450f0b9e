#include "exroc/report.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "exroc/stieltjes.hpp"

namespace exroc {

namespace {

struct Integrals {
  Rational balanced;
  Rational right;
};

Integrals tpr_against_fpr_measure(const Dataset& d) {
  const auto tpr = rate_step_function(d, Label::positive);
  const auto fpr_measure = negative_differential(rate_step_function(d, Label::negative));
  return {integrate(LimitVariant::balanced, tpr, fpr_measure), integrate(LimitVariant::right, tpr, fpr_measure)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw IdentityViolation(what);
}

}  // namespace

RocReport run_report(const Dataset& d) {
  RocReport r;
  r.curve = roc_curve(d);
  r.auc = auc_trapezoid(r.curve);
  r.pair_probability = pair_probability_fast(d);
  r.tie = tie_report(d);
  r.hypothesis_holds = hypothesis_holds(d);
  r.n_pos = d.positives();
  r.n_neg = d.negatives();

  const auto integrals = tpr_against_fpr_measure(d);
  require(integrals.balanced == r.auc, "trapezoid area differs from the balanced Stieltjes integral");
  require(integrals.right == r.pair_probability, "pair probability differs from the right-limit Stieltjes integral");
  require(r.auc - r.pair_probability == r.tie.correction, "auc - pair_probability differs from the tie correction");
  require(r.hypothesis_holds == r.tie.shared_scores.empty(), "hypothesis flag disagrees with shared scores");
  require(r.hypothesis_holds == (r.auc == r.pair_probability), "auc == pair_probability disagrees with hypothesis");
  return r;
}

namespace {

std::string emit_json(const RocReport& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["n_pos"] = r.n_pos;
  j["n_neg"] = r.n_neg;
  auto put = [&j](const std::string& name, const Rational& v) {
    j[name] = v.to_fraction_string();
    j[name + "_decimal"] = v.to_decimal_string();
  };
  put("auc", r.auc);
  put("pair_probability", r.pair_probability);
  put("tie_correction", r.tie.correction);
  put("tie_bound", r.tie.bound);
  put("b_given_p", r.tie.b_given_p);
  put("b_given_n", r.tie.b_given_n);
  j["hypothesis_holds"] = r.hypothesis_holds;

  json shared = json::array();
  for (const auto& s : r.tie.shared_scores)
    shared.push_back({{"score", s.score.value.to_fraction_string()},
                      {"pos_mass", s.pos_mass.to_fraction_string()},
                      {"neg_mass", s.neg_mass.to_fraction_string()}});
  j["shared_scores"] = std::move(shared);

  json curve = json::array();
  for (const auto& p : r.curve.points)
    curve.push_back(json::array({p.fpr.to_fraction_string(), p.tpr.to_fraction_string()}));
  j["curve"] = std::move(curve);
  return j.dump() + "\n";
}

std::string emit_text(const RocReport& r) {
  std::ostringstream os;
  auto line = [&os](const char* name, const Rational& v) {
    os << name << v.to_fraction_string() << "  (" << v.to_decimal_string() << ")\n";
  };
  os << "positives:         " << r.n_pos << "\n";
  os << "negatives:         " << r.n_neg << "\n";
  line("auc:               ", r.auc);
  line("pair probability:  ", r.pair_probability);
  line("tie correction:    ", r.tie.correction);
  line("tie bound:         ", r.tie.bound);
  os << "no shared scores:  " << (r.hypothesis_holds ? "yes" : "no") << "\n";
  for (const auto& s : r.tie.shared_scores)
    os << "  shared score " << s.score.value << ": pos mass " << s.pos_mass << ", neg mass " << s.neg_mass << "\n";
  os << "curve points (fpr, tpr):\n";
  for (const auto& p : r.curve.points) os << "  " << p.fpr << "\t" << p.tpr << "\n";
  return os.str();
}

}  // namespace

std::string emit_report(const RocReport& r, OutputMode mode) {
  return mode == OutputMode::json ? emit_json(r) : emit_text(r);
}

std::vector<IdentityCheck> check_identities(const Dataset& d) {
  std::vector<IdentityCheck> out;
  auto run = [&out](std::string name, const std::function<std::string()>& body) {
    try {
      std::string failure = body();
      out.push_back({std::move(name), failure.empty(), std::move(failure)});
    } catch (const std::exception& e) {
      out.push_back({std::move(name), false, e.what()});
    }
  };
  auto mismatch = [](const Rational& a, const Rational& b) {
    return a == b ? std::string{} : a.to_fraction_string() + " != " + b.to_fraction_string();
  };

  const auto curve = roc_curve(d);
  const Rational auc = auc_trapezoid(curve);
  const Rational fast = pair_probability_fast(d);
  const Rational brute = pair_probability_bruteforce(d);
  const auto tpr = rate_step_function(d, Label::positive);
  const auto fpr = rate_step_function(d, Label::negative);
  const auto fpr_measure = negative_differential(fpr);

  run("rate functions match direct counts", [&]() -> std::string {
    for (const auto& t : curve.thresholds) {
      if (tpr(t) != tpr_at(d, t)) return "tpr mismatch at " + t.value.to_fraction_string();
      if (fpr(t) != fpr_at(d, t)) return "fpr mismatch at " + t.value.to_fraction_string();
    }
    return {};
  });
  run("curve runs from (1,1) to (0,0), monotone", [&]() -> std::string {
    const auto& p = curve.points;
    if (!(p.front() == RocPoint{1, 1}) || !(p.back() == RocPoint{0, 0})) return "bad endpoints";
    for (std::size_t k = 1; k < p.size(); ++k)
      if (p[k].fpr > p[k - 1].fpr || p[k].tpr > p[k - 1].tpr || p[k] == p[k - 1]) return "not strictly stepping";
    return {};
  });
  run("d(-T_f) and d(-F_f) have unit mass", [&]() -> std::string {
    if (auto m = negative_differential(tpr).total_mass(); m != 1) return "d(-T_f) mass " + m.to_fraction_string();
    return mismatch(fpr_measure.total_mass(), Rational(1));
  });
  run("fast pair probability == brute force", [&] { return mismatch(fast, brute); });
  run("auc == integral of balanced T_f d(-F_f)",
      [&] { return mismatch(integrate(LimitVariant::balanced, tpr, fpr_measure), auc); });
  run("pair probability == integral of T_f+ d(-F_f)",
      [&] { return mismatch(integrate(LimitVariant::right, tpr, fpr_measure), brute); });
  run("auc - pair probability == tie correction, within [0, bound]", [&]() -> std::string {
    const auto tie = tie_report(d);  // checks 0 <= correction <= bound <= 1/2
    return mismatch(auc - fast, tie.correction);
  });
  run("no shared scores => auc == pair probability", [&]() -> std::string {
    if (!hypothesis_holds(d)) return {};
    return mismatch(auc, fast);
  });
  return out;
}

}  // namespace exroc
