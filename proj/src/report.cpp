#include "ipx/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ipx {

bool BoundReport::hypotheses_hold() const {
  return std::all_of(hypothesis.begin(), hypothesis.end(),
                     [](const HypothesisStatus& s) { return s.admissible(); });
}

double BoundReport::worst_link_slack() const {
  double worst = std::numeric_limits<double>::infinity();
  double prev = lhs;
  for (const Term& t : intermediate) {
    worst = std::min(worst, t.value - prev);
    prev = t.value;
  }
  return std::min(worst, rhs - prev);
}

bool BoundReport::holds(const Tolerance& tol) const {
  return worst_link_slack() >= -tol.band(scale);
}

const Term* BoundReport::detail(std::string_view label) const {
  for (const Term& t : details) {
    if (t.label == label) return &t;
  }
  return nullptr;
}

BoundReport make_report(std::string theorem_id, std::string case_tag,
                        std::vector<HypothesisStatus> hypothesis, double lhs,
                        std::vector<Term> intermediate, double rhs) {
  BoundReport r;
  r.theorem_id = std::move(theorem_id);
  r.case_tag = std::move(case_tag);
  r.hypothesis = std::move(hypothesis);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  if (rhs > 0.0) r.tightness = lhs / rhs;
  r.intermediate = std::move(intermediate);
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  for (const Term& t : r.intermediate) scale = std::max(scale, std::abs(t.value));
  r.scale = std::max(1.0, scale);
  return r;
}

HypothesisError::HypothesisError(BoundReport report)
    : Error(ErrorCode::HypothesisViolated, [&] {
        std::string msg = report.theorem_id + ": hypothesis violated";
        for (const HypothesisStatus& s : report.hypothesis) {
          if (!s.admissible()) msg += " [" + s.label + ", margin " + std::to_string(s.margin) + "]";
        }
        return msg;
      }()),
      report_(std::move(report)) {}

BoundReport finalize(BoundReport report, const EvalOptions& opts) {
  if (report.hypotheses_hold()) return report;
  report.trusted = false;
  if (!opts.force) throw HypothesisError(std::move(report));
  return report;
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace ipx
