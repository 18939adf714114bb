#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipx/constraints.hpp"

namespace ipx {

struct Term {
  std::string label;
  double value;
};

/// Optional quotient form of a Gruss-type bound, reported only when both
/// projections are nonzero.
struct RatioBound {
  double lhs;
  double rhs;
};

/// Both sides of one (possibly chained) inequality plus the hypotheses it was
/// evaluated under. The chain reads
///   lhs <= intermediate[0].value <= ... <= intermediate[k-1].value <= rhs.
struct BoundReport {
  std::string theorem_id;
  std::string case_tag;
  std::vector<HypothesisStatus> hypothesis;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  std::optional<double> tightness;  // lhs / rhs when rhs > 0
  std::vector<Term> intermediate;
  std::vector<Term> details;  // diagnostics that are not links of the chain
  std::optional<RatioBound> ratio_bound;
  /// Largest relative disagreement between this evaluation and an
  /// independent delegated evaluation of the same bound, when one exists.
  std::optional<double> path_deviation;
  /// Further inequalities established by the same theorem (e.g. the
  /// additive form that accompanies a multiplicative one).
  std::vector<BoundReport> companions;
  bool trusted = true;
  double scale = 1.0;

  bool hypotheses_hold() const;
  /// Smallest link slack of the chain, i.e. min over consecutive terms of
  /// (next - previous).
  double worst_link_slack() const;
  /// Every link of the chain satisfied to within tol.band(scale).
  bool holds(const Tolerance& tol) const;

  const Term* detail(std::string_view label) const;
};

/// Assemble a report; slack, tightness and scale are computed from the terms.
BoundReport make_report(std::string theorem_id, std::string case_tag,
                        std::vector<HypothesisStatus> hypothesis, double lhs,
                        std::vector<Term> intermediate, double rhs);

struct EvalOptions {
  Tolerance tol;
  /// Diagnostics mode: evaluate even when a hypothesis fails and mark the
  /// report untrusted instead of throwing HYPOTHESIS_VIOLATED.
  bool force = false;
};

/// HYPOTHESIS_VIOLATED error. Carries the report that was computed anyway.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(BoundReport report);
  const BoundReport& report() const noexcept { return report_; }

 private:
  BoundReport report_;
};

/// Throws HypothesisError unless every hypothesis is admissible or
/// opts.force is set; in the latter case the report is marked untrusted.
BoundReport finalize(BoundReport report, const EvalOptions& opts);

/// Relative difference |a - b| / max(1, |a|, |b|).
double relative_gap(double a, double b);

}  // namespace ipx
