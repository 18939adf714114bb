#include "ipx/gruss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ipx/schwarz.hpp"

namespace ipx {

void require_unit(const Vector& e, const Tolerance& tol, const char* who) {
  const double n = norm(e);
  if (std::abs(n - 1.0) > tol.eta) {
    throw Error(ErrorCode::NotUnit, std::string(who) + ": ||e|| = " + std::to_string(n));
  }
}

Scalar cheby_functional(const Vector& x, const Vector& y, const Vector& e, const Tolerance& tol) {
  require_unit(e, tol, "cheby_functional");
  return inner(x, y) - inner(x, e) * inner(e, y);
}

namespace {

void require_open_unit(double r, const char* name) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorCode::BadRadius,
                std::string("gruss_disc: ") + name + " must lie in (0, 1), got " + std::to_string(r));
  }
}

double positive_product(Scalar lo, Scalar hi, const Tolerance& tol, const char* name) {
  const SegmentRegime regime = segment_regime(lo, hi, tol);
  if (regime.regime != Regime::RePos) {
    throw Error(ErrorCode::RegimeMismatch, std::string("gruss_segment: ") + name +
                                               " requires a positive real part, got " +
                                               std::to_string(regime.value));
  }
  return regime.value;
}

}  // namespace

BoundReport gruss_disc(const Vector& x, const Vector& y, const Vector& e, double r1, double r2,
                       const EvalOptions& opts) {
  require_unit(e, opts.tol, "gruss_disc");
  require_open_unit(r1, "r1");
  require_open_unit(r2, "r2");
  auto hx = check_disc(x, DiscConstraint(e, r1), opts.tol);
  auto hy = check_disc(y, DiscConstraint(e, r2), opts.tol);
  hx.label = "x_disc";
  hy.label = "y_disc";
  const Scalar t = cheby_functional(x, y, e, opts.tol);
  BoundReport report = make_report("gruss_disc", "unit_center", {hx, hy}, t.abs(), {},
                                   r1 * r2 * norm(x) * norm(y));
  return finalize(std::move(report), opts);
}

BoundReport gruss_segment(const Vector& x, const Vector& y, const Vector& e, Scalar a, Scalar A,
                          Scalar b, Scalar B, const EvalOptions& opts) {
  require_unit(e, opts.tol, "gruss_segment");
  const double pa = positive_product(a, A, opts.tol, "Re(A conj a)");
  const double pb = positive_product(b, B, opts.tol, "Re(B conj b)");
  const SegmentConstraint cx(a, A, e);
  const SegmentConstraint cy(b, B, e);

  std::vector<HypothesisStatus> hyps = segment_hypotheses(x, cx, opts.tol);
  for (auto& h : segment_hypotheses(y, cy, opts.tol)) hyps.push_back(std::move(h));
  hyps[0].label = "x_segment_re";
  hyps[1].label = "x_segment_norm";
  hyps[2].label = "y_segment_re";
  hyps[3].label = "y_segment_norm";

  const Scalar xe = inner(x, e);
  const Scalar ey = inner(e, y);
  const Scalar t = inner(x, y) - xe * ey;
  const double k = 0.25 * (A - a).abs() * (B - b).abs() / std::sqrt(pa * pb);
  BoundReport report = make_report("gruss_segment", "re_pos", std::move(hyps), t.abs(), {},
                                   k * (xe * ey).abs());
  report.details.push_back({"constant", k});
  if (std::min(xe.abs(), ey.abs()) > opts.tol.eta) {
    report.ratio_bound = RatioBound{(inner(x, y) / (xe * ey) - Scalar(1.0)).abs(), k};
  }
  return finalize(std::move(report), opts);
}

}  // namespace ipx
