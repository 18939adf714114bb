#include "ipx/schwarz.hpp"

#include <cmath>

namespace ipx {

std::vector<HypothesisStatus> segment_hypotheses(const Vector& x, const SegmentConstraint& c,
                                                 const Tolerance& tol) {
  return {check_segment_re(x, c, tol), check_segment_norm(x, c, tol)};
}

BoundReport reverse_schwarz_disc(const Vector& x, const DiscConstraint& c,
                                 const EvalOptions& opts) {
  const Vector& a = c.center;
  std::vector<HypothesisStatus> hyps{check_disc(x, c, opts.tol)};
  const DiscCase which = disc_case(c, opts.tol);
  const Scalar xa = inner(x, a);
  const double nx2 = norm_sq(x);
  const double r2 = c.radius * c.radius;

  BoundReport report;
  switch (which) {
    case DiscCase::NormGtR: {
      const double gap = schwarz_gap(x, a);
      const double gap_re = gap + xa.im() * xa.im();
      report = make_report("schwarz_disc", "norm_gt_r", std::move(hyps), gap,
                           {{"gap_re", gap_re}}, r2 * nx2);
      break;
    }
    case DiscCase::NormEqR:
      report = make_report("schwarz_disc", "norm_eq_r", std::move(hyps), nx2,
                           {{"twice_re_inner", 2.0 * xa.re()}}, 2.0 * xa.abs());
      break;
    case DiscCase::NormLtR: {
      const double base = r2 - norm_sq(a);
      report = make_report("schwarz_disc", "norm_lt_r", std::move(hyps), nx2,
                           {{"shifted_re_inner", base + 2.0 * xa.re()}}, base + 2.0 * xa.abs());
      break;
    }
  }
  report.details.push_back({"re_inner", xa.re()});
  return finalize(std::move(report), opts);
}

BoundReport reverse_schwarz_segment(const Vector& x, const SegmentConstraint& c,
                                    const EvalOptions& opts) {
  auto hyps = segment_hypotheses(x, c, opts.tol);
  const SegmentRegime regime = segment_regime(c, opts.tol);
  const Scalar xy = inner(x, c.y);
  const Scalar sum = c.Gamma + c.gamma;
  const double p = regime.value;
  const double s = (sum.conj() * xy).re();
  const double sum_abs = sum.abs();

  BoundReport report;
  switch (regime.regime) {
    case Regime::RePos:
      report = make_report("schwarz_segment", "re_pos", std::move(hyps),
                           norm_sq(x) * norm_sq(c.y), {{"re_form", 0.25 * s * s / p}},
                           0.25 * sum_abs * sum_abs * xy.abs_sq() / p);
      break;
    case Regime::ReZero:
      report = make_report("schwarz_segment", "re_zero", std::move(hyps), norm_sq(x),
                           {{"re_form", s}}, sum_abs * xy.abs());
      break;
    case Regime::ReNeg: {
      const double shift = -p * norm_sq(c.y);
      report = make_report("schwarz_segment", "re_neg", std::move(hyps), norm_sq(x),
                           {{"re_form", shift + s}}, shift + sum_abs * xy.abs());
      break;
    }
  }
  report.details.push_back({"re_gamma_product", p});
  return finalize(std::move(report), opts);
}

namespace {

double require_positive_regime(const SegmentConstraint& c, const Tolerance& tol,
                               const char* who) {
  const SegmentRegime regime = segment_regime(c, tol);
  if (regime.regime != Regime::RePos) {
    throw Error(ErrorCode::RegimeMismatch,
                std::string(who) + ": requires Re(Gamma conj(gamma)) > 0, got " +
                    std::to_string(regime.value));
  }
  return regime.value;
}

}  // namespace

BoundReport additive_reverse_segment(const Vector& x, const SegmentConstraint& c,
                                     const EvalOptions& opts) {
  const double p = require_positive_regime(c, opts.tol, "additive_reverse_segment");
  const double diff = (c.Gamma - c.gamma).abs();
  const double xy2 = inner(x, c.y).abs_sq();
  BoundReport report = make_report("schwarz_additive", "re_pos", segment_hypotheses(x, c, opts.tol),
                                   schwarz_gap(x, c.y), {}, 0.25 * diff * diff * xy2 / p);
  return finalize(std::move(report), opts);
}

std::vector<BaselineOutcome> baseline_bounds(const Vector& x, const SegmentConstraint& c,
                                             const EvalOptions& opts) {
  const auto hyps = segment_hypotheses(x, c, opts.tol);
  const SegmentRegime regime = segment_regime(c, opts.tol);
  const Scalar xy = inner(x, c.y);
  const double ny2 = norm_sq(c.y);
  const double gap = schwarz_gap(x, c.y);
  const double diff = (c.Gamma - c.gamma).abs();
  const double quarter = 0.25 * diff * diff * ny2 * ny2;
  const double p = regime.value;

  std::vector<BaselineOutcome> out;
  auto emit = [&](const char* id, BoundReport report) {
    out.push_back({id, finalize(std::move(report), opts), std::nullopt});
  };
  auto regime_error = [&](const char* id) {
    out.push_back({id, std::nullopt, ErrorCode::RegimeMismatch});
  };

  emit(baseline::kGapQuarter, make_report(baseline::kGapQuarter, to_string(regime.regime).data(),
                                          hyps, gap, {}, quarter));

  if (regime.regime == Regime::RePos) {
    const double s = (c.Gamma * xy.conj() + c.gamma.conj() * xy).re();
    const double abs_sum = c.Gamma.abs() + c.gamma.abs();
    emit(baseline::kRatioHalf,
         make_report(baseline::kRatioHalf, "re_pos", hyps, norm_sq(x) * ny2,
                     {{"re_form", 0.25 * s * s / p}}, 0.25 * abs_sum * abs_sum * xy.abs_sq() / p));

    const double abs_diff = c.Gamma.abs() - c.gamma.abs();
    const double numer = abs_diff * abs_diff + 4.0 * ((c.Gamma * c.gamma).abs() - p);
    emit(baseline::kAdditiveModulus,
         make_report(baseline::kAdditiveModulus, "re_pos", hyps, gap, {},
                     0.25 * numer * xy.abs_sq() / p));
  } else {
    regime_error(baseline::kRatioHalf);
    regime_error(baseline::kAdditiveModulus);
  }

  const Complex offset = c.midpoint().value() * ny2 - xy.value();
  BoundReport refined = make_report(baseline::kGapRefined, to_string(regime.regime).data(), hyps,
                                    gap, {}, quarter - std::norm(offset));
  refined.details.push_back({"subtracted", std::norm(offset)});
  emit(baseline::kGapRefined, std::move(refined));
  return out;
}

}  // namespace ipx
