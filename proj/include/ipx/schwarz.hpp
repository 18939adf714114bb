#pragma once

#include <optional>
#include <vector>

#include "ipx/report.hpp"

namespace ipx {

/// Reverse Schwarz bounds under the ball hypothesis x in B(a, r), dispatched on
/// the sign of ||a|| - r:
///  - NORM_GT_R: ||x||^2||a||^2 - |<x,a>|^2 <= ||x||^2||a||^2 - (Re<x,a>)^2 <= r^2||x||^2
///  - NORM_EQ_R: ||x||^2 <= 2 Re<x,a> <= 2|<x,a>|
///  - NORM_LT_R: ||x||^2 <= r^2 - ||a||^2 + 2 Re<x,a> <= r^2 - ||a||^2 + 2|<x,a>|
BoundReport reverse_schwarz_disc(const Vector& x, const DiscConstraint& c,
                                 const EvalOptions& opts = {});

/// Reverse Schwarz bounds under the segment hypothesis, dispatched on the sign
/// of p = Re(Gamma conj(gamma)):
///  - RE_POS:  ||x||^2||y||^2 <= {Re[conj(Gamma+gamma)<x,y>]}^2 / (4p)
///                            <= |Gamma+gamma|^2 |<x,y>|^2 / (4p)
///  - RE_ZERO: ||x||^2 <= Re[conj(Gamma+gamma)<x,y>] <= |Gamma+gamma||<x,y>|
///  - RE_NEG:  ||x||^2 <= -p||y||^2 + Re[...] <= -p||y||^2 + |Gamma+gamma||<x,y>|
BoundReport reverse_schwarz_segment(const Vector& x, const SegmentConstraint& c,
                                    const EvalOptions& opts = {});

/// ||x||^2||y||^2 - |<x,y>|^2 <= |Gamma-gamma|^2 |<x,y>|^2 / (4p), p > 0.
/// REGIME_MISMATCH unless Re(Gamma conj(gamma)) > 0.
BoundReport additive_reverse_segment(const Vector& x, const SegmentConstraint& c,
                                     const EvalOptions& opts = {});

/// One entry per classical segment bound. Regime errors are reported per
/// entry rather than failing the whole call.
struct BaselineOutcome {
  std::string theorem_id;
  std::optional<BoundReport> report;
  std::optional<ErrorCode> error;
};

namespace baseline {
inline constexpr const char* kGapQuarter = "baseline_gap_quarter";
inline constexpr const char* kRatioHalf = "baseline_ratio_half";
inline constexpr const char* kAdditiveModulus = "baseline_additive_modulus";
inline constexpr const char* kGapRefined = "baseline_gap_refined";
}  // namespace baseline

/// The earlier segment bounds the new ones are compared against, all with the
/// Schwarz-gap or ||x||^2||y||^2 left side:
///  - gap_quarter:       gap <= |Gamma-gamma|^2 ||y||^4 / 4
///  - ratio_half:        ||x||^2||y||^2 <= {Re[Gamma conj<x,y> + conj(gamma)<x,y>]}^2 / (4p)
///                                      <= (|Gamma|+|gamma|)^2 |<x,y>|^2 / (4p)   (squared form)
///  - additive_modulus:  gap <= [(|Gamma|-|gamma|)^2 + 4(|Gamma gamma| - p)] |<x,y>|^2 / (4p)
///  - gap_refined:       gap <= |Gamma-gamma|^2||y||^4/4 - |(Gamma+gamma)/2 ||y||^2 - <x,y>|^2
std::vector<BaselineOutcome> baseline_bounds(const Vector& x, const SegmentConstraint& c,
                                             const EvalOptions& opts = {});

/// Both forms of the segment hypothesis, in the order (re form, norm form).
std::vector<HypothesisStatus> segment_hypotheses(const Vector& x, const SegmentConstraint& c,
                                                 const Tolerance& tol);

}  // namespace ipx
