#include "ipx/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ipx {

double triangle_deficit(const Vector& x, const Vector& y) {
  return norm(x) + norm(y) - norm(x + y);
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool admissible(const std::vector<HypothesisStatus>& hyps) {
  return std::all_of(hyps.begin(), hyps.end(), [](const auto& h) { return h.admissible(); });
}

// Rounding can push a radicand that is zero in exact arithmetic slightly
// below zero. Outside the hypotheses a negative value just means there is no
// bound (NaN); under them it is an error.
double checked_radicand(double value, double scale, const Tolerance& tol, bool hyps_ok,
                        const char* who) {
  if (value >= 0.0) return value;
  if (value >= -tol.band(scale)) return 0.0;
  if (!hyps_ok) return kNaN;
  throw Error(ErrorCode::NegativeRadicand,
              std::string(who) + ": negative radicand " + std::to_string(value));
}

}  // namespace

BoundReport reverse_triangle_disc(const Vector& x, const DiscConstraint& c,
                                  const EvalOptions& opts) {
  const Vector& a = c.center;
  const double na = norm(a);
  const double r = c.radius;
  std::vector<HypothesisStatus> hyps{check_disc(x, c, opts.tol),
                                     classify("radius_below_center_norm", na - r,
                                              std::max(na, r), opts.tol, true)};
  const double re = inner(x, a).re();
  const double lhs = triangle_deficit(x, a);

  // With the strict hypothesis failing the formula is undefined, so even a
  // forced evaluation has nothing to report.
  if (na * na - r * r <= 0.0) {
    BoundReport report = make_report("triangle_disc", "undefined", std::move(hyps), lhs, {},
                                     kNaN);
    return finalize(std::move(report), opts);
  }
  const double d = std::sqrt(na * na - r * r);
  const double radicand = checked_radicand(re, std::max(1.0, norm(x) * na), opts.tol,
                                           admissible(hyps), "reverse_triangle_disc") /
                          (d * (d + na));
  BoundReport report = make_report("triangle_disc", "norm_gt_r", std::move(hyps), lhs, {},
                                   std::sqrt(2.0) * r * std::sqrt(radicand));
  report.details.push_back({"re_inner", re});
  report.details.push_back({"norm_x_times_d", norm(x) * d});
  return finalize(std::move(report), opts);
}

BoundReport reverse_triangle_segment(const Vector& x, const Vector& y, double m, double M,
                                     const EvalOptions& opts) {
  if (!(m > 0.0) || !(M > m) || !std::isfinite(M)) {
    throw Error(ErrorCode::BadInterval, "reverse_triangle_segment: requires M > m > 0, got m = " +
                                            std::to_string(m) + ", M = " + std::to_string(M));
  }
  const SegmentConstraint c(Scalar(m), Scalar(M), y);
  std::vector<HypothesisStatus> hyps{check_segment_re(x, c, opts.tol),
                                     check_segment_norm(x, c, opts.tol)};
  const double re = inner(x, y).re();
  const double radicand =
      checked_radicand(re, std::max(1.0, norm(x) * norm(y)), opts.tol, admissible(hyps),
                       "reverse_triangle_segment");
  const double factor = (std::sqrt(M) - std::sqrt(m)) / std::sqrt(std::sqrt(m * M));
  BoundReport report = make_report("triangle_segment", "interval", std::move(hyps),
                                   triangle_deficit(x, y), {}, factor * std::sqrt(radicand));
  report.details.push_back({"re_inner", re});
  return finalize(std::move(report), opts);
}

}  // namespace ipx
