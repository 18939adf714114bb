#include "ipx/constraints.hpp"

#include <algorithm>
#include <cmath>

namespace ipx {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Boundary: return "BOUNDARY";
  }
  return "?";
}

std::string_view to_string(DiscCase c) noexcept {
  switch (c) {
    case DiscCase::NormGtR: return "NORM_GT_R";
    case DiscCase::NormEqR: return "NORM_EQ_R";
    case DiscCase::NormLtR: return "NORM_LT_R";
  }
  return "?";
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::RePos: return "RE_POS";
    case Regime::ReZero: return "RE_ZERO";
    case Regime::ReNeg: return "RE_NEG";
  }
  return "?";
}

HypothesisStatus classify(std::string label, double margin, double scale, const Tolerance& tol,
                          bool strict) {
  HypothesisStatus s;
  s.label = std::move(label);
  s.margin = margin;
  s.scale = std::max(1.0, scale);
  s.strict = strict;
  const double band = tol.band(scale);
  if (std::abs(margin) <= band) {
    s.verdict = Verdict::Boundary;
  } else {
    s.verdict = margin > 0.0 ? Verdict::Holds : Verdict::Fails;
  }
  return s;
}

DiscConstraint::DiscConstraint(Vector center_, double radius_)
    : center(std::move(center_)), radius(radius_) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::BadRadius, "disc radius must be a positive finite number");
  }
}

SegmentConstraint::SegmentConstraint(Scalar gamma_, Scalar Gamma_, Vector y_)
    : gamma(gamma_), Gamma(Gamma_), y(std::move(y_)) {
  if (norm_sq(y) == 0.0) throw Error(ErrorCode::ZeroReference, "segment reference vector is zero");
  if (y.field() == Field::Real &&
      (gamma.field() == Field::Complex || Gamma.field() == Field::Complex)) {
    throw Error(ErrorCode::InputMismatch, "complex segment endpoints with a real reference vector");
  }
}

double SegmentConstraint::radius() const { return 0.5 * (Gamma - gamma).abs() * norm(y); }

HypothesisStatus check_disc(const Vector& x, const DiscConstraint& c, const Tolerance& tol) {
  const double dist = norm(x - c.center);
  const double scale = std::max({norm(x), norm(c.center), c.radius});
  return classify("disc", c.radius - dist, scale, tol);
}

HypothesisStatus check_between_re(const Vector& x, const Vector& lower, const Vector& upper,
                                  const Tolerance& tol, std::string label) {
  const double margin = inner(upper - x, x - lower).re();
  const double scale = std::max({norm_sq(x), norm_sq(lower), norm_sq(upper)});
  return classify(std::move(label), margin, scale, tol);
}

HypothesisStatus check_between_norm(const Vector& x, const Vector& lower, const Vector& upper,
                                    const Tolerance& tol, std::string label) {
  Vector mid = Scalar(0.5) * (lower + upper);
  const double margin = 0.5 * norm(upper - lower) - norm(x - mid);
  const double scale = std::max({norm(x), norm(lower), norm(upper)});
  return classify(std::move(label), margin, scale, tol);
}

HypothesisStatus check_segment_re(const Vector& x, const SegmentConstraint& c,
                                  const Tolerance& tol) {
  const Vector upper = c.Gamma * c.y;
  const Vector lower = c.gamma * c.y;
  const double margin = inner(upper - x, x - lower).re();
  const double ny2 = norm_sq(c.y);
  const double scale =
      std::max({norm_sq(x), c.Gamma.abs_sq() * ny2, c.gamma.abs_sq() * ny2});
  return classify("segment_re", margin, scale, tol);
}

HypothesisStatus check_segment_norm(const Vector& x, const SegmentConstraint& c,
                                    const Tolerance& tol) {
  const double margin = c.radius() - norm(x - c.midpoint() * c.y);
  const double ny = norm(c.y);
  const double scale = std::max({norm(x), c.Gamma.abs() * ny, c.gamma.abs() * ny});
  return classify("segment_norm", margin, scale, tol);
}

DiscCase disc_case(const DiscConstraint& c, const Tolerance& tol) {
  const double na = norm(c.center);
  const double diff = na - c.radius;
  if (std::abs(diff) <= tol.band(std::max(na, c.radius))) return DiscCase::NormEqR;
  return diff > 0.0 ? DiscCase::NormGtR : DiscCase::NormLtR;
}

SegmentRegime segment_regime(Scalar gamma, Scalar Gamma, const Tolerance& tol) {
  const double value = (Gamma * gamma.conj()).re();
  const double scale = Gamma.abs() * gamma.abs();
  if (std::abs(value) <= tol.band(scale)) return {Regime::ReZero, value};
  return {value > 0.0 ? Regime::RePos : Regime::ReNeg, value};
}

}  // namespace ipx
