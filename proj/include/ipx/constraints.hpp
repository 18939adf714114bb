#pragma once

#include <string>

#include "ipx/core.hpp"

namespace ipx {

enum class Verdict { Holds, Fails, Boundary };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of testing one side hypothesis. margin is the signed slack of the
/// defining inequality (>= 0 means satisfied); BOUNDARY means
/// |margin| <= tol.band(scale).
struct HypothesisStatus {
  std::string label;
  Verdict verdict = Verdict::Holds;
  double margin = 0.0;
  double scale = 1.0;
  /// Strict hypotheses (a > b rather than a >= b) reject the BOUNDARY band.
  bool strict = false;

  bool admissible() const noexcept {
    return strict ? verdict == Verdict::Holds : verdict != Verdict::Fails;
  }
};

HypothesisStatus classify(std::string label, double margin, double scale, const Tolerance& tol,
                          bool strict = false);

/// Closed ball B(a, r) = { z : ||z - a|| <= r }.
struct DiscConstraint {
  DiscConstraint(Vector center, double radius);  // BAD_RADIUS unless radius > 0

  Vector center;
  double radius;
};

/// The pair (gamma, Gamma) with reference vector y: either of the equivalent
/// conditions Re<Gamma y - x, x - gamma y> >= 0 or
/// ||x - (Gamma+gamma)/2 y|| <= |Gamma-gamma| ||y|| / 2.
struct SegmentConstraint {
  /// ZERO_REFERENCE if y = 0; INPUT_MISMATCH if a COMPLEX scalar is paired
  /// with a REAL reference vector.
  SegmentConstraint(Scalar gamma, Scalar Gamma, Vector y);

  Scalar gamma;
  Scalar Gamma;
  Vector y;

  Scalar midpoint() const { return (Gamma + gamma) / Scalar(2.0); }
  double radius() const;  // |Gamma - gamma| ||y|| / 2
};

HypothesisStatus check_disc(const Vector& x, const DiscConstraint& c, const Tolerance& tol = {});
HypothesisStatus check_segment_re(const Vector& x, const SegmentConstraint& c,
                                  const Tolerance& tol = {});
HypothesisStatus check_segment_norm(const Vector& x, const SegmentConstraint& c,
                                    const Tolerance& tol = {});

/// Generic form of the segment conditions for arbitrary endpoints z, Z:
/// Re<Z - x, x - z> >= 0 and ||x - (z+Z)/2|| <= ||Z - z|| / 2.
HypothesisStatus check_between_re(const Vector& x, const Vector& lower, const Vector& upper,
                                  const Tolerance& tol, std::string label);
HypothesisStatus check_between_norm(const Vector& x, const Vector& lower, const Vector& upper,
                                    const Tolerance& tol, std::string label);

enum class DiscCase { NormGtR, NormEqR, NormLtR };
enum class Regime { RePos, ReZero, ReNeg };

std::string_view to_string(DiscCase c) noexcept;
std::string_view to_string(Regime r) noexcept;

/// Sign of ||a|| - r; the BOUNDARY band folds into NormEqR.
DiscCase disc_case(const DiscConstraint& c, const Tolerance& tol = {});

struct SegmentRegime {
  Regime regime;
  double value;  // Re(Gamma conj(gamma))
};

/// Sign of Re(Gamma conj(gamma)); the BOUNDARY band folds into ReZero.
SegmentRegime segment_regime(Scalar gamma, Scalar Gamma, const Tolerance& tol = {});
inline SegmentRegime segment_regime(const SegmentConstraint& c, const Tolerance& tol = {}) {
  return segment_regime(c.gamma, c.Gamma, tol);
}

}  // namespace ipx
