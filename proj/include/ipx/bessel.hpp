#pragma once

#include <initializer_list>
#include <vector>

#include "ipx/report.hpp"
#include "ipx/schwarz.hpp"

namespace ipx {

/// Finite scalar sequence paired index-by-index with an orthonormal family.
class CoefficientSequence {
 public:
  CoefficientSequence(Field field, std::vector<Complex> values);

  static CoefficientSequence real(std::initializer_list<double> values);
  static CoefficientSequence complex(std::initializer_list<Complex> values);
  static CoefficientSequence constant(Field field, std::size_t n, Complex value);

  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  Scalar operator[](std::size_t i) const { return {field_, values_[i]}; }

  double norm_sq() const;  // sum |v_i|^2

 private:
  Field field_;
  std::vector<Complex> values_;
};

/// (lower_i, upper_i) pairs; INPUT_MISMATCH unless lengths agree.
struct CoefficientPairSequence {
  CoefficientPairSequence(CoefficientSequence lower, CoefficientSequence upper);

  CoefficientSequence lower;
  CoefficientSequence upper;

  std::size_t size() const noexcept { return lower.size(); }
  CoefficientSequence midpoint() const;
  double spread_sq() const;       // sum |upper_i - lower_i|^2
  double re_product_sum() const;  // sum Re(upper_i conj(lower_i))
};

/// c_i = <x, e_i>. INVALID_FAMILY for a family that failed validation.
CoefficientSequence fourier_coeffs(const Vector& x, const OrthonormalFamily& f);

/// ||x||^2 - sum |<x, e_i>|^2.
double bessel_defect(const Vector& x, const OrthonormalFamily& f);

/// sum v_i e_i.
Vector synthesize(const OrthonormalFamily& f, const CoefficientSequence& v);

/// r - ||x - sum lam_i e_i||.
HypothesisStatus check_family_disc(const Vector& x, const OrthonormalFamily& f,
                                   const CoefficientSequence& lam, double r,
                                   const Tolerance& tol = {});
/// Re<sum upper_i e_i - x, x - sum lower_i e_i> >= 0.
HypothesisStatus check_family_segment_re(const Vector& x, const OrthonormalFamily& f,
                                         const CoefficientPairSequence& pair,
                                         const Tolerance& tol = {});
/// ||x - sum (upper_i + lower_i)/2 e_i|| <= (sum |upper_i - lower_i|^2)^(1/2) / 2.
HypothesisStatus check_family_segment_norm(const Vector& x, const OrthonormalFamily& f,
                                           const CoefficientPairSequence& pair,
                                           const Tolerance& tol = {});

/// Under sum |lam_i|^2 > r^2 and ||x - sum lam_i e_i|| <= r, with D = sum|lam_i|^2 - r^2:
///   ||x||^2 <= (sum Re[conj(lam_i) c_i])^2 / D <= |sum conj(lam_i) c_i|^2 / D
///           <= sum|lam_i|^2 / D * sum|c_i|^2,
/// with the defect form ||x||^2 - sum|c_i|^2 <= r^2 / D * sum|c_i|^2 as companion.
BoundReport reverse_bessel_disc(const Vector& x, const OrthonormalFamily& f,
                                const CoefficientSequence& lam, double r,
                                const EvalOptions& opts = {});

/// Under P = sum Re(Gamma_i conj(gamma_i)) > 0 and the family segment condition:
///   ||x||^2 <= (sum Re[conj(Gamma_i + gamma_i) c_i])^2 / (4P)
///           <= |sum conj(Gamma_i + gamma_i) c_i|^2 / (4P)
///           <= sum|Gamma_i + gamma_i|^2 / (4P) * sum|c_i|^2,
/// with the defect form ||x||^2 - sum|c_i|^2 <= sum|Gamma_i - gamma_i|^2 / (4P) * sum|c_i|^2.
/// Re-evaluated through reverse_bessel_disc with lam = (Gamma + gamma)/2,
/// r = (sum|Gamma_i - gamma_i|^2)^(1/2) / 2; the largest relative disagreement
/// is stored in path_deviation and PATH_MISMATCH is raised if it exceeds tol.eta.
BoundReport reverse_bessel_segment(const Vector& x, const OrthonormalFamily& f,
                                   const CoefficientPairSequence& pair,
                                   const EvalOptions& opts = {});

namespace bessel_baseline {
inline constexpr const char* kRefinedRe = "bessel_baseline_refined_re";
inline constexpr const char* kRefinedCoeff = "bessel_baseline_refined_coeff";
inline constexpr const char* kRatioModulus = "bessel_baseline_ratio_modulus";
inline constexpr const char* kAdditiveModulus = "bessel_baseline_additive_modulus";
}  // namespace bessel_baseline

/// The earlier family bounds, with Delta = sum |Phi_i - phi_i|^2, P = sum Re(Phi_i conj(phi_i)):
///  - refined_re:        defect <= Delta/4 - Re<sum Phi_i e_i - x, x - sum phi_i e_i> <= Delta/4
///  - refined_coeff:     defect <= Delta/4 - sum |(Phi_i + phi_i)/2 - c_i|^2 <= Delta/4
///  - ratio_modulus:     ||x||^2 <= sum (|Phi_i| + |phi_i|)^2 / (4P) * sum |c_i|^2
///  - additive_modulus:  defect <= sum {(|Phi_i| - |phi_i|)^2 + 4(|Phi_i phi_i| - Re(Phi_i conj(phi_i)))}
///                                 / (4P) * sum |c_i|^2
/// The last two need P > 0 and report REGIME_MISMATCH otherwise.
std::vector<BaselineOutcome> baseline_bessel(const Vector& x, const OrthonormalFamily& f,
                                             const CoefficientPairSequence& pair,
                                             const EvalOptions& opts = {});

/// <x,y> - sum <x,e_i><e_i,y>.
Scalar family_cheby(const Vector& x, const Vector& y, const OrthonormalFamily& f);

/// |<x,y> - sum <x,e_i><e_i,y>|
///   <= r1 r2 / sqrt(D1 D2) * sqrt(sum|<x,e_i>|^2 sum|<y,e_i>|^2)
///   <= r1 r2 / sqrt(D1 D2) * ||x|| ||y||,
/// D1 = sum|lam_i|^2 - r1^2 > 0, D2 = sum|mu_i|^2 - r2^2 > 0.
BoundReport gruss_family_disc(const Vector& x, const Vector& y, const OrthonormalFamily& f,
                              const CoefficientSequence& lam, const CoefficientSequence& mu,
                              double r1, double r2, const EvalOptions& opts = {});

/// Same left side, constant
///   (sum|Gamma_i - gamma_i|^2)^(1/2) (sum|Phi_i - phi_i|^2)^(1/2)
///   / (4 (sum Re(Gamma_i conj gamma_i))^(1/2) (sum Re(Phi_i conj phi_i))^(1/2)).
BoundReport gruss_family_segment(const Vector& x, const Vector& y, const OrthonormalFamily& f,
                                 const CoefficientPairSequence& pair_x,
                                 const CoefficientPairSequence& pair_y,
                                 const EvalOptions& opts = {});

}  // namespace ipx
