#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ipx/report.hpp"

namespace ipx {

/// Finite quadrature discretization of a probability density:
/// integral of rho u dmu ~ sum_k w_k rho_k u(s_k), with sum_k w_k rho_k = 1.
class WeightedMeasure {
 public:
  /// INPUT_MISMATCH on length mismatch or no nodes, INPUT_MISMATCH for a
  /// nonpositive weight, NEGATIVE_DENSITY for rho_k < 0, NOT_NORMALIZED if
  /// |sum w rho - 1| > tol.eta.
  WeightedMeasure(std::vector<double> nodes, std::vector<double> weights,
                  std::vector<double> density, const Tolerance& tol = {});

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& density() const noexcept { return density_; }
  /// Factor the raw density was multiplied by to reach unit mass (1 when
  /// the measure was given already normalized).
  double renormalization() const noexcept { return renormalization_; }
  void set_renormalization(double f) noexcept { renormalization_ = f; }

  /// w_k rho_k
  double mass(std::size_t k) const noexcept { return weights_[k] * density_[k]; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> density_;
  double renormalization_ = 1.0;
};

enum class QuadratureRule { UniformMidpoint, GaussLegendre };

std::string_view to_string(QuadratureRule rule) noexcept;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

/// BAD_INTERVAL unless lo < hi and n >= 1; NEGATIVE_DENSITY if the density
/// is negative at a node. The sampled density is rescaled to unit mass.
WeightedMeasure make_measure(QuadratureRule rule, double lo, double hi, std::size_t n,
                             const std::function<double(double)>& density);
WeightedMeasure make_measure(QuadratureRule rule, double lo, double hi, std::size_t n,
                             double density = 1.0);

/// Values of f at the nodes of a measure.
struct SampledFunction {
  Field field = Field::Real;
  std::vector<Complex> values;

  static SampledFunction real(std::vector<double> values);
  static SampledFunction sample(const WeightedMeasure& m, const std::function<double(double)>& f);
  static SampledFunction sample_complex(const WeightedMeasure& m,
                                        const std::function<Complex(double)>& f);

  std::size_t size() const noexcept { return values.size(); }
};

/// sum_k w_k rho_k f_k conj(g_k)
Scalar weighted_inner(const SampledFunction& f, const SampledFunction& g, const WeightedMeasure& m);
double weighted_norm_sq(const SampledFunction& f, const WeightedMeasure& m);

/// (sqrt(w_k rho_k) f_k)_k, under which weighted_inner becomes inner.
Vector to_vector(const SampledFunction& f, const WeightedMeasure& m);

/// Hypotheses that hold almost everywhere are checked node by node.
struct PointwiseReport {
  HypothesisStatus status;
  std::vector<double> node_margins;
  /// Real data only: whether gamma g <= f <= Gamma g at every node.
  std::optional<bool> sandwich;
};

/// |f - g| <= r <= |g| at every node; margin min_k min(r - |f_k - g_k|, |g_k| - r).
PointwiseReport check_pointwise_disc(const SampledFunction& f, const SampledFunction& g, double r,
                                     const WeightedMeasure& m, const Tolerance& tol = {});

/// Re[(Gamma g - f)(conj f - conj(gamma) conj g)] >= 0 at every node.
PointwiseReport check_pointwise_segment(const SampledFunction& f, const SampledFunction& g,
                                        Scalar gamma, Scalar Gamma, const WeightedMeasure& m,
                                        const Tolerance& tol = {});

/// Under |f - g| <= r <= |g| and integral rho |g|^2 != r^2:
///   0 <= ||f||^2 ||g||^2 - |<f,g>|^2 <= ||f||^2 ||g||^2 - (Re<f,g>)^2 <= r^2 ||g||^2.
/// The companion carries the same chain closed by r^2 ||f||^2.
BoundReport integral_reverse_schwarz_disc(const SampledFunction& f, const SampledFunction& g,
                                          double r, const WeightedMeasure& m,
                                          const EvalOptions& opts = {});

/// Under the pointwise segment condition with Re(Gamma conj gamma) = p > 0:
///   ||f||^2 ||g||^2 <= (Re[conj(Gamma + gamma) <f,g>])^2 / (4p)
///                   <= |Gamma + gamma|^2 |<f,g>|^2 / (4p),
/// with companion ||f||^2 ||g||^2 - |<f,g>|^2 <= |Gamma - gamma|^2 |<f,g>|^2 / (4p).
BoundReport integral_reverse_schwarz_segment(const SampledFunction& f, const SampledFunction& g,
                                             Scalar gamma, Scalar Gamma, const WeightedMeasure& m,
                                             const EvalOptions& opts = {});

/// Real f, g with m g <= f <= M g, M > m > 0:
///   integral rho f^2 * integral rho g^2 <= (M + m)^2 / (4mM) (integral rho f g)^2,
/// companion: the difference of the two sides of Schwarz <= (M - m)^2 / (4mM) (integral rho f g)^2.
BoundReport cassel(const SampledFunction& f, const SampledFunction& g, double mlo, double Mhi,
                   const WeightedMeasure& m, const EvalOptions& opts = {});

/// Which multiplier appears in the pointwise condition on g.
enum class GrussReading {
  Symmetric,  // Re[(B h - g)(conj g - conj(b) conj h)] >= 0
  Literal,    // Re[(A h - g)(conj g - conj(b) conj h)] >= 0
};

/// With integral rho |h|^2 = 1 (NOT_UNIT_DENSITY otherwise):
///   |<f,g> - <f,h><h,g>| <= |A - a||B - b| / (4 sqrt(Re(A conj a) Re(B conj b))) |<f,h><h,g>|.
BoundReport integral_gruss(const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& h, Scalar a, Scalar A, Scalar b, Scalar B,
                           const WeightedMeasure& m, const EvalOptions& opts = {},
                           GrussReading reading = GrussReading::Symmetric);

}  // namespace ipx
