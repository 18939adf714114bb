#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipx/bessel.hpp"
#include "ipx/integral.hpp"
#include "ipx/philox.hpp"
#include "ipx/schwarz.hpp"

namespace ipx {

enum class FieldChoice { Real, Complex, Both };

std::string_view to_string(FieldChoice f) noexcept;
FieldChoice parse_field_choice(std::string_view s);  // PARSE_ERROR on anything else

struct SweepConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::vector<std::size_t> dims{1, 2, 3, 4, 5, 6, 7, 8};
  FieldChoice field = FieldChoice::Both;
  std::string target = "all";
  unsigned jobs = 1;
  /// Generated points stay at least this fraction of the radius inside
  /// their ball, so every instance HOLDS rather than sitting on the boundary.
  double slack = 0.01;
  Tolerance tol;

  void validate() const;  // INPUT_MISMATCH for trials == 0, empty dims, dim 0, slack outside [0, 1)
};

/// Dimension and field of trial i: dims cycle, and FieldChoice::Both
/// alternates REAL / COMPLEX.
std::size_t trial_dim(const SweepConfig& cfg, std::size_t trial);
Field trial_field(const SweepConfig& cfg, std::size_t trial);

// ---- random building blocks ----

Vector random_vector(Stream& rng, std::size_t dim, Field field);
Vector random_unit(Stream& rng, std::size_t dim, Field field);
Scalar random_scalar(Stream& rng, Field field);
/// k orthonormal vectors (k <= dim) by Gram-Schmidt applied twice to
/// Gaussian vectors.
OrthonormalFamily random_orthonormal_family(Stream& rng, std::size_t dim, std::size_t k,
                                            Field field);
/// k coefficients along a Gaussian direction with length in [0.5, 2].
CoefficientSequence random_coefficients(Stream& rng, std::size_t k, Field field);
/// (gamma, Gamma) whose Re(Gamma conj gamma) has the requested sign.
std::pair<Scalar, Scalar> random_segment_scalars(Stream& rng, Field field, Regime regime);

// ---- instance generators ----

struct DiscInstance {
  Vector x;
  DiscConstraint c;
};

struct SegmentInstance {
  Vector x;
  SegmentConstraint c;
};

struct FamilySegmentInstance {
  Vector x;
  OrthonormalFamily family;
  CoefficientPairSequence pair;
};

struct FamilyDiscInstance {
  Vector x;
  OrthonormalFamily family;
  CoefficientSequence lam;
  double r;
};

/// x = a + rho u with rho <= (1 - slack) r; the requested case is exact.
DiscInstance gen_disc_instance(Stream& rng, std::size_t dim, Field field, DiscCase which,
                               double slack);
/// x = (Gamma + gamma)/2 y + rho u with rho <= (1 - slack) |Gamma - gamma| ||y|| / 2.
/// radius_factor > 1 deliberately leaves the ball (for equivalence sweeps).
SegmentInstance gen_segment_instance(Stream& rng, std::size_t dim, Field field, Regime regime,
                                     double slack, double radius_factor = 1.0);
FamilySegmentInstance gen_family_segment_instance(Stream& rng, std::size_t dim, Field field,
                                                  double slack, double radius_factor = 1.0);
FamilyDiscInstance gen_family_disc_instance(Stream& rng, std::size_t dim, Field field,
                                            double slack);

/// Convenience forms drawing from the stream of (cfg.seed, trial).
DiscInstance gen_disc_instance(const SweepConfig& cfg, DiscCase which, std::size_t trial = 0);
SegmentInstance gen_segment_instance(const SweepConfig& cfg, Regime regime,
                                     std::size_t trial = 0);

// ---- sweeps ----

enum class TargetKind { Inequality, Equivalence, Dominance, Consistency };

struct TargetInfo {
  std::string_view name;
  TargetKind kind;
  std::string_view description;
};

/// Every single sweep target, in a fixed order; the index fixes the RNG stream.
std::span<const TargetInfo> sweep_targets();
/// "all" (every inequality), "equivalence", "dominance", or one target name.
/// UNKNOWN_THEOREM for anything else.
std::vector<TargetInfo> resolve_targets(std::string_view name);

struct TrialOutcome {
  std::size_t trial = 0;
  std::size_t dim = 0;
  Field field = Field::Real;
  std::uint64_t digest = 0;  // FNV-1a over the instance data
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double worst_link_slack = 0.0;
  double scale = 1.0;
  std::optional<double> path_deviation;
  bool admissible = true;  // every hypothesis HOLDS (not merely BOUNDARY)
  bool violated = false;
  bool strict = false;  // dominance targets: strictly better than the baseline
  std::optional<ErrorCode> error;
};

struct SweepSummary {
  std::string target;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t inadmissible = 0;
  std::size_t errors = 0;
  std::size_t strict = 0;
  double max_path_deviation = 0.0;
  double min_scaled_slack = 0.0;  // min over trials of worst_link_slack / scale
  std::optional<std::string> witness;

  bool ok() const noexcept { return violations == 0 && inadmissible == 0 && errors == 0; }
};

/// Evaluate one trial of one target. Pure function of (cfg.seed, target, trial).
TrialOutcome run_trial(const SweepConfig& cfg, const TargetInfo& target, std::size_t trial);

/// Runs every resolved target. When csv is given, one row per trial is written
/// in trial order; the bytes do not depend on cfg.jobs.
std::vector<SweepSummary> run_sweep(const SweepConfig& cfg, std::ostream* csv = nullptr);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, std::string_view target, const TrialOutcome& o);

// ---- sharpness ----

struct SharpnessCurve {
  std::string target;
  std::vector<double> epsilons;
  std::vector<double> ratios;
  std::vector<double> closed_form;
  double limit_claim = 1.0;
  double max_abs_error = 0.0;  // max |ratio - closed form|
  bool monotone = true;        // ratios increase as epsilon decreases
  bool bounded = true;         // every ratio <= 1 + eta
};

/// a = (1, 0), e = (0, 1), r = sqrt(eps), x = a + sqrt(eps) e; ratio = gap / (r^2 ||x||^2)
/// with closed form 1 / (1 + eps). BAD_EPSILON unless every eps is in (0, 1).
SharpnessCurve sharpness_disc(std::span<const double> epsilons, const Tolerance& tol = {});
/// Gamma = 1 + eps, gamma = 1 - eps, y = (1), x = gamma y; ratio = lhs / first bound
/// with closed form 1 - eps^2.
SharpnessCurve sharpness_segment(std::span<const double> epsilons, const Tolerance& tol = {});

// ---- incomparability ----

struct IncomparabilityWitness {
  std::size_t trial;
  FamilySegmentInstance instance;
  double middle_re;     // refined bound using Re<sum Phi e - x, x - sum phi e>
  double middle_coeff;  // refined bound using sum |(Phi + phi)/2 - c|^2
};

struct IncomparabilityResult {
  IncomparabilityWitness re_smaller;
  IncomparabilityWitness coeff_smaller;
};

/// Searches cfg.trials admissible instances for both strict orderings of the
/// two refined Bessel baselines. NOT_FOUND if either ordering is missing.
IncomparabilityResult incomparability_search(const SweepConfig& cfg);

// ---- pointwise positivity ----

/// Re(f conj g) >= 0 at every node forces Re<f,g> >= 0; this finds data
/// where Re<f,g> >= 0 although Re(f conj g) < 0 somewhere.
struct PositivityWitness {
  WeightedMeasure measure;
  SampledFunction f;
  SampledFunction g;
  double re_inner;
  double min_pointwise;
};
PositivityWitness positivity_converse_witness(std::uint64_t seed, std::size_t trials);

}  // namespace ipx
