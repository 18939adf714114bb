#include "ipx/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <ostream>
#include <thread>

#include "ipx/gruss.hpp"
#include "ipx/triangle.hpp"

namespace ipx {

double Stream::normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = rad * std::sin(theta);
  has_spare_ = true;
  return rad * std::cos(theta);
}

std::string_view to_string(FieldChoice f) noexcept {
  switch (f) {
    case FieldChoice::Real: return "real";
    case FieldChoice::Complex: return "complex";
    case FieldChoice::Both: return "both";
  }
  return "?";
}

FieldChoice parse_field_choice(std::string_view s) {
  if (s == "real") return FieldChoice::Real;
  if (s == "complex") return FieldChoice::Complex;
  if (s == "both") return FieldChoice::Both;
  throw Error(ErrorCode::ParseError, "field must be real, complex or both, got '" +
                                         std::string(s) + "'");
}

void SweepConfig::validate() const {
  if (trials == 0) throw Error(ErrorCode::InputMismatch, "sweep needs at least one trial");
  if (dims.empty()) throw Error(ErrorCode::InputMismatch, "sweep needs at least one dimension");
  for (std::size_t d : dims) {
    if (d == 0) throw Error(ErrorCode::InputMismatch, "dimension 0 is not allowed");
  }
  if (!(slack >= 0.0 && slack < 1.0)) {
    throw Error(ErrorCode::InputMismatch, "slack must lie in [0, 1)");
  }
}

std::size_t trial_dim(const SweepConfig& cfg, std::size_t trial) {
  return cfg.dims[trial % cfg.dims.size()];
}

Field trial_field(const SweepConfig& cfg, std::size_t trial) {
  switch (cfg.field) {
    case FieldChoice::Real: return Field::Real;
    case FieldChoice::Complex: return Field::Complex;
    case FieldChoice::Both: break;
  }
  // every dimension is visited in both fields
  return (trial / cfg.dims.size()) % 2 == 0 ? Field::Real : Field::Complex;
}

// ---- random building blocks ----

Vector random_vector(Stream& rng, std::size_t dim, Field field) {
  std::vector<Complex> v(dim);
  for (Complex& z : v) {
    const double re = rng.normal();
    z = field == Field::Real ? Complex(re, 0.0) : Complex(re, rng.normal());
  }
  return {field, std::move(v)};
}

Vector random_unit(Stream& rng, std::size_t dim, Field field) {
  for (;;) {
    Vector v = random_vector(rng, dim, field);
    const double n = norm(v);
    if (n > 1e-6) return Scalar(1.0 / n) * v;
  }
}

Scalar random_scalar(Stream& rng, Field field) {
  if (field == Field::Real) return Scalar(rng.normal());
  return Scalar::complex(rng.normal(), rng.normal());
}

OrthonormalFamily random_orthonormal_family(Stream& rng, std::size_t dim, std::size_t k,
                                            Field field) {
  std::vector<Vector> basis;
  basis.reserve(k);
  while (basis.size() < k) {
    Vector v = random_vector(rng, dim, field);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& e : basis) v -= inner(v, e) * e;
    }
    const double n = norm(v);
    if (n < 1e-3) continue;
    basis.push_back(Scalar(1.0 / n) * v);
  }
  return OrthonormalFamily(std::move(basis));
}

std::pair<Scalar, Scalar> random_segment_scalars(Stream& rng, Field field, Regime regime) {
  if (field == Field::Real) {
    double lo = 0.0, hi = 0.0;
    switch (regime) {
      case Regime::RePos:
        lo = rng.uniform(0.1, 2.0);
        hi = lo + rng.uniform(0.05, 2.0);
        if (rng.uniform() < 0.5) {
          lo = -lo;
          hi = -hi;
        }
        break;
      case Regime::ReZero:
        hi = rng.uniform(0.1, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        break;
      case Regime::ReNeg:
        lo = -rng.uniform(0.1, 2.0);
        hi = rng.uniform(0.1, 2.0);
        break;
    }
    if (rng.uniform() < 0.5) std::swap(lo, hi);
    return {Scalar(lo), Scalar(hi)};
  }
  const double half_pi = 0.5 * std::numbers::pi;
  for (;;) {
    const double rg = rng.uniform(0.2, 2.0);
    const double tg = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Complex g = std::polar(rg, tg);
    Complex G;
    if (regime == Regime::ReZero) {
      const double t = rng.uniform(0.2, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      G = Complex(-t * g.imag(), t * g.real());
    } else {
      const double delta = regime == Regime::RePos ? rng.uniform(-half_pi + 0.1, half_pi - 0.1)
                                                   : rng.uniform(half_pi + 0.1, 3 * half_pi - 0.1);
      G = std::polar(rng.uniform(0.2, 2.0), tg + delta);
    }
    if (std::abs(G - g) >= 0.05 * std::max(std::abs(G), std::abs(g))) {
      return {Scalar(Field::Complex, g), Scalar(Field::Complex, G)};
    }
  }
}

namespace {

Vector scaled_random(Stream& rng, std::size_t dim, Field field) {
  return Scalar(rng.uniform(0.5, 2.0)) * random_unit(rng, dim, field);
}

Vector jitter(Stream& rng, const Vector& center, double radius) {
  return center + Scalar(radius * rng.uniform()) * random_unit(rng, center.dim(), center.field());
}

}  // namespace

// ---- instance generators ----

DiscInstance gen_disc_instance(Stream& rng, std::size_t dim, Field field, DiscCase which,
                               double slack) {
  Vector a = scaled_random(rng, dim, field);
  const double na = norm(a);
  double r = na;
  if (which == DiscCase::NormGtR) r = na * rng.uniform(0.05, 0.95);
  if (which == DiscCase::NormLtR) r = na / rng.uniform(0.05, 0.95);
  Vector x = jitter(rng, a, (1.0 - slack) * r);
  return {std::move(x), DiscConstraint(std::move(a), r)};
}

SegmentInstance gen_segment_instance(Stream& rng, std::size_t dim, Field field, Regime regime,
                                     double slack, double radius_factor) {
  auto [gamma, Gamma] = random_segment_scalars(rng, field, regime);
  Vector y = scaled_random(rng, dim, field);
  SegmentConstraint c(gamma, Gamma, std::move(y));
  const double radius = radius_factor == 1.0 ? (1.0 - slack) * c.radius() : radius_factor * c.radius();
  Vector x = jitter(rng, c.midpoint() * c.y, radius);
  return {std::move(x), std::move(c)};
}

FamilySegmentInstance gen_family_segment_instance(Stream& rng, std::size_t dim, Field field,
                                                  double slack, double radius_factor) {
  const std::size_t k = static_cast<std::size_t>(rng.integer(1, dim));
  OrthonormalFamily family = random_orthonormal_family(rng, dim, k, field);
  std::vector<Complex> lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto [g, G] = random_segment_scalars(rng, field, Regime::RePos);
    lo[i] = g.value();
    hi[i] = G.value();
  }
  CoefficientPairSequence pair(CoefficientSequence(field, std::move(lo)),
                               CoefficientSequence(field, std::move(hi)));
  const double radius0 = 0.5 * std::sqrt(pair.spread_sq());
  const double radius = radius_factor == 1.0 ? (1.0 - slack) * radius0 : radius_factor * radius0;
  Vector x = jitter(rng, synthesize(family, pair.midpoint()), radius);
  return {std::move(x), std::move(family), std::move(pair)};
}

// Gaussian direction, length in [0.5, 2]; a length near 0 would let the
// absolute tolerance floor swallow sum |lam|^2 - r^2.
CoefficientSequence random_coefficients(Stream& rng, std::size_t k, Field field) {
  std::vector<Complex> lam(k);
  for (Complex& l : lam) l = random_scalar(rng, field).value();
  double len = 0.0;
  for (const Complex& l : lam) len += std::norm(l);
  len = std::sqrt(len);
  const double target = rng.uniform(0.5, 2.0);
  for (Complex& l : lam) l = len > 0.0 ? l * (target / len) : Complex(target, 0.0);
  return {field, std::move(lam)};
}

FamilyDiscInstance gen_family_disc_instance(Stream& rng, std::size_t dim, Field field,
                                            double slack) {
  const std::size_t k = static_cast<std::size_t>(rng.integer(1, dim));
  OrthonormalFamily family = random_orthonormal_family(rng, dim, k, field);
  CoefficientSequence seq = random_coefficients(rng, k, field);
  const double r = std::sqrt(seq.norm_sq()) * rng.uniform(0.05, 0.95);
  Vector x = jitter(rng, synthesize(family, seq), (1.0 - slack) * r);
  return {std::move(x), std::move(family), std::move(seq), r};
}

namespace {

constexpr std::uint64_t kIncomparabilityStream = 200;
constexpr std::uint64_t kPositivityStream = 201;

std::uint64_t stream_id(std::uint64_t target_index, std::size_t trial) {
  return (target_index << 40) | static_cast<std::uint64_t>(trial);
}

}  // namespace

DiscInstance gen_disc_instance(const SweepConfig& cfg, DiscCase which, std::size_t trial) {
  Stream rng(cfg.seed, stream_id(1, trial));
  return gen_disc_instance(rng, trial_dim(cfg, trial), trial_field(cfg, trial), which, cfg.slack);
}

SegmentInstance gen_segment_instance(const SweepConfig& cfg, Regime regime, std::size_t trial) {
  Stream rng(cfg.seed, stream_id(4, trial));
  return gen_segment_instance(rng, trial_dim(cfg, trial), trial_field(cfg, trial), regime,
                              cfg.slack);
}

// ---- sweeps ----

namespace {

constexpr TargetInfo kTargets[] = {
    {"schwarz-disc-outside", TargetKind::Inequality, "ball hypothesis, ||a|| > r"},
    {"schwarz-disc-boundary", TargetKind::Inequality, "ball hypothesis, ||a|| = r"},
    {"schwarz-disc-inside", TargetKind::Inequality, "ball hypothesis, ||a|| < r"},
    {"schwarz-segment-pos", TargetKind::Inequality, "segment hypothesis, Re(Gamma conj gamma) > 0"},
    {"schwarz-segment-zero", TargetKind::Inequality, "segment hypothesis, Re(Gamma conj gamma) = 0"},
    {"schwarz-segment-neg", TargetKind::Inequality, "segment hypothesis, Re(Gamma conj gamma) < 0"},
    {"schwarz-additive", TargetKind::Inequality, "additive segment bound"},
    {"triangle-disc", TargetKind::Inequality, "reverse triangle, ball hypothesis"},
    {"triangle-segment", TargetKind::Inequality, "reverse triangle, interval hypothesis"},
    {"gruss-disc", TargetKind::Inequality, "Gruss functional, ball hypotheses"},
    {"gruss-segment", TargetKind::Inequality, "Gruss functional, segment hypotheses"},
    {"bessel-disc", TargetKind::Inequality, "reverse Bessel chain, ball hypothesis"},
    {"bessel-disc-defect", TargetKind::Inequality, "Bessel defect, ball hypothesis"},
    {"bessel-segment", TargetKind::Inequality, "reverse Bessel chain, segment hypothesis"},
    {"bessel-segment-defect", TargetKind::Inequality, "Bessel defect, segment hypothesis"},
    {"gruss-family-disc", TargetKind::Inequality, "family Gruss functional, ball hypotheses"},
    {"gruss-family-segment", TargetKind::Inequality, "family Gruss functional, segment hypotheses"},
    {"baseline-gap", TargetKind::Inequality, "Schwarz gap <= |Gamma-gamma|^2 ||y||^4 / 4"},
    {"baseline-ratio", TargetKind::Inequality, "ratio bound with (|Gamma|+|gamma|)^2"},
    {"baseline-additive", TargetKind::Inequality, "additive bound with moduli"},
    {"baseline-refined", TargetKind::Inequality, "refined Schwarz gap bound"},
    {"bessel-baseline-re", TargetKind::Inequality, "refined Bessel bound, Re form"},
    {"bessel-baseline-coeff", TargetKind::Inequality, "refined Bessel bound, coefficient form"},
    {"bessel-baseline-ratio", TargetKind::Inequality, "Bessel ratio bound with moduli"},
    {"bessel-baseline-additive", TargetKind::Inequality, "Bessel additive bound with moduli"},
    {"equivalence-segment", TargetKind::Equivalence, "Re form vs norm form of the segment condition"},
    {"equivalence-family", TargetKind::Equivalence, "Re form vs norm form of the family condition"},
    {"dominance-additive", TargetKind::Dominance, "additive segment bound vs moduli baseline"},
    {"dominance-ratio", TargetKind::Dominance, "segment ratio bound vs moduli baseline"},
    {"integral-consistency", TargetKind::Consistency, "integral bounds vs mapped discrete bounds"},
};

std::size_t target_index(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kTargets); ++i) {
    if (kTargets[i].name == name) return i;
  }
  throw Error(ErrorCode::UnknownTheorem, "unknown sweep target '" + std::string(name) + "'");
}

// FNV-1a over the little-endian bytes of every number of the instance.
class Fingerprint {
 public:
  void add(double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h_ ^= (bits >> (8 * i)) & 0xffu;
      h_ *= 1099511628211ull;
    }
  }
  void add(Complex z) {
    add(z.real());
    add(z.imag());
  }
  void add(Scalar s) { add(s.value()); }
  void add(const Vector& v) {
    for (const Complex& z : v.coords()) add(z);
  }
  void add(const CoefficientSequence& c) {
    for (const Complex& z : c.values()) add(z);
  }
  void add(const OrthonormalFamily& f) {
    for (const Vector& e : f.members()) add(e);
  }
  void add(const SegmentConstraint& c) {
    add(c.gamma);
    add(c.Gamma);
    add(c.y);
  }
  void add(const DiscConstraint& c) {
    add(c.center);
    add(c.radius);
  }
  void add(const FamilySegmentInstance& in) {
    add(in.x);
    add(in.family);
    add(in.pair.lower);
    add(in.pair.upper);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 14695981039346656037ull;
};

bool all_hold(const std::vector<HypothesisStatus>& hyps) {
  return std::all_of(hyps.begin(), hyps.end(),
                     [](const HypothesisStatus& h) { return h.verdict == Verdict::Holds; });
}

void fill(TrialOutcome& o, const BoundReport& r, const Tolerance& tol) {
  o.lhs = r.lhs;
  o.rhs = r.rhs;
  o.slack = r.slack;
  o.worst_link_slack = r.worst_link_slack();
  o.scale = r.scale;
  o.path_deviation = r.path_deviation;
  o.admissible = all_hold(r.hypothesis);
  o.violated = !r.holds(tol);
}

const BoundReport& pick(const std::vector<BaselineOutcome>& all, std::string_view id) {
  for (const BaselineOutcome& b : all) {
    if (b.theorem_id == id) {
      if (!b.report) throw Error(*b.error, "baseline " + std::string(id) + " not available");
      return *b.report;
    }
  }
  throw Error(ErrorCode::NotFound, "baseline " + std::string(id) + " missing");
}

Regime any_regime(Stream& rng) {
  const auto k = rng.integer(0, 2);
  return k == 0 ? Regime::RePos : (k == 1 ? Regime::ReZero : Regime::ReNeg);
}

void eval_inequality(std::size_t index, Stream& rng, TrialOutcome& o, const SweepConfig& cfg) {
  EvalOptions opts{cfg.tol, true};
  Fingerprint fp;
  const std::size_t dim = o.dim;
  const Field field = o.field;
  const double s = cfg.slack;
  const std::string_view name = kTargets[index].name;

  auto disc = [&](DiscCase which) {
    DiscInstance in = gen_disc_instance(rng, dim, field, which, s);
    fp.add(in.x);
    fp.add(in.c);
    return in;
  };
  auto segment = [&](Regime regime) {
    SegmentInstance in = gen_segment_instance(rng, dim, field, regime, s);
    fp.add(in.x);
    fp.add(in.c);
    return in;
  };
  auto family_segment = [&] {
    FamilySegmentInstance in = gen_family_segment_instance(rng, dim, field, s);
    fp.add(in);
    return in;
  };
  auto family_disc = [&] {
    FamilyDiscInstance in = gen_family_disc_instance(rng, dim, field, s);
    fp.add(in.x);
    fp.add(in.family);
    fp.add(in.lam);
    fp.add(in.r);
    return in;
  };

  if (name == "schwarz-disc-outside" || name == "schwarz-disc-boundary" ||
      name == "schwarz-disc-inside") {
    const DiscCase which = name == "schwarz-disc-outside"    ? DiscCase::NormGtR
                           : name == "schwarz-disc-boundary" ? DiscCase::NormEqR
                                                             : DiscCase::NormLtR;
    auto in = disc(which);
    fill(o, reverse_schwarz_disc(in.x, in.c, opts), cfg.tol);
  } else if (name == "schwarz-segment-pos" || name == "schwarz-segment-zero" ||
             name == "schwarz-segment-neg") {
    const Regime regime = name == "schwarz-segment-pos"    ? Regime::RePos
                          : name == "schwarz-segment-zero" ? Regime::ReZero
                                                           : Regime::ReNeg;
    auto in = segment(regime);
    fill(o, reverse_schwarz_segment(in.x, in.c, opts), cfg.tol);
  } else if (name == "schwarz-additive") {
    auto in = segment(Regime::RePos);
    fill(o, additive_reverse_segment(in.x, in.c, opts), cfg.tol);
  } else if (name == "triangle-disc") {
    auto in = disc(DiscCase::NormGtR);
    fill(o, reverse_triangle_disc(in.x, in.c, opts), cfg.tol);
  } else if (name == "triangle-segment") {
    const double m = rng.uniform(0.1, 2.0);
    const double M = m + rng.uniform(0.05, 2.0);
    Vector y = scaled_random(rng, dim, field);
    const SegmentConstraint c(Scalar(m), Scalar(M), y);
    Vector x = jitter(rng, c.midpoint() * y, (1.0 - s) * c.radius());
    fp.add(x);
    fp.add(c);
    fill(o, reverse_triangle_segment(x, y, m, M, opts), cfg.tol);
  } else if (name == "gruss-disc") {
    Vector e = random_unit(rng, dim, field);
    const double r1 = rng.uniform(0.05, 0.95);
    const double r2 = rng.uniform(0.05, 0.95);
    Vector x = jitter(rng, e, (1.0 - s) * r1);
    Vector y = jitter(rng, e, (1.0 - s) * r2);
    fp.add(x);
    fp.add(y);
    fp.add(e);
    fp.add(r1);
    fp.add(r2);
    fill(o, gruss_disc(x, y, e, r1, r2, opts), cfg.tol);
  } else if (name == "gruss-segment") {
    Vector e = random_unit(rng, dim, field);
    auto [a, A] = random_segment_scalars(rng, field, Regime::RePos);
    auto [b, B] = random_segment_scalars(rng, field, Regime::RePos);
    const SegmentConstraint cx(a, A, e);
    const SegmentConstraint cy(b, B, e);
    Vector x = jitter(rng, cx.midpoint() * e, (1.0 - s) * cx.radius());
    Vector y = jitter(rng, cy.midpoint() * e, (1.0 - s) * cy.radius());
    fp.add(x);
    fp.add(y);
    fp.add(cx);
    fp.add(cy);
    fill(o, gruss_segment(x, y, e, a, A, b, B, opts), cfg.tol);
  } else if (name == "bessel-disc" || name == "bessel-disc-defect") {
    auto in = family_disc();
    const BoundReport r = reverse_bessel_disc(in.x, in.family, in.lam, in.r, opts);
    fill(o, name == "bessel-disc" ? r : r.companions.at(0), cfg.tol);
    o.admissible = all_hold(r.hypothesis);
  } else if (name == "bessel-segment" || name == "bessel-segment-defect") {
    auto in = family_segment();
    const BoundReport r = reverse_bessel_segment(in.x, in.family, in.pair, opts);
    fill(o, name == "bessel-segment" ? r : r.companions.at(0), cfg.tol);
    o.admissible = all_hold(r.hypothesis);
  } else if (name == "gruss-family-disc") {
    auto ix = family_disc();
    // y shares the family but gets its own coefficients and radius
    CoefficientSequence museq = random_coefficients(rng, ix.family.size(), field);
    const double r2 = std::sqrt(museq.norm_sq()) * rng.uniform(0.05, 0.95);
    Vector y = jitter(rng, synthesize(ix.family, museq), (1.0 - s) * r2);
    fp.add(y);
    fp.add(museq);
    fp.add(r2);
    fill(o, gruss_family_disc(ix.x, y, ix.family, ix.lam, museq, ix.r, r2, opts), cfg.tol);
  } else if (name == "gruss-family-segment") {
    auto ix = family_segment();
    std::vector<Complex> lo(ix.family.size()), hi(ix.family.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      auto [g, G] = random_segment_scalars(rng, field, Regime::RePos);
      lo[i] = g.value();
      hi[i] = G.value();
    }
    CoefficientPairSequence py(CoefficientSequence(field, std::move(lo)),
                               CoefficientSequence(field, std::move(hi)));
    Vector y = jitter(rng, synthesize(ix.family, py.midpoint()),
                      (1.0 - s) * 0.5 * std::sqrt(py.spread_sq()));
    fp.add(y);
    fp.add(py.lower);
    fp.add(py.upper);
    fill(o, gruss_family_segment(ix.x, y, ix.family, ix.pair, py, opts), cfg.tol);
  } else if (name.starts_with("baseline-")) {
    const bool needs_pos = name == "baseline-ratio" || name == "baseline-additive";
    auto in = segment(needs_pos ? Regime::RePos : any_regime(rng));
    const auto all = baseline_bounds(in.x, in.c, opts);
    const char* id = name == "baseline-gap"     ? baseline::kGapQuarter
                     : name == "baseline-ratio" ? baseline::kRatioHalf
                     : name == "baseline-additive" ? baseline::kAdditiveModulus
                                                   : baseline::kGapRefined;
    fill(o, pick(all, id), cfg.tol);
  } else {
    auto in = family_segment();
    const auto all = baseline_bessel(in.x, in.family, in.pair, opts);
    const char* id = name == "bessel-baseline-re"      ? bessel_baseline::kRefinedRe
                     : name == "bessel-baseline-coeff" ? bessel_baseline::kRefinedCoeff
                     : name == "bessel-baseline-ratio" ? bessel_baseline::kRatioModulus
                                                       : bessel_baseline::kAdditiveModulus;
    fill(o, pick(all, id), cfg.tol);
  }
  o.digest = fp.value();
}

void eval_equivalence(std::size_t index, Stream& rng, TrialOutcome& o, const SweepConfig& cfg) {
  Fingerprint fp;
  const double factor = rng.uniform(0.0, 2.0);
  HypothesisStatus re, nm;
  if (kTargets[index].name == "equivalence-segment") {
    SegmentInstance in =
        gen_segment_instance(rng, o.dim, o.field, any_regime(rng), cfg.slack, factor);
    fp.add(in.x);
    fp.add(in.c);
    re = check_segment_re(in.x, in.c, cfg.tol);
    nm = check_segment_norm(in.x, in.c, cfg.tol);
  } else {
    FamilySegmentInstance in = gen_family_segment_instance(rng, o.dim, o.field, cfg.slack, factor);
    fp.add(in);
    re = check_family_segment_re(in.x, in.family, in.pair, cfg.tol);
    nm = check_family_segment_norm(in.x, in.family, in.pair, cfg.tol);
  }
  o.digest = fp.value();
  o.lhs = re.margin;
  o.rhs = nm.margin;
  o.slack = nm.margin - re.margin;
  o.worst_link_slack = o.slack;
  o.scale = std::max(re.scale, nm.scale);
  const bool decided = re.verdict != Verdict::Boundary && nm.verdict != Verdict::Boundary;
  o.violated = decided && re.verdict != nm.verdict;
}

void eval_dominance(std::size_t index, Stream& rng, TrialOutcome& o, const SweepConfig& cfg) {
  EvalOptions opts{cfg.tol, true};
  SegmentInstance in = gen_segment_instance(rng, o.dim, o.field, Regime::RePos, cfg.slack);
  Fingerprint fp;
  fp.add(in.x);
  fp.add(in.c);
  o.digest = fp.value();
  const auto base = baseline_bounds(in.x, in.c, opts);
  double claimed = 0.0, baseline_rhs = 0.0;
  if (kTargets[index].name == "dominance-additive") {
    claimed = additive_reverse_segment(in.x, in.c, opts).rhs;
    baseline_rhs = pick(base, baseline::kAdditiveModulus).rhs;
  } else {
    claimed = reverse_schwarz_segment(in.x, in.c, opts).rhs;
    baseline_rhs = pick(base, baseline::kRatioHalf).rhs;
  }
  o.lhs = claimed;
  o.rhs = baseline_rhs;
  o.slack = baseline_rhs - claimed;
  o.worst_link_slack = o.slack;
  o.scale = std::max({1.0, std::abs(claimed), std::abs(baseline_rhs)});
  o.violated = o.slack < -cfg.tol.band(o.scale);
  o.strict = o.slack > cfg.tol.band(o.scale);
}

double max_gap(std::initializer_list<std::pair<double, double>> pairs) {
  double dev = 0.0;
  for (const auto& [a, b] : pairs) dev = std::max(dev, relative_gap(a, b));
  return dev;
}

SampledFunction random_nodes(Stream& rng, std::size_t n, Field field, double lo, double hi) {
  SampledFunction f;
  f.field = field;
  for (std::size_t k = 0; k < n; ++k) {
    const double mod = rng.uniform(lo, hi);
    if (field == Field::Real) {
      f.values.emplace_back(rng.uniform() < 0.5 ? -mod : mod, 0.0);
    } else {
      f.values.push_back(std::polar(mod, rng.uniform(0.0, 2.0 * std::numbers::pi)));
    }
  }
  return f;
}

// f_k = c g_k + rho_k u_k with |u_k| = 1, rho_k <= radius_k.
SampledFunction pointwise_jitter(Stream& rng, const SampledFunction& g, Complex c,
                                 const std::vector<double>& radius) {
  SampledFunction f = g;
  for (std::size_t k = 0; k < g.size(); ++k) {
    Complex u = g.field == Field::Real
                    ? Complex(rng.uniform() < 0.5 ? -1.0 : 1.0, 0.0)
                    : std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    f.values[k] = c * g.values[k] + radius[k] * rng.uniform() * u;
  }
  return f;
}

void eval_consistency(Stream& rng, TrialOutcome& o, const SweepConfig& cfg) {
  EvalOptions opts{cfg.tol, true};
  Fingerprint fp;
  const Field field = o.field;
  const double s = cfg.slack;
  const std::size_t n = o.dim + static_cast<std::size_t>(rng.integer(0, 4));
  const double lo = rng.uniform(-2.0, 2.0);
  const double hi = lo + rng.uniform(0.1, 3.0);
  const double c0 = rng.uniform(0.1, 1.0), c1 = rng.uniform(0.0, 1.0), c2 = rng.uniform(0.0, 1.0);
  const QuadratureRule rule =
      rng.uniform() < 0.5 ? QuadratureRule::GaussLegendre : QuadratureRule::UniformMidpoint;
  const WeightedMeasure m = make_measure(rule, lo, hi, n, [&](double t) {
    const double u = (t - lo) / (hi - lo);
    return c0 + c1 * u + c2 * u * u;
  });
  for (std::size_t k = 0; k < n; ++k) {
    fp.add(m.nodes()[k]);
    fp.add(m.weights()[k]);
    fp.add(m.density()[k]);
  }
  double dev = 0.0;
  bool admissible = true;
  auto absorb = [&](const SampledFunction& f) {
    for (const Complex& z : f.values) fp.add(z);
  };

  {  // ball hypothesis
    const double r = rng.uniform(0.2, 1.0);
    const SampledFunction g = random_nodes(rng, n, field, 1.2 * r, 3.0 * r);
    const SampledFunction f = pointwise_jitter(rng, g, 1.0, std::vector<double>(n, (1.0 - s) * r));
    absorb(f);
    absorb(g);
    const BoundReport ir = integral_reverse_schwarz_disc(f, g, r, m, opts);
    const Vector vf = to_vector(f, m), vg = to_vector(g, m);
    const BoundReport dr = reverse_schwarz_disc(vf, DiscConstraint(vg, r), opts);
    admissible = admissible && all_hold(ir.hypothesis);
    dev = std::max(dev, max_gap({{ir.lhs, dr.lhs},
                                 {ir.intermediate[0].value, dr.intermediate[0].value},
                                 {ir.companions[0].rhs, dr.rhs},
                                 {ir.rhs, r * r * norm_sq(vg)}}));
  }
  {  // segment hypothesis
    auto [gamma, Gamma] = random_segment_scalars(rng, field, Regime::RePos);
    const SampledFunction g = random_nodes(rng, n, field, 0.2, 2.0);
    std::vector<double> radius(n);
    for (std::size_t k = 0; k < n; ++k) {
      radius[k] = (1.0 - s) * 0.5 * (Gamma - gamma).abs() * std::abs(g.values[k]);
    }
    const SampledFunction f = pointwise_jitter(rng, g, (0.5 * (Gamma + gamma)).value(), radius);
    absorb(f);
    absorb(g);
    fp.add(gamma);
    fp.add(Gamma);
    const BoundReport ir = integral_reverse_schwarz_segment(f, g, gamma, Gamma, m, opts);
    const Vector vf = to_vector(f, m), vg = to_vector(g, m);
    const SegmentConstraint c(gamma, Gamma, vg);
    const BoundReport dr = reverse_schwarz_segment(vf, c, opts);
    const BoundReport da = additive_reverse_segment(vf, c, opts);
    admissible = admissible && all_hold(ir.hypothesis);
    dev = std::max(dev, max_gap({{ir.lhs, dr.lhs},
                                 {ir.intermediate[0].value, dr.intermediate[0].value},
                                 {ir.rhs, dr.rhs},
                                 {ir.companions[0].lhs, da.lhs},
                                 {ir.companions[0].rhs, da.rhs}}));
  }
  {  // sandwich, real data
    const double mlo = rng.uniform(0.1, 2.0);
    const double Mhi = mlo + rng.uniform(0.05, 2.0);
    SampledFunction g = random_nodes(rng, n, Field::Real, 0.2, 2.0);
    for (Complex& z : g.values) z = std::abs(z);
    SampledFunction f = g;
    for (Complex& z : f.values) z *= rng.uniform(mlo, Mhi);
    absorb(f);
    absorb(g);
    const BoundReport ir = cassel(f, g, mlo, Mhi, m, opts);
    const Vector vf = to_vector(f, m), vg = to_vector(g, m);
    const SegmentConstraint c(Scalar(mlo), Scalar(Mhi), vg);
    const BoundReport dr = reverse_schwarz_segment(vf, c, opts);
    const BoundReport da = additive_reverse_segment(vf, c, opts);
    admissible = admissible && all_hold(ir.hypothesis);
    dev = std::max(dev, max_gap({{ir.lhs, dr.lhs},
                                 {ir.rhs, dr.rhs},
                                 {ir.companions[0].lhs, da.lhs},
                                 {ir.companions[0].rhs, da.rhs}}));
    dev = std::max(dev, ir.path_deviation.value_or(0.0));
  }
  {  // Gruss functional
    SampledFunction h = random_nodes(rng, n, field, 0.2, 2.0);
    const double nh = std::sqrt(weighted_norm_sq(h, m));
    for (Complex& z : h.values) z /= nh;
    auto [a, A] = random_segment_scalars(rng, field, Regime::RePos);
    auto [b, B] = random_segment_scalars(rng, field, Regime::RePos);
    std::vector<double> ra(n), rb(n);
    for (std::size_t k = 0; k < n; ++k) {
      ra[k] = (1.0 - s) * 0.5 * (A - a).abs() * std::abs(h.values[k]);
      rb[k] = (1.0 - s) * 0.5 * (B - b).abs() * std::abs(h.values[k]);
    }
    const SampledFunction f = pointwise_jitter(rng, h, (0.5 * (A + a)).value(), ra);
    const SampledFunction g = pointwise_jitter(rng, h, (0.5 * (B + b)).value(), rb);
    absorb(f);
    absorb(g);
    absorb(h);
    const BoundReport ir = integral_gruss(f, g, h, a, A, b, B, m, opts);
    const BoundReport dr =
        gruss_segment(to_vector(f, m), to_vector(g, m), to_vector(h, m), a, A, b, B, opts);
    admissible = admissible && all_hold(ir.hypothesis);
    dev = std::max(dev, max_gap({{ir.lhs, dr.lhs}, {ir.rhs, dr.rhs}}));
  }
  o.digest = fp.value();
  o.path_deviation = dev;
  o.lhs = 0.0;
  o.rhs = 0.0;
  o.admissible = admissible;
  o.violated = dev > 1e-12;
}

}  // namespace

std::span<const TargetInfo> sweep_targets() { return kTargets; }

std::vector<TargetInfo> resolve_targets(std::string_view name) {
  std::vector<TargetInfo> out;
  auto by_kind = [&](TargetKind kind) {
    for (const TargetInfo& t : kTargets) {
      if (t.kind == kind) out.push_back(t);
    }
  };
  if (name == "all") {
    by_kind(TargetKind::Inequality);
  } else if (name == "equivalence") {
    by_kind(TargetKind::Equivalence);
  } else if (name == "dominance") {
    by_kind(TargetKind::Dominance);
  } else {
    out.push_back(kTargets[target_index(name)]);
  }
  return out;
}

TrialOutcome run_trial(const SweepConfig& cfg, const TargetInfo& target, std::size_t trial) {
  const std::size_t index = target_index(target.name);
  Stream rng(cfg.seed, stream_id(index + 1, trial));
  TrialOutcome o;
  o.trial = trial;
  o.dim = trial_dim(cfg, trial);
  o.field = trial_field(cfg, trial);
  try {
    switch (target.kind) {
      case TargetKind::Inequality: eval_inequality(index, rng, o, cfg); break;
      case TargetKind::Equivalence: eval_equivalence(index, rng, o, cfg); break;
      case TargetKind::Dominance: eval_dominance(index, rng, o, cfg); break;
      case TargetKind::Consistency: eval_consistency(rng, o, cfg); break;
    }
  } catch (const Error& e) {
    o.error = e.code();
    o.violated = true;
    o.admissible = false;
  }
  return o;
}

void write_csv_header(std::ostream& out) {
  out << "target,trial,dim,field,digest,lhs,rhs,slack,worst_link_slack,path_deviation,"
         "admissible,violated,error\n";
}

void write_csv_row(std::ostream& out, std::string_view target, const TrialOutcome& o) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "{},{},{},{},{:016x},{:.17g},{:.17g},{:.17g},{:.17g},",
                 target, o.trial, o.dim, o.field == Field::Real ? "real" : "complex", o.digest,
                 o.lhs, o.rhs, o.slack, o.worst_link_slack);
  if (o.path_deviation) fmt::format_to(std::back_inserter(buf), "{:.17g}", *o.path_deviation);
  fmt::format_to(std::back_inserter(buf), ",{},{},{}\n", o.admissible ? 1 : 0, o.violated ? 1 : 0,
                 o.error ? to_string(*o.error) : std::string_view{});
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::vector<SweepSummary> run_sweep(const SweepConfig& cfg, std::ostream* csv) {
  cfg.validate();
  const std::vector<TargetInfo> targets = resolve_targets(cfg.target);
  const unsigned jobs = std::max(1u, cfg.jobs);
  constexpr std::size_t kChunk = 8192;

  if (csv) write_csv_header(*csv);
  std::vector<SweepSummary> summaries;
  std::vector<TrialOutcome> outcomes;
  for (const TargetInfo& target : targets) {
    SweepSummary sum;
    sum.target = std::string(target.name);
    sum.min_scaled_slack = std::numeric_limits<double>::infinity();
    for (std::size_t begin = 0; begin < cfg.trials; begin += kChunk) {
      const std::size_t count = std::min(kChunk, cfg.trials - begin);
      outcomes.assign(count, TrialOutcome{});
      auto work = [&](unsigned lane) {
        for (std::size_t i = lane; i < count; i += jobs) {
          outcomes[i] = run_trial(cfg, target, begin + i);
        }
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
      }
      for (const TrialOutcome& o : outcomes) {
        ++sum.trials;
        if (o.error) ++sum.errors;
        if (o.violated) ++sum.violations;
        if (!o.admissible) ++sum.inadmissible;
        if (o.strict) {
          ++sum.strict;
          if (!sum.witness && o.field == Field::Complex) {
            sum.witness = fmt::format("trial {} digest {:016x}", o.trial, o.digest);
          }
        }
        if (o.path_deviation) sum.max_path_deviation = std::max(sum.max_path_deviation, *o.path_deviation);
        if (!o.error) sum.min_scaled_slack = std::min(sum.min_scaled_slack, o.worst_link_slack / o.scale);
        if (csv) write_csv_row(*csv, target.name, o);
      }
    }
    summaries.push_back(std::move(sum));
  }
  return summaries;
}

// ---- sharpness ----

namespace {

void require_epsilons(std::span<const double> epsilons, const char* who) {
  for (double e : epsilons) {
    if (!(e > 0.0 && e < 1.0)) {
      throw Error(ErrorCode::BadEpsilon,
                  std::string(who) + ": epsilon must lie in (0, 1), got " + std::to_string(e));
    }
  }
}

void finish_curve(SharpnessCurve& c, const Tolerance& tol) {
  for (std::size_t i = 0; i < c.ratios.size(); ++i) {
    c.max_abs_error = std::max(c.max_abs_error, std::abs(c.ratios[i] - c.closed_form[i]));
    c.bounded = c.bounded && c.ratios[i] <= 1.0 + tol.eta;
    for (std::size_t j = 0; j < c.ratios.size(); ++j) {
      if (c.epsilons[j] < c.epsilons[i] && c.ratios[j] < c.ratios[i]) c.monotone = false;
    }
  }
}

}  // namespace

SharpnessCurve sharpness_disc(std::span<const double> epsilons, const Tolerance& tol) {
  require_epsilons(epsilons, "sharpness_disc");
  SharpnessCurve c;
  c.target = "schwarz-disc";
  const Vector a = Vector::real({1.0, 0.0});
  const Vector e = Vector::real({0.0, 1.0});
  for (double eps : epsilons) {
    const double r = std::sqrt(eps);
    const Vector x = a + Scalar(r) * e;
    const BoundReport rep = reverse_schwarz_disc(x, DiscConstraint(a, r), {tol, false});
    c.epsilons.push_back(eps);
    c.ratios.push_back(rep.lhs / rep.rhs);
    c.closed_form.push_back(1.0 / (1.0 + eps));
  }
  finish_curve(c, tol);
  return c;
}

SharpnessCurve sharpness_segment(std::span<const double> epsilons, const Tolerance& tol) {
  require_epsilons(epsilons, "sharpness_segment");
  SharpnessCurve c;
  c.target = "schwarz-segment";
  const Vector y = Vector::real({1.0});
  for (double eps : epsilons) {
    const double gamma = 1.0 - eps;
    const double Gamma = 1.0 + eps;
    const Vector x = Scalar(gamma) * y;
    const BoundReport rep =
        reverse_schwarz_segment(x, SegmentConstraint(gamma, Gamma, y), {tol, false});
    c.epsilons.push_back(eps);
    c.ratios.push_back(rep.lhs / rep.intermediate.at(0).value);
    c.closed_form.push_back(1.0 - eps * eps);
  }
  finish_curve(c, tol);
  return c;
}

// ---- incomparability ----

IncomparabilityResult incomparability_search(const SweepConfig& cfg) {
  std::optional<IncomparabilityWitness> re_smaller, coeff_smaller;
  const EvalOptions opts{cfg.tol, false};
  for (std::size_t trial = 0; trial < cfg.trials && !(re_smaller && coeff_smaller); ++trial) {
    Stream rng(cfg.seed, stream_id(kIncomparabilityStream, trial));
    FamilySegmentInstance in = gen_family_segment_instance(rng, trial_dim(cfg, trial),
                                                           trial_field(cfg, trial), cfg.slack);
    const auto all = baseline_bessel(in.x, in.family, in.pair, opts);
    const BoundReport& bre = pick(all, bessel_baseline::kRefinedRe);
    const BoundReport& bco = pick(all, bessel_baseline::kRefinedCoeff);
    const double mre = bre.intermediate.at(0).value;
    const double mco = bco.intermediate.at(0).value;
    const double band = cfg.tol.band(std::max(bre.scale, bco.scale));
    if (mre < mco - band && !re_smaller) {
      re_smaller = IncomparabilityWitness{trial, in, mre, mco};
    } else if (mco < mre - band && !coeff_smaller) {
      coeff_smaller = IncomparabilityWitness{trial, in, mre, mco};
    }
  }
  if (!re_smaller || !coeff_smaller) {
    throw Error(ErrorCode::NotFound,
                fmt::format("incomparability_search: {} ordering(s) missing after {} trials",
                            (re_smaller ? 0 : 1) + (coeff_smaller ? 0 : 1), cfg.trials));
  }
  return {std::move(*re_smaller), std::move(*coeff_smaller)};
}

PositivityWitness positivity_converse_witness(std::uint64_t seed, std::size_t trials) {
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Stream rng(seed, stream_id(kPositivityStream, trial));
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 6));
    WeightedMeasure m = make_measure(QuadratureRule::UniformMidpoint, 0.0, 1.0, n);
    SampledFunction f, g;
    for (std::size_t k = 0; k < n; ++k) {
      f.values.emplace_back(rng.uniform(-1.0, 1.0), 0.0);
      g.values.emplace_back(rng.uniform(-1.0, 1.0), 0.0);
    }
    const double re = weighted_inner(f, g, m).re();
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      worst = std::min(worst, (f.values[k] * std::conj(g.values[k])).real());
    }
    if (re >= 0.0 && worst < 0.0) return {std::move(m), std::move(f), std::move(g), re, worst};
  }
  throw Error(ErrorCode::NotFound, "positivity_converse_witness: none found");
}

}  // namespace ipx
