#include "ipx/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ipx {

CoefficientSequence::CoefficientSequence(Field field, std::vector<Complex> values)
    : field_(field), values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::InputMismatch, "empty coefficient sequence");
  if (field_ == Field::Real) {
    for (const Complex& v : values_) {
      if (v.imag() != 0.0) {
        throw Error(ErrorCode::InputMismatch, "REAL coefficient sequence with imaginary part");
      }
    }
  }
}

CoefficientSequence CoefficientSequence::real(std::initializer_list<double> values) {
  std::vector<Complex> v;
  v.reserve(values.size());
  for (double d : values) v.emplace_back(d, 0.0);
  return {Field::Real, std::move(v)};
}

CoefficientSequence CoefficientSequence::complex(std::initializer_list<Complex> values) {
  return {Field::Complex, std::vector<Complex>(values)};
}

CoefficientSequence CoefficientSequence::constant(Field field, std::size_t n, Complex value) {
  return {field, std::vector<Complex>(n, value)};
}

double CoefficientSequence::norm_sq() const {
  double s = 0.0;
  for (const Complex& v : values_) s += std::norm(v);
  return s;
}

CoefficientPairSequence::CoefficientPairSequence(CoefficientSequence lo, CoefficientSequence hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) {
    throw Error(ErrorCode::InputMismatch, "coefficient pair lengths differ: " +
                                              std::to_string(lower.size()) + " vs " +
                                              std::to_string(upper.size()));
  }
}

CoefficientSequence CoefficientPairSequence::midpoint() const {
  std::vector<Complex> mid(size());
  for (std::size_t i = 0; i < size(); ++i) {
    mid[i] = 0.5 * (upper.values()[i] + lower.values()[i]);
  }
  return {promote(lower.field(), upper.field()), std::move(mid)};
}

double CoefficientPairSequence::spread_sq() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += std::norm(upper.values()[i] - lower.values()[i]);
  return s;
}

double CoefficientPairSequence::re_product_sum() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    s += (upper.values()[i] * std::conj(lower.values()[i])).real();
  }
  return s;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_valid(const OrthonormalFamily& f, const char* who) {
  if (!f.valid()) {
    throw Error(ErrorCode::InvalidFamily,
                std::string(who) + ": family failed validation (max Gram deviation " +
                    std::to_string(f.validation().max_deviation) + ")");
  }
}

void require_length(const OrthonormalFamily& f, std::size_t n, const char* who) {
  if (f.size() != n) {
    throw Error(ErrorCode::InputMismatch, std::string(who) + ": " + std::to_string(n) +
                                              " coefficients for a family of " +
                                              std::to_string(f.size()));
  }
}

double sum_abs_sq(const CoefficientSequence& c) { return c.norm_sq(); }

// sum conj(w_i) c_i
Complex weighted_sum(const CoefficientSequence& w, const CoefficientSequence& c) {
  Complex s{};
  for (std::size_t i = 0; i < c.size(); ++i) s += std::conj(w.values()[i]) * c.values()[i];
  return s;
}

double sum_re_weighted(const CoefficientSequence& w, const CoefficientSequence& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    s += (std::conj(w.values()[i]) * c.values()[i]).real();
  }
  return s;
}

HypothesisStatus relabel(HypothesisStatus h, std::string label) {
  h.label = std::move(label);
  return h;
}

double positive_sum(const CoefficientPairSequence& pair, const Tolerance& tol, const char* who) {
  double p = pair.re_product_sum();
  double scale = 0.0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    scale += std::abs(pair.upper.values()[i]) * std::abs(pair.lower.values()[i]);
  }
  if (!(p > tol.band(scale))) {
    throw Error(ErrorCode::RegimeMismatch,
                std::string(who) + ": requires sum Re(upper conj(lower)) > 0, got " +
                    std::to_string(p));
  }
  return p;
}

[[noreturn]] void throw_undefined(BoundReport report) {
  report.trusted = false;
  throw HypothesisError(std::move(report));
}

}  // namespace

CoefficientSequence fourier_coeffs(const Vector& x, const OrthonormalFamily& f) {
  require_valid(f, "fourier_coeffs");
  std::vector<Complex> c;
  c.reserve(f.size());
  for (const Vector& e : f.members()) c.push_back(inner(x, e).value());
  return {promote(x.field(), f.field()), std::move(c)};
}

double bessel_defect(const Vector& x, const OrthonormalFamily& f) {
  return norm_sq(x) - sum_abs_sq(fourier_coeffs(x, f));
}

Vector synthesize(const OrthonormalFamily& f, const CoefficientSequence& v) {
  require_length(f, v.size(), "synthesize");
  return combine(v.values(), f.members(), promote(f.field(), v.field()));
}

HypothesisStatus check_family_disc(const Vector& x, const OrthonormalFamily& f,
                                   const CoefficientSequence& lam, double r,
                                   const Tolerance& tol) {
  require_valid(f, "check_family_disc");
  const Vector center = synthesize(f, lam);
  const double dist = norm(x - center);
  return classify("family_disc", r - dist, std::max({1.0, norm(x), norm(center), r}), tol);
}

HypothesisStatus check_family_segment_re(const Vector& x, const OrthonormalFamily& f,
                                         const CoefficientPairSequence& pair,
                                         const Tolerance& tol) {
  require_valid(f, "check_family_segment_re");
  return check_between_re(x, synthesize(f, pair.lower), synthesize(f, pair.upper), tol,
                          "family_segment_re");
}

HypothesisStatus check_family_segment_norm(const Vector& x, const OrthonormalFamily& f,
                                           const CoefficientPairSequence& pair,
                                           const Tolerance& tol) {
  require_valid(f, "check_family_segment_norm");
  const Vector center = synthesize(f, pair.midpoint());
  const double radius = 0.5 * std::sqrt(pair.spread_sq());
  const double dist = norm(x - center);
  return classify("family_segment_norm", radius - dist,
                  std::max({1.0, norm(x), norm(center), radius}), tol);
}

namespace {

std::vector<HypothesisStatus> family_segment_hypotheses(const Vector& x,
                                                        const OrthonormalFamily& f,
                                                        const CoefficientPairSequence& pair,
                                                        const Tolerance& tol) {
  return {check_family_segment_re(x, f, pair, tol), check_family_segment_norm(x, f, pair, tol)};
}

}  // namespace

BoundReport reverse_bessel_disc(const Vector& x, const OrthonormalFamily& f,
                                const CoefficientSequence& lam, double r,
                                const EvalOptions& opts) {
  require_valid(f, "reverse_bessel_disc");
  require_length(f, lam.size(), "reverse_bessel_disc");
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::BadRadius, "reverse_bessel_disc: r = " + std::to_string(r));
  }
  const double s = lam.norm_sq();
  const double r2 = r * r;
  const double d = s - r2;
  std::vector<HypothesisStatus> hyps{
      classify("coefficients_exceed_radius", d, std::max({1.0, s, r2}), opts.tol, true),
      check_family_disc(x, f, lam, r, opts.tol)};

  const CoefficientSequence c = fourier_coeffs(x, f);
  const double c2 = sum_abs_sq(c);
  const double nx2 = norm_sq(x);
  if (!(d > 0.0)) {
    throw_undefined(make_report("bessel_disc", "undefined", std::move(hyps), nx2, {}, kNaN));
  }
  const double sre = sum_re_weighted(lam, c);
  const double smod2 = std::norm(weighted_sum(lam, c));

  BoundReport report = make_report("bessel_disc", "coefficients_gt_r", hyps, nx2,
                                   {{"re_form", sre * sre / d}, {"modulus_form", smod2 / d}},
                                   s * c2 / d);
  report.details.push_back({"truncation_length", static_cast<double>(f.size())});
  report.companions.push_back(make_report("bessel_disc_defect", "coefficients_gt_r",
                                          std::move(hyps), nx2 - c2, {}, r2 * c2 / d));
  report.companions.back().trusted = report.hypotheses_hold();
  return finalize(std::move(report), opts);
}

BoundReport reverse_bessel_segment(const Vector& x, const OrthonormalFamily& f,
                                   const CoefficientPairSequence& pair,
                                   const EvalOptions& opts) {
  require_valid(f, "reverse_bessel_segment");
  require_length(f, pair.size(), "reverse_bessel_segment");
  const double p = positive_sum(pair, opts.tol, "reverse_bessel_segment");
  auto hyps = family_segment_hypotheses(x, f, pair, opts.tol);

  const CoefficientSequence c = fourier_coeffs(x, f);
  const double c2 = sum_abs_sq(c);
  const double nx2 = norm_sq(x);

  std::vector<Complex> sums(pair.size());
  double sum_abs2 = 0.0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    sums[i] = pair.upper.values()[i] + pair.lower.values()[i];
    sum_abs2 += std::norm(sums[i]);
  }
  const CoefficientSequence plus(promote(pair.lower.field(), pair.upper.field()), sums);
  const double sre = sum_re_weighted(plus, c);
  const double smod2 = std::norm(weighted_sum(plus, c));
  const double spread = pair.spread_sq();

  BoundReport report = make_report(
      "bessel_segment", "re_pos", hyps, nx2,
      {{"re_form", 0.25 * sre * sre / p}, {"modulus_form", 0.25 * smod2 / p}},
      0.25 * sum_abs2 * c2 / p);
  report.details.push_back({"truncation_length", static_cast<double>(f.size())});
  report.companions.push_back(make_report("bessel_segment_defect", "re_pos", std::move(hyps),
                                          nx2 - c2, {}, 0.25 * spread * c2 / p));

  EvalOptions forced = opts;
  forced.force = true;
  const BoundReport disc =
      reverse_bessel_disc(x, f, pair.midpoint(), 0.5 * std::sqrt(spread), forced);
  double dev = 0.0;
  for (std::size_t i = 0; i < report.intermediate.size(); ++i) {
    dev = std::max(dev, relative_gap(report.intermediate[i].value, disc.intermediate[i].value));
  }
  dev = std::max(dev, relative_gap(report.rhs, disc.rhs));
  dev = std::max(dev, relative_gap(report.companions[0].rhs, disc.companions[0].rhs));
  report.path_deviation = dev;
  report.companions[0].path_deviation = dev;
  if (dev > opts.tol.eta) {
    throw Error(ErrorCode::PathMismatch,
                "reverse_bessel_segment: delegated evaluation differs by " + std::to_string(dev));
  }
  report.companions[0].trusted = report.hypotheses_hold();
  return finalize(std::move(report), opts);
}

std::vector<BaselineOutcome> baseline_bessel(const Vector& x, const OrthonormalFamily& f,
                                             const CoefficientPairSequence& pair,
                                             const EvalOptions& opts) {
  require_valid(f, "baseline_bessel");
  require_length(f, pair.size(), "baseline_bessel");
  const auto hyps = family_segment_hypotheses(x, f, pair, opts.tol);
  const CoefficientSequence c = fourier_coeffs(x, f);
  const double c2 = sum_abs_sq(c);
  const double nx2 = norm_sq(x);
  const double defect = nx2 - c2;
  const double quarter = 0.25 * pair.spread_sq();

  std::vector<BaselineOutcome> out;
  auto emit = [&](const char* id, BoundReport report) {
    report.details.push_back({"truncation_length", static_cast<double>(f.size())});
    out.push_back({id, finalize(std::move(report), opts), std::nullopt});
  };

  const Vector lower = synthesize(f, pair.lower);
  const Vector upper = synthesize(f, pair.upper);
  const double re_term = inner(upper - x, x - lower).re();
  emit(bessel_baseline::kRefinedRe, make_report(bessel_baseline::kRefinedRe, "segment", hyps,
                                                defect, {{"refined", quarter - re_term}}, quarter));

  const CoefficientSequence mid = pair.midpoint();
  double dist2 = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) dist2 += std::norm(mid.values()[i] - c.values()[i]);
  emit(bessel_baseline::kRefinedCoeff,
       make_report(bessel_baseline::kRefinedCoeff, "segment", hyps, defect,
                   {{"refined", quarter - dist2}}, quarter));

  const double p = pair.re_product_sum();
  double prod_scale = 0.0;
  double mod_sum2 = 0.0;
  double additive = 0.0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const Complex hi = pair.upper.values()[i];
    const Complex lo = pair.lower.values()[i];
    const double ah = std::abs(hi);
    const double al = std::abs(lo);
    prod_scale += ah * al;
    mod_sum2 += (ah + al) * (ah + al);
    additive += (ah - al) * (ah - al) + 4.0 * (ah * al - (hi * std::conj(lo)).real());
  }
  if (p > opts.tol.band(prod_scale)) {
    emit(bessel_baseline::kRatioModulus, make_report(bessel_baseline::kRatioModulus, "re_pos",
                                                     hyps, nx2, {}, 0.25 * mod_sum2 / p * c2));
    emit(bessel_baseline::kAdditiveModulus,
         make_report(bessel_baseline::kAdditiveModulus, "re_pos", hyps, defect, {},
                     0.25 * additive / p * c2));
  } else {
    out.push_back({bessel_baseline::kRatioModulus, std::nullopt, ErrorCode::RegimeMismatch});
    out.push_back({bessel_baseline::kAdditiveModulus, std::nullopt, ErrorCode::RegimeMismatch});
  }
  return out;
}

Scalar family_cheby(const Vector& x, const Vector& y, const OrthonormalFamily& f) {
  require_valid(f, "family_cheby");
  Scalar s = inner(x, y);
  for (const Vector& e : f.members()) s = s - inner(x, e) * inner(e, y);
  return s;
}

BoundReport gruss_family_disc(const Vector& x, const Vector& y, const OrthonormalFamily& f,
                              const CoefficientSequence& lam, const CoefficientSequence& mu,
                              double r1, double r2, const EvalOptions& opts) {
  require_valid(f, "gruss_family_disc");
  require_length(f, lam.size(), "gruss_family_disc");
  require_length(f, mu.size(), "gruss_family_disc");
  for (double r : {r1, r2}) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::BadRadius, "gruss_family_disc: r = " + std::to_string(r));
    }
  }
  const double s1 = lam.norm_sq();
  const double s2 = mu.norm_sq();
  const double d1 = s1 - r1 * r1;
  const double d2 = s2 - r2 * r2;
  std::vector<HypothesisStatus> hyps{
      classify("x_coefficients_exceed_radius", d1, std::max({1.0, s1, r1 * r1}), opts.tol, true),
      classify("y_coefficients_exceed_radius", d2, std::max({1.0, s2, r2 * r2}), opts.tol, true),
      relabel(check_family_disc(x, f, lam, r1, opts.tol), "x_family_disc"),
      relabel(check_family_disc(y, f, mu, r2, opts.tol), "y_family_disc")};

  const double lhs = family_cheby(x, y, f).abs();
  if (!(d1 > 0.0) || !(d2 > 0.0)) {
    throw_undefined(make_report("gruss_family_disc", "undefined", std::move(hyps), lhs, {}, kNaN));
  }
  const double k = r1 * r2 / (std::sqrt(d1) * std::sqrt(d2));
  const double cx = sum_abs_sq(fourier_coeffs(x, f));
  const double cy = sum_abs_sq(fourier_coeffs(y, f));
  BoundReport report =
      make_report("gruss_family_disc", "coefficients_gt_r", std::move(hyps), lhs,
                  {{"coefficient_form", k * std::sqrt(cx * cy)}}, k * norm(x) * norm(y));
  report.details.push_back({"constant", k});
  report.details.push_back({"truncation_length", static_cast<double>(f.size())});
  return finalize(std::move(report), opts);
}

BoundReport gruss_family_segment(const Vector& x, const Vector& y, const OrthonormalFamily& f,
                                 const CoefficientPairSequence& pair_x,
                                 const CoefficientPairSequence& pair_y,
                                 const EvalOptions& opts) {
  require_valid(f, "gruss_family_segment");
  require_length(f, pair_x.size(), "gruss_family_segment");
  require_length(f, pair_y.size(), "gruss_family_segment");
  const double px = positive_sum(pair_x, opts.tol, "gruss_family_segment (x)");
  const double py = positive_sum(pair_y, opts.tol, "gruss_family_segment (y)");

  std::vector<HypothesisStatus> hyps{
      relabel(check_family_segment_re(x, f, pair_x, opts.tol), "x_family_segment_re"),
      relabel(check_family_segment_norm(x, f, pair_x, opts.tol), "x_family_segment_norm"),
      relabel(check_family_segment_re(y, f, pair_y, opts.tol), "y_family_segment_re"),
      relabel(check_family_segment_norm(y, f, pair_y, opts.tol), "y_family_segment_norm")};

  const double k = 0.25 * std::sqrt(pair_x.spread_sq()) * std::sqrt(pair_y.spread_sq()) /
                   (std::sqrt(px) * std::sqrt(py));
  const double cx = sum_abs_sq(fourier_coeffs(x, f));
  const double cy = sum_abs_sq(fourier_coeffs(y, f));
  BoundReport report = make_report("gruss_family_segment", "re_pos", std::move(hyps),
                                   family_cheby(x, y, f).abs(),
                                   {{"coefficient_form", k * std::sqrt(cx * cy)}},
                                   k * norm(x) * norm(y));
  report.details.push_back({"constant", k});
  report.details.push_back({"truncation_length", static_cast<double>(f.size())});
  return finalize(std::move(report), opts);
}

}  // namespace ipx
