#include "ipx/integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ipx {

WeightedMeasure::WeightedMeasure(std::vector<double> nodes, std::vector<double> weights,
                                 std::vector<double> density, const Tolerance& tol)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), density_(std::move(density)) {
  if (nodes_.empty() || nodes_.size() != weights_.size() || nodes_.size() != density_.size()) {
    throw Error(ErrorCode::InputMismatch, "measure needs equal, nonzero numbers of nodes (" +
                                              std::to_string(nodes_.size()) + "), weights (" +
                                              std::to_string(weights_.size()) + ") and density (" +
                                              std::to_string(density_.size()) + ")");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (!(weights_[k] > 0.0) || !std::isfinite(weights_[k])) {
      throw Error(ErrorCode::InputMismatch, "weight " + std::to_string(k) + " is not positive");
    }
    if (!(density_[k] >= 0.0) || !std::isfinite(density_[k])) {
      throw Error(ErrorCode::NegativeDensity,
                  "density at node " + std::to_string(k) + " is " + std::to_string(density_[k]));
    }
    total += weights_[k] * density_[k];
  }
  if (std::abs(total - 1.0) > tol.eta) {
    throw Error(ErrorCode::NotNormalized, "sum w rho = " + std::to_string(total));
  }
}

std::string_view to_string(QuadratureRule rule) noexcept {
  switch (rule) {
    case QuadratureRule::UniformMidpoint: return "uniform_midpoint";
    case QuadratureRule::GaussLegendre: return "gauss_legendre";
  }
  return "?";
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // recompute the derivative at the converged root
    double p0 = 1.0, p1 = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
    }
    dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

WeightedMeasure make_measure(QuadratureRule rule, double lo, double hi, std::size_t n,
                             const std::function<double(double)>& density) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi) || n == 0) {
    throw Error(ErrorCode::BadInterval, "make_measure: need lo < hi and n >= 1, got [" +
                                            std::to_string(lo) + ", " + std::to_string(hi) +
                                            "], n = " + std::to_string(n));
  }
  std::vector<double> nodes, weights;
  const double len = hi - lo;
  if (rule == QuadratureRule::UniformMidpoint) {
    const double h = len / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      nodes.push_back(lo + (static_cast<double>(k) + 0.5) * h);
      weights.push_back(h);
    }
  } else {
    gauss_legendre(n, nodes, weights);
    for (std::size_t k = 0; k < n; ++k) {
      nodes[k] = lo + 0.5 * len * (nodes[k] + 1.0);
      weights[k] *= 0.5 * len;
    }
  }
  std::vector<double> rho(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    rho[k] = density(nodes[k]);
    if (!(rho[k] >= 0.0) || !std::isfinite(rho[k])) {
      throw Error(ErrorCode::NegativeDensity, "make_measure: density at " +
                                                  std::to_string(nodes[k]) + " is " +
                                                  std::to_string(rho[k]));
    }
    total += weights[k] * rho[k];
  }
  if (!(total > 0.0)) throw Error(ErrorCode::NotNormalized, "make_measure: density has zero mass");
  for (double& v : rho) v /= total;
  WeightedMeasure m(std::move(nodes), std::move(weights), std::move(rho));
  m.set_renormalization(1.0 / total);
  return m;
}

WeightedMeasure make_measure(QuadratureRule rule, double lo, double hi, std::size_t n,
                             double density) {
  return make_measure(rule, lo, hi, n, [density](double) { return density; });
}

SampledFunction SampledFunction::real(std::vector<double> values) {
  SampledFunction f;
  f.field = Field::Real;
  f.values.reserve(values.size());
  for (double v : values) f.values.emplace_back(v, 0.0);
  return f;
}

SampledFunction SampledFunction::sample(const WeightedMeasure& m,
                                        const std::function<double(double)>& fn) {
  SampledFunction f;
  f.field = Field::Real;
  for (double s : m.nodes()) f.values.emplace_back(fn(s), 0.0);
  return f;
}

SampledFunction SampledFunction::sample_complex(const WeightedMeasure& m,
                                                const std::function<Complex(double)>& fn) {
  SampledFunction f;
  f.field = Field::Complex;
  for (double s : m.nodes()) f.values.push_back(fn(s));
  return f;
}

namespace {

void require_aligned(const SampledFunction& f, const WeightedMeasure& m, const char* who) {
  if (f.size() != m.size()) {
    throw Error(ErrorCode::InputMismatch, std::string(who) + ": function has " +
                                              std::to_string(f.size()) + " samples, measure " +
                                              std::to_string(m.size()) + " nodes");
  }
}

void require_same_field(const SampledFunction& f, const SampledFunction& g, const char* who) {
  if (f.field != g.field) {
    throw Error(ErrorCode::InputMismatch, std::string(who) + ": field mismatch");
  }
}

double positive_regime(Scalar gamma, Scalar Gamma, const Tolerance& tol, const char* who) {
  const SegmentRegime regime = segment_regime(gamma, Gamma, tol);
  if (regime.regime != Regime::RePos) {
    throw Error(ErrorCode::RegimeMismatch,
                std::string(who) + ": requires Re(Gamma conj(gamma)) > 0, got " +
                    std::to_string(regime.value));
  }
  return regime.value;
}

// Re[(hi g - f)(conj f - conj(lo) conj g)] at each node.
PointwiseReport pointwise_between(const SampledFunction& f, const SampledFunction& g, Scalar lo,
                                  Scalar hi, const WeightedMeasure& m, const Tolerance& tol,
                                  std::string label) {
  require_aligned(f, m, "check_pointwise_segment");
  require_aligned(g, m, "check_pointwise_segment");
  require_same_field(f, g, "check_pointwise_segment");
  PointwiseReport out;
  out.node_margins.resize(m.size());
  double worst = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  const Complex a = lo.value();
  const Complex b = hi.value();
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Complex fk = f.values[k];
    const Complex gk = g.values[k];
    const double mk = ((b * gk - fk) * std::conj(fk - a * gk)).real();
    out.node_margins[k] = mk;
    worst = std::min(worst, mk);
    scale = std::max({scale, std::norm(fk), std::abs(b) * std::norm(gk),
                      std::abs(a) * std::norm(gk), std::abs(a * b) * std::norm(gk)});
  }
  out.status = classify(std::move(label), worst, scale, tol);
  if (f.field == Field::Real && lo.field() == Field::Real && hi.field() == Field::Real) {
    bool ok = true;
    for (std::size_t k = 0; k < m.size(); ++k) {
      const double fk = f.values[k].real();
      const double gk = g.values[k].real();
      const double band = tol.band(std::max({std::abs(fk), std::abs(lo.re() * gk),
                                             std::abs(hi.re() * gk)}));
      ok = ok && lo.re() * gk <= fk + band && fk <= hi.re() * gk + band;
    }
    out.sandwich = ok;
  }
  return out;
}

}  // namespace

Scalar weighted_inner(const SampledFunction& f, const SampledFunction& g,
                      const WeightedMeasure& m) {
  require_aligned(f, m, "weighted_inner");
  require_aligned(g, m, "weighted_inner");
  require_same_field(f, g, "weighted_inner");
  Complex s{};
  for (std::size_t k = 0; k < m.size(); ++k) s += m.mass(k) * f.values[k] * std::conj(g.values[k]);
  return {f.field, s};
}

double weighted_norm_sq(const SampledFunction& f, const WeightedMeasure& m) {
  require_aligned(f, m, "weighted_norm_sq");
  double s = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) s += m.mass(k) * std::norm(f.values[k]);
  return s;
}

Vector to_vector(const SampledFunction& f, const WeightedMeasure& m) {
  require_aligned(f, m, "to_vector");
  std::vector<Complex> v(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) v[k] = std::sqrt(m.mass(k)) * f.values[k];
  return {f.field, std::move(v)};
}

PointwiseReport check_pointwise_disc(const SampledFunction& f, const SampledFunction& g, double r,
                                     const WeightedMeasure& m, const Tolerance& tol) {
  require_aligned(f, m, "check_pointwise_disc");
  require_aligned(g, m, "check_pointwise_disc");
  require_same_field(f, g, "check_pointwise_disc");
  PointwiseReport out;
  out.node_margins.resize(m.size());
  double worst = std::numeric_limits<double>::infinity();
  double scale = std::max(1.0, r);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double gk = std::abs(g.values[k]);
    const double mk = std::min(r - std::abs(f.values[k] - g.values[k]), gk - r);
    out.node_margins[k] = mk;
    worst = std::min(worst, mk);
    scale = std::max({scale, std::abs(f.values[k]), gk});
  }
  out.status = classify("pointwise_disc", worst, scale, tol);
  return out;
}

PointwiseReport check_pointwise_segment(const SampledFunction& f, const SampledFunction& g,
                                        Scalar gamma, Scalar Gamma, const WeightedMeasure& m,
                                        const Tolerance& tol) {
  return pointwise_between(f, g, gamma, Gamma, m, tol, "pointwise_segment");
}

BoundReport integral_reverse_schwarz_disc(const SampledFunction& f, const SampledFunction& g,
                                          double r, const WeightedMeasure& m,
                                          const EvalOptions& opts) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::BadRadius, "integral_reverse_schwarz_disc: r = " + std::to_string(r));
  }
  const PointwiseReport pw = check_pointwise_disc(f, g, r, m, opts.tol);
  const double ng2 = weighted_norm_sq(g, m);
  const double nf2 = weighted_norm_sq(f, m);
  std::vector<HypothesisStatus> hyps{
      pw.status,
      classify("g_mass_differs_from_r_squared", std::abs(ng2 - r * r), std::max(ng2, r * r),
               opts.tol, true)};

  // The gap is evaluated on the mapped vectors so it inherits the
  // cancellation-free form.
  const Vector vf = to_vector(f, m);
  const Vector vg = to_vector(g, m);
  const Scalar fg = inner(vf, vg);
  const double gap = schwarz_gap(vf, vg);
  const double gap_re = gap + fg.im() * fg.im();

  BoundReport report = make_report("integral_disc", "pointwise_disc", hyps, gap,
                                   {{"gap_re", gap_re}}, r * r * ng2);
  report.details.push_back({"nodes_checked", static_cast<double>(m.size())});
  report.companions.push_back(make_report("integral_disc_transferred", "pointwise_disc",
                                          std::move(hyps), gap, {{"gap_re", gap_re}},
                                          r * r * nf2));
  report.companions.back().trusted = report.hypotheses_hold();
  return finalize(std::move(report), opts);
}

BoundReport integral_reverse_schwarz_segment(const SampledFunction& f, const SampledFunction& g,
                                             Scalar gamma, Scalar Gamma, const WeightedMeasure& m,
                                             const EvalOptions& opts) {
  const double p = positive_regime(gamma, Gamma, opts.tol, "integral_reverse_schwarz_segment");
  const PointwiseReport pw = check_pointwise_segment(f, g, gamma, Gamma, m, opts.tol);
  const Vector vf = to_vector(f, m);
  const Vector vg = to_vector(g, m);
  const Scalar fg = inner(vf, vg);
  const Scalar sum = Gamma + gamma;
  const double s = (sum.conj() * fg).re();
  const double diff = (Gamma - gamma).abs();

  BoundReport report = make_report("integral_segment", "re_pos", {pw.status},
                                   norm_sq(vf) * norm_sq(vg), {{"re_form", 0.25 * s * s / p}},
                                   0.25 * sum.abs_sq() * fg.abs_sq() / p);
  report.details.push_back({"nodes_checked", static_cast<double>(m.size())});
  report.companions.push_back(make_report("integral_segment_additive", "re_pos", {pw.status},
                                          schwarz_gap(vf, vg), {},
                                          0.25 * diff * diff * fg.abs_sq() / p));
  report.companions.back().trusted = report.hypotheses_hold();
  return finalize(std::move(report), opts);
}

BoundReport cassel(const SampledFunction& f, const SampledFunction& g, double mlo, double Mhi,
                   const WeightedMeasure& m, const EvalOptions& opts) {
  if (f.field != Field::Real || g.field != Field::Real) {
    throw Error(ErrorCode::FieldMismatch, "cassel: real functions required");
  }
  if (!(mlo > 0.0) || !(Mhi > mlo) || !std::isfinite(Mhi)) {
    throw Error(ErrorCode::BadInterval, "cassel: requires M > m > 0, got m = " +
                                            std::to_string(mlo) + ", M = " + std::to_string(Mhi));
  }
  const PointwiseReport pw = check_pointwise_segment(f, g, Scalar(mlo), Scalar(Mhi), m, opts.tol);
  double worst = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double fk = f.values[k].real();
    const double gk = g.values[k].real();
    worst = std::min({worst, fk - mlo * gk, Mhi * gk - fk});
    scale = std::max({scale, std::abs(fk), Mhi * std::abs(gk)});
  }
  std::vector<HypothesisStatus> hyps{classify("sandwich", worst, scale, opts.tol)};

  double ff = 0.0, gg = 0.0, fg = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double fk = f.values[k].real();
    const double gk = g.values[k].real();
    ff += m.mass(k) * fk * fk;
    gg += m.mass(k) * gk * gk;
    fg += m.mass(k) * fk * gk;
  }
  const double mM = mlo * Mhi;
  BoundReport report = make_report("cassel", "sandwich", hyps, ff * gg, {},
                                   0.25 * (Mhi + mlo) * (Mhi + mlo) / mM * fg * fg);
  report.details.push_back({"nodes_checked", static_cast<double>(m.size())});
  report.details.push_back({"pointwise_segment_margin", pw.status.margin});
  const Vector vf = to_vector(f, m);
  const Vector vg = to_vector(g, m);
  report.companions.push_back(make_report("cassel_additive", "sandwich", std::move(hyps),
                                          schwarz_gap(vf, vg), {},
                                          0.25 * (Mhi - mlo) * (Mhi - mlo) / mM * fg * fg));
  report.companions.back().trusted = report.hypotheses_hold();

  EvalOptions forced = opts;
  forced.force = true;
  const BoundReport seg =
      integral_reverse_schwarz_segment(f, g, Scalar(mlo), Scalar(Mhi), m, forced);
  double dev = std::max({relative_gap(report.lhs, seg.lhs), relative_gap(report.rhs, seg.rhs),
                         relative_gap(report.rhs, seg.intermediate[0].value),
                         relative_gap(report.companions[0].lhs, seg.companions[0].lhs),
                         relative_gap(report.companions[0].rhs, seg.companions[0].rhs)});
  report.path_deviation = dev;
  report.companions[0].path_deviation = dev;
  if (dev > opts.tol.eta) {
    throw Error(ErrorCode::PathMismatch,
                "cassel: delegated evaluation differs by " + std::to_string(dev));
  }
  return finalize(std::move(report), opts);
}

BoundReport integral_gruss(const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& h, Scalar a, Scalar A, Scalar b, Scalar B,
                           const WeightedMeasure& m, const EvalOptions& opts,
                           GrussReading reading) {
  const double hh = weighted_norm_sq(h, m);
  if (std::abs(hh - 1.0) > opts.tol.eta) {
    throw Error(ErrorCode::NotUnitDensity,
                "integral_gruss: integral rho |h|^2 = " + std::to_string(hh));
  }
  const double pa = positive_regime(a, A, opts.tol, "integral_gruss (a, A)");
  const double pb = positive_regime(b, B, opts.tol, "integral_gruss (b, B)");
  const Scalar upper_g = reading == GrussReading::Symmetric ? B : A;
  std::vector<HypothesisStatus> hyps{
      pointwise_between(f, h, a, A, m, opts.tol, "f_pointwise_segment").status,
      pointwise_between(g, h, b, upper_g, m, opts.tol, "g_pointwise_segment").status};

  const Scalar fh = weighted_inner(f, h, m);
  const Scalar hg = weighted_inner(h, g, m);
  const Scalar fg = weighted_inner(f, g, m);
  const double k = 0.25 * (A - a).abs() * (B - b).abs() / std::sqrt(pa * pb);
  BoundReport report =
      make_report("integral_gruss", reading == GrussReading::Symmetric ? "symmetric" : "literal",
                  std::move(hyps), (fg - fh * hg).abs(), {}, k * (fh * hg).abs());
  report.details.push_back({"constant", k});
  report.details.push_back({"nodes_checked", static_cast<double>(m.size())});
  return finalize(std::move(report), opts);
}

}  // namespace ipx
