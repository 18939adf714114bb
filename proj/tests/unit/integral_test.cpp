#include "ipx/integral.hpp"

#include <numeric>

#include "ipx/harness.hpp"
#include "ipx/schwarz.hpp"
#include "test_util.hpp"

using namespace ipx;

namespace {

WeightedMeasure gl16(double lo, double hi) { return make_measure(QuadratureRule::GaussLegendre, lo, hi, 16); }

}  // namespace

TEST(GaussLegendre, NodesAndWeights) {
  std::vector<double> s, w;
  gauss_legendre(3, s, w);
  ASSERT_EQ(s.size(), 3u);
  expect_rel(s[0], -std::sqrt(0.6), 1e-15);
  expect_rel(s[1], 0.0, 1e-15);
  expect_rel(w[0], 5.0 / 9.0, 1e-15);
  expect_rel(w[1], 8.0 / 9.0, 1e-15);
}

// n nodes integrate polynomials of degree 2n - 1 exactly.
TEST(GaussLegendre, PolynomialExactness) {
  for (std::size_t n = 1; n <= 20; ++n) {
    std::vector<double> s, w;
    gauss_legendre(n, s, w);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    for (std::size_t k = 0; k < 2 * n; ++k) {
      double q = 0.0;
      for (std::size_t i = 0; i < n; ++i) q += w[i] * std::pow(s[i], static_cast<double>(k));
      const double exact = k % 2 ? 0.0 : 2.0 / static_cast<double>(k + 1);
      EXPECT_NEAR(q, exact, 1e-13) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Measure, Validation) {
  EXPECT_IPX_ERROR(WeightedMeasure({0, 1}, {0.5}, {1, 1}), ErrorCode::InputMismatch);
  EXPECT_IPX_ERROR(WeightedMeasure({0, 1}, {0.5, 0}, {1, 1}), ErrorCode::InputMismatch);
  EXPECT_IPX_ERROR(WeightedMeasure({0, 1}, {0.5, 0.5}, {3, -1}), ErrorCode::NegativeDensity);
  EXPECT_IPX_ERROR(WeightedMeasure({0, 1}, {0.5, 0.5}, {1, 1.5}), ErrorCode::NotNormalized);
  EXPECT_IPX_ERROR(make_measure(QuadratureRule::GaussLegendre, 2, 1, 4), ErrorCode::BadInterval);
  EXPECT_IPX_ERROR(make_measure(QuadratureRule::UniformMidpoint, 0, 1, 4, [](double s) { return s - 0.5; }),
                   ErrorCode::NegativeDensity);
}

TEST(Measure, Renormalizes) {
  const WeightedMeasure m = make_measure(QuadratureRule::GaussLegendre, 0, 2, 8, 3.0);
  double mass = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) mass += m.mass(k);
  EXPECT_NEAR(mass, 1.0, 1e-15);
  expect_rel(m.renormalization(), 1.0 / 6.0);
}

TEST(Integral, ClosedFormMoments) {
  const WeightedMeasure m = gl16(1, 2);
  const auto f = SampledFunction::sample(m, [](double s) { return s; });
  const auto one = SampledFunction::sample(m, [](double) { return 1.0; });
  expect_rel(weighted_inner(f, one, m).re(), 1.5, 1e-14);
  expect_rel(weighted_norm_sq(f, m), 7.0 / 3.0, 1e-14);
  expect_rel(norm_sq(to_vector(f, m)), 7.0 / 3.0, 1e-14);
}

TEST(Cassel, ClosedForm) {
  const WeightedMeasure m = gl16(1, 2);
  const auto f = SampledFunction::sample(m, [](double s) { return s; });
  const auto g = SampledFunction::sample(m, [](double) { return 1.0; });
  const BoundReport r = cassel(f, g, 1, 2, m);
  expect_rel(r.lhs, 7.0 / 3.0, 1e-10);
  expect_rel(r.rhs, 81.0 / 32.0, 1e-10);
  expect_rel(r.companions[0].lhs, 1.0 / 12.0, 1e-10);
  expect_rel(r.companions[0].rhs, 9.0 / 32.0, 1e-10);
  ASSERT_TRUE(r.path_deviation);
  EXPECT_LE(*r.path_deviation, 1e-12);
}

TEST(Cassel, Errors) {
  const WeightedMeasure m = gl16(1, 2);
  const auto f = SampledFunction::sample(m, [](double s) { return s; });
  const auto g = SampledFunction::sample(m, [](double) { return 1.0; });
  EXPECT_IPX_ERROR(cassel(f, g, 2, 1, m), ErrorCode::BadInterval);
  EXPECT_IPX_ERROR(cassel(f, g, 1, 1.5, m), ErrorCode::HypothesisViolated);
  const auto fc = SampledFunction::sample_complex(m, [](double s) { return Complex(s, 0.1); });
  EXPECT_IPX_ERROR(cassel(fc, SampledFunction::sample_complex(m, [](double) { return Complex(1, 0); }), 1, 2, m),
                   ErrorCode::FieldMismatch);
}

TEST(IntegralSegment, ClosedForm) {
  const WeightedMeasure m = gl16(1, 2);
  const auto f = SampledFunction::sample(m, [](double s) { return s; });
  const auto g = SampledFunction::sample(m, [](double) { return 1.0; });
  const BoundReport r = integral_reverse_schwarz_segment(f, g, 1.0, 2.0, m);
  expect_rel(r.lhs, 7.0 / 3.0, 1e-10);
  expect_rel(r.rhs, 81.0 / 32.0, 1e-10);
  expect_rel(r.companions[0].lhs, 1.0 / 12.0, 1e-10);
}

TEST(IntegralDisc, ClosedForm) {
  const WeightedMeasure m = gl16(0, 1);
  const auto f = SampledFunction::sample(m, [](double s) { return 1 + 0.2 * s; });
  const auto g = SampledFunction::sample(m, [](double) { return 1.0; });
  const BoundReport r = integral_reverse_schwarz_disc(f, g, 0.25, m);
  expect_rel(r.lhs, 1.0 / 300.0, 1e-10);
  expect_rel(r.rhs, 0.0625, 1e-10);
  expect_rel(r.companions[0].rhs, 0.0625 * 91.0 / 75.0, 1e-10);
  // integral of |g|^2 equal to r^2 is excluded
  EXPECT_IPX_ERROR(integral_reverse_schwarz_disc(f, g, 1.0, m), ErrorCode::HypothesisViolated);
}

TEST(IntegralGruss, ClosedForm) {
  const WeightedMeasure m = gl16(0, 1);
  const auto f = SampledFunction::sample(m, [](double s) { return 1 + 0.2 * s; });
  const auto g = SampledFunction::sample(m, [](double s) { return 1 - 0.2 * s; });
  const auto h = SampledFunction::sample(m, [](double) { return 1.0; });
  const BoundReport r = integral_gruss(f, g, h, 1.0, 1.2, 0.8, 1.0, m);
  expect_rel(r.lhs, 1.0 / 300.0, 1e-10);
  expect_rel(r.rhs, 0.010104145188980609655, 1e-10);
  // literal reading puts A on g's upper side: g <= 1.2 still holds here
  EXPECT_NO_THROW(integral_gruss(f, g, h, 1.0, 1.2, 0.8, 1.0, m, {}, GrussReading::Literal));
  const auto h2 = SampledFunction::sample(m, [](double) { return 2.0; });
  EXPECT_IPX_ERROR(integral_gruss(f, g, h2, 1.0, 1.2, 0.8, 1.0, m), ErrorCode::NotUnitDensity);
}

TEST(Pointwise, SandwichReported) {
  const WeightedMeasure m = gl16(1, 2);
  const auto f = SampledFunction::sample(m, [](double s) { return s; });
  const auto g = SampledFunction::sample(m, [](double) { return 1.0; });
  const PointwiseReport p = check_pointwise_segment(f, g, 1.0, 2.0, m);
  EXPECT_EQ(p.status.verdict, Verdict::Holds);
  EXPECT_EQ(p.node_margins.size(), 16u);
  ASSERT_TRUE(p.sandwich);
  EXPECT_TRUE(*p.sandwich);
  const PointwiseReport q = check_pointwise_segment(f, g, 1.0, 1.5, m);
  EXPECT_EQ(q.status.verdict, Verdict::Fails);
  EXPECT_FALSE(*q.sandwich);
}

// Every integral bound equals the discrete bound on sqrt(w rho)-mapped vectors.
TEST(IntegralProperty, MatchesDiscreteOnMappedVectors) {
  Stream rng(51, 1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 12;
    const WeightedMeasure m = make_measure(t % 2 ? QuadratureRule::GaussLegendre : QuadratureRule::UniformMidpoint,
                                           0, 1, n, [&](double s) { return 1 + s * s; });
    std::vector<double> gv(n), fv(n);
    for (std::size_t k = 0; k < n; ++k) {
      gv[k] = rng.uniform(0.5, 2.0);
      fv[k] = gv[k] * rng.uniform(1.1, 2.9);
    }
    const auto f = SampledFunction::real(fv), g = SampledFunction::real(gv);
    const BoundReport r = integral_reverse_schwarz_segment(f, g, 1.0, 3.0, m);
    const BoundReport d = reverse_schwarz_segment(to_vector(f, m), {1.0, 3.0, to_vector(g, m)});
    EXPECT_LE(relative_gap(r.lhs, d.lhs), 1e-12);
    EXPECT_LE(relative_gap(r.rhs, d.rhs), 1e-12);
  }
}

TEST(Positivity, ConverseFails) {
  const PositivityWitness w = positivity_converse_witness(1, 1000);
  EXPECT_GE(w.re_inner, 0.0);
  EXPECT_LT(w.min_pointwise, 0.0);
  EXPECT_NEAR(weighted_inner(w.f, w.g, w.measure).re(), w.re_inner, 1e-15);
}
