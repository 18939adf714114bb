#include "ipx/bessel.hpp"

#include "ipx/harness.hpp"
#include "test_util.hpp"

using namespace ipx;

namespace {

OrthonormalFamily axes() { return OrthonormalFamily({Vector::real({1, 0, 0}), Vector::real({0, 1, 0})}); }

const Vector kX = Vector::real({1, 1, 0.2});
const Vector kY = Vector::real({1, 1, -0.2});

CoefficientPairSequence pair() {
  return {CoefficientSequence::real({0.7, 0.7}), CoefficientSequence::real({1.3, 1.3})};
}

}  // namespace

TEST(Coefficients, Construction) {
  EXPECT_IPX_ERROR(CoefficientSequence(Field::Real, {}), ErrorCode::InputMismatch);
  EXPECT_IPX_ERROR(CoefficientSequence(Field::Real, {Complex(0, 1)}), ErrorCode::InputMismatch);
  EXPECT_IPX_ERROR(CoefficientPairSequence(CoefficientSequence::real({1}), CoefficientSequence::real({1, 2})),
                   ErrorCode::InputMismatch);
  const CoefficientPairSequence p = pair();
  expect_rel(p.spread_sq(), 0.72);
  expect_rel(p.re_product_sum(), 1.82);
  expect_rel(p.midpoint()[0].re(), 1.0);
}

TEST(Fourier, CoefficientsAndDefect) {
  const CoefficientSequence c = fourier_coeffs(kX, axes());
  ASSERT_EQ(c.size(), 2u);
  expect_rel(c[0].re(), 1.0);
  expect_rel(bessel_defect(kX, axes()), 0.04);
  EXPECT_EQ(synthesize(axes(), c), Vector::real({1, 1, 0}));
  OrthonormalFamily bad({Vector::real({1, 0, 0}), Vector::real({1, 0, 0})});
  EXPECT_IPX_ERROR(fourier_coeffs(kX, bad), ErrorCode::InvalidFamily);
}

TEST(BesselInequality, DefectNonnegative) {
  Stream rng(41, 1);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 1 + t % 8;
    const Field f = t % 2 ? Field::Complex : Field::Real;
    const OrthonormalFamily fam = random_orthonormal_family(rng, d, 1 + t % d, f);
    const Vector x = random_vector(rng, d, f);
    EXPECT_GE(bessel_defect(x, fam), -1e-12 * norm_sq(x));
  }
}

TEST(BesselDisc, Values) {
  const BoundReport r = reverse_bessel_disc(kX, axes(), CoefficientSequence::real({1, 1}), 0.3);
  expect_rel(r.lhs, 2.04);
  ASSERT_EQ(r.intermediate.size(), 2u);
  expect_rel(r.intermediate[0].value, 2.0942408376963350785);
  expect_rel(r.rhs, 2.0942408376963350785);
  ASSERT_EQ(r.companions.size(), 1u);
  expect_rel(r.companions[0].lhs, 0.04);
  expect_rel(r.companions[0].rhs, 0.094240837696335078534);
}

TEST(BesselDisc, Errors) {
  EXPECT_IPX_ERROR(reverse_bessel_disc(kX, axes(), CoefficientSequence::real({1, 1}), -0.1),
                   ErrorCode::BadRadius);
  // sum |lam|^2 <= r^2: the bound is undefined even when forced
  EXPECT_IPX_ERROR(reverse_bessel_disc(kX, axes(), CoefficientSequence::real({0.1, 0.1}), 2.0,
                                       {Tolerance{}, true}),
                   ErrorCode::HypothesisViolated);
}

TEST(BesselSegment, ValuesAndPath) {
  const BoundReport r = reverse_bessel_segment(kX, axes(), pair());
  expect_rel(r.intermediate[0].value, 2.1978021978021978022);
  ASSERT_EQ(r.companions.size(), 1u);
  expect_rel(r.companions[0].rhs, 0.1978021978021978022);
  ASSERT_TRUE(r.path_deviation);
  EXPECT_LE(*r.path_deviation, 1e-12);
}

TEST(BesselSegment, RegimeMismatch) {
  const CoefficientPairSequence p{CoefficientSequence::real({-1, -1}), CoefficientSequence::real({1, 1})};
  EXPECT_IPX_ERROR(reverse_bessel_segment(Vector::real({0, 0, 0.1}), axes(), p), ErrorCode::RegimeMismatch);
}

TEST(BesselBaselines, Values) {
  const auto all = baseline_bessel(kX, axes(), pair());
  ASSERT_EQ(all.size(), 4u);
  for (const auto& b : all) ASSERT_TRUE(b.report) << b.theorem_id;
  EXPECT_EQ(all[0].theorem_id, bessel_baseline::kRefinedRe);
  expect_rel(all[0].report->intermediate[0].value, 0.04);
  expect_rel(all[0].report->rhs, 0.18);
  EXPECT_EQ(all[1].theorem_id, bessel_baseline::kRefinedCoeff);
  expect_rel(all[1].report->intermediate[0].value, 0.18);
  expect_rel(all[2].report->rhs, 2.1978021978021978022);
  expect_rel(all[3].report->rhs, 0.1978021978021978022);
}

TEST(GrussFamily, DiscValues) {
  const auto lam = CoefficientSequence::real({1, 1});
  const BoundReport r = gruss_family_disc(kX, kY, axes(), lam, lam, 0.3, 0.3);
  expect_rel(r.lhs, 0.04);
  expect_rel(r.intermediate[0].value, 0.094240837696335078534);
  expect_rel(r.rhs, 0.096125654450261780105);
}

TEST(GrussFamily, SegmentValues) {
  const BoundReport r = gruss_family_segment(kX, kY, axes(), pair(), pair());
  expect_rel(r.lhs, 0.04);
  expect_rel(r.intermediate[0].value, 0.1978021978021978022);
}

TEST(BesselProperty, RandomChainsOrdered) {
  Stream rng(41, 2);
  Tolerance tol;
  for (int t = 0; t < 2000; ++t) {
    const Field f = t % 2 ? Field::Complex : Field::Real;
    const std::size_t d = 1 + t % 8;
    const FamilySegmentInstance s = gen_family_segment_instance(rng, d, f, 0.01);
    const BoundReport r = reverse_bessel_segment(s.x, s.family, s.pair);
    EXPECT_TRUE(r.holds(tol)) << t;
    EXPECT_TRUE(r.companions[0].holds(tol)) << t;
    EXPECT_LE(*r.path_deviation, 1e-12);
    const FamilyDiscInstance di = gen_family_disc_instance(rng, d, f, 0.01);
    const BoundReport q = reverse_bessel_disc(di.x, di.family, di.lam, di.r);
    EXPECT_TRUE(q.holds(tol)) << t;
  }
}

// The two family segment conditions describe the same set.
TEST(BesselProperty, FamilyFormsAgree) {
  Stream rng(41, 3);
  for (int t = 0; t < 2000; ++t) {
    const Field f = t % 2 ? Field::Complex : Field::Real;
    const FamilySegmentInstance s = gen_family_segment_instance(rng, 1 + t % 8, f, 0.0, 1.5);
    const HypothesisStatus a = check_family_segment_re(s.x, s.family, s.pair);
    const HypothesisStatus b = check_family_segment_norm(s.x, s.family, s.pair);
    if (a.verdict == Verdict::Boundary || b.verdict == Verdict::Boundary) continue;
    EXPECT_EQ(a.verdict, b.verdict) << t;
  }
}
