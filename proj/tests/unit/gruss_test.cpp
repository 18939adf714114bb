#include "ipx/gruss.hpp"

#include "ipx/harness.hpp"
#include "test_util.hpp"

using namespace ipx;

namespace {
const Vector kX = Vector::real({1, 0.1});
const Vector kY = Vector::real({1, -0.1});
const Vector kE = Vector::real({1, 0});
}  // namespace

TEST(Cheby, Functional) {
  const Scalar c = cheby_functional(kX, kY, kE);
  expect_rel(c.re(), -0.01);
  EXPECT_IPX_ERROR(cheby_functional(kX, kY, Vector::real({2, 0})), ErrorCode::NotUnit);
}

TEST(GrussDisc, Value) {
  const BoundReport r = gruss_disc(kX, kY, kE, 0.1, 0.1);
  expect_rel(r.lhs, 0.01);
  expect_rel(r.rhs, 0.0101);
  expect_rel(*r.tightness, 0.99009900990099009901);
}

TEST(GrussDisc, BadRadius) {
  EXPECT_IPX_ERROR(gruss_disc(kX, kY, kE, 1.0, 0.1), ErrorCode::BadRadius);
  EXPECT_IPX_ERROR(gruss_disc(kX, kY, kE, 0.1, 0.0), ErrorCode::BadRadius);
}

TEST(GrussSegment, Value) {
  const BoundReport r = gruss_segment(kX, kY, kE, 0.8, 1.2, 0.8, 1.2);
  expect_rel(r.lhs, 0.01);
  expect_rel(r.rhs, 0.041666666666666666667);
  ASSERT_EQ(r.hypothesis.size(), 4u);
  expect_rel(r.hypothesis[0].margin, 0.03);
  ASSERT_TRUE(r.ratio_bound);
  expect_rel(r.ratio_bound->lhs, 0.01);
  expect_rel(r.ratio_bound->rhs, 0.041666666666666666667);
}

TEST(GrussSegment, RegimeMismatch) {
  EXPECT_IPX_ERROR(gruss_segment(kX, kY, kE, -0.8, 1.2, 0.8, 1.2), ErrorCode::RegimeMismatch);
}

TEST(GrussProperty, RandomDiscInstances) {
  Stream rng(31, 1);
  Tolerance tol;
  for (int t = 0; t < 2000; ++t) {
    const std::size_t d = 1 + t % 8;
    const Field f = t % 2 ? Field::Complex : Field::Real;
    const Vector e = random_unit(rng, d, f);
    const double r1 = rng.uniform(0.05, 0.95), r2 = rng.uniform(0.05, 0.95);
    const Vector x = e + Scalar(r1 * rng.uniform(0.0, 0.99)) * random_unit(rng, d, f);
    const Vector y = e + Scalar(r2 * rng.uniform(0.0, 0.99)) * random_unit(rng, d, f);
    const BoundReport r = gruss_disc(x, y, e, r1, r2);
    EXPECT_TRUE(r.holds(tol)) << t;
  }
}

// Rotating x, y and e together leaves |<x,y> - <x,e><e,y>| unchanged.
TEST(GrussProperty, UnitaryInvariance) {
  Stream rng(31, 2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 8;
    const Vector x = random_vector(rng, d, Field::Complex);
    const Vector y = random_vector(rng, d, Field::Complex);
    const Vector e = random_unit(rng, d, Field::Complex);
    const OrthonormalFamily u = random_orthonormal_family(rng, d, d, Field::Complex);
    auto rot = [&](const Vector& v) { return combine(v.coords(), u.members(), Field::Complex); };
    const double a = cheby_functional(x, y, e).abs();
    const double b = cheby_functional(rot(x), rot(y), rot(e)).abs();
    EXPECT_NEAR(a, b, 1e-12 * (1 + norm(x) * norm(y)));
  }
}
