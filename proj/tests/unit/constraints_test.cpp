#include "ipx/constraints.hpp"

#include "ipx/harness.hpp"
#include "test_util.hpp"

using namespace ipx;

TEST(Disc, Margin) {
  const HypothesisStatus s = check_disc(Vector::real({1, 0.3}), {Vector::real({1, 0}), 0.5});
  EXPECT_EQ(s.verdict, Verdict::Holds);
  expect_rel(s.margin, 0.2);
  EXPECT_IPX_ERROR(DiscConstraint(Vector::real({1}), 0.0), ErrorCode::BadRadius);
}

TEST(Disc, BoundaryBand) {
  const DiscConstraint c{Vector::real({0, 0}), 1.0};
  EXPECT_EQ(check_disc(Vector::real({1, 0}), c).verdict, Verdict::Boundary);
  EXPECT_EQ(check_disc(Vector::real({1 + 1e-7, 0}), c).verdict, Verdict::Fails);
  EXPECT_EQ(check_disc(Vector::real({1 - 1e-7, 0}), c).verdict, Verdict::Holds);
}

TEST(Disc, Cases) {
  EXPECT_EQ(disc_case({Vector::real({1, 0}), 0.5}), DiscCase::NormGtR);
  EXPECT_EQ(disc_case({Vector::real({0.5, 0}), 0.5}), DiscCase::NormEqR);
  EXPECT_EQ(disc_case({Vector::real({0.2, 0}), 0.5}), DiscCase::NormLtR);
}

TEST(Segment, Margins) {
  const SegmentConstraint c{1.0, 2.0, Vector::real({1, 0})};
  const Vector in = Vector::real({1.5, 0.2});
  expect_rel(check_segment_re(in, c).margin, 0.21);
  expect_rel(check_segment_norm(in, c).margin, 0.3);
  const Vector out = Vector::real({3, 0});
  EXPECT_EQ(check_segment_re(out, c).verdict, Verdict::Fails);
  expect_rel(check_segment_re(out, c).margin, -2.0);
  expect_rel(check_segment_norm(out, c).margin, -1.0);
}

TEST(Segment, ConstructionErrors) {
  EXPECT_IPX_ERROR(SegmentConstraint(1.0, 2.0, Vector::real({0, 0})), ErrorCode::ZeroReference);
  EXPECT_IPX_ERROR(SegmentConstraint(Scalar::complex(0, 1), 2.0, Vector::real({1})),
                   ErrorCode::InputMismatch);
}

TEST(Segment, Regimes) {
  EXPECT_EQ(segment_regime(1.0, 2.0).regime, Regime::RePos);
  EXPECT_EQ(segment_regime(Scalar::complex(0, 1), 1.0).regime, Regime::ReZero);
  EXPECT_EQ(segment_regime(-1.0, 2.0).regime, Regime::ReNeg);
  EXPECT_DOUBLE_EQ(segment_regime(-1.0, 2.0).value, -2.0);
}

// The two forms of the segment condition are the same set: outside the
// boundary band their verdicts agree.
TEST(Segment, FormsAgreeOnRandomInstances) {
  Stream rng(11, 2);
  int compared = 0;
  for (int t = 0; t < 4000; ++t) {
    const std::size_t d = 1 + t % 8;
    const Field f = (t / 8) % 2 ? Field::Complex : Field::Real;
    const Regime reg = static_cast<Regime>(t % 3);
    const SegmentInstance s = gen_segment_instance(rng, d, f, reg, 0.0, 1.6);
    const HypothesisStatus a = check_segment_re(s.x, s.c);
    const HypothesisStatus b = check_segment_norm(s.x, s.c);
    if (a.verdict == Verdict::Boundary || b.verdict == Verdict::Boundary) continue;
    ++compared;
    EXPECT_EQ(a.verdict, b.verdict) << "trial " << t;
  }
  EXPECT_GT(compared, 3900);
}

TEST(Classify, StrictRejectsBoundary) {
  Tolerance tol;
  EXPECT_TRUE(classify("h", 0.0, 1.0, tol).admissible());
  EXPECT_FALSE(classify("h", 0.0, 1.0, tol, true).admissible());
  EXPECT_EQ(classify("h", -1e-10, 1.0, tol).verdict, Verdict::Boundary);
  EXPECT_EQ(classify("h", -1e-8, 1.0, tol).verdict, Verdict::Fails);
  EXPECT_EQ(classify("h", -1e-8, 100.0, tol).verdict, Verdict::Boundary);
}
