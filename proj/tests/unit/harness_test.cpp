#include "ipx/harness.hpp"

#include <set>
#include <sstream>

#include "test_util.hpp"

using namespace ipx;

TEST(Philox, KnownAnswers) {
  using P = Philox4x32;
  EXPECT_EQ(P::block({0, 0, 0, 0}, {0, 0}), (P::Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(P::block({~0u, ~0u, ~0u, ~0u}, {~0u, ~0u}),
            (P::Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(P::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (P::Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Stream, ReproducibleAndIndependent) {
  Stream a(42, 3), b(42, 3), c(42, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs = differs || x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(Stream, UniformRange) {
  Stream s(1, 1);
  for (int i = 0; i < 10000; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const std::uint64_t k = s.integer(3, 7);
    ASSERT_GE(k, 3u);
    ASSERT_LE(k, 7u);
  }
}

TEST(Sweep, TrialLayout) {
  SweepConfig cfg;
  cfg.dims = {2, 5};
  EXPECT_EQ(trial_dim(cfg, 0), 2u);
  EXPECT_EQ(trial_dim(cfg, 3), 5u);
  EXPECT_EQ(trial_field(cfg, 0), Field::Real);
  EXPECT_EQ(trial_field(cfg, 2), Field::Complex);
  cfg.field = FieldChoice::Complex;
  EXPECT_EQ(trial_field(cfg, 0), Field::Complex);
}

TEST(Sweep, ConfigValidation) {
  SweepConfig cfg;
  cfg.trials = 0;
  EXPECT_IPX_ERROR(cfg.validate(), ErrorCode::InputMismatch);
  cfg.trials = 1;
  cfg.dims = {};
  EXPECT_IPX_ERROR(cfg.validate(), ErrorCode::InputMismatch);
  EXPECT_IPX_ERROR(parse_field_choice("quaternion"), ErrorCode::ParseError);
}

TEST(Sweep, TargetResolution) {
  EXPECT_EQ(resolve_targets("all").size(), 25u);
  EXPECT_EQ(resolve_targets("equivalence").size(), 2u);
  EXPECT_EQ(resolve_targets("dominance").size(), 2u);
  EXPECT_EQ(resolve_targets("gruss-disc").size(), 1u);
  EXPECT_IPX_ERROR(resolve_targets("nope"), ErrorCode::UnknownTheorem);
  std::set<std::string_view> names;
  for (const auto& t : sweep_targets()) names.insert(t.name);
  EXPECT_EQ(names.size(), sweep_targets().size());
}

TEST(Sweep, SmallRunsClean) {
  SweepConfig cfg;
  cfg.trials = 400;
  for (const char* group : {"all", "equivalence", "dominance", "integral-consistency"}) {
    cfg.target = group;
    for (const SweepSummary& s : run_sweep(cfg)) {
      EXPECT_TRUE(s.ok()) << s.target << " violations " << s.violations << " errors " << s.errors
                          << " inadmissible " << s.inadmissible;
    }
  }
}

TEST(Sweep, TrialIsPureFunction) {
  SweepConfig cfg;
  const TargetInfo t = resolve_targets("bessel-segment").front();
  const TrialOutcome a = run_trial(cfg, t, 123);
  const TrialOutcome b = run_trial(cfg, t, 123);
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_EQ(a.lhs, b.lhs);
  EXPECT_NE(a.digest, run_trial(cfg, t, 124).digest);
}

TEST(Sweep, CsvIndependentOfJobs) {
  SweepConfig cfg;
  cfg.trials = 300;
  std::ostringstream one, four;
  run_sweep(cfg, &one);
  cfg.jobs = 4;
  run_sweep(cfg, &four);
  EXPECT_EQ(one.str(), four.str());
  EXPECT_EQ(one.str().rfind("target,trial,dim,field,digest", 0), 0u);
}

TEST(Sweep, DominanceHasStrictComplexWitness) {
  SweepConfig cfg;
  cfg.trials = 200;
  cfg.field = FieldChoice::Complex;
  cfg.target = "dominance";
  for (const SweepSummary& s : run_sweep(cfg)) {
    EXPECT_TRUE(s.ok());
    EXPECT_GT(s.strict, 0u);
    EXPECT_TRUE(s.witness);
  }
}

TEST(Sharpness, Disc) {
  const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const SharpnessCurve c = sharpness_disc(eps);
  EXPECT_LE(c.max_abs_error, 1e-12);
  EXPECT_TRUE(c.monotone);
  EXPECT_TRUE(c.bounded);
  EXPECT_GT(c.ratios.back(), 0.999999);
}

TEST(Sharpness, Segment) {
  const std::vector<double> eps{1e-1, 1e-2, 1e-3};
  const SharpnessCurve c = sharpness_segment(eps);
  EXPECT_LE(c.max_abs_error, 1e-12);
  EXPECT_TRUE(c.bounded);
  for (std::size_t i = 0; i < eps.size(); ++i) EXPECT_NEAR(c.ratios[i], 1 - eps[i] * eps[i], 1e-12);
}

TEST(Sharpness, BadEpsilon) {
  const std::vector<double> bad{0.5, 1.0};
  EXPECT_IPX_ERROR(sharpness_disc(bad), ErrorCode::BadEpsilon);
  const std::vector<double> neg{-0.1};
  EXPECT_IPX_ERROR(sharpness_segment(neg), ErrorCode::BadEpsilon);
}

TEST(Incomparability, FindsBothOrders) {
  SweepConfig cfg;
  cfg.trials = 10000;
  const IncomparabilityResult r = incomparability_search(cfg);
  EXPECT_LT(r.re_smaller.middle_re, r.re_smaller.middle_coeff);
  EXPECT_LT(r.coeff_smaller.middle_coeff, r.coeff_smaller.middle_re);
}

TEST(Generators, InstancesAreAdmissible) {
  Stream rng(61, 1);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 1 + t % 8;
    const Field f = t % 2 ? Field::Complex : Field::Real;
    const DiscInstance di = gen_disc_instance(rng, d, f, static_cast<DiscCase>(t % 3), 0.01);
    EXPECT_EQ(check_disc(di.x, di.c).verdict, Verdict::Holds);
    EXPECT_EQ(disc_case(di.c), static_cast<DiscCase>(t % 3));
    const SegmentInstance si = gen_segment_instance(rng, d, f, static_cast<Regime>(t % 3), 0.01);
    EXPECT_EQ(check_segment_norm(si.x, si.c).verdict, Verdict::Holds);
    EXPECT_EQ(segment_regime(si.c).regime, static_cast<Regime>(t % 3));
  }
}
