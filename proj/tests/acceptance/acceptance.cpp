// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownUnattainable, each of which is still evaluated and printed as FAIL.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ipx/harness.hpp"
#include "ipx/integral.hpp"

using namespace ipx;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240501;
constexpr std::size_t kSuiteTrials = 100000;

// 4: 1 - eps^2 at eps = 1e-3 is exactly 0.999999, so "exceeds 0.999999"
// cannot hold for the exact ratio, let alone its rounded value.
const std::set<int> kKnownUnattainable{4};

struct Outcome {
  bool pass;
  std::string detail;
};

struct Shared {
  fs::path csv_a;
  std::vector<SweepSummary> suite;
};

SweepConfig base_config() {
  SweepConfig cfg;
  cfg.seed = kSeed;
  cfg.trials = kSuiteTrials;
  cfg.dims = {1, 2, 3, 4, 5, 6, 7, 8};
  cfg.field = FieldChoice::Both;
  return cfg;
}

const SweepSummary* find(const std::vector<SweepSummary>& all, std::string_view name) {
  for (const auto& s : all) {
    if (s.target == name) return &s;
  }
  return nullptr;
}

Outcome inequality_suite(Shared& sh) {
  SweepConfig cfg = base_config();
  cfg.target = "all";
  std::ofstream csv(sh.csv_a, std::ios::binary);
  const auto t0 = std::chrono::steady_clock::now();
  sh.suite = run_sweep(cfg, &csv);
  csv.close();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::size_t violations = 0, errors = 0, inadmissible = 0, trials = 0;
  double worst = 0.0;
  std::string worst_target;
  for (const auto& s : sh.suite) {
    violations += s.violations;
    errors += s.errors;
    inadmissible += s.inadmissible;
    trials += s.trials;
    if (s.min_scaled_slack < worst) {
      worst = s.min_scaled_slack;
      worst_target = s.target;
    }
  }
  const bool pass = sh.suite.size() == 25 && trials == 25 * kSuiteTrials && violations == 0 &&
                    errors == 0 && inadmissible == 0 && worst >= -1e-9 && secs < 60.0;
  return {pass, fmt::format("{} targets x {} trials, violations {}, errors {}, inadmissible {}, "
                            "min slack/scale {:.3g}{}, {:.1f} s (limit 60 s)",
                            sh.suite.size(), kSuiteTrials, violations, errors, inadmissible, worst,
                            worst_target.empty() ? "" : " (" + worst_target + ")", secs)};
}

Outcome equivalence(Shared&) {
  SweepConfig cfg = base_config();
  cfg.target = "equivalence";
  const auto all = run_sweep(cfg);
  std::string detail;
  bool pass = all.size() == 2;
  for (const auto& s : all) {
    pass = pass && s.violations == 0 && s.errors == 0 && s.trials == kSuiteTrials;
    detail += fmt::format("{}: {} disagreements in {} ", s.target, s.violations, s.trials);
  }
  return {pass, detail};
}

Outcome sharpness_disc_criterion(Shared&) {
  const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const SharpnessCurve c = sharpness_disc(eps);
  const double last = c.ratios.back();
  const bool pass = c.max_abs_error <= 1e-12 && last > 0.999999;
  return {pass, fmt::format("max |ratio - 1/(1+eps)| = {:.3g} (<= 1e-12), ratio(1e-6) = {:.17g} (> 0.999999)",
                            c.max_abs_error, last)};
}

Outcome sharpness_segment_criterion(Shared&) {
  const std::vector<double> eps{1e-1, 1e-2, 1e-3};
  const SharpnessCurve c = sharpness_segment(eps);
  const double r = c.ratios.back();
  const bool closed_form = c.max_abs_error <= 1e-12;
  const bool exceeds = r > 0.999999;
  return {closed_form && exceeds,
          fmt::format("max |ratio - (1-eps^2)| = {:.3g} (<= 1e-12: {}), ratio(1e-3) = {:.17g}, "
                      "exceeds 0.999999: {}; in exact arithmetic 1 - (1e-3)^2 = 0.999999 equals the "
                      "threshold, so strict excess is unattainable",
                      c.max_abs_error, closed_form ? "yes" : "no", r, exceeds ? "yes" : "no")};
}

Outcome dominance(Shared&) {
  SweepConfig cfg = base_config();
  cfg.target = "dominance";
  const auto all = run_sweep(cfg);
  bool pass = all.size() == 2;
  std::string detail;
  for (const auto& s : all) {
    pass = pass && s.violations == 0 && s.errors == 0;
    detail += fmt::format("{}: {} violations, {} strict; ", s.target, s.violations, s.strict);
  }
  // strictly dominating complex instance
  bool found = false;
  for (const TargetInfo& t : resolve_targets("dominance")) {
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const TrialOutcome o = run_trial(cfg, t, i);
      if (o.strict && o.field == Field::Complex) {
        detail += fmt::format("complex witness {} trial {} dim {} (claimed {:.6g} < baseline {:.6g}) ",
                              t.name, i, o.dim, o.lhs, o.rhs);
        found = true;
        break;
      }
    }
  }
  return {pass && found, detail};
}

Outcome incomparability(Shared&) {
  SweepConfig cfg = base_config();
  cfg.trials = 10000;
  try {
    const IncomparabilityResult r = incomparability_search(cfg);
    const bool pass = r.re_smaller.middle_re < r.re_smaller.middle_coeff &&
                      r.coeff_smaller.middle_coeff < r.coeff_smaller.middle_re;
    return {pass, fmt::format("re-form smaller at trial {} ({:.6g} < {:.6g}), coefficient-form smaller "
                              "at trial {} ({:.6g} < {:.6g})",
                              r.re_smaller.trial, r.re_smaller.middle_re, r.re_smaller.middle_coeff,
                              r.coeff_smaller.trial, r.coeff_smaller.middle_coeff,
                              r.coeff_smaller.middle_re)};
  } catch (const Error& e) {
    return {false, fmt::format("{}: {}", to_string(e.code()), e.what())};
  }
}

Outcome path_equality(Shared& sh) {
  double bessel = 0.0;
  bool have = true;
  for (const char* name : {"bessel-segment", "bessel-segment-defect"}) {
    const SweepSummary* s = find(sh.suite, name);
    if (!s) {
      have = false;
      continue;
    }
    bessel = std::max(bessel, s->max_path_deviation);
  }

  // cassel against its segment re-evaluation on random sandwiches
  Stream rng(kSeed, 900);
  double cas = 0.0;
  const std::size_t calls = 10000;
  for (std::size_t t = 0; t < calls; ++t) {
    const std::size_t n = 1 + t % 16;
    const WeightedMeasure m = make_measure(t % 2 ? QuadratureRule::GaussLegendre : QuadratureRule::UniformMidpoint,
                                           0.0, 1.0 + rng.uniform(), n,
                                           [c = rng.uniform(0.0, 2.0)](double s) { return 1.0 + c * s; });
    const double lo = rng.uniform(0.1, 2.0);
    const double hi = lo + rng.uniform(0.05, 3.0);
    std::vector<double> g(n), f(n);
    for (std::size_t k = 0; k < n; ++k) {
      g[k] = rng.uniform(0.1, 3.0);
      f[k] = g[k] * rng.uniform(lo, hi);
    }
    const BoundReport r = cassel(SampledFunction::real(f), SampledFunction::real(g), lo, hi, m);
    cas = std::max(cas, r.path_deviation.value_or(INFINITY));
  }
  const bool pass = have && bessel <= 1e-12 && cas <= 1e-12;
  return {pass, fmt::format("bessel segment runs max deviation {:.3g}, cassel max deviation {:.3g} over {} "
                            "calls (<= 1e-12)",
                            bessel, cas, calls)};
}

Outcome integral_oracle(Shared&) {
  const WeightedMeasure m12 = make_measure(QuadratureRule::GaussLegendre, 1.0, 2.0, 16);
  const BoundReport c = cassel(SampledFunction::sample(m12, [](double s) { return s; }),
                               SampledFunction::sample(m12, [](double) { return 1.0; }), 1.0, 2.0, m12);
  const WeightedMeasure m01 = make_measure(QuadratureRule::GaussLegendre, 0.0, 1.0, 16);
  const BoundReport g = integral_gruss(SampledFunction::sample(m01, [](double s) { return 1 + 0.2 * s; }),
                                       SampledFunction::sample(m01, [](double s) { return 1 - 0.2 * s; }),
                                       SampledFunction::sample(m01, [](double) { return 1.0; }), 1.0, 1.2,
                                       0.8, 1.0, m01);
  const double e1 = std::abs(c.lhs - 7.0 / 3.0);
  const double e2 = std::abs(c.rhs - 81.0 / 32.0);
  const double e3 = std::abs(g.lhs - 1.0 / 300.0);
  const bool pass = e1 <= 1e-10 && e2 <= 1e-10 && e3 <= 1e-10;
  return {pass, fmt::format("cassel lhs {:.17g} (err {:.2g}), rhs {:.17g} (err {:.2g}); gruss lhs {:.17g} "
                            "(err {:.2g})",
                            c.lhs, e1, c.rhs, e2, g.lhs, e3)};
}

Outcome consistency(Shared&) {
  SweepConfig cfg = base_config();
  cfg.trials = 1000;
  cfg.target = "integral-consistency";
  const auto all = run_sweep(cfg);
  const SweepSummary& s = all.front();
  const bool pass = s.violations == 0 && s.errors == 0 && s.max_path_deviation <= 1e-12;
  return {pass, fmt::format("{} trials, {} mismatches, max relative deviation {:.3g} (<= 1e-12)", s.trials,
                            s.violations, s.max_path_deviation)};
}

bool same_bytes(const fs::path& a, const fs::path& b, std::uintmax_t& size) {
  size = fs::file_size(a);
  if (size != fs::file_size(b)) return false;
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  std::vector<char> ba(1 << 20), bb(1 << 20);
  while (fa && fb) {
    fa.read(ba.data(), static_cast<std::streamsize>(ba.size()));
    fb.read(bb.data(), static_cast<std::streamsize>(bb.size()));
    if (fa.gcount() != fb.gcount() || !std::equal(ba.begin(), ba.begin() + fa.gcount(), bb.begin())) {
      return false;
    }
  }
  return true;
}

Outcome determinism(Shared& sh) {
  SweepConfig cfg = base_config();
  cfg.target = "all";
  cfg.jobs = 4;
  const fs::path b = fs::path(sh.csv_a).replace_extension(".jobs4.csv");
  {
    std::ofstream csv(b, std::ios::binary);
    run_sweep(cfg, &csv);
  }
  std::uintmax_t size = 0;
  const bool pass = fs::exists(sh.csv_a) && same_bytes(sh.csv_a, b, size);
  fs::remove(b);
  return {pass, fmt::format("full sweep CSV with --jobs 1 and --jobs 4: {} ({} bytes)",
                            pass ? "byte-identical" : "DIFFERENT", size)};
}

}  // namespace

int main() {
  Shared sh;
  sh.csv_a = fs::temp_directory_path() / fmt::format("ipx_acceptance_{}.csv", kSeed);

  const std::vector<std::pair<std::string, std::function<Outcome(Shared&)>>> criteria{
      {"inequality suite", inequality_suite},
      {"equivalence of hypothesis forms", equivalence},
      {"sharpness, disc constant", sharpness_disc_criterion},
      {"sharpness, segment quarter", sharpness_segment_criterion},
      {"dominance over baselines", dominance},
      {"incomparability of refined baselines", incomparability},
      {"path equality", path_equality},
      {"integral oracle", integral_oracle},
      {"discrete-integral consistency", consistency},
      {"determinism", determinism},
  };

  int unexpected = 0, failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Outcome o;
    try {
      o = criteria[i].second(sh);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool known = kKnownUnattainable.count(id) > 0;
    fmt::print("{} [{:>2}] {}: {}{}\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail,
               !o.pass && known ? " [known unattainable]" : "");
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      if (!known) ++unexpected;
    }
  }
  std::error_code ec;
  fs::remove(sh.csv_a, ec);
  fmt::print("{} of {} criteria passed; {} unexpected failure(s)\n", criteria.size() - failed, criteria.size(),
             unexpected);
  return unexpected == 0 ? 0 : 1;
}
