#include "ipx/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ipx/bessel.hpp"
#include "ipx/gruss.hpp"
#include "ipx/harness.hpp"
#include "ipx/integral.hpp"
#include "ipx/schwarz.hpp"
#include "ipx/serialize.hpp"
#include "ipx/triangle.hpp"

namespace ipx {

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return 64;
    case ErrorCode::InputMismatch:
    case ErrorCode::FieldMismatch: return 65;
    case ErrorCode::UnknownTheorem: return 66;
    case ErrorCode::HypothesisViolated: return 67;
    case ErrorCode::NotFound: return 69;
    case ErrorCode::IoError: return 74;
    default: return 68;
  }
}

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kBoundary = 2;
constexpr int kUntrusted = 3;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

// --constraint contents are merged over --input
Json load_input(const std::string& input, const std::string& constraint) {
  Json doc = input.empty() ? Json::object() : read_json_file(input);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, input + ": expected a JSON object");
  if (!constraint.empty()) {
    Json c = read_json_file(constraint);
    if (!c.is_object()) throw Error(ErrorCode::ParseError, constraint + ": expected a JSON object");
    for (auto it = c.begin(); it != c.end(); ++it) doc[it.key()] = it.value();
  }
  return doc;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::IoError, "cannot write " + out_path);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kHolds;
    case Verdict::Fails: return kFails;
    case Verdict::Boundary: return kBoundary;
  }
  return kFails;
}

// FAILS dominates BOUNDARY dominates HOLDS.
Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
  if (a == Verdict::Boundary || b == Verdict::Boundary) return Verdict::Boundary;
  return Verdict::Holds;
}

struct CheckArgs {
  std::string input, constraint, out, csv;
};

int cmd_check(const CheckArgs& a, const Tolerance& tol, std::ostream& out) {
  const Json doc = load_input(a.input, a.constraint);
  const JsonReader rd = JsonReader::for_document(doc);
  Json result;
  Verdict verdict = Verdict::Holds;
  auto add = [&](const std::string& key, const HypothesisStatus& s) {
    result[key] = to_json(s);
    verdict = combine(verdict, s.verdict);
  };

  if (doc.contains("disc")) {
    add("disc", check_disc(rd.vector(JsonReader::at(doc, "x"), "x"), rd.disc(doc["disc"]), tol));
  } else if (doc.contains("segment")) {
    const Vector x = rd.vector(JsonReader::at(doc, "x"), "x");
    const SegmentConstraint c = rd.segment(doc["segment"]);
    add("segment_re", check_segment_re(x, c, tol));
    add("segment_norm", check_segment_norm(x, c, tol));
  } else if (doc.contains("family_segment") || doc.contains("family_disc")) {
    const Vector x = rd.vector(JsonReader::at(doc, "x"), "x");
    const OrthonormalFamily f = rd.family(JsonReader::at(doc, "family"), "family");
    result["family"] = to_json(f.validation());
    if (doc.contains("family_segment")) {
      const CoefficientPairSequence p = rd.pair(doc["family_segment"], "family_segment");
      add("family_segment_re", check_family_segment_re(x, f, p, tol));
      add("family_segment_norm", check_family_segment_norm(x, f, p, tol));
    } else {
      const Json& c = doc["family_disc"];
      add("family_disc", check_family_disc(x, f, rd.sequence(JsonReader::at(c, "lambda"), "lambda"),
                                           rd.real(JsonReader::at(c, "r"), "r"), tol));
    }
  } else if (doc.contains("pointwise_disc") || doc.contains("pointwise_segment")) {
    const WeightedMeasure m = rd.measure(JsonReader::at(doc, "measure"));
    const SampledFunction f = rd.function(JsonReader::at(doc, "f"), m, "f");
    const SampledFunction g = rd.function(JsonReader::at(doc, "g"), m, "g");
    PointwiseReport p;
    std::string key;
    if (doc.contains("pointwise_disc")) {
      key = "pointwise_disc";
      p = check_pointwise_disc(f, g, rd.real(JsonReader::at(doc[key], "r"), "r"), m, tol);
    } else {
      key = "pointwise_segment";
      const Json& c = doc[key];
      p = check_pointwise_segment(f, g, rd.scalar(JsonReader::at(c, "gamma"), "gamma"),
                                  rd.scalar(JsonReader::at(c, "Gamma"), "Gamma"), m, tol);
    }
    result[key] = to_json(p);
    verdict = combine(verdict, p.status.verdict);
    if (!a.csv.empty()) {
      std::ofstream csv(a.csv, std::ios::binary);
      if (!csv) throw Error(ErrorCode::IoError, "cannot write " + a.csv);
      write_margins_csv(csv, m, p);
    }
  } else {
    throw Error(ErrorCode::ParseError,
                "input needs one of disc, segment, family_disc, family_segment, pointwise_disc, "
                "pointwise_segment");
  }
  result["verdict"] = std::string(to_string(verdict));
  emit(result, a.out, out);
  return verdict_exit(verdict);
}

struct BoundArgs {
  std::string input, constraint, theorem, out;
  bool force = false;
  std::string reading = "symmetric";
};

const char* const kTheorems[] = {
    "schwarz-disc",     "schwarz-segment",   "schwarz-additive",  "schwarz-baselines",
    "triangle-disc",    "triangle-segment",  "gruss-disc",        "gruss-segment",
    "bessel-disc",      "bessel-segment",    "bessel-baselines",  "gruss-family-disc",
    "gruss-family-segment", "integral-disc", "integral-segment",  "cassel",
    "integral-gruss"};

int report_exit(const BoundReport& r, const Tolerance& tol) {
  if (!r.trusted) return kUntrusted;
  bool ok = r.holds(tol);
  for (const BoundReport& c : r.companions) ok = ok && c.holds(tol);
  return ok ? kHolds : kFails;
}

int baselines_exit(const std::vector<BaselineOutcome>& all, const Tolerance& tol) {
  int code = kHolds;
  for (const BaselineOutcome& b : all) {
    if (!b.report) continue;
    const int c = report_exit(*b.report, tol);
    if (c == kUntrusted) return kUntrusted;
    code = std::max(code, c);
  }
  return code;
}

int cmd_bound(const BoundArgs& a, const Tolerance& tol, std::ostream& out) {
  const std::string& t = a.theorem;
  if (std::find(std::begin(kTheorems), std::end(kTheorems), t) == std::end(kTheorems)) {
    throw Error(ErrorCode::UnknownTheorem, "unknown theorem '" + t + "'");
  }
  const Json doc = load_input(a.input, a.constraint);
  const JsonReader rd = JsonReader::for_document(doc);
  const EvalOptions opts{tol, a.force};
  auto vec = [&](const char* key) { return rd.vector(JsonReader::at(doc, key), key); };
  auto sca = [&](const char* key) { return rd.scalar(JsonReader::at(doc, key), key); };
  auto num = [&](const char* key) { return rd.real(JsonReader::at(doc, key), key); };
  auto fam = [&] { return rd.family(JsonReader::at(doc, "family"), "family"); };
  auto seq = [&](const char* key) { return rd.sequence(JsonReader::at(doc, key), key); };
  auto finish = [&](const BoundReport& r) {
    emit(to_json(r), a.out, out);
    return report_exit(r, tol);
  };
  auto finish_all = [&](const std::vector<BaselineOutcome>& all) {
    Json arr = Json::array();
    for (const auto& b : all) arr.push_back(to_json(b));
    emit(arr, a.out, out);
    return baselines_exit(all, tol);
  };

  if (t == "schwarz-disc") return finish(reverse_schwarz_disc(vec("x"), rd.disc(JsonReader::at(doc, "disc")), opts));
  if (t == "triangle-disc") return finish(reverse_triangle_disc(vec("x"), rd.disc(JsonReader::at(doc, "disc")), opts));
  if (t == "schwarz-segment" || t == "schwarz-additive" || t == "schwarz-baselines") {
    const Vector x = vec("x");
    const SegmentConstraint c = rd.segment(JsonReader::at(doc, "segment"));
    if (t == "schwarz-segment") return finish(reverse_schwarz_segment(x, c, opts));
    if (t == "schwarz-additive") return finish(additive_reverse_segment(x, c, opts));
    return finish_all(baseline_bounds(x, c, opts));
  }
  if (t == "triangle-segment") return finish(reverse_triangle_segment(vec("x"), vec("y"), num("m"), num("M"), opts));
  if (t == "gruss-disc") return finish(gruss_disc(vec("x"), vec("y"), vec("e"), num("r1"), num("r2"), opts));
  if (t == "gruss-segment") {
    return finish(gruss_segment(vec("x"), vec("y"), vec("e"), sca("a"), sca("A"), sca("b"), sca("B"), opts));
  }
  if (t == "bessel-disc") return finish(reverse_bessel_disc(vec("x"), fam(), seq("lambda"), num("r"), opts));
  if (t == "bessel-segment" || t == "bessel-baselines") {
    const CoefficientPairSequence p(seq("lower"), seq("upper"));
    if (t == "bessel-segment") return finish(reverse_bessel_segment(vec("x"), fam(), p, opts));
    return finish_all(baseline_bessel(vec("x"), fam(), p, opts));
  }
  if (t == "gruss-family-disc") {
    return finish(gruss_family_disc(vec("x"), vec("y"), fam(), seq("lambda"), seq("mu"), num("r1"), num("r2"), opts));
  }
  if (t == "gruss-family-segment") {
    return finish(gruss_family_segment(vec("x"), vec("y"), fam(), rd.pair(JsonReader::at(doc, "x_pair"), "x_pair"),
                                       rd.pair(JsonReader::at(doc, "y_pair"), "y_pair"), opts));
  }

  const WeightedMeasure m = rd.measure(JsonReader::at(doc, "measure"));
  auto fn = [&](const char* key) { return rd.function(JsonReader::at(doc, key), m, key); };
  if (t == "integral-disc") return finish(integral_reverse_schwarz_disc(fn("f"), fn("g"), num("r"), m, opts));
  if (t == "integral-segment") {
    return finish(integral_reverse_schwarz_segment(fn("f"), fn("g"), sca("gamma"), sca("Gamma"), m, opts));
  }
  if (t == "cassel") return finish(cassel(fn("f"), fn("g"), num("m"), num("M"), m, opts));

  GrussReading reading = GrussReading::Symmetric;
  const std::string r = doc.contains("reading") && doc["reading"].is_string() ? doc["reading"].get<std::string>() : a.reading;
  if (r == "literal") {
    reading = GrussReading::Literal;
  } else if (r != "symmetric") {
    throw Error(ErrorCode::ParseError, "reading must be symmetric or literal");
  }
  return finish(integral_gruss(fn("f"), fn("g"), fn("h"), sca("a"), sca("A"), sca("b"), sca("B"), m, opts, reading));
}

struct SweepArgs {
  std::string config, target, dims, field, out, csv;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<unsigned> jobs;
};

std::vector<std::size_t> parse_dims(const std::string& s) {
  std::vector<std::size_t> dims;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        dims.push_back(std::stoul(part));
      } else {
        const std::size_t lo = std::stoul(part.substr(0, dash));
        const std::size_t hi = std::stoul(part.substr(dash + 1));
        for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad --dims entry '" + part + "'");
    }
  }
  return dims;
}

SweepConfig make_config(const SweepArgs& a, const Tolerance& tol) {
  SweepConfig cfg;
  cfg.tol = tol;
  if (!a.config.empty()) {
    const Json j = read_json_file(a.config);
    try {
      if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("trials")) cfg.trials = j["trials"].get<std::size_t>();
      if (j.contains("dims")) cfg.dims = j["dims"].get<std::vector<std::size_t>>();
      if (j.contains("field")) cfg.field = parse_field_choice(j["field"].get<std::string>());
      if (j.contains("target")) cfg.target = j["target"].get<std::string>();
      if (j.contains("jobs")) cfg.jobs = j["jobs"].get<unsigned>();
      if (j.contains("slack")) cfg.slack = j["slack"].get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, a.config + ": " + e.what());
    }
  }
  if (a.seed) cfg.seed = *a.seed;
  if (a.trials) cfg.trials = *a.trials;
  if (a.jobs) cfg.jobs = *a.jobs;
  if (!a.dims.empty()) cfg.dims = parse_dims(a.dims);
  if (!a.field.empty()) cfg.field = parse_field_choice(a.field);
  if (!a.target.empty()) cfg.target = a.target;
  return cfg;
}

int cmd_sweep(const SweepArgs& a, const Tolerance& tol, std::ostream& out) {
  const SweepConfig cfg = make_config(a, tol);
  cfg.validate();
  std::string csv_path = a.csv;
  if (!a.out.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(a.out, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + a.out);
    if (csv_path.empty()) csv_path = (std::filesystem::path(a.out) / "sweep.csv").string();
  }

  Json summary{{"seed", cfg.seed},
               {"trials", cfg.trials},
               {"dims", cfg.dims},
               {"field", std::string(to_string(cfg.field))},
               {"target", cfg.target}};
  int code = kHolds;
  if (cfg.target == "incomparability") {
    const IncomparabilityResult r = incomparability_search(cfg);
    summary["re_smaller"] = to_json(r.re_smaller);
    summary["coeff_smaller"] = to_json(r.coeff_smaller);
  } else {
    std::ofstream csv;
    if (!csv_path.empty()) {
      csv.open(csv_path, std::ios::binary);
      if (!csv) throw Error(ErrorCode::IoError, "cannot write " + csv_path);
    }
    const auto sums = run_sweep(cfg, csv_path.empty() ? nullptr : &csv);
    if (csv.is_open() && !csv.flush()) throw Error(ErrorCode::IoError, "cannot write " + csv_path);
    summary["results"] = Json::array();
    for (const auto& s : sums) {
      summary["results"].push_back(to_json(s));
      if (!s.ok()) code = kFails;
    }
  }
  const std::string summary_path =
      a.out.empty() ? std::string() : (std::filesystem::path(a.out) / "summary.json").string();
  if (!summary_path.empty()) emit(summary, summary_path, out);
  emit(summary, "", out);
  return code;
}

struct SharpnessArgs {
  std::string target = "schwarz-disc", eps, out, csv;
};

int cmd_sharpness(const SharpnessArgs& a, const Tolerance& tol, std::ostream& out) {
  std::vector<double> eps;
  if (a.eps.empty()) {
    for (double e = 1e-1; e > 5e-7; e /= 10.0) eps.push_back(e);
  } else {
    std::stringstream ss(a.eps);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        eps.push_back(std::stod(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad --eps entry '" + part + "'");
      }
    }
  }
  SharpnessCurve c;
  if (a.target == "schwarz-disc") {
    c = sharpness_disc(eps, tol);
  } else if (a.target == "schwarz-segment") {
    c = sharpness_segment(eps, tol);
  } else {
    throw Error(ErrorCode::UnknownTheorem,
                "sharpness target must be schwarz-disc or schwarz-segment, got '" + a.target + "'");
  }
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv, std::ios::binary);
    if (!csv) throw Error(ErrorCode::IoError, "cannot write " + a.csv);
    csv << "epsilon,ratio,closed_form\n";
    for (std::size_t i = 0; i < c.ratios.size(); ++i) {
      csv << fmt::format("{:.17g},{:.17g},{:.17g}\n", c.epsilons[i], c.ratios[i], c.closed_form[i]);
    }
  }
  emit(to_json(c), a.out, out);
  return c.max_abs_error <= 1e-12 && c.bounded ? kHolds : kFails;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reverse inner-product inequality evaluator", "ipx"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test a hypothesis; exit 0 HOLDS, 1 FAILS, 2 BOUNDARY");
  c->add_option("--input", check.input, "JSON input")->required();
  c->add_option("--constraint", check.constraint, "JSON constraint merged over the input");
  c->add_option("--out", check.out, "Write the report here instead of stdout");
  c->add_option("--csv", check.csv, "Per-node margins (pointwise checks)");

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "Evaluate one bound; exit 0 holds, 1 violated, 3 untrusted");
  b->add_option("--theorem", bound.theorem, "Bound identifier")->required();
  b->add_option("--input", bound.input, "JSON input")->required();
  b->add_option("--constraint", bound.constraint, "JSON constraint merged over the input");
  b->add_flag("--force", bound.force, "Evaluate even when a hypothesis fails");
  b->add_option("--reading", bound.reading, "integral-gruss condition on g: symmetric or literal");
  b->add_option("--out", bound.out, "Write the report here instead of stdout");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Seeded random sweep; exit 0 iff no violations");
  s->add_option("--config", sweep.config, "JSON sweep configuration");
  s->add_option("--target", sweep.target, "Sweep target, all, equivalence, dominance or incomparability");
  s->add_option("--seed", sweep.seed, "RNG seed");
  s->add_option("--trials", sweep.trials, "Trials per target");
  s->add_option("--dims", sweep.dims, "Dimensions, e.g. 1-8 or 2,4");
  s->add_option("--field", sweep.field, "real, complex or both");
  s->add_option("--jobs", sweep.jobs, "Worker threads (output does not depend on it)");
  s->add_option("--out", sweep.out, "Directory for sweep.csv and summary.json");
  s->add_option("--csv", sweep.csv, "CSV path (overrides --out)");

  SharpnessArgs sharp;
  auto* h = app.add_subcommand("sharpness", "Sharpness curve; exit 0 iff it matches the closed form");
  h->add_option("--target", sharp.target, "schwarz-disc or schwarz-segment");
  h->add_option("--eps", sharp.eps, "Comma-separated epsilons in (0, 1)");
  h->add_option("--out", sharp.out, "Write the curve here instead of stdout");
  h->add_option("--csv", sharp.csv, "CSV of epsilon, ratio, closed form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return exit_code(ErrorCode::ParseError);
  }

  const Tolerance tol = Tolerance::from_env();
  try {
    if (c->parsed()) return cmd_check(check, tol, out);
    if (b->parsed()) return cmd_bound(bound, tol, out);
    if (s->parsed()) return cmd_sweep(sweep, tol, out);
    return cmd_sharpness(sharp, tol, out);
  } catch (const HypothesisError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    out << to_json(e.report()).dump(2) << "\n";
    return exit_code(e.code());
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace ipx
