#include "ipx/serialize.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>

namespace ipx {

namespace {

bool is_pair(const Json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

bool any_pair_element(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& e : j) {
    if (e.is_array()) return true;
  }
  return false;
}

bool function_is_complex(const Json& j) {
  if (j.is_object() && j.contains("values")) return any_pair_element(j["values"]);
  return any_pair_element(j);
}

constexpr std::string_view kVectorKeys[] = {"x", "y", "e"};
constexpr std::string_view kScalarKeys[] = {"gamma", "Gamma", "a", "A", "b", "B"};
constexpr std::string_view kSequenceKeys[] = {"lambda", "mu", "lower", "upper"};
constexpr std::string_view kFunctionKeys[] = {"f", "g", "h"};

template <std::size_t N>
bool one_of(std::string_view key, const std::string_view (&keys)[N]) {
  for (std::string_view k : keys) {
    if (k == key) return true;
  }
  return false;
}

bool scan(const Json& obj, bool in_disc) {
  if (!obj.is_object()) return false;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (in_disc && key == "a") {
      if (any_pair_element(v)) return true;
    } else if (one_of(key, kVectorKeys)) {
      if (any_pair_element(v)) return true;
    } else if (one_of(key, kScalarKeys)) {
      if (v.is_array()) return true;
    } else if (one_of(key, kSequenceKeys)) {
      if (any_pair_element(v)) return true;
    } else if (one_of(key, kFunctionKeys)) {
      if (function_is_complex(v)) return true;
    } else if (key == "family") {
      if (v.is_array()) {
        for (const Json& member : v) {
          if (any_pair_element(member)) return true;
        }
      }
    } else if (v.is_object()) {
      if (scan(v, key == "disc")) return true;
    }
  }
  return false;
}

[[noreturn]] void parse_error(std::string_view what, std::string_view problem) {
  throw Error(ErrorCode::ParseError, fmt::format("{}: {}", what, problem));
}

std::vector<double> number_array(const Json& j, std::string_view what) {
  if (!j.is_array()) parse_error(what, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& e : j) {
    if (!e.is_number()) parse_error(what, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

double eval_polynomial(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

bool document_is_complex(const Json& doc) { return scan(doc, false); }

const Json& JsonReader::at(const Json& obj, std::string_view key) {
  if (!obj.is_object()) parse_error(key, "expected an enclosing object");
  auto it = obj.find(std::string(key));
  if (it == obj.end()) parse_error(key, "missing");
  return *it;
}

Complex JsonReader::complex(const Json& j, std::string_view what) const {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (is_pair(j)) {
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (field_ == Field::Real) {
      throw Error(ErrorCode::InputMismatch, fmt::format("{}: complex value in a real input", what));
    }
    return z;
  }
  parse_error(what, "expected a number or an [re, im] pair");
}

Scalar JsonReader::scalar(const Json& j, std::string_view what) const {
  return {field_, complex(j, what)};
}

double JsonReader::real(const Json& j, std::string_view what) const {
  if (!j.is_number()) parse_error(what, "expected a real number");
  return j.get<double>();
}

Vector JsonReader::vector(const Json& j, std::string_view what) const {
  if (!j.is_array() || j.empty()) parse_error(what, "expected a nonempty array");
  std::vector<Complex> coords;
  coords.reserve(j.size());
  for (const Json& e : j) coords.push_back(complex(e, what));
  return {field_, std::move(coords)};
}

CoefficientSequence JsonReader::sequence(const Json& j, std::string_view what) const {
  if (!j.is_array() || j.empty()) parse_error(what, "expected a nonempty array of scalars");
  std::vector<Complex> v;
  for (const Json& e : j) v.push_back(complex(e, what));
  return {field_, std::move(v)};
}

CoefficientPairSequence JsonReader::pair(const Json& j, std::string_view what) const {
  return {sequence(at(j, "lower"), fmt::format("{}.lower", what)),
          sequence(at(j, "upper"), fmt::format("{}.upper", what))};
}

OrthonormalFamily JsonReader::family(const Json& j, std::string_view what) const {
  if (!j.is_array()) parse_error(what, "expected an array of vectors");
  std::vector<Vector> members;
  for (const Json& e : j) members.push_back(vector(e, what));
  if (members.empty()) throw Error(ErrorCode::EmptyFamily, fmt::format("{}: empty family", what));
  return OrthonormalFamily(std::move(members));
}

DiscConstraint JsonReader::disc(const Json& j) const {
  return {vector(at(j, "a"), "disc.a"), real(at(j, "r"), "disc.r")};
}

SegmentConstraint JsonReader::segment(const Json& j) const {
  return {scalar(at(j, "gamma"), "segment.gamma"), scalar(at(j, "Gamma"), "segment.Gamma"),
          vector(at(j, "y"), "segment.y")};
}

WeightedMeasure JsonReader::measure(const Json& j) const {
  if (!j.is_object()) parse_error("measure", "expected an object");
  if (j.contains("rule")) {
    const std::string rule = j["rule"].is_string() ? j["rule"].get<std::string>() : "";
    QuadratureRule kind;
    if (rule == "gauss_legendre") {
      kind = QuadratureRule::GaussLegendre;
    } else if (rule == "uniform_midpoint") {
      kind = QuadratureRule::UniformMidpoint;
    } else {
      parse_error("measure.rule", "expected gauss_legendre or uniform_midpoint");
    }
    const auto interval = number_array(at(j, "interval"), "measure.interval");
    if (interval.size() != 2) parse_error("measure.interval", "expected [lo, hi]");
    const Json& n = at(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 0) {
      parse_error("measure.n", "expected a nonnegative integer");
    }
    std::function<double(double)> density = [](double) { return 1.0; };
    if (j.contains("density")) {
      const Json& d = j["density"];
      if (d.is_number()) {
        const double c = d.get<double>();
        density = [c](double) { return c; };
      } else if (d.is_object() && d.contains("polynomial")) {
        auto coeffs = number_array(d["polynomial"], "measure.density.polynomial");
        density = [coeffs](double t) { return eval_polynomial(coeffs, t); };
      } else {
        parse_error("measure.density", "expected a number or {\"polynomial\": [...]}");
      }
    }
    return make_measure(kind, interval[0], interval[1], n.get<std::size_t>(), density);
  }
  return WeightedMeasure(number_array(at(j, "nodes"), "measure.nodes"),
                         number_array(at(j, "weights"), "measure.weights"),
                         number_array(at(j, "density"), "measure.density"));
}

SampledFunction JsonReader::function(const Json& j, const WeightedMeasure& m,
                                     std::string_view what) const {
  SampledFunction f;
  f.field = field_;
  if (j.is_object() && j.contains("polynomial")) {
    const auto coeffs = number_array(j["polynomial"], what);
    for (double s : m.nodes()) f.values.emplace_back(eval_polynomial(coeffs, s), 0.0);
    return f;
  }
  const Json& values = j.is_object() ? at(j, "values") : j;
  if (!values.is_array()) parse_error(what, "expected sampled values");
  for (const Json& e : values) f.values.push_back(complex(e, what));
  return f;
}

Json to_json(Scalar s) {
  if (s.field() == Field::Real) return number(s.re());
  return Json::array({number(s.re()), number(s.im())});
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const HypothesisStatus& s) {
  return {{"label", s.label},
          {"verdict", std::string(to_string(s.verdict))},
          {"margin", number(s.margin)},
          {"scale", number(s.scale)},
          {"strict", s.strict}};
}

Json to_json(const BoundReport& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["case_tag"] = r.case_tag;
  j["hypothesis"] = Json::array();
  for (const auto& h : r.hypothesis) j["hypothesis"].push_back(to_json(h));
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["slack"] = number(r.slack);
  j["tightness"] = r.tightness ? number(*r.tightness) : Json(nullptr);
  j["intermediate"] = Json::array();
  for (const auto& t : r.intermediate) j["intermediate"].push_back({{"label", t.label}, {"value", number(t.value)}});
  if (!r.details.empty()) {
    j["details"] = Json::object();
    for (const auto& t : r.details) j["details"][t.label] = number(t.value);
  }
  if (r.ratio_bound) j["ratio_bound"] = {{"lhs", number(r.ratio_bound->lhs)}, {"rhs", number(r.ratio_bound->rhs)}};
  if (r.path_deviation) j["path_deviation"] = number(*r.path_deviation);
  if (!r.companions.empty()) {
    j["companions"] = Json::array();
    for (const auto& c : r.companions) j["companions"].push_back(to_json(c));
  }
  j["trusted"] = r.trusted;
  j["scale"] = number(r.scale);
  return j;
}

Json to_json(const BaselineOutcome& b) {
  if (b.report) return to_json(*b.report);
  return {{"theorem_id", b.theorem_id}, {"error", std::string(to_string(*b.error))}};
}

Json to_json(const FamilyValidation& v) {
  return {{"max_deviation", number(v.max_deviation)},
          {"worst_row", v.worst_row},
          {"worst_col", v.worst_col},
          {"within_dimension", v.within_dimension},
          {"pass", v.pass}};
}

Json to_json(const SweepSummary& s) {
  Json j{{"target", s.target},
         {"trials", s.trials},
         {"violations", s.violations},
         {"inadmissible", s.inadmissible},
         {"errors", s.errors},
         {"strict", s.strict},
         {"max_path_deviation", number(s.max_path_deviation)},
         {"min_scaled_slack", number(s.min_scaled_slack)}};
  if (s.witness) j["witness"] = *s.witness;
  return j;
}

Json to_json(const SharpnessCurve& c) {
  Json points = Json::array();
  for (std::size_t i = 0; i < c.ratios.size(); ++i) {
    points.push_back({{"epsilon", number(c.epsilons[i])},
                      {"ratio", number(c.ratios[i])},
                      {"closed_form", number(c.closed_form[i])}});
  }
  return {{"target", c.target},         {"points", points},
          {"limit_claim", c.limit_claim}, {"max_abs_error", number(c.max_abs_error)},
          {"monotone", c.monotone},     {"bounded", c.bounded}};
}

Json to_json(const PointwiseReport& p) {
  Json j = to_json(p.status);
  j["nodes_checked"] = p.node_margins.size();
  j["node_margins"] = Json::array();
  for (double m : p.node_margins) j["node_margins"].push_back(number(m));
  if (p.sandwich) j["sandwich"] = *p.sandwich;
  return j;
}

Json to_json(const IncomparabilityWitness& w) {
  Json family = Json::array();
  for (const Vector& e : w.instance.family.members()) family.push_back(to_json(e));
  Json lower = Json::array(), upper = Json::array();
  for (std::size_t i = 0; i < w.instance.pair.size(); ++i) {
    lower.push_back(to_json(w.instance.pair.lower[i]));
    upper.push_back(to_json(w.instance.pair.upper[i]));
  }
  return {{"trial", w.trial},
          {"x", to_json(w.instance.x)},
          {"family", family},
          {"lower", lower},
          {"upper", upper},
          {"middle_re", number(w.middle_re)},
          {"middle_coeff", number(w.middle_coeff)}};
}

void write_margins_csv(std::ostream& out, const WeightedMeasure& m, const PointwiseReport& p) {
  out << "node,margin\n";
  for (std::size_t k = 0; k < p.node_margins.size(); ++k) {
    out << fmt::format("{:.17g},{:.17g}\n", m.nodes()[k], p.node_margins[k]);
  }
}

}  // namespace ipx
