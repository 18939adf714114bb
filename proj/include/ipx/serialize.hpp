#pragma once

#include <json.hpp>

#include "ipx/bessel.hpp"
#include "ipx/harness.hpp"
#include "ipx/integral.hpp"
#include "ipx/report.hpp"

namespace ipx {

using Json = nlohmann::ordered_json;

/// True when any scalar or vector in the document uses the [re, im] form.
/// A whole document is read over one field so mixed inputs are promoted.
bool document_is_complex(const Json& doc);

/// Reads values over a fixed field. Vectors are arrays of numbers or of
/// [re, im] pairs, scalars are numbers or [re, im] pairs. Malformed shapes
/// raise PARSE_ERROR; a complex value while reading over REAL raises
/// INPUT_MISMATCH.
class JsonReader {
 public:
  explicit JsonReader(Field field) : field_(field) {}
  static JsonReader for_document(const Json& doc) {
    return JsonReader(document_is_complex(doc) ? Field::Complex : Field::Real);
  }

  Field field() const noexcept { return field_; }

  Complex complex(const Json& j, std::string_view what) const;
  Scalar scalar(const Json& j, std::string_view what) const;
  double real(const Json& j, std::string_view what) const;
  Vector vector(const Json& j, std::string_view what) const;
  CoefficientSequence sequence(const Json& j, std::string_view what) const;
  CoefficientPairSequence pair(const Json& j, std::string_view what) const;  // {lower, upper}
  OrthonormalFamily family(const Json& j, std::string_view what) const;
  DiscConstraint disc(const Json& j) const;        // {a, r}
  SegmentConstraint segment(const Json& j) const;  // {gamma, Gamma, y}
  /// {nodes, weights, density} or {rule, interval: [lo, hi], n, density}
  /// where a rule-based density is a number or {"polynomial": [c0, c1, ...]}.
  WeightedMeasure measure(const Json& j) const;
  /// {values: [...]}, a bare array, or {"polynomial": [...]} sampled at the nodes.
  SampledFunction function(const Json& j, const WeightedMeasure& m, std::string_view what) const;

  /// Member lookup with PARSE_ERROR when absent.
  static const Json& at(const Json& obj, std::string_view key);

 private:
  Field field_;
};

Json to_json(Scalar s);
Json to_json(const Vector& v);
Json to_json(const HypothesisStatus& s);
Json to_json(const BoundReport& r);
Json to_json(const BaselineOutcome& b);
Json to_json(const FamilyValidation& v);
Json to_json(const SweepSummary& s);
Json to_json(const SharpnessCurve& c);
Json to_json(const PointwiseReport& p);
Json to_json(const IncomparabilityWitness& w);

/// Per-node margins as CSV: node,margin.
void write_margins_csv(std::ostream& out, const WeightedMeasure& m, const PointwiseReport& p);

}  // namespace ipx
