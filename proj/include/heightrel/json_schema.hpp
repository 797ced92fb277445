#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "heightrel/elliptic.hpp"
#include "heightrel/endo_algebra.hpp"
#include "heightrel/height_relations.hpp"
#include "heightrel/neron_tate.hpp"

namespace heightrel {

using Json = nlohmann::ordered_json;

/// Input rejected by strict schema validation; carries the JSON path.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string path, const std::string& message)
      : std::runtime_error(message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace schema {

/// Rejects unknown keys and reports missing required ones.
void check_keys(const Json& j, const std::string& path, const std::vector<std::string>& required,
                const std::vector<std::string>& optional);

Rational get_rational(const Json& j, const std::string& path);
Int get_integer(const Json& j, const std::string& path);
long get_count(const Json& j, const std::string& path, long min_value);
double get_double(const Json& j, const std::string& path);
std::string get_string(const Json& j, const std::string& path);

InvolutiveAlgebra parse_algebra(const Json& j, const std::string& path);
NumberField parse_field(const Json& j, const std::string& path);
FieldElement parse_field_element(const Json& j, const std::string& path, const NumberField& F);
EllipticCurveModel parse_curve(const Json& j, const std::string& path, const NumberField& F);
CurvePoint parse_point(const Json& j, const std::string& path, const EllipticCurveModel& curve);
EndoMap parse_endo(const Json& j, const std::string& path, const NumberField& F);
RelationSet parse_relation_set(const Json& j, const std::string& path);

struct CurveSetup {
  NumberField field;
  EllipticCurveModel curve;
  std::vector<CurvePoint> points;
  std::vector<EndoMap> endos;
  HeightOptions opts;
};

/// For the height/gram/verify-adjoint commands; endos only when allow_endos.
CurveSetup parse_curve_setup(const Json& j, bool allow_endos);

Json field_element_to_json(const NumberField& F, const FieldElement& x);
Json matrix_to_json(const QMatrix& m);
Json relation_to_json(const IntegerVector& v);

}  // namespace schema

}  // namespace heightrel
