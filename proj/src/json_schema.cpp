#include "heightrel/json_schema.hpp"

#include <algorithm>

namespace heightrel::schema {

void check_keys(const Json& j, const std::string& path, const std::vector<std::string>& required,
                const std::vector<std::string>& optional) {
  if (!j.is_object()) throw ValidationError(path, "expected an object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw ValidationError(path + "." + key, "unknown key");
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) throw ValidationError(path + "." + key, "missing required key");
  }
}

Rational get_rational(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path, e.what());
  }
  throw ValidationError(path, "expected an exact rational (integer or decimal string)");
}

Int get_integer(const Json& j, const std::string& path) {
  Rational q = get_rational(j, path);
  if (q.get_den() != 1) throw ValidationError(path, "expected an integer");
  return q.get_num();
}

long get_count(const Json& j, const std::string& path, long min_value) {
  if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
  long v = static_cast<long>(j.get<long long>());
  if (v < min_value)
    throw ValidationError(path, "value must be at least " + std::to_string(min_value));
  return v;
}

double get_double(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ValidationError(path, "expected a number");
  return j.get<double>();
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

namespace {

AlgebraElement parse_coords(const Json& j, const std::string& path, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ValidationError(path, "expected an array of " + std::to_string(dim) + " rationals");
  std::vector<Rational> coords;
  for (size_t i = 0; i < j.size(); ++i)
    coords.push_back(get_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return AlgebraElement{std::move(coords)};
}

}  // namespace

InvolutiveAlgebra parse_algebra(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path, "expected an algebra object");
  if (j.contains("quadratic")) {
    check_keys(j, path, {"quadratic"}, {});
    const Json& q = j["quadratic"];
    check_keys(q, path + ".quadratic", {"D", "involution"}, {});
    Int D = get_integer(q["D"], path + ".quadratic.D");
    std::string inv = get_string(q["involution"], path + ".quadratic.involution");
    QuadraticInvolution kind;
    if (inv == "trivial")
      kind = QuadraticInvolution::trivial;
    else if (inv == "conjugation")
      kind = QuadraticInvolution::conjugation;
    else
      throw ValidationError(path + ".quadratic.involution",
                            "expected \"trivial\" or \"conjugation\"");
    try {
      return InvolutiveAlgebra::quadratic_field(D, kind);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(path + ".quadratic", e.what());
    }
  }
  if (j.contains("quaternion")) {
    check_keys(j, path, {"quaternion"}, {});
    const Json& q = j["quaternion"];
    check_keys(q, path + ".quaternion", {"a", "b", "involution"}, {"u"});
    Rational a = get_rational(q["a"], path + ".quaternion.a");
    Rational b = get_rational(q["b"], path + ".quaternion.b");
    std::string inv = get_string(q["involution"], path + ".quaternion.involution");
    try {
      if (inv == "canonical") {
        if (q.contains("u"))
          throw ValidationError(path + ".quaternion.u",
                                "u is only meaningful for the orthogonal involution");
        return InvolutiveAlgebra::quaternion(a, b, QuaternionInvolution::canonical);
      }
      if (inv == "orthogonal") {
        if (q.contains("u")) {
          AlgebraElement u = parse_coords(q["u"], path + ".quaternion.u", 4);
          return InvolutiveAlgebra::quaternion(a, b, QuaternionInvolution::orthogonal, &u);
        }
        return InvolutiveAlgebra::quaternion(a, b, QuaternionInvolution::orthogonal);
      }
    } catch (const std::invalid_argument& e) {
      throw ValidationError(path + ".quaternion", e.what());
    }
    throw ValidationError(path + ".quaternion.involution",
                          "expected \"canonical\" or \"orthogonal\"");
  }
  // raw structure constants
  check_keys(j, path, {"dim", "structure_constants", "unit", "involution"}, {"label"});
  long dim = get_count(j["dim"], path + ".dim", 1);
  const Json& sc = j["structure_constants"];
  if (!sc.is_array() || sc.size() != static_cast<size_t>(dim) * dim * dim)
    throw ValidationError(path + ".structure_constants",
                          "expected dim^3 = " + std::to_string(dim * dim * dim) + " entries");
  std::vector<Rational> constants;
  for (size_t i = 0; i < sc.size(); ++i)
    constants.push_back(
        get_rational(sc[i], path + ".structure_constants[" + std::to_string(i) + "]"));
  AlgebraElement unit =
      parse_coords(j["unit"], path + ".unit", static_cast<int>(dim));
  const Json& inv = j["involution"];
  if (!inv.is_array() || inv.size() != static_cast<size_t>(dim))
    throw ValidationError(path + ".involution", "expected a dim x dim matrix");
  QMatrix m(static_cast<int>(dim), static_cast<int>(dim));
  for (long r = 0; r < dim; ++r) {
    const Json& row = inv[static_cast<size_t>(r)];
    std::string row_path = path + ".involution[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != static_cast<size_t>(dim))
      throw ValidationError(row_path, "expected a row of dim entries");
    for (long c = 0; c < dim; ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) =
          get_rational(row[static_cast<size_t>(c)], row_path + "[" + std::to_string(c) + "]");
  }
  std::string label = j.contains("label") ? get_string(j["label"], path + ".label") : "raw";
  try {
    return InvolutiveAlgebra::from_parts(static_cast<int>(dim), std::move(constants),
                                         std::move(unit.coords), std::move(m), std::move(label));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path, e.what());
  }
}

NumberField parse_field(const Json& j, const std::string& path) {
  check_keys(j, path, {"kind"}, {"d"});
  std::string kind = get_string(j["kind"], path + ".kind");
  if (kind == "Q") {
    if (j.contains("d")) throw ValidationError(path + ".d", "d is not allowed for Q");
    return NumberField::rationals();
  }
  if (kind == "Qi") {
    if (j.contains("d")) throw ValidationError(path + ".d", "d is implied by Qi");
    return NumberField::imaginary_quadratic(-1);
  }
  if (kind == "imaginary_quadratic") {
    if (!j.contains("d")) throw ValidationError(path + ".d", "missing required key");
    long d = get_count(j["d"], path + ".d", -11);
    try {
      return NumberField::imaginary_quadratic(static_cast<int>(d));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(path + ".d", e.what());
    }
  }
  throw ValidationError(path + ".kind", "expected \"Q\", \"Qi\" or \"imaginary_quadratic\"");
}

FieldElement parse_field_element(const Json& j, const std::string& path, const NumberField& F) {
  if (j.is_array()) {
    if (j.size() != 2) throw ValidationError(path, "expected a pair [a, b]");
    Rational a = get_rational(j[0], path + "[0]");
    Rational b = get_rational(j[1], path + "[1]");
    if (F.is_rationals() && b != 0)
      throw ValidationError(path + "[1]", "irrational part must vanish over Q");
    return FieldElement(std::move(a), std::move(b));
  }
  return FieldElement(get_rational(j, path));
}

EllipticCurveModel parse_curve(const Json& j, const std::string& path, const NumberField& F) {
  check_keys(j, path, {"a1", "a2", "a3", "a4", "a6"}, {});
  try {
    return EllipticCurveModel(F, parse_field_element(j["a1"], path + ".a1", F),
                              parse_field_element(j["a2"], path + ".a2", F),
                              parse_field_element(j["a3"], path + ".a3", F),
                              parse_field_element(j["a4"], path + ".a4", F),
                              parse_field_element(j["a6"], path + ".a6", F));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path, e.what());
  }
}

CurvePoint parse_point(const Json& j, const std::string& path, const EllipticCurveModel& curve) {
  if (j.is_string() && j.get<std::string>() == "O") return CurvePoint::at_infinity();
  check_keys(j, path, {"x", "y"}, {});
  CurvePoint p = CurvePoint::affine(parse_field_element(j["x"], path + ".x", curve.field()),
                                    parse_field_element(j["y"], path + ".y", curve.field()));
  if (!curve.is_on_curve(p))
    throw ValidationError(path, "point does not satisfy the curve equation");
  return p;
}

namespace {

std::vector<FieldElement> parse_poly(const Json& j, const std::string& path,
                                     const NumberField& F) {
  if (!j.is_array() || j.empty())
    throw ValidationError(path, "expected a non-empty coefficient array (ascending degree)");
  std::vector<FieldElement> coeffs;
  for (size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(parse_field_element(j[i], path + "[" + std::to_string(i) + "]", F));
  return coeffs;
}

int parse_adjoint_power(const Json& j, const std::string& path) {
  std::string s = get_string(j, path);
  if (s == "self") return 1;
  if (s.rfind("self^", 0) == 0) {
    try {
      int k = std::stoi(s.substr(5));
      if (k >= 1) return k;
    } catch (...) {
    }
  }
  throw ValidationError(path, "expected \"self\" or \"self^k\" with k >= 1");
}

}  // namespace

EndoMap parse_endo(const Json& j, const std::string& path, const NumberField& F) {
  check_keys(j, path, {"x_num", "x_den", "y_num", "y_den", "degree", "adjoint"}, {});
  EndoMap f;
  f.x_num = parse_poly(j["x_num"], path + ".x_num", F);
  f.x_den = parse_poly(j["x_den"], path + ".x_den", F);
  f.y_num = parse_poly(j["y_num"], path + ".y_num", F);
  f.y_den = parse_poly(j["y_den"], path + ".y_den", F);
  f.declared_degree = get_count(j["degree"], path + ".degree", 1);
  f.adjoint_power = parse_adjoint_power(j["adjoint"], path + ".adjoint");
  return f;
}

RelationSet parse_relation_set(const Json& j, const std::string& path) {
  check_keys(j, path, {"labels", "relations"}, {});
  RelationSet rs;
  const Json& labels = j["labels"];
  if (!labels.is_array()) throw ValidationError(path + ".labels", "expected an array");
  for (size_t i = 0; i < labels.size(); ++i) {
    std::string lp = path + ".labels[" + std::to_string(i) + "]";
    const Json& lab = labels[i];
    if (!lab.is_array() || lab.size() != 2)
      throw ValidationError(lp, "expected a pair [i, j] (1-based, i <= j)");
    long a = get_count(lab[0], lp + "[0]", 1);
    long b = get_count(lab[1], lp + "[1]", 1);
    if (a > b) throw ValidationError(lp, "labels must satisfy i <= j");
    rs.labels.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  const Json& rels = j["relations"];
  if (!rels.is_array()) throw ValidationError(path + ".relations", "expected an array");
  for (size_t i = 0; i < rels.size(); ++i) {
    std::string rp = path + ".relations[" + std::to_string(i) + "]";
    const Json& rel = rels[i];
    if (!rel.is_array() || rel.size() != rs.labels.size())
      throw ValidationError(rp, "expected one coefficient per label");
    IntegerVector v;
    for (size_t t = 0; t < rel.size(); ++t)
      v.push_back(get_integer(rel[t], rp + "[" + std::to_string(t) + "]"));
    rs.relations.push_back(std::move(v));
  }
  return rs;
}

CurveSetup parse_curve_setup(const Json& j, bool allow_endos) {
  std::vector<std::string> optional = {"tol", "cap"};
  std::vector<std::string> required = {"field", "curve", "points"};
  if (allow_endos) required.push_back("endos");
  check_keys(j, "$", required, optional);

  NumberField F = parse_field(j["field"], "$.field");
  EllipticCurveModel curve = parse_curve(j["curve"], "$.curve", F);

  std::vector<CurvePoint> points;
  const Json& pts = j["points"];
  if (!pts.is_array() || pts.empty())
    throw ValidationError("$.points", "expected a non-empty array of points");
  for (size_t i = 0; i < pts.size(); ++i)
    points.push_back(parse_point(pts[i], "$.points[" + std::to_string(i) + "]", curve));

  std::vector<EndoMap> endos;
  if (allow_endos) {
    const Json& es = j["endos"];
    if (!es.is_array() || es.empty())
      throw ValidationError("$.endos", "expected a non-empty array of endomorphisms");
    for (size_t i = 0; i < es.size(); ++i) {
      std::string ep = "$.endos[" + std::to_string(i) + "]";
      EndoMap f = parse_endo(es[i], ep, F);
      try {
        validate_endo(curve, f, points);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(ep, e.what());
      }
      endos.push_back(std::move(f));
    }
  }

  HeightOptions opts;
  if (j.contains("tol")) opts.tol = get_double(j["tol"], "$.tol");
  if (j.contains("cap")) opts.doubling_cap = static_cast<int>(get_count(j["cap"], "$.cap", 1));
  return CurveSetup{F, std::move(curve), std::move(points), std::move(endos), opts};
}

Json field_element_to_json(const NumberField& F, const FieldElement& x) {
  if (F.is_rationals()) return Json(to_string(x.a));
  return Json::array({to_string(x.a), to_string(x.b)});
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json relation_to_json(const IntegerVector& v) {
  Json row = Json::array();
  for (const Int& x : v) {
    if (x.fits_slong_p())
      row.push_back(x.get_si());
    else
      row.push_back(x.get_str());
  }
  return row;
}

}  // namespace heightrel::schema
