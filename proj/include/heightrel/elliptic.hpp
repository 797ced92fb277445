#pragma once

#include <stdexcept>
#include <vector>

#include "heightrel/number_field.hpp"

namespace heightrel {

struct CurvePoint {
  bool infinity = true;
  FieldElement x;
  FieldElement y;

  static CurvePoint at_infinity() { return CurvePoint{}; }
  static CurvePoint affine(FieldElement x, FieldElement y) {
    return CurvePoint{false, std::move(x), std::move(y)};
  }
  bool operator==(const CurvePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
/// exact arithmetic over the base field.
class EllipticCurveModel {
 public:
  EllipticCurveModel(NumberField field, FieldElement a1, FieldElement a2, FieldElement a3,
                     FieldElement a4, FieldElement a6);

  const NumberField& field() const { return field_; }
  const FieldElement& a1() const { return a1_; }
  const FieldElement& a2() const { return a2_; }
  const FieldElement& a3() const { return a3_; }
  const FieldElement& a4() const { return a4_; }
  const FieldElement& a6() const { return a6_; }
  const FieldElement& discriminant() const { return disc_; }

  // b-invariants of the model
  FieldElement b2() const;
  FieldElement b4() const;
  FieldElement b6() const;
  FieldElement b8() const;

  bool is_on_curve(const CurvePoint& p) const;
  void require_on_curve(const CurvePoint& p) const;

  CurvePoint negate(const CurvePoint& p) const;
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint multiply(const Int& m, const CurvePoint& p) const;

 private:
  CurvePoint negate_unchecked(const CurvePoint& p) const;
  CurvePoint add_unchecked(const CurvePoint& p, const CurvePoint& q) const;

  NumberField field_;
  FieldElement a1_, a2_, a3_, a4_, a6_;
  FieldElement disc_;
};

/// Point hit a pole of every supplied denominator representation.
class ExceptionalPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational endomorphism data: X = x_num(x)/x_den(x) and
/// Y = y * y_num(x)/y_den(x); polynomials store ascending coefficients.
/// The Rosati adjoint is declared as a power of the map itself.
struct EndoMap {
  std::vector<FieldElement> x_num;
  std::vector<FieldElement> x_den;
  std::vector<FieldElement> y_num;
  std::vector<FieldElement> y_den;
  long declared_degree = 1;
  int adjoint_power = 1;  // adjoint = this map applied adjoint_power times
};

FieldElement eval_poly(const NumberField& field, const std::vector<FieldElement>& coeffs,
                       const FieldElement& x);

/// Exact image of a point; O maps to O, and the result is verified on-curve.
CurvePoint apply_endo(const EllipticCurveModel& curve, const EndoMap& f, const CurvePoint& p);

CurvePoint apply_endo_power(const EllipticCurveModel& curve, const EndoMap& f,
                            const CurvePoint& p, int power);

/// Spot-checks that f maps sample points (and a few group-law combinations of
/// them) onto the curve. Throws std::invalid_argument on failure.
void validate_endo(const EllipticCurveModel& curve, const EndoMap& f,
                   const std::vector<CurvePoint>& samples);

}  // namespace heightrel
