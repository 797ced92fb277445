#pragma once

#include <string>
#include <vector>

#include "heightrel/rational.hpp"

namespace heightrel {

/// Element a + b*sqrt(d) of the base field (b = 0 over Q).
struct FieldElement {
  Rational a;
  Rational b;

  FieldElement() : a(0), b(0) {}
  explicit FieldElement(Rational re) : a(std::move(re)), b(0) {}
  FieldElement(Rational re, Rational im) : a(std::move(re)), b(std::move(im)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const FieldElement& o) const { return a == o.a && b == o.b; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

/// Q or a norm-Euclidean imaginary quadratic field Q(sqrt(d)),
/// d in {-1, -2, -3, -7, -11}; these have class number 1 and a Euclidean gcd.
class NumberField {
 public:
  static NumberField rationals();
  static NumberField imaginary_quadratic(int d);

  bool is_rationals() const { return degree_ == 1; }
  int degree() const { return degree_; }
  int d() const { return d_; }
  bool operator==(const NumberField& o) const { return degree_ == o.degree_ && d_ == o.d_; }

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement div(const FieldElement& x, const FieldElement& y) const;
  FieldElement conj(const FieldElement& x) const;
  FieldElement from_int(long v) const { return FieldElement(Rational(v)); }

  /// a^2 - d b^2; non-negative for the supported d.
  Rational norm(const FieldElement& x) const;

  /// Membership in the ring of integers (Z, Z[sqrt(d)] or Z[(1+sqrt(d))/2]).
  bool is_integral(const FieldElement& x) const;

  /// An algebraic integer q with norm(x - q) < 1; exists for all supported fields.
  FieldElement nearest_integer(const FieldElement& x) const;

  /// Euclidean gcd of two algebraic integers, as a canonical associate.
  FieldElement gcd(FieldElement x, FieldElement y) const;

  /// Exact quotient x / y for integral values with y | x; throws otherwise.
  FieldElement divide_exact(const FieldElement& x, const FieldElement& y) const;

  std::vector<FieldElement> units() const;
  /// Deterministic representative among the associates of x.
  FieldElement canonical_associate(const FieldElement& x) const;

  std::string to_string(const FieldElement& x) const;
  std::string label() const;

 private:
  NumberField(int degree, int d) : degree_(degree), d_(d) {}
  int degree_;
  int d_;
};

}  // namespace heightrel
