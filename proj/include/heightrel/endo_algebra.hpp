#pragma once

#include <string>
#include <vector>

#include "heightrel/exact_linalg.hpp"
#include "heightrel/matrix.hpp"
#include "heightrel/rational.hpp"

namespace heightrel {

struct AlgebraElement {
  std::vector<Rational> coords;
};

enum class AlbertKind { I, II, III, IV };

struct AlbertType {
  AlbertKind kind;
  Rational alpha;  // 1, 1/2, -1/2 or 0
};

std::string to_string(AlbertKind kind);

/// Fixed space of the involution together with eta = dim S / dim A.
struct SymmetricSpace {
  std::vector<AlgebraElement> basis;
  Rational eta;
};

enum class QuadraticInvolution { trivial, conjugation };
enum class QuaternionInvolution { canonical, orthogonal };

/// Finite-dimensional Q-algebra with involution, given by structure constants.
/// Models the endomorphism algebra of an abelian variety with its Rosati
/// involution at desk scale.
class InvolutiveAlgebra {
 public:
  /// Q(sqrt(D)) with basis {1, w}, w^2 = D. D squarefree, not 0 or 1; the
  /// trivial involution requires D > 0.
  static InvolutiveAlgebra quadratic_field(const Int& D, QuadraticInvolution kind);

  /// Quaternion algebra (a,b) with basis {1,i,j,ij}, i^2=a, j^2=b, ij=-ji.
  /// canonical: x -> tr(x)-x (fixed space Q*1). orthogonal: x -> u*conj(x)*u^{-1}
  /// for a pure invertible u (fixed space of dimension 3).
  static InvolutiveAlgebra quaternion(const Rational& a, const Rational& b,
                                      QuaternionInvolution kind,
                                      const AlgebraElement* u = nullptr);

  /// Raw constructor from structure constants c[i][j][k] (flattened, e_i e_j =
  /// sum_k c_ijk e_k), unit coordinates and involution matrix. Axioms are
  /// checked; throws on violation.
  static InvolutiveAlgebra from_parts(int dim, std::vector<Rational> structure_constants,
                                      std::vector<Rational> unit, QMatrix involution,
                                      std::string label);

  /// Axiom report for raw data without constructing; empty list means valid.
  static std::vector<std::string> validate_parts(int dim,
                                                 std::vector<Rational> structure_constants,
                                                 std::vector<Rational> unit, QMatrix involution);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const QMatrix& involution_matrix() const { return involution_; }
  const std::vector<Rational>& structure_constants() const { return sc_; }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement element(std::vector<Rational> coords) const;
  /// n-th basis vector as an element.
  AlgebraElement basis_element(int k) const;
  AlgebraElement scaled(const AlgebraElement& x, const Rational& c) const;
  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;

  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement involute(const AlgebraElement& x) const;
  /// Matrix of y -> x*y on coordinate columns.
  QMatrix left_regular_rep(const AlgebraElement& x) const;

  bool is_commutative() const;
  bool has_trivial_involution() const;

  /// Exhaustive axiom check on basis tuples; empty list means the algebra is valid.
  std::vector<std::string> validate() const;

  SymmetricSpace fixed_space() const;

  /// Classification by the (commutativity, eta) fingerprint. Throws
  /// std::invalid_argument for unsupported shapes.
  AlbertType classify_albert() const;

  /// Degree form for an abelian variety of dimension g: field norm^(2g/d) in the
  /// commutative case, reduced norm^g for quaternions. Homogeneous of degree 2g.
  Rational deg(int g, const AlgebraElement& x) const;

  /// Matrix (operator convention: columns are images) of s -> involute(x)*s*x on
  /// the basis of S. S must be the fixed space of this algebra.
  QMatrix symmetric_action(const SymmetricSpace& S, const AlgebraElement& x) const;

  /// Reduced norm for the quaternion shape, field norm for the commutative one.
  Rational norm_form(const AlgebraElement& x) const;
  /// Degree of the norm form (dim for fields, 2 for quaternions).
  int norm_form_degree() const;

 private:
  InvolutiveAlgebra() = default;
  static InvolutiveAlgebra assemble_parts(int dim, std::vector<Rational> structure_constants,
                                          std::vector<Rational> unit, QMatrix involution,
                                          std::string label);
  const Rational& sc(int i, int j, int k) const {
    return sc_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  void check_element(const AlgebraElement& x) const;
  bool quaternion_shape(Rational* a, Rational* b) const;

  int dim_ = 0;
  std::vector<Rational> sc_;
  std::vector<Rational> unit_;
  QMatrix involution_;
  std::string label_;
};

/// Coordinates of the elements of S stacked as columns (dim x s).
QMatrix symmetric_basis_matrix(const InvolutiveAlgebra& A, const SymmetricSpace& S);

}  // namespace heightrel
