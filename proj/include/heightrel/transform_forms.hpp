#pragma once

#include <vector>

#include "heightrel/endo_algebra.hpp"

namespace heightrel {

/// s x s matrix of quadratic forms evaluated at phi: row i holds the
/// coordinates of involute(phi) * s_i * phi in the S-basis, so that
/// h_i(phi P) = sum_j entries(i,j) h_j(P).
struct TransformMatrix {
  QMatrix entries;
  AlgebraElement phi;
  int g = 1;
};

/// Builds the transformation matrix and enforces det = deg(phi)^(s/g) at
/// construction time.
TransformMatrix transform_matrix(const InvolutiveAlgebra& A, const SymmetricSpace& S,
                                 const AlgebraElement& phi, int g);

struct DetCheckResult {
  bool ok = false;
  Rational det_value;
  Rational expected;  // deg(phi)^(s/g), computed as norm^(2s/m)
};

DetCheckResult determinant_identity_check(const TransformMatrix& tm, const InvolutiveAlgebra& A,
                                          int g);

/// Applies the matrix to measured height values (rationals acting on reals).
std::vector<double> transform_heights(const TransformMatrix& tm,
                                      const std::vector<double>& heights);

struct ScalarLocusResult {
  bool is_scalar = false;
  Rational factor;  // alpha_11(phi) when is_scalar
};

/// Whether row 1 is concentrated in column 1, i.e. h_1(phi P) = factor * h_1(P).
ScalarLocusResult scalar_locus_check(const InvolutiveAlgebra& A, const SymmetricSpace& S,
                                     const AlgebraElement& phi, int g);

}  // namespace heightrel
