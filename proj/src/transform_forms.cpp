#include "heightrel/transform_forms.hpp"

#include <stdexcept>

namespace heightrel {

namespace {

Rational expected_determinant(const InvolutiveAlgebra& A, const AlgebraElement& phi, int g,
                              int s) {
  // deg(phi)^(s/g) = (norm^(2g/m))^(s/g) = norm^(2s/m), which stays in Q.
  int m = A.norm_form_degree();
  if ((2 * s) % m != 0)
    throw std::logic_error("2s is not divisible by the norm form degree");
  // deg() validates the divisibility precondition for g.
  (void)A.deg(g, phi);
  return pow_rational(A.norm_form(phi), (2 * s) / m);
}

}  // namespace

TransformMatrix transform_matrix(const InvolutiveAlgebra& A, const SymmetricSpace& S,
                                 const AlgebraElement& phi, int g) {
  TransformMatrix tm;
  tm.entries = A.symmetric_action(S, phi).transpose();
  tm.phi = phi;
  tm.g = g;
  int s = static_cast<int>(S.basis.size());
  Rational expected = expected_determinant(A, phi, g, s);
  if (determinant(tm.entries) != expected)
    throw std::logic_error("transformation matrix violates the determinant identity");
  return tm;
}

DetCheckResult determinant_identity_check(const TransformMatrix& tm, const InvolutiveAlgebra& A,
                                          int g) {
  DetCheckResult res;
  res.det_value = determinant(tm.entries);
  res.expected = expected_determinant(A, tm.phi, g, tm.entries.rows());
  res.ok = res.det_value == res.expected;
  return res;
}

std::vector<double> transform_heights(const TransformMatrix& tm,
                                      const std::vector<double>& heights) {
  int s = tm.entries.rows();
  if (static_cast<int>(heights.size()) != s)
    throw std::invalid_argument("height vector length does not match the matrix size");
  std::vector<double> out(s, 0.0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) out[i] += to_double(tm.entries.at(i, j)) * heights[j];
  return out;
}

ScalarLocusResult scalar_locus_check(const InvolutiveAlgebra& A, const SymmetricSpace& S,
                                     const AlgebraElement& phi, int g) {
  TransformMatrix tm = transform_matrix(A, S, phi, g);
  ScalarLocusResult res;
  res.is_scalar = true;
  for (int j = 1; j < tm.entries.cols(); ++j) {
    if (tm.entries.at(0, j) != 0) res.is_scalar = false;
  }
  if (res.is_scalar) res.factor = tm.entries.at(0, 0);
  return res;
}

}  // namespace heightrel
