#include "heightrel/endo_algebra.hpp"

#include <stdexcept>

namespace heightrel {

std::string to_string(AlbertKind kind) {
  switch (kind) {
    case AlbertKind::I: return "I";
    case AlbertKind::II: return "II";
    case AlbertKind::III: return "III";
    case AlbertKind::IV: return "IV";
  }
  return "?";
}

AlgebraElement InvolutiveAlgebra::zero() const {
  return AlgebraElement{std::vector<Rational>(dim_, Rational(0))};
}

AlgebraElement InvolutiveAlgebra::one() const { return AlgebraElement{unit_}; }

AlgebraElement InvolutiveAlgebra::element(std::vector<Rational> coords) const {
  if (static_cast<int>(coords.size()) != dim_)
    throw std::invalid_argument("element coordinate count does not match algebra dimension");
  return AlgebraElement{std::move(coords)};
}

AlgebraElement InvolutiveAlgebra::basis_element(int k) const {
  AlgebraElement e = zero();
  e.coords[k] = 1;
  return e;
}

AlgebraElement InvolutiveAlgebra::scaled(const AlgebraElement& x, const Rational& c) const {
  check_element(x);
  AlgebraElement out = x;
  for (auto& v : out.coords) v *= c;
  return out;
}

AlgebraElement InvolutiveAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  check_element(x);
  check_element(y);
  AlgebraElement out = x;
  for (int i = 0; i < dim_; ++i) out.coords[i] += y.coords[i];
  return out;
}

void InvolutiveAlgebra::check_element(const AlgebraElement& x) const {
  if (static_cast<int>(x.coords.size()) != dim_)
    throw std::invalid_argument("algebra element dimension mismatch");
}

AlgebraElement InvolutiveAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  check_element(x);
  check_element(y);
  AlgebraElement out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y.coords[j] == 0) continue;
      Rational f = x.coords[i] * y.coords[j];
      for (int k = 0; k < dim_; ++k) {
        const Rational& c = sc(i, j, k);
        if (c != 0) out.coords[k] += f * c;
      }
    }
  }
  return out;
}

AlgebraElement InvolutiveAlgebra::involute(const AlgebraElement& x) const {
  check_element(x);
  AlgebraElement out = zero();
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.coords[i] += involution_.at(i, j) * x.coords[j];
  return out;
}

QMatrix InvolutiveAlgebra::left_regular_rep(const AlgebraElement& x) const {
  check_element(x);
  QMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    AlgebraElement img = mul(x, basis_element(j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = img.coords[i];
  }
  return m;
}

bool InvolutiveAlgebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (sc(i, j, k) != sc(j, i, k)) return false;
  return true;
}

bool InvolutiveAlgebra::has_trivial_involution() const {
  return involution_ == QMatrix::identity(dim_);
}

std::vector<std::string> InvolutiveAlgebra::validate() const {
  std::vector<std::string> violations;
  // unit
  for (int i = 0; i < dim_; ++i) {
    AlgebraElement e = basis_element(i);
    if (mul(one(), e).coords != e.coords)
      violations.push_back("unit is not a left identity on basis element " + std::to_string(i));
    if (mul(e, one()).coords != e.coords)
      violations.push_back("unit is not a right identity on basis element " + std::to_string(i));
  }
  // associativity on basis triples
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        AlgebraElement lhs = mul(mul(basis_element(i), basis_element(j)), basis_element(k));
        AlgebraElement rhs = mul(basis_element(i), mul(basis_element(j), basis_element(k)));
        if (lhs.coords != rhs.coords) {
          violations.push_back("associativity fails on basis triple (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  // involution axioms
  if (involution_ * involution_ != QMatrix::identity(dim_))
    violations.push_back("involution squared is not the identity");
  if (involute(one()).coords != one().coords) violations.push_back("involution does not fix 1");
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      AlgebraElement lhs = involute(mul(basis_element(i), basis_element(j)));
      AlgebraElement rhs = mul(involute(basis_element(j)), involute(basis_element(i)));
      if (lhs.coords != rhs.coords) {
        violations.push_back("involution is not an anti-homomorphism on basis pair (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return violations;
}

SymmetricSpace InvolutiveAlgebra::fixed_space() const {
  QMatrix diff = involution_ - QMatrix::identity(dim_);
  std::vector<QMatrix> cols = kernel(diff);
  SymmetricSpace s;
  for (const QMatrix& c : cols) {
    std::vector<Rational> coords(dim_);
    for (int i = 0; i < dim_; ++i) coords[i] = c.at(i, 0);
    s.basis.push_back(AlgebraElement{std::move(coords)});
  }
  s.eta = Rational(static_cast<long>(s.basis.size()), dim_);
  s.eta.canonicalize();
  return s;
}

AlbertType InvolutiveAlgebra::classify_albert() const {
  // decided by the (commutativity, eta) fingerprint
  if (is_commutative()) {
    if (has_trivial_involution()) return AlbertType{AlbertKind::I, Rational(1)};
    return AlbertType{AlbertKind::IV, Rational(0)};
  }
  if (dim_ == 4) {
    Rational eta = fixed_space().eta;
    if (eta == Rational(3, 4)) return AlbertType{AlbertKind::II, Rational(1, 2)};
    if (eta == Rational(1, 4)) return AlbertType{AlbertKind::III, Rational(-1, 2)};
  }
  throw std::invalid_argument("unsupported algebra shape for Albert classification: " + label_);
}

bool InvolutiveAlgebra::quaternion_shape(Rational* a, Rational* b) const {
  if (dim_ != 4) return false;
  // basis {1, i, j, ij} with i^2 = a*1, j^2 = b*1, ij = e3 = -ji
  AlgebraElement i2 = mul(basis_element(1), basis_element(1));
  AlgebraElement j2 = mul(basis_element(2), basis_element(2));
  AlgebraElement ij = mul(basis_element(1), basis_element(2));
  AlgebraElement ji = mul(basis_element(2), basis_element(1));
  for (int k = 1; k < 4; ++k) {
    if (i2.coords[k] != 0 || j2.coords[k] != 0) return false;
  }
  AlgebraElement e3 = basis_element(3);
  AlgebraElement neg_e3 = scaled(e3, Rational(-1));
  if (ij.coords != e3.coords || ji.coords != neg_e3.coords) return false;
  if (a) *a = i2.coords[0];
  if (b) *b = j2.coords[0];
  return true;
}

int InvolutiveAlgebra::norm_form_degree() const {
  if (is_commutative()) return dim_;
  Rational a, b;
  if (quaternion_shape(&a, &b)) return 2;
  throw std::invalid_argument("norm form is only defined for fields and quaternion algebras");
}

Rational InvolutiveAlgebra::norm_form(const AlgebraElement& x) const {
  check_element(x);
  if (is_commutative()) return determinant(left_regular_rep(x));
  Rational a, b;
  if (quaternion_shape(&a, &b)) {
    const Rational& w = x.coords[0];
    const Rational& p = x.coords[1];
    const Rational& q = x.coords[2];
    const Rational& r = x.coords[3];
    return w * w - a * p * p - b * q * q + a * b * r * r;
  }
  throw std::invalid_argument("norm form is only defined for fields and quaternion algebras");
}

Rational InvolutiveAlgebra::deg(int g, const AlgebraElement& x) const {
  if (g < 1) throw std::invalid_argument("abelian variety dimension must be positive");
  int m = norm_form_degree();
  if ((2 * g) % m != 0)
    throw std::invalid_argument("algebra degree does not divide 2g (rank divisibility fails)");
  return pow_rational(norm_form(x), (2 * g) / m);
}

QMatrix symmetric_basis_matrix(const InvolutiveAlgebra& A, const SymmetricSpace& S) {
  QMatrix m(A.dim(), static_cast<int>(S.basis.size()));
  for (size_t j = 0; j < S.basis.size(); ++j)
    for (int i = 0; i < A.dim(); ++i) m.at(i, static_cast<int>(j)) = S.basis[j].coords[i];
  return m;
}

QMatrix InvolutiveAlgebra::symmetric_action(const SymmetricSpace& S,
                                            const AlgebraElement& x) const {
  check_element(x);
  int s = static_cast<int>(S.basis.size());
  AlgebraElement xi = involute(x);
  QMatrix images(dim_, s);
  for (int j = 0; j < s; ++j) {
    AlgebraElement img = mul(mul(xi, S.basis[j]), x);
    if (involute(img).coords != img.coords)
      throw std::logic_error("symmetric_action: image left the symmetric space");
    for (int i = 0; i < dim_; ++i) images.at(i, j) = img.coords[i];
  }
  auto coords = solve(symmetric_basis_matrix(*this, S), images);
  if (!coords)
    throw std::logic_error("symmetric_action: image not expressible in the given S-basis");
  return *coords;
}

InvolutiveAlgebra InvolutiveAlgebra::assemble_parts(int dim,
                                                    std::vector<Rational> structure_constants,
                                                    std::vector<Rational> unit, QMatrix involution,
                                                    std::string label) {
  if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
  if (structure_constants.size() != static_cast<size_t>(dim) * dim * dim)
    throw std::invalid_argument("structure constant array must have dim^3 entries");
  if (unit.size() != static_cast<size_t>(dim))
    throw std::invalid_argument("unit vector must have dim entries");
  if (involution.rows() != dim || involution.cols() != dim)
    throw std::invalid_argument("involution matrix must be dim x dim");
  InvolutiveAlgebra A;
  A.dim_ = dim;
  A.sc_ = std::move(structure_constants);
  A.unit_ = std::move(unit);
  A.involution_ = std::move(involution);
  A.label_ = std::move(label);
  return A;
}

InvolutiveAlgebra InvolutiveAlgebra::from_parts(int dim, std::vector<Rational> structure_constants,
                                                std::vector<Rational> unit, QMatrix involution,
                                                std::string label) {
  InvolutiveAlgebra A = assemble_parts(dim, std::move(structure_constants), std::move(unit),
                                       std::move(involution), std::move(label));
  std::vector<std::string> violations = A.validate();
  if (!violations.empty())
    throw std::invalid_argument("algebra axioms violated: " + violations.front());
  return A;
}

std::vector<std::string> InvolutiveAlgebra::validate_parts(
    int dim, std::vector<Rational> structure_constants, std::vector<Rational> unit,
    QMatrix involution) {
  return assemble_parts(dim, std::move(structure_constants), std::move(unit),
                        std::move(involution), "raw")
      .validate();
}

InvolutiveAlgebra InvolutiveAlgebra::quadratic_field(const Int& D, QuadraticInvolution kind) {
  if (D == 0 || D == 1) throw std::invalid_argument("quadratic field parameter must not be 0 or 1");
  if (!is_squarefree(D))
    throw std::invalid_argument("quadratic field parameter must be squarefree");
  if (kind == QuadraticInvolution::trivial && D < 0)
    throw std::invalid_argument("trivial involution requires a totally real field (D > 0)");

  InvolutiveAlgebra A;
  A.dim_ = 2;
  A.sc_.assign(8, Rational(0));
  auto set = [&](int i, int j, int k, Rational v) { A.sc_[(i * 2 + j) * 2 + k] = v; };
  set(0, 0, 0, 1);
  set(0, 1, 1, 1);
  set(1, 0, 1, 1);
  set(1, 1, 0, Rational(D));
  A.unit_ = {Rational(1), Rational(0)};
  A.involution_ = QMatrix::identity(2);
  if (kind == QuadraticInvolution::conjugation) A.involution_.at(1, 1) = -1;
  A.label_ = "Q(sqrt(" + D.get_str() + "))," +
             (kind == QuadraticInvolution::trivial ? std::string("trivial") : "conjugation");
  return A;
}

InvolutiveAlgebra InvolutiveAlgebra::quaternion(const Rational& a, const Rational& b,
                                                QuaternionInvolution kind,
                                                const AlgebraElement* u) {
  if (a == 0 || b == 0) throw std::invalid_argument("quaternion parameters must be nonzero");
  InvolutiveAlgebra A;
  A.dim_ = 4;
  A.sc_.assign(64, Rational(0));
  auto set = [&](int i, int j, int k, Rational v) { A.sc_[(i * 4 + j) * 4 + k] = v; };
  // basis 1, i, j, k=ij
  set(0, 0, 0, 1);
  for (int t = 1; t < 4; ++t) {
    set(0, t, t, 1);
    set(t, 0, t, 1);
  }
  set(1, 1, 0, a);        // i*i = a
  set(2, 2, 0, b);        // j*j = b
  set(1, 2, 3, 1);        // i*j = k
  set(2, 1, 3, -1);       // j*i = -k
  set(1, 3, 2, a);        // i*k = a j
  set(3, 1, 2, -a);       // k*i = -a j
  set(2, 3, 1, -b);       // j*k = -b i
  set(3, 2, 1, b);        // k*j = b i
  set(3, 3, 0, -a * b);   // k*k = -a b
  A.unit_ = {Rational(1), Rational(0), Rational(0), Rational(0)};

  QMatrix conj(4, 4);
  conj.at(0, 0) = 1;
  for (int t = 1; t < 4; ++t) conj.at(t, t) = -1;

  if (kind == QuaternionInvolution::canonical) {
    A.involution_ = conj;
    A.label_ = "quaternion(" + to_string(a) + "," + to_string(b) + "),canonical";
    return A;
  }

  AlgebraElement uu = u ? *u : A.basis_element(1);
  A.check_element(uu);
  if (uu.coords[0] != 0)
    throw std::invalid_argument("orthogonal involution requires a pure quaternion u");
  Rational nrd = uu.coords[0] * uu.coords[0] - a * uu.coords[1] * uu.coords[1] -
                 b * uu.coords[2] * uu.coords[2] + a * b * uu.coords[3] * uu.coords[3];
  if (nrd == 0) throw std::invalid_argument("orthogonal involution requires an invertible u");

  // conj(u) = -u, so u^{-1} = -u / Nrd(u) and x -> u * conj(x) * u^{-1}.
  QMatrix m(4, 4);
  for (int col = 0; col < 4; ++col) {
    AlgebraElement e = A.basis_element(col);
    AlgebraElement bar = A.zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) bar.coords[i] += conj.at(i, j) * e.coords[j];
    AlgebraElement img = A.mul(A.mul(uu, bar), A.scaled(uu, Rational(-1) / nrd));
    for (int i = 0; i < 4; ++i) m.at(i, col) = img.coords[i];
  }
  A.involution_ = m;
  A.label_ = "quaternion(" + to_string(a) + "," + to_string(b) + "),orthogonal";
  std::vector<std::string> violations = A.validate();
  if (!violations.empty())
    throw std::logic_error("orthogonal involution construction failed: " + violations.front());
  return A;
}

}  // namespace heightrel
