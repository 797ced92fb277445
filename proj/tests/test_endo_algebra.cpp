#include "heightrel/endo_algebra.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace heightrel;

namespace {

InvolutiveAlgebra real_quad(long D = 5) {
  return InvolutiveAlgebra::quadratic_field(Int(D), QuadraticInvolution::trivial);
}

InvolutiveAlgebra imag_quad(long D = -1) {
  return InvolutiveAlgebra::quadratic_field(Int(D), QuadraticInvolution::conjugation);
}

InvolutiveAlgebra canonical_quat() {
  return InvolutiveAlgebra::quaternion(Rational(-1), Rational(-1),
                                       QuaternionInvolution::canonical);
}

InvolutiveAlgebra orthogonal_quat() {
  return InvolutiveAlgebra::quaternion(Rational(1), Rational(1),
                                       QuaternionInvolution::orthogonal);
}

// Q[x]/(x^3 - 2) with the trivial involution; used for divisibility checks.
InvolutiveAlgebra cubic_field() {
  std::vector<Rational> sc(27, Rational(0));
  auto set = [&](int i, int j, int k, long v) { sc[(i * 3 + j) * 3 + k] = v; };
  // e_i * e_j = e_{i+j}, with e_3 = 2*e_0
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int k = i + j;
      if (k < 3)
        set(i, j, k, 1);
      else
        set(i, j, k - 3, 2);
    }
  }
  return InvolutiveAlgebra::from_parts(3, sc, {Rational(1), Rational(0), Rational(0)},
                                       QMatrix::identity(3), "Q(cbrt(2))");
}

}  // namespace

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(InvolutiveAlgebra::quadratic_field(Int(4), QuadraticInvolution::trivial),
                  std::invalid_argument);
  CHECK_THROWS_AS(InvolutiveAlgebra::quadratic_field(Int(0), QuadraticInvolution::conjugation),
                  std::invalid_argument);
  CHECK_THROWS_AS(InvolutiveAlgebra::quadratic_field(Int(1), QuadraticInvolution::trivial),
                  std::invalid_argument);
  CHECK_THROWS_AS(InvolutiveAlgebra::quadratic_field(Int(-5), QuadraticInvolution::trivial),
                  std::invalid_argument);
  CHECK_THROWS_AS(InvolutiveAlgebra::quaternion(Rational(0), Rational(1),
                                                QuaternionInvolution::canonical),
                  std::invalid_argument);
}

TEST_CASE("orthogonal involution rejects bad u") {
  // not pure
  AlgebraElement u1{{Rational(1), Rational(1), Rational(0), Rational(0)}};
  CHECK_THROWS_AS(
      InvolutiveAlgebra::quaternion(Rational(1), Rational(1), QuaternionInvolution::orthogonal, &u1),
      std::invalid_argument);
  // pure but not invertible in the split algebra: Nrd(i + k) = -1 + 1 = 0
  AlgebraElement u2{{Rational(0), Rational(1), Rational(0), Rational(1)}};
  CHECK_THROWS_AS(
      InvolutiveAlgebra::quaternion(Rational(1), Rational(1), QuaternionInvolution::orthogonal, &u2),
      std::invalid_argument);
}

TEST_CASE("constructor outputs satisfy the axioms") {
  for (const InvolutiveAlgebra& A :
       {real_quad(), imag_quad(), canonical_quat(), orthogonal_quat(), cubic_field()}) {
    CHECK(A.validate().empty());
  }
}

TEST_CASE("validate reports specific violations on broken data") {
  InvolutiveAlgebra A = real_quad();
  // patch the involution to w -> w + 1
  QMatrix bad_inv = QMatrix::identity(2);
  bad_inv.at(0, 1) = 1;
  auto violations = InvolutiveAlgebra::validate_parts(
      2, A.structure_constants(), {Rational(1), Rational(0)}, bad_inv);
  REQUIRE_FALSE(violations.empty());
  bool mentions_involution = false;
  for (const auto& v : violations)
    if (v.find("involution") != std::string::npos) mentions_involution = true;
  CHECK(mentions_involution);

  // corrupt one structure constant: associativity must fail on a named triple
  std::vector<Rational> sc = A.structure_constants();
  sc[(1 * 2 + 0) * 2 + 1] = 2;  // w*1 becomes 2w
  auto violations2 = InvolutiveAlgebra::validate_parts(2, sc, {Rational(1), Rational(0)},
                                                       QMatrix::identity(2));
  bool mentions_assoc = false;
  for (const auto& v : violations2)
    if (v.find("associativity") != std::string::npos) mentions_assoc = true;
  CHECK(mentions_assoc);
}

TEST_CASE("fixed spaces match the eta table") {
  SUBCASE("type I: whole algebra") {
    SymmetricSpace s = real_quad().fixed_space();
    CHECK(s.basis.size() == 2);
    CHECK(s.eta == 1);
  }
  SUBCASE("type IV: Q * 1") {
    SymmetricSpace s = imag_quad().fixed_space();
    REQUIRE(s.basis.size() == 1);
    CHECK(s.eta == Rational(1, 2));
    CHECK(s.basis[0].coords == std::vector<Rational>{Rational(1), Rational(0)});
  }
  SUBCASE("type III: Q * 1") {
    SymmetricSpace s = canonical_quat().fixed_space();
    REQUIRE(s.basis.size() == 1);
    CHECK(s.eta == Rational(1, 4));
  }
  SUBCASE("type II: dimension 3") {
    SymmetricSpace s = orthogonal_quat().fixed_space();
    CHECK(s.basis.size() == 3);
    CHECK(s.eta == Rational(3, 4));
    // first basis element is 1, the polarization slot
    CHECK(s.basis[0].coords ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
  }
}

TEST_CASE("Albert classification") {
  AlbertType t1 = real_quad().classify_albert();
  CHECK(t1.kind == AlbertKind::I);
  CHECK(t1.alpha == 1);

  AlbertType t2 = orthogonal_quat().classify_albert();
  CHECK(t2.kind == AlbertKind::II);
  CHECK(t2.alpha == Rational(1, 2));

  AlbertType t3 = canonical_quat().classify_albert();
  CHECK(t3.kind == AlbertKind::III);
  CHECK(t3.alpha == Rational(-1, 2));

  AlbertType t4 = imag_quad().classify_albert();
  CHECK(t4.kind == AlbertKind::IV);
  CHECK(t4.alpha == 0);
}

TEST_CASE("classification is a basis-independent fingerprint") {
  // the canonical quaternion with basis relabeled (1, j, i, ij): still type III
  InvolutiveAlgebra Q = canonical_quat();
  int perm[4] = {0, 2, 1, 3};
  std::vector<Rational> sc(64, Rational(0));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      AlgebraElement prod = Q.mul(Q.basis_element(perm[i]), Q.basis_element(perm[j]));
      for (int k = 0; k < 4; ++k) sc[(i * 4 + j) * 4 + k] = prod.coords[perm[k]];
    }
  }
  QMatrix inv(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      inv.at(i, j) = Q.involution_matrix().at(perm[i], perm[j]);
  InvolutiveAlgebra relabeled = InvolutiveAlgebra::from_parts(
      4, sc, {Rational(1), Rational(0), Rational(0), Rational(0)}, inv, "relabeled");
  AlbertType t = relabeled.classify_albert();
  CHECK(t.kind == AlbertKind::III);
  CHECK(t.alpha == Rational(-1, 2));
}

TEST_CASE("an unsupported shape is reported, not guessed") {
  // the group algebra of S3 with the inversion involution: noncommutative, dim 6
  int mult[6][6];
  auto compose = [](int a, int b) {
    // elements: r^i s^j with j in {0,1}, encoded as 3*j + i; s r = r^2 s
    int ai = a % 3, aj = a / 3, bi = b % 3, bj = b / 3;
    int i = aj == 0 ? (ai + bi) % 3 : (ai + 3 - bi) % 3;
    return 3 * ((aj + bj) % 2) + i;
  };
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) mult[a][b] = compose(a, b);
  std::vector<Rational> sc(216, Rational(0));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) sc[(a * 6 + b) * 6 + mult[a][b]] = 1;
  QMatrix inv(6, 6);
  for (int a = 0; a < 6; ++a) {
    int ainv = 0;
    while (mult[a][ainv] != 0) ++ainv;
    inv.at(ainv, a) = 1;
  }
  std::vector<Rational> unit(6, Rational(0));
  unit[0] = 1;
  InvolutiveAlgebra S3 = InvolutiveAlgebra::from_parts(6, sc, unit, inv, "Q[S3]");
  CHECK_FALSE(S3.is_commutative());
  CHECK_THROWS_AS(S3.classify_albert(), std::invalid_argument);
}

TEST_CASE("element operations") {
  InvolutiveAlgebra A = real_quad();
  AlgebraElement w = A.basis_element(1);
  testutil::RNG rng(5);
  AlgebraElement x = testutil::random_element(A, rng);
  CHECK(A.mul(A.one(), x).coords == x.coords);
  CHECK(A.mul(w, w).coords == std::vector<Rational>{Rational(5), Rational(0)});
  CHECK(A.left_regular_rep(A.one()) == QMatrix::identity(2));
  CHECK_THROWS_AS(A.mul(x, AlgebraElement{{Rational(1)}}), std::invalid_argument);
}

TEST_CASE("involution properties on random elements") {
  testutil::RNG rng(2024);
  for (const InvolutiveAlgebra& A :
       {real_quad(), imag_quad(), canonical_quat(), orthogonal_quat()}) {
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement x = testutil::random_element(A, rng);
      AlgebraElement y = testutil::random_element(A, rng);
      CHECK(A.involute(A.involute(x)).coords == x.coords);
      CHECK(A.involute(A.mul(x, y)).coords ==
            A.mul(A.involute(y), A.involute(x)).coords);
    }
  }
}

TEST_CASE("deg on quadratic fields") {
  InvolutiveAlgebra A = real_quad();  // D = 5
  testutil::RNG rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = testutil::random_rational(rng);
    Rational b = testutil::random_rational(rng);
    AlgebraElement x = A.element({a, b});
    Rational norm = a * a - 5 * b * b;
    CHECK(A.deg(2, x) == norm * norm);  // surface case
    CHECK(A.deg(1, x) == norm);
  }
  InvolutiveAlgebra K = imag_quad();  // D = -1
  AlgebraElement z = K.element({Rational(3), Rational(2)});
  CHECK(K.deg(1, z) == 13);  // a^2 - D b^2 = 9 + 4
}

TEST_CASE("deg of integer multiples of 1 is n^(2g)") {
  for (const InvolutiveAlgebra& A :
       {real_quad(), imag_quad(), canonical_quat(), orthogonal_quat()}) {
    for (int g = 1; g <= 3; ++g) {
      AlgebraElement n3 = A.scaled(A.one(), Rational(3));
      CHECK(A.deg(g, n3) == pow_rational(Rational(3), 2 * g));
      CHECK(A.deg(g, A.zero()) == 0);
    }
  }
}

TEST_CASE("deg divisibility precondition") {
  InvolutiveAlgebra C = cubic_field();
  AlgebraElement theta = C.basis_element(1);
  CHECK_THROWS_AS(C.deg(1, theta), std::invalid_argument);  // 3 does not divide 2
  CHECK(C.deg(3, theta) == 4);                              // N(theta)^2 = 2^2
}

TEST_CASE("deg is multiplicative and homogeneous") {
  testutil::RNG rng(31337);
  for (const InvolutiveAlgebra& A :
       {real_quad(), imag_quad(), canonical_quat(), orthogonal_quat()}) {
    for (int trial = 0; trial < 40; ++trial) {
      AlgebraElement x = testutil::random_element(A, rng, 5, 2);
      AlgebraElement y = testutil::random_element(A, rng, 5, 2);
      int g = 1 + static_cast<int>(trial % 3);
      CHECK(A.deg(g, A.mul(x, y)) == A.deg(g, x) * A.deg(g, y));
      Rational c = testutil::random_rational(rng, 4, 3);
      CHECK(A.deg(g, A.scaled(x, c)) == pow_rational(c, 2 * g) * A.deg(g, x));
    }
  }
}

TEST_CASE("symmetric_action on the unit and scalars") {
  for (const InvolutiveAlgebra& A :
       {real_quad(), imag_quad(), canonical_quat(), orthogonal_quat()}) {
    SymmetricSpace S = A.fixed_space();
    int s = static_cast<int>(S.basis.size());
    CHECK(A.symmetric_action(S, A.one()) == QMatrix::identity(s));
    AlgebraElement n2 = A.scaled(A.one(), Rational(2));
    CHECK(A.symmetric_action(S, n2) == QMatrix::identity(s).scaled(Rational(4)));
  }
}

TEST_CASE("symmetric_action on a real quadratic field") {
  InvolutiveAlgebra A = real_quad();  // D = 5
  SymmetricSpace S = A.fixed_space();
  testutil::RNG rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = testutil::random_rational(rng);
    Rational b = testutil::random_rational(rng);
    QMatrix m = A.symmetric_action(S, A.element({a, b}));
    // operator-convention matrix of multiplication by (a+bw)^2
    QMatrix expected = QMatrix::from_rows(
        {{a * a + 5 * b * b, 10 * a * b}, {2 * a * b, a * a + 5 * b * b}});
    CHECK(m == expected);
  }
}

TEST_CASE("symmetric_action is anti-multiplicative") {
  testutil::RNG rng(616);
  for (const InvolutiveAlgebra& A :
       {real_quad(), imag_quad(), canonical_quat(), orthogonal_quat()}) {
    SymmetricSpace S = A.fixed_space();
    for (int trial = 0; trial < 50; ++trial) {
      AlgebraElement x = testutil::random_element(A, rng, 5, 2);
      AlgebraElement y = testutil::random_element(A, rng, 5, 2);
      CHECK(A.symmetric_action(S, A.mul(x, y)) ==
            A.symmetric_action(S, y) * A.symmetric_action(S, x));
    }
  }
}

TEST_CASE("determinant identity det(N(x)) = deg(x)^(s/g)") {
  testutil::RNG rng(271828);
  for (const InvolutiveAlgebra& A :
       {real_quad(), imag_quad(), canonical_quat(), orthogonal_quat()}) {
    SymmetricSpace S = A.fixed_space();
    int s = static_cast<int>(S.basis.size());
    int m = A.norm_form_degree();
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement x = testutil::random_element(A, rng, 5, 2);
      Rational lhs = determinant(A.symmetric_action(S, x));
      Rational rhs = pow_rational(A.norm_form(x), 2 * s / m);
      CHECK(lhs == rhs);
    }
  }
}
