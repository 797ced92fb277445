// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status = number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "heightrel/cli.hpp"
#include "heightrel/relation_finder.hpp"
#include "heightrel/transform_forms.hpp"

using namespace heightrel;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string description)
      : number_(number), description_(std::move(description)),
        start_(std::chrono::steady_clock::now()) {}

  void check(bool condition, const std::string& detail) {
    if (!condition) {
      ok_ = false;
      if (first_failure_.empty()) first_failure_ = detail;
    }
  }

  void finish(double budget_seconds) {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > budget_seconds) {
      ok_ = false;
      if (first_failure_.empty())
        first_failure_ = "runtime " + std::to_string(elapsed) + "s exceeds budget";
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", number_,
                description_.c_str(), elapsed, ok_ ? "" : " -- ",
                ok_ ? "" : first_failure_.c_str());
    if (!ok_) ++failures;
  }

 private:
  int number_;
  std::string description_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::string first_failure_;
};

std::vector<InvolutiveAlgebra> builtin_algebras() {
  std::vector<InvolutiveAlgebra> out;
  out.push_back(InvolutiveAlgebra::quadratic_field(Int(5), QuadraticInvolution::trivial));
  out.push_back(InvolutiveAlgebra::quaternion(Rational(1), Rational(1),
                                              QuaternionInvolution::orthogonal));
  out.push_back(InvolutiveAlgebra::quaternion(Rational(-1), Rational(-1),
                                              QuaternionInvolution::canonical));
  out.push_back(InvolutiveAlgebra::quadratic_field(Int(-1), QuadraticInvolution::conjugation));
  return out;
}

Rational random_rational(std::mt19937_64& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

AlgebraElement random_element(const InvolutiveAlgebra& A, std::mt19937_64& rng) {
  std::vector<Rational> coords(A.dim());
  for (auto& c : coords) c = random_rational(rng, 5, 2);
  return A.element(std::move(coords));
}

void criterion1() {
  Criterion c(1, "dimension oracle: brute-force shape vs closed-form bound, 12 cases");
  long long expected_n1[] = {2, 3, 1, 1};
  int idx = 0;
  for (const auto& A : builtin_algebras()) {
    for (int n = 1; n <= 3; ++n) {
      PairingShape shape = pairing_shape(n, A);
      long long bound = endomorphism_bound(static_cast<long long>(n) * A.dim(), A);
      c.check(shape.param_dim == bound,
              A.label() + " n=" + std::to_string(n) + ": " + std::to_string(shape.param_dim) +
                  " != " + std::to_string(bound));
      c.check(shape.param_dim == pairing_quotient_dim(n, A),
              A.label() + ": quotient-count mismatch");
      if (n == 1)
        c.check(shape.param_dim == expected_n1[idx], A.label() + ": unexpected n=1 value");
    }
    ++idx;
  }
  c.finish(10.0);
}

RunOutcome run_command(const std::string& command, const std::string& input_text) {
  static int counter = 0;
  std::string path = "acceptance_input_" + std::to_string(counter++) + ".json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs(input_text.c_str(), f);
    std::fclose(f);
  }
  RunConfig config;
  config.command = command;
  config.input_path = path;
  RunOutcome out = run(config);
  std::remove(path.c_str());
  return out;
}

void criterion2() {
  Criterion c(2, "golden rank-2 shape and transformation matrices through the command layer");
  RunOutcome s5 = run_command(
      "shape", R"({"n": 1, "algebra": {"quadratic": {"D": 5, "involution": "trivial"}}})");
  c.check(s5.exit_code == 0 && s5.report["results"]["param_dim"] == 2 &&
              s5.report["results"]["gram_basis"] ==
                  Json::parse(R"([[["0","1"],["1","0"]], [["1","0"],["0","5"]]])"),
          "D=5 shape basis differs from [[a,b],[b,5a]]");

  RunOutcome s1 = run_command(
      "shape", R"({"n": 1, "algebra": {"quadratic": {"D": -1, "involution": "conjugation"}}})");
  c.check(s1.exit_code == 0 && s1.report["results"]["param_dim"] == 1 &&
              s1.report["results"]["gram_basis"] ==
                  Json::parse(R"([[["1","0"],["0","1"]]])"),
          "D=-1 shape basis differs from [[a,0],[0,-Da]]");

  std::mt19937_64 rng(20250809);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = random_rational(rng, 9, 3);
    Rational b = random_rational(rng, 9, 3);
    Json input;
    input["algebra"] = Json::parse(R"({"quadratic": {"D": 5, "involution": "trivial"}})");
    input["phi"] = Json::array({to_string(a), to_string(b)});
    input["g"] = 2;
    RunOutcome out = run_command("transform", input.dump());
    QMatrix expected =
        QMatrix::from_rows({{a * a + 5 * b * b, 2 * a * b}, {10 * a * b, a * a + 5 * b * b}});
    c.check(out.exit_code == 0 &&
                out.report["results"]["matrix"] == schema::matrix_to_json(expected) &&
                out.report["results"]["det_ok"] == true,
            "transform matrix mismatch at trial " + std::to_string(trial));
  }
  c.finish(5.0);
}

void criterion3() {
  Criterion c(3, "determinant identity det(alpha(phi)) = deg(phi)^(s/g), 100 phi per algebra");
  std::mt19937_64 rng(314159);
  for (const auto& A : builtin_algebras()) {
    SymmetricSpace S = A.fixed_space();
    int s = static_cast<int>(S.basis.size());
    for (int g = 1; g <= 4; ++g) {
      for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement phi = random_element(A, rng);
        TransformMatrix tm = transform_matrix(A, S, phi, g);
        DetCheckResult res = determinant_identity_check(tm, A, g);
        c.check(res.ok, A.label() + " g=" + std::to_string(g));
      }
    }
    for (long n : {-3L, 2L, 7L}) {
      TransformMatrix tm = transform_matrix(A, S, A.scaled(A.one(), Rational(n)), 1);
      c.check(determinant(tm.entries) == pow_rational(Rational(n), 2 * s),
              A.label() + ": det(n) != n^(2s)");
    }
  }
  c.finish(30.0);
}

void criterion4() {
  Criterion c(4, "endomorphism bound strictly sharper than the symmetry bound");
  for (const auto& A : builtin_algebras()) {
    long long d = A.dim();
    for (long long r : {d, 2 * d, 3 * d}) {
      c.check(endomorphism_bound(r, A) < symmetry_bound(r),
              A.label() + " r=" + std::to_string(r));
    }
  }
  c.finish(1.0);
}

void criterion5() {
  Criterion c(5, "canonical height property suite on y^2+y=x^3-x, P=(0,0)");
  NumberField Q = NumberField::rationals();
  auto fe = [](long v) { return FieldElement(Rational(v)); };
  EllipticCurveModel E(Q, fe(0), fe(0), fe(1), fe(-1), fe(0));
  CurvePoint P = CurvePoint::affine(fe(0), fe(0));
  HeightOptions opts{1e-4, 10};

  HeightValue h1 = canonical_height(E, P, opts);
  HeightValue h2 = canonical_height(E, E.multiply(2, P), opts);
  HeightValue h3 = canonical_height(E, E.multiply(3, P), opts);
  c.check(h1.value > 0, "generator height should be positive");
  c.check(std::fabs(h3.value - 9 * h1.value) <= h3.error_bound + 9 * h1.error_bound,
          "|h(3P) - 9h(P)| exceeds the combined bounds");

  HeightValue hsum = canonical_height(E, E.multiply(3, P), opts);
  HeightValue hdiff = canonical_height(E, E.negate(P), opts);
  double residual =
      std::fabs(hsum.value + hdiff.value - 2 * h1.value - 2 * h2.value);
  double budget =
      hsum.error_bound + hdiff.error_bound + 2 * h1.error_bound + 2 * h2.error_bound;
  c.check(residual <= budget, "parallelogram residual exceeds the combined bounds");

  HeightValue cap8 = canonical_height(E, P, {1e-8, 8});
  HeightValue cap10 = canonical_height(E, P, {1e-8, 10});
  c.check(std::fabs(cap8.value - cap10.value) <= cap8.error_bound + cap10.error_bound,
          "cap-8 and cap-10 runs disagree beyond their combined bounds");
  c.finish(60.0);
}

void criterion6() {
  Criterion c(6, "CM adjointness and degree-1 scaling on y^2=x^3-5x over Q(i)");
  NumberField F = NumberField::imaginary_quadratic(-1);
  auto fe = [](long a, long b = 0) { return FieldElement(Rational(a), Rational(b)); };
  EllipticCurveModel E(F, fe(0), fe(0), fe(0), fe(-5), fe(0));
  std::vector<CurvePoint> points = {CurvePoint::affine(fe(-1), fe(2)),
                                    CurvePoint::affine(fe(2, 1), fe(1, 3))};
  EndoMap f;
  f.x_num = {fe(0), fe(-1)};
  f.x_den = {fe(1)};
  f.y_num = {fe(0, 1)};
  f.y_den = {fe(1)};
  f.declared_degree = 1;
  f.adjoint_power = 3;

  HeightOptions opts{1e-4, 10};
  ResidualReport adj = adjoint_check(E, f, points, opts);
  c.check(adj.converged, "adjoint heights did not converge");
  c.check(adj.max_residual <= 1e-3,
          "adjoint residual " + std::to_string(adj.max_residual) + " above 1e-3");

  ResidualReport deg = degree_scaling_check(E, f, points, opts);
  c.check(deg.converged, "degree-scaling heights did not converge");
  c.check(deg.max_residual <= 1e-3,
          "degree-1 scaling residual " + std::to_string(deg.max_residual) + " above 1e-3");
  c.finish(120.0);
}

void criterion7() {
  Criterion c(7, "relation pipeline: rm-surface demo for D in {5, 13} plus corrupted variant");
  for (long D : {5L, 13L}) {
    RunConfig config;
    config.command = "demo";
    config.demo_variant = "rm-surface";
    config.demo_disc = D;
    config.demo_rank = 1;
    RunOutcome out = run(config);
    c.check(out.exit_code == 0, "demo exited nonzero for D=" + std::to_string(D));
    const Json& r = out.report["results"];
    c.check(r["verdict"] == "consistent", "verdict not consistent for D=" + std::to_string(D));
    Json expected_rel = Json::array({D, 0, -1});
    c.check(r["detected"].size() == 1 && r["detected"][0]["coefficients"] == expected_rel,
            "detected basis differs from the predicted relation for D=" + std::to_string(D));
    c.check(r["predicted"].size() == 1 && r["predicted"][0] == expected_rel,
            "prediction is not the single diagonal relation for D=" + std::to_string(D));
    long long bound = endomorphism_bound(
        2, InvolutiveAlgebra::quadratic_field(Int(D), QuadraticInvolution::trivial));
    c.check(r["estimated_span_dim"].get<long long>() == bound,
            "span estimate differs from the endomorphism bound for D=" + std::to_string(D));

    config.demo_corrupt = true;
    RunOutcome bad = run(config);
    c.check(bad.exit_code == 1 && bad.report["results"]["verdict"] == "inconsistent",
            "corrupted variant not flagged for D=" + std::to_string(D));
  }
  c.finish(10.0);
}

void criterion8() {
  Criterion c(8, "relation finder: 100 planted systems recovered, 100 generic systems clean");
  std::mt19937_64 rng(0xACCE97);
  std::uniform_real_distribution<double> base(1.0, 2.0);
  std::uniform_real_distribution<double> eps(-1e-12, 1e-12);

  for (int trial = 0; trial < 100; ++trial) {
    int free_dim = 1 + trial % 2;
    int total = std::min(6, free_dim + 1 + trial % 4);
    long coeff_bound = free_dim == 1 ? 50 : 9;
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);

    std::vector<double> values(total);
    std::vector<IntegerVector> planted;
    for (int i = 0; i < free_dim; ++i) values[i] = base(rng);
    for (int j = free_dim; j < total; ++j) {
      IntegerVector rel(total, 0);
      double v = 0.0;
      bool nontrivial = false;
      for (int i = 0; i < free_dim; ++i) {
        long k = coeff(rng);
        if (k != 0) nontrivial = true;
        rel[i] = k;
        v += static_cast<double>(k) * values[i];
      }
      if (!nontrivial) {
        rel[0] = 1;
        v = values[0];
      }
      rel[j] = -1;
      values[j] = v;
      planted.push_back(normalize_relation(std::vector<Rational>(rel.begin(), rel.end())));
    }
    for (double& v : values) v += eps(rng);

    std::vector<IntegerRelation> detected = find_relations(values, 12, 100);
    std::vector<IntegerVector> coeffs;
    for (const auto& d : detected) coeffs.push_back(d.coefficients);
    c.check(canonical_span_basis(coeffs, total) == canonical_span_basis(planted, total),
            "planted system " + std::to_string(trial) + " not recovered exactly");
  }

  // generic systems stay at 2 or 3 values: with the threshold formula at
  // 12 digits and bound 100, four values already admit rare accidental
  // relations (measured at the 2e-3 per-trial level), three do not.
  for (int trial = 0; trial < 100; ++trial) {
    int total = 2 + trial % 2;
    std::vector<double> values(total);
    for (double& v : values) v = base(rng);
    c.check(find_relations(values, 12, 100).empty(),
            "false positive on generic system " + std::to_string(trial));
  }
  c.finish(30.0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
