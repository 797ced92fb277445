#include "heightrel/neron_tate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace heightrel {

namespace {

constexpr double kErrorFloor = 1e-15;

// ---------------------------------------------------------------------------
// Integer rings for the doubling iteration. Elements of the ring of integers
// are kept in integer coordinates so that every step is pure mpz arithmetic.
// ---------------------------------------------------------------------------

struct ZRing {
  using Elem = Int;

  static Elem one() { return 1; }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem mul_long(const Elem& x, long c) const { return x * c; }

  Elem from_field(const NumberField&, const FieldElement& x) const {
    if (x.b != 0 || x.a.get_den() != 1)
      throw std::logic_error("expected a rational integer");
    return x.a.get_num();
  }

  // gcd(a, b) given that it divides r.
  Elem bounded_gcd(const Elem& a, const Elem& b, const Elem& r) const {
    Int ga, gb, g;
    mpz_gcd(ga.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
    mpz_gcd(gb.get_mpz_t(), b.get_mpz_t(), r.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    return g;
  }
  Elem divide_exact(const Elem& x, const Elem& g) const {
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return q;
  }

  // log of the height contribution max(|num|, |den|)
  double naive_log(const Elem& num, const Elem& den) const {
    Int na = abs(num), da = abs(den);
    Int m = na > da ? na : da;
    return m == 0 ? 0.0 : log_abs(m);
  }
};

// O_K in the basis {1, theta} with theta^2 = P + Q*theta and conj(theta) = Q - theta.
// theta = sqrt(d) for d = 2,3 mod 4 and (1+sqrt(d))/2 for d = 1 mod 4.
struct QuadRing {
  Int P;
  long Q;

  explicit QuadRing(int d) {
    if (((d % 4) + 4) % 4 == 1) {
      P = Int(d - 1) / 4;
      Q = 1;
    } else {
      P = d;
      Q = 0;
    }
  }

  struct Elem {
    Int s, t;
  };

  static Elem one() { return Elem{1, 0}; }
  bool is_zero(const Elem& x) const { return x.s == 0 && x.t == 0; }
  Elem add(const Elem& x, const Elem& y) const { return Elem{x.s + y.s, x.t + y.t}; }
  Elem sub(const Elem& x, const Elem& y) const { return Elem{x.s - y.s, x.t - y.t}; }
  Elem mul(const Elem& x, const Elem& y) const {
    Int tt = x.t * y.t;
    return Elem{x.s * y.s + P * tt, x.s * y.t + x.t * y.s + Q * tt};
  }
  Elem mul_long(const Elem& x, long c) const { return Elem{x.s * c, x.t * c}; }
  Elem conj(const Elem& x) const { return Elem{x.s + Q * x.t, -x.t}; }

  // N(s + t*theta) = s^2 + Q s t - P t^2, positive definite here.
  Int norm(const Elem& x) const { return x.s * x.s + Q * x.s * x.t - P * x.t * x.t; }

  Elem from_field(const NumberField& field, const FieldElement& x) const {
    Rational s, t;
    if (Q == 0) {
      s = x.a;
      t = x.b;
    } else {
      s = x.a - x.b;
      t = x.b * 2;
    }
    if (s.get_den() != 1 || t.get_den() != 1 || !field.is_integral(x))
      throw std::logic_error("expected an algebraic integer");
    return Elem{s.get_num(), t.get_num()};
  }

  // Division with remainder: q minimizing N(x - q*y) over a 3x3 rounding
  // neighborhood; the fields in use are norm-Euclidean so N(rem) < N(y).
  Elem divide_round(const Elem& x, const Elem& y, Elem* remainder) const {
    Int n = norm(y);
    Elem c = mul(x, conj(y));  // exact quotient = c / n
    Int qs0, qt0;
    // nearest integer to c.s/n and c.t/n
    auto nearest = [&](const Int& a) {
      Int num = 2 * a + n;
      Int den = 2 * n;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return q;
    };
    qs0 = nearest(c.s);
    qt0 = nearest(c.t);
    Elem best_q{qs0, qt0};
    Int best_norm(-1);
    for (int ds = -1; ds <= 1; ++ds) {
      for (int dt = -1; dt <= 1; ++dt) {
        Elem q{qs0 + ds, qt0 + dt};
        // N(x - q y) = N(c - q n) / n, computed on small remainders
        Elem rem{c.s - q.s * n, c.t - q.t * n};
        Int rn = norm(rem);
        if (best_norm < 0 || rn < best_norm) {
          best_norm = rn;
          best_q = q;
        }
      }
    }
    if (remainder) *remainder = sub(x, mul(best_q, y));
    if (best_norm >= n * n)
      throw std::logic_error("Euclidean rounding failed to reduce the norm");
    return best_q;
  }

  Elem euclid_gcd(Elem a, Elem b) const {
    while (!is_zero(b)) {
      Elem r;
      divide_round(a, b, &r);
      a = b;
      b = r;
    }
    return a;
  }

  Elem bounded_gcd(const Elem& a, const Elem& b, const Elem& r) const {
    // gcd(a, r): one big division brings a below N(r), the rest is small.
    Elem ga = euclid_gcd(r, [&] {
      Elem rem;
      divide_round(a, r, &rem);
      return rem;
    }());
    Elem gb = euclid_gcd(r, [&] {
      Elem rem;
      divide_round(b, r, &rem);
      return rem;
    }());
    return euclid_gcd(ga, gb);
  }

  Elem divide_exact(const Elem& x, const Elem& g) const {
    Int n = norm(g);
    Elem c = mul(x, conj(g));
    Elem out;
    if (!mpz_divisible_p(c.s.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(c.t.get_mpz_t(), n.get_mpz_t()))
      throw std::logic_error("inexact division in the ring of integers");
    mpz_divexact(out.s.get_mpz_t(), c.s.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(out.t.get_mpz_t(), c.t.get_mpz_t(), n.get_mpz_t());
    return out;
  }

  // (1/2) log max(N(num), N(den)) -- both embeddings contribute equally.
  double naive_log(const Elem& num, const Elem& den) const {
    Int nn = norm(num), nd = norm(den);
    Int m = nn > nd ? nn : nd;
    return m == 0 ? 0.0 : 0.5 * log_abs(m);
  }
};

// ---------------------------------------------------------------------------
// Curve-level helpers
// ---------------------------------------------------------------------------

// Determinant of a small matrix over the base field, by Gaussian elimination.
FieldElement field_determinant(const NumberField& F, std::vector<std::vector<FieldElement>> m) {
  size_t n = m.size();
  FieldElement det(Rational(1));
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return FieldElement(Rational(0));
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      FieldElement f = F.div(m[row][col], m[col][col]);
      for (size_t j = col; j < n; ++j) m[row][j] = F.sub(m[row][j], F.mul(f, m[col][j]));
    }
  }
  return det;
}

// Res_x(numerator, denominator) of the duplication map; nonzero for a
// nonsingular model and an upper bound (up to units) for the gcd that can
// appear when the homogenized quartics are evaluated on a coprime pair.
FieldElement duplication_resultant(const EllipticCurveModel& E) {
  const NumberField& F = E.field();
  FieldElement b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), b8 = E.b8();
  FieldElement zero(Rational(0));
  std::vector<FieldElement> N = {FieldElement(Rational(1)), zero, F.neg(b4),
                                 F.neg(F.mul(FieldElement(Rational(2)), b6)), F.neg(b8)};
  std::vector<FieldElement> D = {FieldElement(Rational(4)), b2,
                                 F.mul(FieldElement(Rational(2)), b4), b6};
  std::vector<std::vector<FieldElement>> syl(7, std::vector<FieldElement>(7, zero));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 5; ++c) syl[r][r + c] = N[c];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) syl[3 + r][r + c] = D[c];
  FieldElement res = field_determinant(F, std::move(syl));
  if (res.is_zero()) throw std::logic_error("vanishing duplication resultant on a smooth curve");
  return res;
}

// Scaling factor u making the model (u^i a_i) integral under (x,y) -> (u^2 x, u^3 y).
Int integral_model_scale(const EllipticCurveModel& E) {
  Int u = 1;
  for (const FieldElement* c : {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()}) {
    Int f;
    mpz_lcm(f.get_mpz_t(), c->a.get_den().get_mpz_t(), c->b.get_den().get_mpz_t());
    mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), f.get_mpz_t());
  }
  return u;
}

struct IntegralModel {
  EllipticCurveModel curve;
  FieldElement x;  // image of the x-coordinate
};

IntegralModel rescale_to_integral(const EllipticCurveModel& E, const CurvePoint& p) {
  const NumberField& F = E.field();
  Int u = integral_model_scale(E);
  Rational u2(u * u), u3(u2 * u), u4(u2 * u2), u6(u3 * u3);
  FieldElement a1 = F.mul(E.a1(), FieldElement(Rational(u)));
  FieldElement a2 = F.mul(E.a2(), FieldElement(u2));
  FieldElement a3 = F.mul(E.a3(), FieldElement(u3));
  FieldElement a4 = F.mul(E.a4(), FieldElement(u4));
  FieldElement a6 = F.mul(E.a6(), FieldElement(u6));
  return IntegralModel{EllipticCurveModel(F, a1, a2, a3, a4, a6),
                       F.mul(p.x, FieldElement(u2))};
}

// One run of the doubling limit over a concrete integer ring.
template <class Ring>
HeightValue doubling_limit(const Ring& ring, const EllipticCurveModel& E, const FieldElement& x0,
                           const HeightOptions& opts) {
  const NumberField& F = E.field();
  using Elem = typename Ring::Elem;

  Elem cb2 = ring.from_field(F, E.b2());
  Elem cb4 = ring.from_field(F, E.b4());
  Elem cb6 = ring.from_field(F, E.b6());
  Elem cb8 = ring.from_field(F, E.b8());
  Elem res = ring.from_field(F, duplication_resultant(E));

  // x0 = num/den over the ring of integers, made coprime once at small size.
  Int clear;
  mpz_lcm(clear.get_mpz_t(), x0.a.get_den().get_mpz_t(), x0.b.get_den().get_mpz_t());
  Elem num = ring.from_field(F, F.mul(x0, FieldElement(Rational(clear))));
  Elem den = ring.from_field(F, FieldElement(Rational(clear)));
  if (ring.is_zero(num)) {
    den = ring.one();
  } else {
    // gcd(num, den) divides num, so the bounded form computes the full gcd
    Elem g = ring.bounded_gcd(num, den, num);
    num = ring.divide_exact(num, g);
    den = ring.divide_exact(den, g);
  }

  double partial = 0.5 * ring.naive_log(num, den);
  double scale = 1.0;
  double last_diff = std::numeric_limits<double>::infinity();
  double defect_estimate = 0.0;  // max over steps of |S_n - S_{n-1}| * 4^n
  bool converged = false;
  int n = 0;
  // Small points can produce coincidentally equal partial sums in the first
  // couple of steps (naive heights 0); do not trust the stability signal there.
  const int min_doublings = std::min(4, opts.doubling_cap);

  while (n < opts.doubling_cap) {
    ++n;
    scale *= 0.25;
    // A = n^4 - b4 n^2 d^2 - 2 b6 n d^3 - b8 d^4
    // B = 4 n^3 d + b2 n^2 d^2 + 2 b4 n d^3 + b6 d^4
    Elem n2 = ring.mul(num, num);
    Elem d2 = ring.mul(den, den);
    Elem nd = ring.mul(num, den);
    Elem n4 = ring.mul(n2, n2);
    Elem n2d2 = ring.mul(n2, d2);
    Elem nd3 = ring.mul(nd, d2);
    Elem d4 = ring.mul(d2, d2);

    Elem A = ring.sub(n4, ring.mul(cb4, n2d2));
    A = ring.sub(A, ring.mul_long(ring.mul(cb6, nd3), 2));
    A = ring.sub(A, ring.mul(cb8, d4));
    Elem B = ring.mul_long(ring.mul(n2, nd), 4);
    B = ring.add(B, ring.mul(cb2, n2d2));
    B = ring.add(B, ring.mul_long(ring.mul(cb4, nd3), 2));
    B = ring.add(B, ring.mul(cb6, d4));

    if (ring.is_zero(B)) {
      // the point doubled into O: torsion of 2-power order
      return HeightValue{0.0, std::numeric_limits<double>::min(), true};
    }
    Elem g = ring.bounded_gcd(A, B, res);
    num = ring.divide_exact(A, g);
    den = ring.divide_exact(B, g);

    double next = 0.5 * scale * ring.naive_log(num, den);
    last_diff = std::fabs(next - partial);
    partial = next;
    defect_estimate = std::max(defect_estimate, last_diff / scale);
    if (n >= min_doublings && last_diff < opts.tol / 2) {
      converged = true;
      break;
    }
  }

  // The per-step differences are bounded by defect * 4^{-k}, so the dropped
  // tail is at most defect * 4^{-n} / 3; a safety factor of 4 on top.
  double err = std::max(4.0 * defect_estimate * scale / 3.0, kErrorFloor);
  return HeightValue{partial, err, converged};
}

std::string point_key(const NumberField& F, const CurvePoint& p) {
  if (p.infinity) return "O";
  return F.to_string(p.x) + ";" + F.to_string(p.y);
}

}  // namespace

double naive_x_height(const EllipticCurveModel& curve, const CurvePoint& p) {
  if (p.infinity) throw std::invalid_argument("naive height requires an affine point");
  const NumberField& F = curve.field();
  if (F.is_rationals()) {
    const Rational& x = p.x.a;
    Int num_abs = abs(x.get_num());
    Int m = num_abs > x.get_den() ? num_abs : x.get_den();
    return log_abs(m);
  }
  Int clear;
  mpz_lcm(clear.get_mpz_t(), p.x.a.get_den().get_mpz_t(), p.x.b.get_den().get_mpz_t());
  FieldElement num = F.mul(p.x, FieldElement(Rational(clear)));
  FieldElement den = FieldElement(Rational(clear));
  FieldElement g = F.gcd(num, den);
  num = F.divide_exact(num, g);
  den = F.divide_exact(den, g);
  Rational nn = F.norm(num), nd = F.norm(den);
  Rational m = nn > nd ? nn : nd;
  if (m.get_den() != 1) throw std::logic_error("non-integral norm of an algebraic integer");
  return 0.5 * log_abs(m.get_num());
}

bool is_torsion(const EllipticCurveModel& curve, const CurvePoint& p, int bound) {
  if (p.infinity) return true;
  CurvePoint acc = p;
  for (int m = 1; m <= bound; ++m) {
    if (acc.infinity) return true;
    acc = curve.add(acc, p);
  }
  return false;
}

HeightValue canonical_height(const EllipticCurveModel& curve, const CurvePoint& p,
                             const HeightOptions& opts) {
  if (opts.tol < 1e-8) throw std::invalid_argument("tolerance below the supported minimum 1e-8");
  if (opts.doubling_cap < 1) throw std::invalid_argument("doubling cap must be positive");
  curve.require_on_curve(p);
  if (is_torsion(curve, p))
    return HeightValue{0.0, std::numeric_limits<double>::min(), true};

  IntegralModel model = rescale_to_integral(curve, p);
  const NumberField& F = curve.field();
  if (F.is_rationals()) {
    return doubling_limit(ZRing{}, model.curve, model.x, opts);
  }
  return doubling_limit(QuadRing(F.d()), model.curve, model.x, opts);
}

HeightValue HeightEngine::height(const CurvePoint& p) {
  std::string key = point_key(curve_.field(), p);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  HeightValue v = canonical_height(curve_, p, opts_);
  cache_.emplace(std::move(key), v);
  return v;
}

HeightValue HeightEngine::pairing(const CurvePoint& p, const CurvePoint& q) {
  HeightValue hpq = height(curve_.add(p, q));
  HeightValue hp = height(p);
  HeightValue hq = height(q);
  return HeightValue{hpq.value - hp.value - hq.value,
                     hpq.error_bound + hp.error_bound + hq.error_bound,
                     hpq.converged && hp.converged && hq.converged};
}

HeightValue pairing(const EllipticCurveModel& curve, const CurvePoint& p, const CurvePoint& q,
                    const HeightOptions& opts) {
  HeightEngine engine(curve, opts);
  return engine.pairing(p, q);
}

GramMeasurement gram_matrix(const EllipticCurveModel& curve,
                            const std::vector<CurvePoint>& points, const HeightOptions& opts) {
  HeightEngine engine(curve, opts);
  size_t n = points.size();
  GramMeasurement gm;
  gm.points = points;
  gm.matrix.assign(n, std::vector<double>(n, 0.0));
  gm.error_bound = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      HeightValue v;
      if (i == j) {
        v = engine.height(points[i]);
        v.value *= 2;
        v.error_bound *= 2;
      } else {
        v = engine.pairing(points[i], points[j]);
      }
      gm.matrix[i][j] = gm.matrix[j][i] = v.value;
      gm.error_bound = std::max(gm.error_bound, v.error_bound);
      gm.converged = gm.converged && v.converged;
    }
  }
  return gm;
}

ResidualReport adjoint_check(const EllipticCurveModel& curve, const EndoMap& f,
                             const std::vector<CurvePoint>& points, const HeightOptions& opts) {
  HeightEngine engine(curve, opts);
  ResidualReport report;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      CurvePoint fp = apply_endo(curve, f, points[i]);
      CurvePoint adj_q = apply_endo_power(curve, f, points[j], f.adjoint_power);
      HeightValue lhs = engine.pairing(fp, points[j]);
      HeightValue rhs = engine.pairing(points[i], adj_q);
      ResidualEntry e;
      e.i = static_cast<int>(i);
      e.j = static_cast<int>(j);
      e.residual = std::fabs(lhs.value - rhs.value);
      e.budget = lhs.error_bound + rhs.error_bound;
      report.converged = report.converged && lhs.converged && rhs.converged;
      report.max_residual = std::max(report.max_residual, e.residual);
      report.max_budget = std::max(report.max_budget, e.budget);
      if (e.residual > e.budget) report.within_budget = false;
      report.entries.push_back(e);
    }
  }
  return report;
}

ResidualReport degree_scaling_check(const EllipticCurveModel& curve, const EndoMap& f,
                                    const std::vector<CurvePoint>& points,
                                    const HeightOptions& opts) {
  HeightEngine engine(curve, opts);
  ResidualReport report;
  for (size_t i = 0; i < points.size(); ++i) {
    CurvePoint fp = apply_endo(curve, f, points[i]);
    HeightValue lhs = engine.height(fp);
    HeightValue rhs = engine.height(points[i]);
    ResidualEntry e;
    e.i = static_cast<int>(i);
    e.j = static_cast<int>(i);
    e.residual = std::fabs(lhs.value - static_cast<double>(f.declared_degree) * rhs.value);
    e.budget = lhs.error_bound + static_cast<double>(f.declared_degree) * rhs.error_bound;
    report.converged = report.converged && lhs.converged && rhs.converged;
    report.max_residual = std::max(report.max_residual, e.residual);
    report.max_budget = std::max(report.max_budget, e.budget);
    if (e.residual > e.budget) report.within_budget = false;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace heightrel
