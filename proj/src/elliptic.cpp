#include "heightrel/elliptic.hpp"

namespace heightrel {

namespace {

FieldElement fe(long v) { return FieldElement(Rational(v)); }

}  // namespace

EllipticCurveModel::EllipticCurveModel(NumberField field, FieldElement a1, FieldElement a2,
                                       FieldElement a3, FieldElement a4, FieldElement a6)
    : field_(field), a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
      a4_(std::move(a4)), a6_(std::move(a6)) {
  if (field_.is_rationals()) {
    for (const FieldElement* c : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
      if (c->b != 0)
        throw std::invalid_argument("curve coefficient has an irrational part over Q");
    }
  }
  const NumberField& F = field_;
  FieldElement b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  // disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
  FieldElement t1 = F.mul(F.mul(b2v, b2v), b8v);
  FieldElement t2 = F.mul(fe(8), F.mul(F.mul(b4v, b4v), b4v));
  FieldElement t3 = F.mul(fe(27), F.mul(b6v, b6v));
  FieldElement t4 = F.mul(fe(9), F.mul(F.mul(b2v, b4v), b6v));
  disc_ = F.add(F.sub(F.sub(F.neg(t1), t2), t3), t4);
  if (disc_.is_zero()) throw std::invalid_argument("singular Weierstrass model");
}

FieldElement EllipticCurveModel::b2() const {
  return field_.add(field_.mul(a1_, a1_), field_.mul(fe(4), a2_));
}

FieldElement EllipticCurveModel::b4() const {
  return field_.add(field_.mul(fe(2), a4_), field_.mul(a1_, a3_));
}

FieldElement EllipticCurveModel::b6() const {
  return field_.add(field_.mul(a3_, a3_), field_.mul(fe(4), a6_));
}

FieldElement EllipticCurveModel::b8() const {
  const NumberField& F = field_;
  FieldElement t = F.mul(F.mul(a1_, a1_), a6_);
  t = F.add(t, F.mul(fe(4), F.mul(a2_, a6_)));
  t = F.sub(t, F.mul(a1_, F.mul(a3_, a4_)));
  t = F.add(t, F.mul(a2_, F.mul(a3_, a3_)));
  t = F.sub(t, F.mul(a4_, a4_));
  return t;
}

bool EllipticCurveModel::is_on_curve(const CurvePoint& p) const {
  if (p.infinity) return true;
  const NumberField& F = field_;
  FieldElement lhs = F.add(F.mul(p.y, p.y),
                           F.add(F.mul(a1_, F.mul(p.x, p.y)), F.mul(a3_, p.y)));
  FieldElement rhs = F.add(F.mul(F.mul(p.x, p.x), p.x),
                           F.add(F.mul(a2_, F.mul(p.x, p.x)),
                                 F.add(F.mul(a4_, p.x), a6_)));
  return lhs == rhs;
}

void EllipticCurveModel::require_on_curve(const CurvePoint& p) const {
  if (!is_on_curve(p)) throw std::invalid_argument("point does not satisfy the curve equation");
}

CurvePoint EllipticCurveModel::negate(const CurvePoint& p) const {
  require_on_curve(p);
  return negate_unchecked(p);
}

CurvePoint EllipticCurveModel::negate_unchecked(const CurvePoint& p) const {
  if (p.infinity) return p;
  const NumberField& F = field_;
  // -(x, y) = (x, -y - a1 x - a3)
  FieldElement ny = F.sub(F.sub(F.neg(p.y), F.mul(a1_, p.x)), a3_);
  return CurvePoint::affine(p.x, ny);
}

CurvePoint EllipticCurveModel::add(const CurvePoint& p, const CurvePoint& q) const {
  require_on_curve(p);
  require_on_curve(q);
  return add_unchecked(p, q);
}

CurvePoint EllipticCurveModel::add_unchecked(const CurvePoint& p, const CurvePoint& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const NumberField& F = field_;

  FieldElement lambda;
  if (p.x == q.x) {
    if (q == negate_unchecked(p)) return CurvePoint::at_infinity();
    // tangent: lambda = (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
    FieldElement num = F.add(F.mul(fe(3), F.mul(p.x, p.x)),
                             F.add(F.mul(fe(2), F.mul(a2_, p.x)),
                                   F.sub(a4_, F.mul(a1_, p.y))));
    FieldElement den = F.add(F.mul(fe(2), p.y), F.add(F.mul(a1_, p.x), a3_));
    lambda = F.div(num, den);
  } else {
    lambda = F.div(F.sub(q.y, p.y), F.sub(q.x, p.x));
  }
  FieldElement x3 = F.sub(F.sub(F.add(F.mul(lambda, lambda), F.mul(a1_, lambda)), a2_),
                          F.add(p.x, q.x));
  FieldElement y3 = F.sub(F.sub(F.mul(lambda, F.sub(p.x, x3)), p.y),
                          F.add(F.mul(a1_, x3), a3_));
  return CurvePoint::affine(x3, y3);
}

CurvePoint EllipticCurveModel::multiply(const Int& m, const CurvePoint& p) const {
  require_on_curve(p);
  if (m == 0 || p.infinity) return CurvePoint::at_infinity();
  Int n = abs(m);
  CurvePoint base = m < 0 ? negate_unchecked(p) : p;
  CurvePoint acc = CurvePoint::at_infinity();
  for (long bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = add_unchecked(acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = add_unchecked(acc, base);
  }
  return acc;
}

FieldElement eval_poly(const NumberField& field, const std::vector<FieldElement>& coeffs,
                       const FieldElement& x) {
  FieldElement acc;
  for (size_t k = coeffs.size(); k-- > 0;) acc = field.add(field.mul(acc, x), coeffs[k]);
  return acc;
}

CurvePoint apply_endo(const EllipticCurveModel& curve, const EndoMap& f, const CurvePoint& p) {
  if (p.infinity) return p;
  const NumberField& F = curve.field();
  FieldElement xd = eval_poly(F, f.x_den, p.x);
  FieldElement yd = eval_poly(F, f.y_den, p.x);
  if (xd.is_zero() || yd.is_zero())
    throw ExceptionalPointError("endomorphism denominator vanishes at the point");
  FieldElement nx = F.div(eval_poly(F, f.x_num, p.x), xd);
  FieldElement ny = F.mul(p.y, F.div(eval_poly(F, f.y_num, p.x), yd));
  CurvePoint out = CurvePoint::affine(nx, ny);
  if (!curve.is_on_curve(out))
    throw std::invalid_argument("endomorphism image is not on the curve");
  return out;
}

CurvePoint apply_endo_power(const EllipticCurveModel& curve, const EndoMap& f,
                            const CurvePoint& p, int power) {
  CurvePoint out = p;
  for (int i = 0; i < power; ++i) out = apply_endo(curve, f, out);
  return out;
}

void validate_endo(const EllipticCurveModel& curve, const EndoMap& f,
                   const std::vector<CurvePoint>& samples) {
  if (f.declared_degree < 1) throw std::invalid_argument("endomorphism degree must be positive");
  if (f.adjoint_power < 1) throw std::invalid_argument("adjoint power must be positive");
  if (f.x_num.empty() || f.x_den.empty() || f.y_num.empty() || f.y_den.empty())
    throw std::invalid_argument("endomorphism polynomials must be non-empty");
  std::vector<CurvePoint> probes = samples;
  for (const CurvePoint& s : samples) {
    probes.push_back(curve.multiply(2, s));
    probes.push_back(curve.multiply(3, s));
  }
  if (samples.size() >= 2) probes.push_back(curve.add(samples[0], samples[1]));
  for (const CurvePoint& pt : probes) {
    curve.require_on_curve(pt);
    try {
      (void)apply_endo(curve, f, pt);  // throws if the image is off-curve
    } catch (const ExceptionalPointError&) {
      // a pole among the probes is allowed; only off-curve images are fatal
    }
  }
}

}  // namespace heightrel
