#include "heightrel/number_field.hpp"

#include <array>
#include <stdexcept>

namespace heightrel {

NumberField NumberField::rationals() { return NumberField(1, 0); }

NumberField NumberField::imaginary_quadratic(int d) {
  static const std::array<int, 5> supported = {-1, -2, -3, -7, -11};
  for (int s : supported) {
    if (d == s) return NumberField(2, d);
  }
  throw std::invalid_argument("unsupported imaginary quadratic field parameter " +
                              std::to_string(d));
}

FieldElement NumberField::add(const FieldElement& x, const FieldElement& y) const {
  return FieldElement(x.a + y.a, x.b + y.b);
}

FieldElement NumberField::sub(const FieldElement& x, const FieldElement& y) const {
  return FieldElement(x.a - y.a, x.b - y.b);
}

FieldElement NumberField::neg(const FieldElement& x) const {
  return FieldElement(-x.a, -x.b);
}

FieldElement NumberField::mul(const FieldElement& x, const FieldElement& y) const {
  if (is_rationals()) return FieldElement(x.a * y.a);
  return FieldElement(x.a * y.a + Rational(d_) * x.b * y.b, x.a * y.b + x.b * y.a);
}

FieldElement NumberField::conj(const FieldElement& x) const {
  return FieldElement(x.a, -x.b);
}

Rational NumberField::norm(const FieldElement& x) const {
  if (is_rationals()) return x.a * x.a;
  return x.a * x.a - Rational(d_) * x.b * x.b;
}

FieldElement NumberField::div(const FieldElement& x, const FieldElement& y) const {
  if (y.is_zero()) throw std::invalid_argument("division by zero field element");
  if (is_rationals()) return FieldElement(x.a / y.a);
  Rational n = norm(y);
  FieldElement t = mul(x, conj(y));
  return FieldElement(t.a / n, t.b / n);
}

bool NumberField::is_integral(const FieldElement& x) const {
  if (is_rationals()) return x.b == 0 && x.a.get_den() == 1;
  bool mod1 = ((d_ % 4) + 4) % 4 == 1;
  if (x.a.get_den() == 1 && x.b.get_den() == 1) return true;
  if (!mod1) return false;
  // half-integer coordinates with matching parity: (u + v sqrt(d))/2, u = v mod 2
  Rational u2 = x.a * 2, v2 = x.b * 2;
  if (u2.get_den() != 1 || v2.get_den() != 1) return false;
  return (u2.get_num() - v2.get_num()) % 2 == 0;
}

FieldElement NumberField::nearest_integer(const FieldElement& x) const {
  if (is_rationals()) return FieldElement(Rational(round_nearest(x.a)));
  bool mod1 = ((d_ % 4) + 4) % 4 == 1;
  FieldElement best;
  Rational best_norm(-1);
  auto consider = [&](const FieldElement& cand) {
    Rational n = norm(sub(x, cand));
    if (best_norm < 0 || n < best_norm) {
      best_norm = n;
      best = cand;
    }
  };
  if (!mod1) {
    Int ra = round_nearest(x.a), rb = round_nearest(x.b);
    for (int da = -1; da <= 1; ++da)
      for (int db = -1; db <= 1; ++db)
        consider(FieldElement(Rational(ra + da), Rational(rb + db)));
  } else {
    // lattice Z + Z*(1+sqrt(d))/2; coordinates (s, t): element s + t(1+sqrt(d))/2
    Rational t_coord = x.b * 2;
    Rational s_coord = x.a - x.b;
    Int rs = round_nearest(s_coord), rt = round_nearest(t_coord);
    for (int ds = -1; ds <= 1; ++ds) {
      for (int dt = -1; dt <= 1; ++dt) {
        Rational s(rs + ds), t(rt + dt);
        consider(FieldElement(s + t / 2, t / 2));
      }
    }
  }
  if (!(best_norm < 1))
    throw std::logic_error("rounding failed to produce a remainder of norm < 1");
  return best;
}

std::vector<FieldElement> NumberField::units() const {
  std::vector<FieldElement> us = {FieldElement(Rational(1)), FieldElement(Rational(-1))};
  if (!is_rationals() && d_ == -1) {
    us.emplace_back(Rational(0), Rational(1));
    us.emplace_back(Rational(0), Rational(-1));
  }
  if (!is_rationals() && d_ == -3) {
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        us.emplace_back(Rational(sa, 2), Rational(sb, 2));
      }
    }
  }
  return us;
}

FieldElement NumberField::canonical_associate(const FieldElement& x) const {
  if (x.is_zero()) return x;
  FieldElement best = x;
  auto better = [](const FieldElement& u, const FieldElement& v) {
    // prefer positive leading rational part, then lexicographic (a, b)
    if (u.a != v.a) return u.a > v.a;
    return u.b > v.b;
  };
  for (const FieldElement& unit : units()) {
    FieldElement cand = mul(x, unit);
    if (better(cand, best)) best = cand;
  }
  return best;
}

FieldElement NumberField::gcd(FieldElement x, FieldElement y) const {
  if (!is_integral(x) || !is_integral(y))
    throw std::invalid_argument("gcd is defined for algebraic integers only");
  while (!y.is_zero()) {
    FieldElement q = nearest_integer(div(x, y));
    FieldElement r = sub(x, mul(q, y));
    x = y;
    y = r;
  }
  return canonical_associate(x);
}

FieldElement NumberField::divide_exact(const FieldElement& x, const FieldElement& y) const {
  FieldElement q = div(x, y);
  if (!is_integral(q)) throw std::logic_error("inexact division of algebraic integers");
  return q;
}

std::string NumberField::to_string(const FieldElement& x) const {
  if (is_rationals() || x.b == 0) return heightrel::to_string(x.a);
  std::string s = heightrel::to_string(x.a);
  s += x.b > 0 ? " + " : " - ";
  Rational babs = abs(x.b);
  s += heightrel::to_string(babs) + "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

std::string NumberField::label() const {
  if (is_rationals()) return "Q";
  return "Q(sqrt(" + std::to_string(d_) + "))";
}

}  // namespace heightrel
