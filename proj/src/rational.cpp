#include "heightrel/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace heightrel {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw std::invalid_argument("rational literal mixes '.' and '/': " + text);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad decimal literal: " + text);
    Int num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw std::invalid_argument("bad decimal literal: " + text);
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Int round_nearest(const Rational& q) {
  // floor(q + 1/2) = floor((2 num + den) / (2 den))
  Int num = 2 * q.get_num() + q.get_den();
  Int den = 2 * q.get_den();
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

bool is_squarefree(const Int& n) {
  Int m = abs(n);
  if (m == 0) return false;
  if (m == 1) return true;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

double log_abs(const Int& n) {
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp) * std::log(2.0);
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow_rational(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("0 cannot be raised to a negative power");
    return pow_rational(Rational(base.get_den(), base.get_num()), -exp);
  }
  Rational out = 1;
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  out.canonicalize();
  return out;
}

}  // namespace heightrel
