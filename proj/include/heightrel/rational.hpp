#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace heightrel {

using Int = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer string, or a decimal literal such as "-1.25".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Int& n);

/// Nearest integer, ties toward +infinity.
Int round_nearest(const Rational& q);

bool is_squarefree(const Int& n);

/// gcd of all entries (non-negative); 0 for an all-zero or empty vector.
Int content(const std::vector<Int>& v);

/// Natural log of |n| for n != 0, accurate to double precision.
double log_abs(const Int& n);

double to_double(const Rational& q);

/// base^exp for integer exp (negative exp inverts; base must be nonzero then).
Rational pow_rational(const Rational& base, long exp);

}  // namespace heightrel
