#pragma once

#include <optional>
#include <vector>

#include "heightrel/matrix.hpp"
#include "heightrel/rational.hpp"

namespace heightrel {

using IntegerVector = std::vector<Int>;

/// Reduces m to reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_in_place(QMatrix& m);

/// Basis of the right null space as column vectors, each scaled to integer
/// entries with content 1 and positive leading entry. Empty iff m is injective.
std::vector<QMatrix> kernel(const QMatrix& m);

Rational determinant(QMatrix m);

/// Any x with m*x = rhs (free variables set to 0), or nullopt if inconsistent.
/// rhs may have several columns; all are solved against the same m.
std::optional<QMatrix> solve(const QMatrix& m, const QMatrix& rhs);

/// Clears denominators, divides by the content and flips the sign so the first
/// nonzero entry is positive. Rejects the zero vector.
IntegerVector normalize_relation(const std::vector<Rational>& v);

/// Unique canonical basis (integer RREF rows) of the Q-span of the given vectors.
std::vector<IntegerVector> canonical_span_basis(const std::vector<IntegerVector>& vectors,
                                                int length);

bool in_span(const IntegerVector& v, const std::vector<IntegerVector>& basis);

/// Exact-rational LLL reduction. Input vectors must be linearly independent and
/// 1/4 < delta < 1; the output spans the same lattice.
std::vector<IntegerVector> lll_reduce(std::vector<IntegerVector> basis,
                                      const Rational& delta = Rational(99, 100));

}  // namespace heightrel
