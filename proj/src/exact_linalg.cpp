#include "heightrel/exact_linalg.hpp"

#include <stdexcept>

namespace heightrel {

std::vector<int> rref_in_place(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    Rational inv = m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

IntegerVector normalize_relation(const std::vector<Rational>& v) {
  Int lcm = 1;
  for (const Rational& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  IntegerVector out(v.size());
  bool nonzero = false;
  for (size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * lcm;
    out[i] = scaled.get_num();
    if (out[i] != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("cannot normalize the zero vector");
  Int g = content(out);
  int lead_sign = 0;
  for (const Int& x : out) {
    if (x != 0) {
      lead_sign = sgn(x);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  for (Int& x : out) x /= g;
  return out;
}

std::vector<QMatrix> kernel(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<QMatrix> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) {
      if (pivots[k] < free_col) v[pivots[k]] = -r.at(static_cast<int>(k), free_col);
    }
    IntegerVector nv = normalize_relation(v);
    QMatrix col(m.cols(), 1);
    for (int i = 0; i < m.cols(); ++i) col.at(i, 0) = Rational(nv[i]);
    basis.push_back(std::move(col));
  }
  return basis;
}

Rational determinant(QMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / inv;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::optional<QMatrix> solve(const QMatrix& m, const QMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: rhs row count mismatch");
  QMatrix aug(m.rows(), m.cols() + rhs.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    for (int j = 0; j < rhs.cols(); ++j) aug.at(i, m.cols() + j) = rhs.at(i, j);
  }
  std::vector<int> pivots = rref_in_place(aug);
  // A pivot in the rhs block means an inconsistent system.
  for (int p : pivots) {
    if (p >= m.cols()) return std::nullopt;
  }
  QMatrix x(m.cols(), rhs.cols());
  for (size_t k = 0; k < pivots.size(); ++k) {
    for (int j = 0; j < rhs.cols(); ++j)
      x.at(pivots[k], j) = aug.at(static_cast<int>(k), m.cols() + j);
  }
  return x;
}

std::vector<IntegerVector> canonical_span_basis(const std::vector<IntegerVector>& vectors,
                                                int length) {
  if (vectors.empty()) return {};
  QMatrix m(static_cast<int>(vectors.size()), length);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != length)
      throw std::invalid_argument("canonical_span_basis: length mismatch");
    for (int j = 0; j < length; ++j) m.at(static_cast<int>(i), j) = Rational(vectors[i][j]);
  }
  std::vector<int> pivots = rref_in_place(m);
  std::vector<IntegerVector> out;
  for (size_t k = 0; k < pivots.size(); ++k) {
    std::vector<Rational> row(length);
    for (int j = 0; j < length; ++j) row[j] = m.at(static_cast<int>(k), j);
    out.push_back(normalize_relation(row));
  }
  return out;
}

bool in_span(const IntegerVector& v, const std::vector<IntegerVector>& basis) {
  int length = static_cast<int>(v.size());
  std::vector<IntegerVector> with = basis;
  with.push_back(v);
  return canonical_span_basis(with, length).size() == canonical_span_basis(basis, length).size();
}

namespace {

Rational dot(const IntegerVector& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gram-Schmidt data for the current basis prefix, exact over Q.
struct Gso {
  std::vector<std::vector<Rational>> star;  // orthogonalized vectors
  std::vector<std::vector<Rational>> mu;    // mu[i][j], j < i
  std::vector<Rational> norm2;              // |b*_i|^2

  void compute(const std::vector<IntegerVector>& b) {
    size_t n = b.size();
    star.assign(n, {});
    mu.assign(n, {});
    norm2.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
      std::vector<Rational> v(b[i].size());
      for (size_t t = 0; t < b[i].size(); ++t) v[t] = Rational(b[i][t]);
      mu[i].assign(i, Rational(0));
      for (size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / norm2[j];
        for (size_t t = 0; t < v.size(); ++t) v[t] -= mu[i][j] * star[j][t];
      }
      norm2[i] = dot(v, v);
      if (norm2[i] == 0)
        throw std::invalid_argument("lll_reduce: input vectors are linearly dependent");
      star[i] = std::move(v);
    }
  }
};

}  // namespace

std::vector<IntegerVector> lll_reduce(std::vector<IntegerVector> basis, const Rational& delta) {
  if (basis.empty()) return basis;
  if (!(delta > Rational(1, 4) && delta < 1))
    throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
  size_t dim = basis[0].size();
  for (const auto& v : basis) {
    if (v.size() != dim) throw std::invalid_argument("lll_reduce: ragged basis");
  }

  Gso gso;
  gso.compute(basis);
  size_t n = basis.size();

  auto size_reduce = [&](size_t k, size_t l) {
    if (2 * abs(gso.mu[k][l]) > 1) {
      Int q = round_nearest(gso.mu[k][l]);
      for (size_t t = 0; t < dim; ++t) basis[k][t] -= q * basis[l][t];
      for (size_t j = 0; j < l; ++j) gso.mu[k][j] -= Rational(q) * gso.mu[l][j];
      gso.mu[k][l] -= Rational(q);
    }
  };

  size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    if (gso.norm2[k] < (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.norm2[k - 1]) {
      std::swap(basis[k], basis[k - 1]);
      // Standard mu/B update after swapping rows k-1 and k.
      Rational mu_old = gso.mu[k][k - 1];
      Rational b_new = gso.norm2[k] + mu_old * mu_old * gso.norm2[k - 1];
      gso.mu[k][k - 1] = mu_old * gso.norm2[k - 1] / b_new;
      gso.norm2[k] = gso.norm2[k - 1] * gso.norm2[k] / b_new;
      gso.norm2[k - 1] = b_new;
      for (size_t j = 0; j + 1 < k; ++j) std::swap(gso.mu[k][j], gso.mu[k - 1][j]);
      for (size_t i = k + 1; i < n; ++i) {
        Rational t = gso.mu[i][k];
        gso.mu[i][k] = gso.mu[i][k - 1] - mu_old * t;
        gso.mu[i][k - 1] = t + gso.mu[k][k - 1] * gso.mu[i][k];
      }
      k = k > 1 ? k - 1 : 1;
    } else {
      for (size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
  return basis;
}

}  // namespace heightrel
