#include "heightrel/height_relations.hpp"

#include <stdexcept>

namespace heightrel {

long long symmetry_bound(long long r) {
  if (r < 0) throw std::invalid_argument("rank must be non-negative");
  return r * (r + 1) / 2;
}

long long endomorphism_bound(long long r, const InvolutiveAlgebra& A) {
  if (r < 0) throw std::invalid_argument("rank must be non-negative");
  long long d = A.dim();
  if (r % d != 0)
    throw std::invalid_argument("rank is not divisible by the algebra dimension");
  Rational alpha = A.classify_albert().alpha;
  Rational value = Rational(static_cast<long>(r)) / 2 *
                   (Rational(static_cast<long>(r), static_cast<long>(d)) + alpha);
  value.canonicalize();
  if (value.get_den() != 1)
    throw std::logic_error("endomorphism bound is not an integer");
  return value.get_num().get_si();
}

long long skew_subspace_dim(long long n, const InvolutiveAlgebra& A) {
  if (n < 0) throw std::invalid_argument("module rank must be non-negative");
  long long d = A.dim();
  long long s = static_cast<long long>(A.fixed_space().basis.size());
  return n * (n - 1) / 2 * d + n * (d - s);
}

long long pairing_quotient_dim(long long n, const InvolutiveAlgebra& A) {
  return n * n * A.dim() - skew_subspace_dim(n, A);
}

std::vector<std::pair<int, int>> upper_triangle_labels(int r) {
  std::vector<std::pair<int, int>> labels;
  labels.reserve(static_cast<size_t>(r) * (r + 1) / 2);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) labels.emplace_back(i, j);
  return labels;
}

namespace {

int slot_index(int r, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * r - i * (i - 1) / 2 + (j - i);
}

QMatrix block_diagonal_rep(const InvolutiveAlgebra& A, int n, const AlgebraElement& x) {
  QMatrix l = A.left_regular_rep(x);
  int d = A.dim();
  QMatrix out(n * d, n * d);
  for (int b = 0; b < n; ++b)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.at(b * d + i, b * d + j) = l.at(i, j);
  return out;
}

}  // namespace

PairingShape pairing_shape(int n, const InvolutiveAlgebra& A) {
  if (n < 1) throw std::invalid_argument("module rank must be at least 1");
  int d = A.dim();
  int r = n * d;
  int unknowns = r * (r + 1) / 2;

  // One block of r^2 linear constraints per algebra basis element x:
  // (rho(x)^T G - G rho(involute(x)))_{pq} = 0, with G symmetric in the
  // upper-triangular unknowns.
  QMatrix system(d * r * r, unknowns);
  int row = 0;
  for (int bx = 0; bx < d; ++bx) {
    AlgebraElement x = A.basis_element(bx);
    QMatrix left = block_diagonal_rep(A, n, x).transpose();
    QMatrix right = block_diagonal_rep(A, n, A.involute(x));
    for (int p = 0; p < r; ++p) {
      for (int q = 0; q < r; ++q) {
        for (int t = 0; t < r; ++t) {
          if (left.at(p, t) != 0) system.at(row, slot_index(r, t, q)) += left.at(p, t);
          if (right.at(t, q) != 0) system.at(row, slot_index(r, p, t)) -= right.at(t, q);
        }
        ++row;
      }
    }
  }

  std::vector<QMatrix> null_basis = kernel(system);

  PairingShape shape;
  shape.rank = r;
  shape.module_rank = n;
  shape.param_dim = static_cast<int>(null_basis.size());
  shape.labels = upper_triangle_labels(r);
  for (const QMatrix& vec : null_basis) {
    QMatrix g(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) g.at(i, j) = g.at(j, i) = vec.at(slot_index(r, i, j), 0);
    shape.gram_basis.push_back(std::move(g));
  }

  // Entry relations: kernel of the transpose of the parameters-to-entries map.
  if (shape.param_dim == 0) {
    for (int slot = 0; slot < unknowns; ++slot) {
      IntegerVector rel(unknowns, 0);
      rel[slot] = 1;
      shape.entry_relations.push_back(std::move(rel));
    }
  } else {
    QMatrix param_to_entry_t(shape.param_dim, unknowns);
    for (int k = 0; k < shape.param_dim; ++k)
      for (int slot = 0; slot < unknowns; ++slot)
        param_to_entry_t.at(k, slot) = null_basis[k].at(slot, 0);
    for (const QMatrix& rel : kernel(param_to_entry_t)) {
      IntegerVector v(unknowns);
      for (int slot = 0; slot < unknowns; ++slot) v[slot] = rel.at(slot, 0).get_num();
      shape.entry_relations.push_back(std::move(v));
    }
  }
  return shape;
}

RelationSet real_multiplication_relations(int n, const Int& D) {
  if (n < 1) throw std::invalid_argument("module rank must be at least 1");
  if (D <= 0) throw std::invalid_argument("discriminant parameter must be positive");
  InvolutiveAlgebra A = InvolutiveAlgebra::quadratic_field(D, QuadraticInvolution::trivial);
  PairingShape shape = pairing_shape(n, A);
  int r = shape.rank;
  int unknowns = r * (r + 1) / 2;

  // Shape coordinates interleave {P_i, wP_i}; the published ordering lists
  // all P_i first, then all wP_i.
  std::vector<int> perm(r);
  for (int i = 0; i < n; ++i) {
    perm[i] = 2 * i;
    perm[n + i] = 2 * i + 1;
  }

  RelationSet out;
  out.labels = upper_triangle_labels(r);
  for (int i = 0; i < n; ++i) {
    // The two diagonal entries as functions of the shape parameters; their
    // 1-dimensional kernel is the sought relation.
    QMatrix two_rows(2, shape.param_dim);
    for (int k = 0; k < shape.param_dim; ++k) {
      const QMatrix& g = shape.gram_basis[k];
      two_rows.at(0, k) = g.at(perm[i], perm[i]);
      two_rows.at(1, k) = g.at(perm[n + i], perm[n + i]);
    }
    std::vector<QMatrix> rel = kernel(two_rows.transpose());
    if (rel.size() != 1)
      throw std::logic_error("real multiplication relation is not uniquely determined");
    Rational c_p = rel[0].at(0, 0);
    Rational c_wp = rel[0].at(1, 0);
    if (c_p == 0 || c_wp == 0)
      throw std::logic_error("degenerate real multiplication relation");

    // Confirm the relation is implied by the solution space, in shape coordinates.
    std::vector<Rational> shape_coords(unknowns, Rational(0));
    shape_coords[slot_index(r, perm[i], perm[i])] = c_p;
    shape_coords[slot_index(r, perm[n + i], perm[n + i])] = c_wp;
    if (!in_span(normalize_relation(shape_coords), shape.entry_relations))
      throw std::logic_error("derived relation is not implied by the pairing shape");

    // Emit it on the published slot ordering.
    std::vector<Rational> published(unknowns, Rational(0));
    published[slot_index(r, i, i)] = c_p;
    published[slot_index(r, n + i, n + i)] = c_wp;
    out.relations.push_back(normalize_relation(published));
  }
  return out;
}

}  // namespace heightrel
