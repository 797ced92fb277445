#pragma once

#include <utility>
#include <vector>

#include "heightrel/endo_algebra.hpp"
#include "heightrel/exact_linalg.hpp"

namespace heightrel {

/// Space of symmetric Gram matrices compatible with the adjointness constraint
/// rho(x)^T G = G rho(involute(x)) on the free module of rank n over the algebra.
struct PairingShape {
  int rank = 0;        // r = n * dim(A)
  int module_rank = 0; // n
  int param_dim = 0;
  std::vector<QMatrix> gram_basis;            // r x r symmetric matrices
  std::vector<std::pair<int, int>> labels;    // upper-triangular slots (i,j), i <= j, 0-based
  std::vector<IntegerVector> entry_relations; // functionals vanishing on the space
};

struct RelationSet {
  std::vector<std::pair<int, int>> labels;
  std::vector<IntegerVector> relations;
};

/// r(r+1)/2, the bound coming from symmetry alone.
long long symmetry_bound(long long r);

/// (r/2)(r/dim + alpha), the bound refined by the endomorphism algebra.
/// Requires dim(A) | r.
long long endomorphism_bound(long long r, const InvolutiveAlgebra& A);

/// dim of {x in M_n(D) : involute(x_ij) = -x_ji}: n(n-1)/2*d + n*(d-s).
long long skew_subspace_dim(long long n, const InvolutiveAlgebra& A);

/// n^2*d - skew_subspace_dim; the closed-form count the brute force must match.
long long pairing_quotient_dim(long long n, const InvolutiveAlgebra& A);

/// Brute-force solve for all symmetric G with rho(x)^T G = G rho(involute(x))
/// over the algebra basis, with the induced entry relations.
PairingShape pairing_shape(int n, const InvolutiveAlgebra& A);

/// The n diagonal relations g_{n+i,n+i} = D*g_{i,i} in the point ordering
/// {P_1..P_n, wP_1..wP_n} over the real quadratic field of parameter D > 0,
/// derived from pairing_shape by specialization and verified against its
/// entry-relation span.
RelationSet real_multiplication_relations(int n, const Int& D);

/// Upper-triangular slots of an r x r symmetric matrix, row-major.
std::vector<std::pair<int, int>> upper_triangle_labels(int r);

}  // namespace heightrel
