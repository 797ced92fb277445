#pragma once

#include <map>
#include <vector>

#include "heightrel/elliptic.hpp"

namespace heightrel {

struct HeightOptions {
  double tol = 1e-6;
  int doubling_cap = 10;
};

struct HeightValue {
  double value = 0.0;
  double error_bound = 0.0;
  bool converged = true;  // false when the doubling cap was hit first
};

/// Weil height of the x-coordinate: x is written as a quotient of coprime
/// algebraic integers a/b (Euclidean gcd) and the value is
/// (1/[K:Q]) * sum over embeddings of log max(|a|, |b|). Requires P affine.
double naive_x_height(const EllipticCurveModel& curve, const CurvePoint& p);

/// Whether m*P = O for some 1 <= m <= bound.
bool is_torsion(const EllipticCurveModel& curve, const CurvePoint& p, int bound = 24);

/// Canonical height: half the doubling limit of the naive x-height, computed
/// by exact doubling with telescoping partial sums. Detected torsion returns
/// an exact zero. If the doubling cap is reached before the tolerance, the
/// best estimate is returned with converged = false and a larger error bound.
HeightValue canonical_height(const EllipticCurveModel& curve, const CurvePoint& p,
                             const HeightOptions& opts = {});

/// <P, Q> = h(P+Q) - h(P) - h(Q); the error bound is the sum of the parts.
HeightValue pairing(const EllipticCurveModel& curve, const CurvePoint& p, const CurvePoint& q,
                    const HeightOptions& opts = {});

struct GramMeasurement {
  std::vector<CurvePoint> points;
  std::vector<std::vector<double>> matrix;
  double error_bound = 0.0;
  bool converged = true;
};

/// Symmetric matrix of height pairings; the diagonal is 2*h(P_i).
GramMeasurement gram_matrix(const EllipticCurveModel& curve,
                            const std::vector<CurvePoint>& points,
                            const HeightOptions& opts = {});

struct ResidualEntry {
  int i = 0;
  int j = 0;
  double residual = 0.0;
  double budget = 0.0;
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;
  double max_residual = 0.0;
  double max_budget = 0.0;
  bool within_budget = true;
  bool converged = true;
};

/// Max over point pairs of |<f(P), Q> - <P, f'(Q)>| where f' is the declared
/// adjoint (a power of f).
ResidualReport adjoint_check(const EllipticCurveModel& curve, const EndoMap& f,
                             const std::vector<CurvePoint>& points,
                             const HeightOptions& opts = {});

/// Max over points of |h(f(P)) - deg(f) * h(P)|.
ResidualReport degree_scaling_check(const EllipticCurveModel& curve, const EndoMap& f,
                                    const std::vector<CurvePoint>& points,
                                    const HeightOptions& opts = {});

/// Shared-cache height evaluator for batches of related computations.
class HeightEngine {
 public:
  HeightEngine(const EllipticCurveModel& curve, HeightOptions opts)
      : curve_(curve), opts_(opts) {}

  HeightValue height(const CurvePoint& p);
  HeightValue pairing(const CurvePoint& p, const CurvePoint& q);

 private:
  const EllipticCurveModel& curve_;
  HeightOptions opts_;
  std::map<std::string, HeightValue> cache_;
};

}  // namespace heightrel
