#pragma once

#include <optional>
#include <vector>

#include "heightrel/exact_linalg.hpp"
#include "heightrel/height_relations.hpp"
#include "heightrel/neron_tate.hpp"

namespace heightrel {

struct IntegerRelation {
  IntegerVector coefficients;  // content 1, first nonzero entry positive
  double residual = 0.0;
};

enum class Verdict { consistent, inconsistent, undetermined };

std::string to_string(Verdict v);

/// Acceptance threshold k * max|v| * 10^(-precision_digits + 2).
double detection_threshold(const std::vector<double>& values, int precision_digits);

/// Lattice-reduction detection of integer relations among real values. Returns
/// the canonical basis of the span of all accepted candidates; candidates are
/// accepted when |sum m_i v_i| is below the threshold and max|m_i| stays within
/// height_bound.
std::vector<IntegerRelation> find_relations(const std::vector<double>& values,
                                            int precision_digits, long long height_bound);

int estimate_span_dim(const std::vector<double>& values, int precision_digits,
                      long long height_bound);

struct RelationReport {
  std::vector<double> values;
  std::vector<IntegerRelation> detected;
  int estimated_span_dim = 0;
  std::optional<RelationSet> predicted;
  Verdict verdict = Verdict::undetermined;
};

/// Matches detected relations among the Gram entries (upper triangle, in
/// predicted.labels order) against a predicted relation set.
RelationReport compare_with_prediction(const GramMeasurement& gm, const RelationSet& predicted,
                                       int precision_digits, long long height_bound);

/// Upper-triangle flattening of a Gram measurement in label order.
std::vector<double> flatten_gram(const GramMeasurement& gm,
                                 const std::vector<std::pair<int, int>>& labels);

}  // namespace heightrel
