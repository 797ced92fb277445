#include "heightrel/relation_finder.hpp"

#include <cmath>
#include <stdexcept>

namespace heightrel {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::inconsistent: return "inconsistent";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

double detection_threshold(const std::vector<double>& values, int precision_digits) {
  double max_abs = 0.0;
  for (double v : values) max_abs = std::max(max_abs, std::fabs(v));
  return static_cast<double>(values.size()) * max_abs * std::pow(10.0, -precision_digits + 2);
}

namespace {

double relation_residual(const IntegerVector& m, const std::vector<double>& values) {
  double s = 0.0;
  for (size_t i = 0; i < values.size(); ++i) s += m[i].get_d() * values[i];
  return std::fabs(s);
}

Int scale_value(double v, int precision_digits) {
  // exact rational from the double, then a rounded power-of-ten scaling
  Rational q(v);
  Rational p(1);
  for (int i = 0; i < precision_digits; ++i) p *= 10;
  return round_nearest(q * p);
}

}  // namespace

std::vector<IntegerRelation> find_relations(const std::vector<double>& values,
                                            int precision_digits, long long height_bound) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("relation values must be finite");
  }
  if (precision_digits < 6) throw std::invalid_argument("precision_digits must be at least 6");
  if (height_bound < 1) throw std::invalid_argument("height_bound must be at least 1");

  size_t k = values.size();
  if (k < 2) return {};

  std::vector<IntegerVector> rows(k, IntegerVector(k + 1, 0));
  for (size_t i = 0; i < k; ++i) {
    rows[i][i] = 1;
    rows[i][k] = scale_value(values[i], precision_digits);
  }
  std::vector<IntegerVector> reduced = lll_reduce(std::move(rows));

  double threshold = detection_threshold(values, precision_digits);
  Int bound(static_cast<long>(height_bound));
  std::vector<IntegerVector> accepted;
  for (const IntegerVector& w : reduced) {
    IntegerVector m(w.begin(), w.begin() + k);
    bool nonzero = false;
    bool within = true;
    for (const Int& c : m) {
      if (c != 0) nonzero = true;
      if (abs(c) > bound) within = false;
    }
    if (!nonzero || !within) continue;
    if (relation_residual(m, values) < threshold) accepted.push_back(std::move(m));
  }

  std::vector<IntegerRelation> out;
  for (IntegerVector& m : canonical_span_basis(accepted, static_cast<int>(k))) {
    IntegerRelation rel;
    rel.residual = relation_residual(m, values);
    rel.coefficients = std::move(m);
    out.push_back(std::move(rel));
  }
  return out;
}

int estimate_span_dim(const std::vector<double>& values, int precision_digits,
                      long long height_bound) {
  return static_cast<int>(values.size()) -
         static_cast<int>(find_relations(values, precision_digits, height_bound).size());
}

std::vector<double> flatten_gram(const GramMeasurement& gm,
                                 const std::vector<std::pair<int, int>>& labels) {
  int n = static_cast<int>(gm.matrix.size());
  std::vector<double> out;
  out.reserve(labels.size());
  for (const auto& [i, j] : labels) {
    if (i < 0 || j < i || j >= n) throw std::invalid_argument("gram label out of range");
    out.push_back(gm.matrix[i][j]);
  }
  return out;
}

RelationReport compare_with_prediction(const GramMeasurement& gm, const RelationSet& predicted,
                                       int precision_digits, long long height_bound) {
  int n = static_cast<int>(gm.matrix.size());
  if (static_cast<int>(predicted.labels.size()) != n * (n + 1) / 2)
    throw std::invalid_argument("predicted label count does not match the Gram size");
  for (const IntegerVector& rel : predicted.relations) {
    if (rel.size() != predicted.labels.size())
      throw std::invalid_argument("predicted relation length does not match its labels");
  }

  RelationReport report;
  report.values = flatten_gram(gm, predicted.labels);
  report.predicted = predicted;
  report.detected = find_relations(report.values, precision_digits, height_bound);
  report.estimated_span_dim =
      static_cast<int>(report.values.size()) - static_cast<int>(report.detected.size());

  double threshold = detection_threshold(report.values, precision_digits);
  if (gm.error_bound > threshold) {
    report.verdict = Verdict::undetermined;
    return report;
  }

  std::vector<IntegerVector> detected_vecs;
  for (const auto& rel : report.detected) detected_vecs.push_back(rel.coefficients);

  bool ok = true;
  for (const IntegerVector& rel : predicted.relations) {
    // each predicted relation must hold on the data and be among the detected
    double coeff_sum = 0.0;
    for (const Int& c : rel) coeff_sum += std::fabs(c.get_d());
    double budget = coeff_sum * gm.error_bound + threshold;
    if (relation_residual(rel, report.values) > budget) ok = false;
    if (!in_span(rel, detected_vecs)) ok = false;
  }
  for (const IntegerVector& det : detected_vecs) {
    if (!in_span(det, predicted.relations)) ok = false;
  }
  report.verdict = ok ? Verdict::consistent : Verdict::inconsistent;
  return report;
}

}  // namespace heightrel
