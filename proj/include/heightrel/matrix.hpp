#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "heightrel/rational.hpp"

namespace heightrel {

/// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  QMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix scaled(const Rational& c) const;
  bool operator==(const QMatrix& other) const;
  bool operator!=(const QMatrix& other) const { return !(*this == other); }

  const std::vector<Rational>& entries() const { return entries_; }

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

std::string to_string(const QMatrix& m);

}  // namespace heightrel
