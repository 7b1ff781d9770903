#pragma once

#include <optional>
#include <vector>

#include "cellar/scalar.hpp"

namespace cellar {

using Vec = std::vector<Scalar>;

// Dense exact matrix over the ground field.
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(const Field& f, int rows, int cols)
      : f_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

  static Mat identity(const Field& f, int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Field field() const { return f_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec row(int i) const;
  void set_row(int i, const Vec& v);

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& v) const;  // column-vector action
  Mat transpose() const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool is_zero() const;

 private:
  Field f_;
  int r_, c_;
  std::vector<Scalar> a_;
};

// Row space kept in reduced row echelon form. Supports incremental insertion
// and exact membership / residue queries.
class RowSpace {
 public:
  RowSpace(const Field& f, int cols) : f_(f), cols_(cols) {}

  // Returns true if the vector enlarged the space.
  bool insert(Vec v);
  Vec residue(Vec v) const;
  bool contains(const Vec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Coordinates of v in terms of the stored echelon rows; nullopt if outside.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  Field f_;
  int cols_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

int rank(Mat m);
Scalar det(Mat m);
std::optional<Mat> inverse(Mat m);
// Basis of { x : m x = 0 } (right kernel).
std::vector<Vec> kernel_basis(const Mat& m);
std::optional<Vec> solve(const Mat& m, const Vec& b);

}  // namespace cellar
