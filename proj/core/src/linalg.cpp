#include "cellar/linalg.hpp"

#include <cassert>

namespace cellar {

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Vec Mat::row(int i) const {
  Vec v(a_.begin() + static_cast<size_t>(i) * c_, a_.begin() + static_cast<size_t>(i + 1) * c_);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  assert(static_cast<int>(v.size()) == c_);
  for (int j = 0; j < c_; ++j) at(i, j) = v[j];
}

Mat Mat::operator*(const Mat& o) const {
  assert(c_ == o.r_);
  Mat out(f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += x * o.at(k, j);
      }
    }
  return out;
}

Vec Mat::apply(const Vec& v) const {
  assert(static_cast<int>(v.size()) == c_);
  Vec out(r_, Scalar::zero(f_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Mat Mat::transpose() const {
  Mat out(f_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool RowSpace::insert(Vec v) {
  v = residue(std::move(v));
  int p = -1;
  for (int j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Scalar inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // keep earlier rows reduced against the new pivot
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = rows_[i][p];
    if (c.is_zero()) continue;
    for (int j = 0; j < cols_; ++j) rows_[i][j] -= c * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

Vec RowSpace::residue(Vec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (int j = 0; j < cols_; ++j) v[j] -= c * rows_[i][j];
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const {
  Vec r = residue(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
  Vec work = v;
  Vec coef(rows_.size(), Scalar::zero(f_));
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = work[pivots_[i]];
    if (c.is_zero()) continue;
    coef[i] = c;
    for (int j = 0; j < cols_; ++j) work[j] -= c * rows_[i][j];
  }
  for (const auto& x : work)
    if (!x.is_zero()) return std::nullopt;
  return coef;
}

namespace {

// Returns pivot columns; m is reduced in place to rref.
std::vector<int> rref_inplace(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(rref_inplace(m).size()); }

Scalar det(Mat m) {
  assert(m.rows() == m.cols());
  const Field f = m.field();
  Scalar d = Scalar::one(f);
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Scalar::zero(f);
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      Scalar fctr = m.at(i, c) * inv;
      if (fctr.is_zero()) continue;
      for (int j = c; j < n; ++j) m.at(i, j) -= fctr * m.at(c, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(Mat m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  const Field f = m.field();
  Mat aug(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(f);
  }
  auto piv = rref_inplace(aug);
  if (static_cast<int>(piv.size()) != n || piv.back() >= n) {
    if (static_cast<int>(piv.size()) != n) return std::nullopt;
  }
  for (int k = 0; k < n; ++k)
    if (piv[k] != k) return std::nullopt;
  Mat inv(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat w = m;
  const Field f = m.field();
  std::vector<int> piv = rref_inplace(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> out;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), Scalar::zero(f));
    v[c] = Scalar::one(f);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -w.at(static_cast<int>(i), c);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  assert(static_cast<int>(b.size()) == m.rows());
  const Field f = m.field();
  Mat aug(f, m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto piv = rref_inplace(aug);
  for (int c : piv)
    if (c == m.cols()) return std::nullopt;
  Vec x(m.cols(), Scalar::zero(f));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), m.cols());
  return x;
}

}  // namespace cellar
