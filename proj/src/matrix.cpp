#include "algd/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace algd {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == rows);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_col(std::size_t j, const Vec& v) {
  assert(v.size() == rows_);
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::conj() const {
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) m.a_[i] = a_[i].conj();
  return m;
}

Vec Mat::apply(const Vec& v) const {
  assert(v.size() == cols_);
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& m = at(i, j);
      if (!m.is_zero()) out[i] += m * v[j];
    }
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  assert(a.cols_ == b.rows_);
  Mat c(a.rows_, b.cols_);
  for (std::size_t k = 0; k < a.cols_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      const Scalar& bkj = b.at(k, j);
      if (bkj.is_zero()) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) {
        const Scalar& aik = a.at(i, k);
        if (!aik.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  Mat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  Mat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
  return c;
}

Mat operator*(const Scalar& c, const Mat& m) {
  Mat out(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = c * m.a_[i];
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) {
          const Scalar& bkl = b.at(k, l);
          if (!bkl.is_zero())
            m.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
        }
    }
  return m;
}

Mat Mat::vstack(const std::vector<Mat>& blocks) {
  assert(!blocks.empty());
  std::size_t cols = blocks[0].cols_, rows = 0;
  for (const Mat& b : blocks) {
    assert(b.cols_ == cols);
    rows += b.rows_;
  }
  Mat m(rows, cols);
  std::size_t r = 0;
  for (const Mat& b : blocks) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(r + i, j) = b.at(i, j);
    r += b.rows_;
  }
  return m;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec operator-(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = Scalar(1);
  return v;
}

Vec RowReducer::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;  // pivot entries are normalized to 1
    const Vec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < width_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool RowReducer::insert(Vec row) {
  assert(row.size() == width_);
  Vec v = reduce(std::move(row));
  std::size_t p = 0;
  while (p < width_ && v[p].is_zero()) ++p;
  if (p == width_) return false;
  Scalar inv = Scalar(1) / v[p];
  for (std::size_t j = p; j < width_; ++j)
    if (!v[j].is_zero()) v[j] = inv * v[j];
  // back-substitute into earlier rows so the basis stays fully reduced
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = rows_[r][p];
    if (c.is_zero()) continue;
    for (std::size_t j = p; j < width_; ++j)
      if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t pos = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

RowReducer rref(const Mat& m) {
  RowReducer rr(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rr.insert(m.row(i));
  return rr;
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  RowReducer rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots()) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < rr.rank(); ++r)
      v[rr.pivots()[r]] = -rr.rows()[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_injective(const Mat& m) { return rank(m) == m.cols(); }

bool is_bijective(const Mat& m) {
  return m.rows() == m.cols() && is_injective(m);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  // reduce [m | I]; m bijective iff the left block reduces to I
  RowReducer rr(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m.at(i, j);
    row[n + i] = Scalar(1);
    rr.insert(row);
  }
  if (rr.rank() != n) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    if (rr.pivots()[r] != r) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.rows()[i][n + j];
  return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  assert(b.size() == m.rows());
  // reduce [mᵀ-rows as columns]: work with augmented RREF of [m | b]
  RowReducer rr(m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec row(m.cols() + 1);
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    row[m.cols()] = b[i];
    rr.insert(row);
  }
  Vec x(m.cols());
  for (std::size_t r = 0; r < rr.rank(); ++r) {
    if (rr.pivots()[r] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[rr.pivots()[r]] = rr.rows()[r][m.cols()];
  }
  return x;
}

}  // namespace algd
