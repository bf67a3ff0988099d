#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "algd/scalar.hpp"

namespace algd {

using Vec = std::vector<Scalar>;

/// Dense matrix over the Gaussian rationals, row-major. All arithmetic is
/// exact; multiplication skips zero entries, which matters a lot here since
/// most structural matrices are permutation-like.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);

  Mat transpose() const;
  Mat conj() const;  // entrywise complex conjugation

  Vec apply(const Vec& v) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& c, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  bool is_zero() const;

  /// Kronecker product with the row-major leg convention:
  /// (a ⊗ b)(e_i ⊗ e_j) = a e_i ⊗ b e_j, pair index i * dim_b + j.
  friend Mat kron(const Mat& a, const Mat& b);

  /// Stacks blocks vertically (same column count).
  static Mat vstack(const std::vector<Mat>& blocks);

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
Vec unit_vec(std::size_t dim, std::size_t i);

/// Incremental row-echelon accumulator. Rows are inserted one at a time and
/// reduced against the pivot rows kept so far; pivots use the leftmost
/// nonzero column and rows are normalized to pivot 1 with zeros above.
/// This keeps memory at rank * width even when the raw relation list is
/// much longer, and makes every reduced basis deterministic.
class RowReducer {
 public:
  explicit RowReducer(std::size_t width) : width_(width) {}

  /// Returns true when the row was independent of the span so far.
  bool insert(Vec row);

  /// Reduces v against the current rows without inserting it.
  Vec reduce(Vec v) const;

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

 private:
  std::size_t width_;
  std::vector<Vec> rows_;             // in increasing pivot order
  std::vector<std::size_t> pivots_;   // pivot column of each row
};

/// Reduced row echelon form of m; returns (rref rows, pivot columns).
RowReducer rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Echelon-normalized kernel basis, ordered by ascending free column.
std::vector<Vec> kernel_basis(const Mat& m);

bool is_injective(const Mat& m);
bool is_bijective(const Mat& m);

/// Inverse of a square bijective matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// One solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

}  // namespace algd
