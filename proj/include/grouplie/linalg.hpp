#pragma once

#include <cstddef>
#include <vector>

#include "grouplie/cyclotomic.hpp"

namespace grouplie {

using CycloVector = std::vector<CycloScalar>;

/// Dense row-major matrix over Q(zeta_m).
class CycloMatrix {
 public:
  CycloMatrix(int conductor, std::size_t rows, std::size_t cols);
  /// Rows must share one length; an empty list gives a 0 x cols matrix.
  static CycloMatrix from_rows(int conductor, std::size_t cols, const std::vector<CycloVector>& rows);
  static CycloMatrix identity(int conductor, std::size_t n);

  int conductor() const { return m_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CycloVector row(std::size_t r) const;
  CycloMatrix transpose() const;
  /// Rows of this followed by rows of other.
  CycloMatrix stacked(const CycloMatrix& other) const;

 private:
  int m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycloScalar> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination, pivoting on the first nonzero entry.
std::size_t rank(const CycloMatrix& m);

/// Matrix whose rows form a basis of rowspace(a) ∩ rowspace(b) (Zassenhaus).
CycloMatrix intersect(const CycloMatrix& a, const CycloMatrix& b);

/// Incrementally built row space kept in reduced echelon form, for membership tests.
class RowSpace {
 public:
  RowSpace(int conductor, std::size_t ambient_dim);

  /// Adds v; returns false if it was already in the span.
  bool insert(const CycloVector& v);
  bool contains(const CycloVector& v) const;
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_dimension() const { return n_; }
  const std::vector<CycloVector>& basis() const { return basis_; }
  /// Residue of v after reduction by the current basis.
  CycloVector reduce(CycloVector v) const;

 private:
  int m_;
  std::size_t n_;
  std::vector<CycloVector> basis_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const CycloVector& v);

}  // namespace grouplie
