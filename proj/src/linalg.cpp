#include "grouplie/linalg.hpp"

#include <algorithm>
#include <utility>

#include "grouplie/error.hpp"

namespace grouplie {

CycloMatrix::CycloMatrix(int conductor, std::size_t rows, std::size_t cols)
    : m_(conductor), rows_(rows), cols_(cols), data_(rows * cols, CycloScalar(conductor)) {}

CycloMatrix CycloMatrix::from_rows(int conductor, std::size_t cols, const std::vector<CycloVector>& rows) {
  CycloMatrix out(conductor, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has length " +
                                                    std::to_string(rows[r].size()) + ", expected " +
                                                    std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

CycloMatrix CycloMatrix::identity(int conductor, std::size_t n) {
  CycloMatrix out(conductor, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = CycloScalar::one(conductor);
  return out;
}

CycloVector CycloMatrix::row(std::size_t r) const {
  return CycloVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix out(m_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

CycloMatrix CycloMatrix::stacked(const CycloMatrix& other) const {
  if (other.cols_ != cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "column counts " + std::to_string(cols_) + " and " + std::to_string(other.cols_));
  }
  if (other.m_ != m_) throw Error(ErrorCode::ConductorMismatch, "stacking matrices over different fields");
  CycloMatrix out(m_, rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool is_zero_vector(const CycloVector& v) {
  return std::all_of(v.begin(), v.end(), [](const CycloScalar& s) { return s.is_zero(); });
}

std::size_t rank(const CycloMatrix& input) {
  // Bareiss step on the active block:
  //   a_ij <- (pivot * a_ij - a_ik * a_kj) / previous_pivot
  // Zero entries stay zero under the pivot*a_ij part, so only the nonzero pattern is touched.
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  const int m = input.conductor();
  std::vector<CycloVector> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r] = input.row(r);

  CycloScalar prev = CycloScalar::one(m);
  std::size_t rank_found = 0;
  for (std::size_t col = 0; col < cols && rank_found < rows; ++col) {
    std::size_t piv = rank_found;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank_found]);
    const CycloVector& prow = a[rank_found];
    const CycloScalar pivot = prow[col];
    const CycloScalar prev_inv = prev.inverse();
    const CycloScalar scale = pivot * prev_inv;
    const bool unit_scale = scale.is_one();
    for (std::size_t r = rank_found + 1; r < rows; ++r) {
      CycloVector& row = a[r];
      const CycloScalar factor = row[col];
      const bool eliminate = !factor.is_zero();
      for (std::size_t c = col + 1; c < cols; ++c) {
        const bool own = !row[c].is_zero();
        const bool from_pivot = eliminate && !prow[c].is_zero();
        if (!own && !from_pivot) continue;
        if (from_pivot) {
          CycloScalar v = own ? pivot * row[c] : CycloScalar(m);
          v -= factor * prow[c];
          v *= prev_inv;
          row[c] = std::move(v);
        } else if (!unit_scale) {
          row[c] *= scale;
        }
      }
      row[col] = CycloScalar(m);
    }
    prev = pivot;
    ++rank_found;
  }
  return rank_found;
}

RowSpace::RowSpace(int conductor, std::size_t ambient_dim) : m_(conductor), n_(ambient_dim) {}

CycloVector RowSpace::reduce(CycloVector v) const {
  if (v.size() != n_) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const CycloScalar f = v[p];
    const CycloVector& b = basis_[i];
    for (std::size_t c = 0; c < n_; ++c) {
      if (!b[c].is_zero()) v[c] -= f * b[c];
    }
  }
  return v;
}

bool RowSpace::contains(const CycloVector& v) const { return is_zero_vector(reduce(v)); }

bool RowSpace::insert(const CycloVector& v) {
  CycloVector r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  const CycloScalar inv = r[p].inverse();
  for (auto& x : r) {
    if (!x.is_zero()) x *= inv;
  }
  // keep the basis fully reduced so reduce() is a single pass
  for (auto& b : basis_) {
    if (b[p].is_zero()) continue;
    const CycloScalar f = b[p];
    for (std::size_t c = 0; c < n_; ++c) {
      if (!r[c].is_zero()) b[c] -= f * r[c];
    }
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

CycloMatrix intersect(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "ambient dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.cols()));
  }
  if (a.conductor() != b.conductor()) throw Error(ErrorCode::ConductorMismatch, "intersecting over different fields");
  const int m = a.conductor();
  const std::size_t n = a.cols();
  // [a | a] over [b | 0]: echelon rows whose left half vanishes span the intersection.
  RowSpace space(m, 2 * n);
  auto widen = [&](const CycloMatrix& src, std::size_t r, bool copy_right) {
    CycloVector v(2 * n, CycloScalar(m));
    for (std::size_t c = 0; c < n; ++c) {
      v[c] = src(r, c);
      if (copy_right) v[n + c] = src(r, c);
    }
    return v;
  };
  for (std::size_t r = 0; r < a.rows(); ++r) space.insert(widen(a, r, true));
  for (std::size_t r = 0; r < b.rows(); ++r) space.insert(widen(b, r, false));

  std::vector<CycloVector> rows;
  for (const auto& v : space.basis()) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = v[c].is_zero();
    if (!left_zero) continue;
    rows.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
  }
  return CycloMatrix::from_rows(m, n, rows);
}

}  // namespace grouplie
