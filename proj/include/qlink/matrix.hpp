#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qlink/poly.hpp"

namespace qlink {

/// Dense row-major matrix of MultiPoly entries.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries);

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix diagonal(const std::vector<MultiPoly>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<MultiPoly>& entries() const { return entries_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<MultiPoly> row(std::size_t i) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MultiPoly> entries_;
};

/// Throws DimensionMismatch when a.cols() != b.rows().
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Applies shift_x entrywise: M(x) -> M(x q^k).
PolyMatrix shift_x(const PolyMatrix& m, std::uint32_t k);

/// Row vector times matrix.
std::vector<MultiPoly> row_times(const std::vector<MultiPoly>& v, const PolyMatrix& m);

/// Cofactor expansion; intended for the small square matrices used here.
MultiPoly determinant(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);

/// Left kernel vector c with c·R = 0 of a singular square matrix of rank n-1,
/// taken as a nonzero row of adj(R) and divided by the integer content and the
/// common monomial factor of the whole vector. The sign is fixed so the first
/// term of the first nonzero entry is positive.
/// Throws NonSingular if det(R) != 0 and RankDeficient if adj(R) == 0.
std::vector<MultiPoly> left_kernel(const PolyMatrix& r);

std::array<MultiPoly, 3> left_kernel_3(const PolyMatrix& r);

/// Removes the integer content and common monomial factor of a vector and
/// makes its first nonzero term positive.
std::vector<MultiPoly> primitive_part(std::vector<MultiPoly> v);

/// a_i b_j == a_j b_i for all i, j, with neither vector zero.
bool proportional(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

}  // namespace qlink
