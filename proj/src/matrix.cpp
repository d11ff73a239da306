#include "qlink/matrix.hpp"

#include <limits>
#include <string>

#include "qlink/errors.hpp"

namespace qlink {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DimensionMismatch("PolyMatrix: " + std::to_string(entries_.size()) + " entries for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(1L);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<MultiPoly>& d) {
  PolyMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<MultiPoly> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

PolyMatrix shift_x(const PolyMatrix& m, std::uint32_t k) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = shift_x(m(i, j), k);
  return out;
}

std::vector<MultiPoly> row_times(const std::vector<MultiPoly>& v, const PolyMatrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("row_times: length mismatch");
  std::vector<MultiPoly> out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
  }
  return out;
}

namespace {

PolyMatrix minor_matrix(const PolyMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  PolyMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

void require_square(const PolyMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1L);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  MultiPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    MultiPoly term = m(0, j) * determinant(minor_matrix(m, 0, j));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  require_square(m, "adjugate");
  const std::size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = MultiPoly(1L);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly cof = determinant(minor_matrix(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

std::vector<MultiPoly> primitive_part(std::vector<MultiPoly> v) {
  Integer content = 0;
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  Monomial common{kMax, kMax, kMax};
  const MultiPoly* lead = nullptr;
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    if (!lead) lead = &p;
    Integer c = integer_content(p);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    common = Monomial::gcd(common, monomial_content(p));
  }
  if (!lead) return v;
  if (lead->terms().front().second < 0) content = -content;
  for (auto& p : v)
    if (!p.is_zero()) p = divide_exact(p, content, common);
  return v;
}

std::vector<MultiPoly> left_kernel(const PolyMatrix& r) {
  require_square(r, "left_kernel");
  if (!determinant(r).is_zero()) throw NonSingular("left_kernel: determinant is a nonzero polynomial");
  PolyMatrix adj = adjugate(r);
  for (std::size_t i = 0; i < adj.rows(); ++i) {
    auto row = adj.row(i);
    bool nonzero = false;
    for (const auto& p : row) nonzero = nonzero || !p.is_zero();
    if (nonzero) return primitive_part(std::move(row));
  }
  throw RankDeficient("left_kernel: adjugate vanishes, rank is below n-1");
}

std::array<MultiPoly, 3> left_kernel_3(const PolyMatrix& r) {
  if (r.rows() != 3 || r.cols() != 3) throw DimensionMismatch("left_kernel_3: expected a 3x3 matrix");
  auto v = left_kernel(r);
  return {v[0], v[1], v[2]};
}

bool proportional(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  if (a.size() != b.size()) return false;
  bool a_nonzero = false;
  bool b_nonzero = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a_nonzero = a_nonzero || !a[i].is_zero();
    b_nonzero = b_nonzero || !b[i].is_zero();
  }
  if (!a_nonzero || !b_nonzero) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return true;
}

}  // namespace qlink
