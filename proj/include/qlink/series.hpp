#pragma once

// q-adically truncated power series in Z[x, y][[q]].
//
// A TruncatedSeries of order N stores every term with q-exponent <= N exactly
// and nothing above. Only q is truncated; the x and y degrees of every series
// in this library are bounded by the q-degree, so they stay finite.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qlink/poly.hpp"

namespace qlink {

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Truncates p to q-degree <= order.
  TruncatedSeries(const MultiPoly& p, std::uint32_t order);

  static TruncatedSeries zero(std::uint32_t order) { return TruncatedSeries(MultiPoly(), order); }
  static TruncatedSeries one(std::uint32_t order) { return TruncatedSeries(MultiPoly(1L), order); }

  std::uint32_t order() const { return order_; }
  const MultiPoly& poly() const { return poly_; }
  const std::vector<MultiPoly::Term>& terms() const { return poly_.terms(); }
  bool is_zero() const { return poly_.is_zero(); }
  Integer coeff(const Monomial& m) const { return poly_.coeff(m); }

  /// Restriction to q-degree <= m (m <= order()).
  TruncatedSeries truncate(std::uint32_t m) const;

  TruncatedSeries operator-() const { return {-poly_, order_, Canonical{}}; }
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiplication by a polynomial, truncated at this series' order.
  TruncatedSeries times(const MultiPoly& p) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  struct Canonical {};
  TruncatedSeries(MultiPoly p, std::uint32_t order, Canonical) : order_(order), poly_(std::move(p)) {}

  std::uint32_t order_ = 0;
  MultiPoly poly_;
};

/// Exact product of two polynomials keeping only q-degree <= max_q.
MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, std::uint32_t max_q);

/// x^m q^j -> x^m q^{j + k m}, dropping terms beyond the order.
TruncatedSeries shift_x(const TruncatedSeries& s, std::uint32_t k);

TruncatedSeries specialize(const TruncatedSeries& s, const Substitution& sub);

/// Coefficient of x^m, as a series in q and y of the same order.
TruncatedSeries x_coefficient(const TruncatedSeries& s, std::uint32_t m);

/// Expansion of 1/(q^a; q^a)_n = prod_{k=1}^{n} 1/(1 - q^{ak}).
TruncatedSeries inv_pochhammer(std::uint32_t a, std::uint32_t n, std::uint32_t order);

/// Dense coefficient vector (length order+1) of 1/(q^a; q^a)_n.
std::vector<Integer> inv_pochhammer_dense(std::uint32_t a, std::uint32_t n, std::uint32_t order);

/// Truncated product of factor(0) * factor(1) * ... * factor(cutoff).
/// Every factor must have q-free part exactly 1; the caller picks cutoff so
/// that later factors are 1 modulo q^{order+1}.
TruncatedSeries product_expand(const std::function<MultiPoly(std::uint32_t)>& factor, std::uint32_t cutoff,
                               std::uint32_t order);

/// prod_{n>=0} (1 + x q^{2n+1} + x^2 q^{4n+2})
TruncatedSeries trinomial_product(std::uint32_t order);
/// (-xq; q^3)_inf (-xq^2; q^3)_inf
TruncatedSeries distinct_nonmultiple_of_3_product(std::uint32_t order);

/// 1 / (1 - u) for a polynomial u of q-valuation >= 1, truncated.
TruncatedSeries geometric(const MultiPoly& u, std::uint32_t order);

/// Solves b * u = rhs for b, where u has q-free part exactly +1 or -1.
/// Throws NonUnit otherwise.
TruncatedSeries divide_by_unit(const TruncatedSeries& rhs, const MultiPoly& u);

struct SeriesComparison {
  bool equal = true;
  std::optional<Monomial> first_difference;  // least monomial where coefficients differ
  Integer lhs;
  Integer rhs;
};

/// Throws OrderMismatch for different orders.
SeriesComparison series_eq(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace qlink
