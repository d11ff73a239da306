#pragma once

// q-difference equations  sum_j P_j(x, y, q) A(x q^{t j}) = 0  and the
// coefficient recurrences they induce on A(x) = sum_M a(M) x^M.
//
// A recurrence term (offset j, alpha, P) stands for P(y, q) q^{alpha M} a(M + j).
// Presets are transcribed with parse_poly in carrier mode, where x stands for
// q^M; splitting a carrier polynomial by x-degree gives the (alpha, P) pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlink/matrix.hpp"
#include "qlink/series.hpp"

namespace qlink {

struct QTerm {
  std::uint32_t shift = 0;  // j in A(x q^{t j})
  MultiPoly p;
  friend bool operator==(const QTerm&, const QTerm&) = default;
};

struct QDifferenceEquation {
  std::uint32_t step = 1;
  std::vector<QTerm> terms;  // sorted by shift, no zero coefficients
  friend bool operator==(const QDifferenceEquation&, const QDifferenceEquation&) = default;

  /// Sorts, merges equal shifts and drops zero coefficients.
  QDifferenceEquation canonical() const;
  const MultiPoly* coefficient(std::uint32_t shift) const;
  QDifferenceEquation negated() const;
};

struct RecTerm {
  std::uint32_t offset = 0;
  std::uint32_t alpha = 0;
  MultiPoly p;  // in q and y
  friend bool operator==(const RecTerm&, const RecTerm&) = default;
};

struct CoefficientRecurrence {
  std::uint32_t step = 1;
  std::vector<RecTerm> terms;  // sorted by (offset, alpha), merged, no zeros
  friend bool operator==(const CoefficientRecurrence&, const CoefficientRecurrence&) = default;

  CoefficientRecurrence canonical() const;
  std::uint32_t order() const;  // largest offset

  /// Coefficient of a(M + offset) as a polynomial with x standing for q^M.
  MultiPoly carrier_coefficient(std::uint32_t offset) const;

  /// Coefficient of a(M + offset) at a concrete M. M may be negative as long
  /// as every q-exponent stays nonnegative.
  MultiPoly instantiate(std::uint32_t offset, long m) const;

  /// Builds a recurrence from carrier polynomials, one per offset.
  static CoefficientRecurrence from_carriers(std::uint32_t step, const std::vector<MultiPoly>& by_offset);
};

struct CoefficientSequence {
  std::vector<TruncatedSeries> entries;
  std::uint32_t order = 0;

  std::size_t size() const { return entries.size(); }
  const TruncatedSeries& operator[](std::size_t m) const { return entries[m]; }
  /// sum_M entries[M] x^M
  TruncatedSeries assemble() const;
  /// The x^0 .. x^{m_max} coefficients of s.
  static CoefficientSequence from_series(const TruncatedSeries& s, std::uint32_t m_max);
};

// Printed equations.
QDifferenceEquation schur_qde();
CoefficientRecurrence schur_recurrence();
CoefficientRecurrence multisum_recurrence();
/// The fifth-order recurrence for d(M) = a(M) - ta(M), stated for M >= 5 and
/// stored shifted to offsets 0..5 so that it holds for M >= 0.
CoefficientRecurrence closure_recurrence();
CoefficientRecurrence sigma_recurrence();
QDifferenceEquation sigma_qde();

/// The printed rational closed forms of a(1), a(2), a(3), expanded to the order.
TruncatedSeries printed_coefficient(std::uint32_t m, std::uint32_t order);

/// Relation sum_j c_j A_1(x q^{t j}) = 0 from A(x) = M(x) A(x q^t), eliminating
/// the other components through the stacked rows e1 M(x q^{it}) ... M(x q^{(K-2)t}).
/// Throws NonSingular when the stacked matrix has nonzero determinant.
QDifferenceEquation derive_qde(const PolyMatrix& m, std::uint32_t step);

/// The stacked matrix used by derive_qde.
PolyMatrix stacked_rows(const PolyMatrix& m, std::uint32_t step);

/// Coefficient extraction at x^{M+d}, d the largest x-degree of any P_j.
CoefficientRecurrence qde_to_recurrence(const QDifferenceEquation& eq);

/// Multiplies by x^{M+d} and sums over M >= 0, using initial[0..d-1] for the
/// boundary terms. The result is normalized so that the least term of P_0 is
/// positive. Throws BoundaryNotCollapsed if the boundary is not zero to the
/// order of the initial values, and InvalidSpec if some alpha is not a
/// multiple of the step or a coefficient would need a negative q-power.
QDifferenceEquation recurrence_to_qde(const CoefficientRecurrence& rec, const std::vector<TruncatedSeries>& initial);

/// Solves forward for entries 0..m_max. With fewer initial values than the
/// order, the recurrence is also used at negative M with a(n) = 0 for n < 0,
/// which is right for recurrences obtained from a q-difference equation.
/// Throws NonUnit if the top coefficient is not +-1 + O(q) at some step.
CoefficientSequence recurrence_solve(const CoefficientRecurrence& rec, const std::vector<TruncatedSeries>& initial,
                                     std::uint32_t m_max, std::uint32_t order);

struct ResidualEntry {
  long m = 0;
  TruncatedSeries residual;
  std::optional<Monomial> first_nonzero() const;
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;
  bool all_zero() const;
};

/// Residual of the recurrence at each M in [m_from, m_to].
ResidualReport recurrence_check(const CoefficientRecurrence& rec, const CoefficientSequence& seq, long m_from,
                                long m_to, std::uint32_t order);

/// sum_j P_j series(x q^{t j}) mod q^{order+1}.
TruncatedSeries qde_check(const QDifferenceEquation& eq, const TruncatedSeries& series, std::uint32_t order);

/// The unique solution with constant term c.
TruncatedSeries qde_solve(const QDifferenceEquation& eq, const TruncatedSeries& c, std::uint32_t order);

/// The sixth-order equation applied to the three-factor window of the product;
/// returns the polynomial that must vanish.
MultiPoly product_qde_residual();
bool verify_product_qde();

struct ClosureReport {
  std::optional<long> first_mismatch;  // least M with a(M) != ta(M)
  ResidualReport on_difference;        // closure recurrence applied to d(M), indexed by the original M
  ResidualReport on_a;                 // the same recurrence applied to a(M) itself
  bool leading_factor_ok = true;       // top coefficient is a monomial times a unit at every M used
  bool passed() const;
};

ClosureReport closure_check(const CoefficientSequence& a, const CoefficientSequence& ta, std::uint32_t m_max,
                            std::uint32_t order);

std::string to_string(const QDifferenceEquation& eq);
std::string to_string(const CoefficientRecurrence& rec);

}  // namespace qlink
