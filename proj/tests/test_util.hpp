#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "qlink/poly.hpp"
#include "qlink/series.hpp"

namespace qlink {

inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const TruncatedSeries& s, std::ostream* os) {
  *os << to_string(s.poly()) << " + O(q^" << s.order() + 1 << ")";
}

}  // namespace qlink

namespace qlink::testing {

inline MultiPoly random_poly(std::mt19937& rng, int terms, std::uint32_t max_deg, int max_coeff = 5) {
  std::uniform_int_distribution<std::uint32_t> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<MultiPoly::Term> raw;
  for (int i = 0; i < terms; ++i) raw.emplace_back(Monomial{deg(rng), deg(rng), deg(rng)}, coeff(rng));
  return MultiPoly::from_terms(std::move(raw));
}

/// Dense coefficient list of a univariate series in q (x and y exponents ignored).
inline std::vector<long> q_coefficients(const TruncatedSeries& s) {
  std::vector<long> out(s.order() + 1, 0);
  for (const auto& [m, c] : s.terms()) out[m.q] += c.get_si();
  return out;
}

/// Naive power series product of dense vectors truncated to n+1 terms.
inline std::vector<long> dense_mul(const std::vector<long>& a, const std::vector<long>& b, std::size_t n) {
  std::vector<long> out(n + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace qlink::testing
