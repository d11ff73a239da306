#pragma once

// The triple sums
//
//   Sigma(b) = sum_n (-1)^{n3} x^{n1+2n2+3n3}
//              q^{4C(n1,2)+4C(n2,2)+18C(n3,2)+2n1n2+6n2n3+6n3n1+b.n}
//              / ((q^2;q^2)_{n1} (q^2;q^2)_{n2} (q^6;q^6)_{n3})
//
// with the index-shift lemma, the nine-term splitting of 1, and the
// functional equation S(x) = (1 + xq + x^2q^2) S(xq^2).

#include <array>
#include <cstdint>

#include "qlink/agsum.hpp"
#include "qlink/poly.hpp"
#include "qlink/series.hpp"

namespace qlink {

using Beta = std::array<int, 3>;

AGSpec sigma_spec(const Beta& beta);

/// Sigma(beta) mod q^{order+1}. Throws NonTermination or NonIntegralExponent
/// if the sum cannot be truncated at this order.
TruncatedSeries sigma_evaluate(const Beta& beta, std::uint32_t order);

/// Laurent polynomials in q, U, V, W (in that variable order), where
/// U = q^{2n1}, V = q^{2n2}, W = q^{6n3}.
using Laurent4 = SparsePoly<LaurentMonomial<4>>;

/// I_1 .. I_9; j is 1-based.
Laurent4 split_term(int j);

/// q^2 U (I_1 + ... + I_9) == q^2 U, with every q^2 U I_j a polynomial.
bool splitting_identity_check();

struct NineTermForm {
  int sign = 1;
  std::uint32_t x_power = 0;
  std::uint32_t q_power = 0;
  Beta beta{};
};

NineTermForm nine_term_form(int j);

/// sum_n sigma(1,2,9) I_j(n), summed directly over the lattice.
TruncatedSeries nine_term_lhs(int j, std::uint32_t order);
/// sign x^a q^b Sigma(beta') for the closed form of term j.
TruncatedSeries nine_term_rhs(int j, std::uint32_t order);
bool nine_term_check(int j, std::uint32_t order);

/// sum_n sigma(beta) (q^{2n1};q^{-2})_{k1} (q^{2n2};q^{-2})_{k2} (q^{6n3};q^{-6})_{k3}
TruncatedSeries shift_lemma_lhs(const Beta& beta, const std::array<int, 3>& k, std::uint32_t order);
/// The closed form: a signed monomial times Sigma at the shifted beta.
TruncatedSeries shift_lemma_rhs(const Beta& beta, const std::array<int, 3>& k, std::uint32_t order);
bool shift_lemma_check(const Beta& beta, const std::array<int, 3>& k, std::uint32_t order);

/// Iterates S <- (1 + xq + x^2q^2) S(xq^2) from S = 1 until it is stable.
TruncatedSeries functional_equation_iterate(std::uint32_t order);

/// Sigma(1,2,9) == (1 + xq + x^2q^2) Sigma(3,6,15), and the iteration above
/// equals the trinomial product.
bool functional_equation_check(std::uint32_t order);

}  // namespace qlink
