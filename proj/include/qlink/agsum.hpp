#pragma once

// Andrews-Gordon type multi-sums
//
//   sum_{n >= 0} (-1)^{L1.n} x^{wx.n} y^{wy.n} q^{n.Q.n + L2.n} / prod_i (q^{A_i}; q^{A_i})_{n_i}
//
// evaluated exactly modulo q^{N+1}. Q and L2 have rational entries so that
// binomial exponents such as 3*C(n,2) can be written directly; the exponent
// is required to be a nonnegative integer at every lattice point visited.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "qlink/series.hpp"

namespace qlink {

using Rational = boost::rational<std::int64_t>;

struct AGSpec {
  std::size_t r = 0;
  std::vector<std::vector<Rational>> Q;  // symmetric; exponent uses sum_ij Q_ij n_i n_j
  std::vector<Rational> L2;
  std::vector<int> L1;  // sign exponents (mod 2)
  std::vector<int> wx;
  std::vector<int> wy;
  std::vector<int> bases;

  /// Throws InvalidSpec on inconsistent sizes, asymmetric Q, negative
  /// weights or nonpositive bases.
  void validate() const;
  Rational exponent(const std::vector<int>& n) const;
  friend bool operator==(const AGSpec&, const AGSpec&) = default;
};

enum class PresetId { S31, S32, S33, S21, S22, S23, ABM, KUR, G_ANALYTIC, A_ANALYTIC };

struct PresetSum {
  PresetId id;
  AGSpec spec;
  /// y -> x for the two analytic presets.
  std::optional<Substitution> specialization;
};

std::vector<PresetId> all_presets();
std::string preset_name(PresetId id);
std::optional<PresetId> preset_from_name(const std::string& name);
PresetSum preset(PresetId id);

/// The preset with its specialization folded into the weights (wx += wy, wy = 0).
AGSpec effective_spec(const PresetSum& p);

/// Largest n_i along each axis whose exponent is <= order (other indices 0).
/// Throws NonTermination when some axis exponent does not grow without bound.
std::vector<int> lattice_bounds(const AGSpec& spec, std::uint32_t order);

/// Calls visit(n) for every n in the box [0, bounds]. The box is verified to
/// capture every lattice point of exponent <= order.
void for_each_box_point(const AGSpec& spec, std::uint32_t order,
                        const std::function<void(const std::vector<int>&)>& visit);

TruncatedSeries ag_evaluate(const AGSpec& spec, std::uint32_t order);

/// Coefficient of x^m as a series in q and y.
TruncatedSeries ag_coefficient(const AGSpec& spec, std::uint32_t m, std::uint32_t order);

/// Evaluates the preset and applies its specialization.
TruncatedSeries evaluate_preset(PresetId id, std::uint32_t order);

/// Dense truncated product of 1/(q^{b_i}; q^{b_i})_{n_i}, length order+1.
std::vector<Integer> denominator_expansion(const std::vector<int>& bases, const std::vector<int>& n,
                                           std::uint32_t order);

}  // namespace qlink
