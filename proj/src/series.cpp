#include "qlink/series.hpp"

#include <map>
#include <string>

#include "qlink/errors.hpp"

namespace qlink {
namespace {

MultiPoly truncate_poly(const MultiPoly& p, std::uint32_t order) {
  if (p.is_zero() || max_q_degree(p) <= order) return p;
  const auto& t = p.terms();
  auto end = std::upper_bound(t.begin(), t.end(), order,
                              [](std::uint32_t o, const MultiPoly::Term& term) { return o < term.first.q; });
  return MultiPoly::from_canonical({t.begin(), end});
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order())
    throw OrderMismatch(std::string(op) + ": orders " + std::to_string(a.order()) + " and " +
                        std::to_string(b.order()));
}

// Splits p by q-degree: slices[d] is the q^d coefficient (a polynomial in x, y).
std::vector<MultiPoly> q_slices(const MultiPoly& p, std::uint32_t order) {
  std::vector<std::vector<MultiPoly::Term>> raw(order + 1);
  for (const auto& [m, c] : p.terms()) {
    if (m.q > order) break;
    raw[m.q].emplace_back(Monomial{0, m.x, m.y}, c);
  }
  std::vector<MultiPoly> slices;
  slices.reserve(raw.size());
  for (auto& r : raw) slices.push_back(MultiPoly::from_canonical(std::move(r)));
  return slices;
}

MultiPoly from_slices(const std::vector<MultiPoly>& slices) {
  std::vector<MultiPoly::Term> out;
  for (std::uint32_t d = 0; d < slices.size(); ++d)
    for (const auto& [m, c] : slices[d].terms()) out.emplace_back(Monomial{d, m.x, m.y}, c);
  return MultiPoly::from_canonical(std::move(out));
}

}  // namespace

TruncatedSeries::TruncatedSeries(const MultiPoly& p, std::uint32_t order)
    : order_(order), poly_(truncate_poly(p, order)) {}

TruncatedSeries TruncatedSeries::truncate(std::uint32_t m) const {
  if (m > order_)
    throw OrderMismatch("truncate: cannot raise order " + std::to_string(order_) + " to " + std::to_string(m));
  return TruncatedSeries(poly_, m);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o, "series add");
  poly_ += o.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o, "series sub");
  poly_ -= o.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) { return *this = *this * o; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series mul");
  return TruncatedSeries(multiply_truncated(a.poly_, b.poly_, a.order_), a.order_, TruncatedSeries::Canonical{});
}

TruncatedSeries TruncatedSeries::times(const MultiPoly& p) const {
  return TruncatedSeries(multiply_truncated(poly_, p, order_), order_, Canonical{});
}

MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, std::uint32_t max_q) {
  if (a.is_zero() || b.is_zero()) return {};
  std::map<Monomial, Integer> acc;
  const auto& bt = b.terms();
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.q > max_q) break;
    const std::uint32_t room = max_q - ma.q;
    for (const auto& [mb, cb] : bt) {
      if (mb.q > room) break;
      Integer& slot = acc[ma * mb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  return MultiPoly::from_map(acc);
}

TruncatedSeries shift_x(const TruncatedSeries& s, std::uint32_t k) {
  return TruncatedSeries(shift_x(s.poly(), k), s.order());
}

TruncatedSeries specialize(const TruncatedSeries& s, const Substitution& sub) {
  return TruncatedSeries(specialize(s.poly(), sub), s.order());
}

TruncatedSeries x_coefficient(const TruncatedSeries& s, std::uint32_t m) {
  return TruncatedSeries(x_coefficient(s.poly(), m), s.order());
}

std::vector<Integer> inv_pochhammer_dense(std::uint32_t a, std::uint32_t n, std::uint32_t order) {
  if (a == 0) throw Error("inv_pochhammer: base exponent must be positive");
  std::vector<Integer> c(order + 1, 0);
  c[0] = 1;
  for (std::uint32_t k = 1; k <= n; ++k) {
    const std::uint64_t step = static_cast<std::uint64_t>(a) * k;
    if (step > order) break;
    // Multiply by 1/(1 - q^step).
    for (std::uint64_t i = step; i <= order; ++i) c[i] += c[i - step];
  }
  return c;
}

TruncatedSeries inv_pochhammer(std::uint32_t a, std::uint32_t n, std::uint32_t order) {
  auto dense = inv_pochhammer_dense(a, n, order);
  std::vector<MultiPoly::Term> terms;
  for (std::uint32_t i = 0; i <= order; ++i)
    if (dense[i] != 0) terms.emplace_back(Monomial{i, 0, 0}, std::move(dense[i]));
  return TruncatedSeries(MultiPoly::from_canonical(std::move(terms)), order);
}

TruncatedSeries product_expand(const std::function<MultiPoly(std::uint32_t)>& factor, std::uint32_t cutoff,
                               std::uint32_t order) {
  MultiPoly acc(1L);
  for (std::uint32_t n = 0; n <= cutoff; ++n) {
    MultiPoly f = factor(n);
    MultiPoly q_free = f.filter([](const Monomial& m) { return m.q == 0; });
    if (!(q_free == MultiPoly(1L)))
      throw NonUnitFactor("product_expand: factor " + std::to_string(n) + " has q-free part " + to_string(q_free));
    acc = multiply_truncated(acc, f, order);
  }
  return TruncatedSeries(acc, order);
}

TruncatedSeries trinomial_product(std::uint32_t order) {
  // Factor n contributes q^{2n+1} at least, so n <= order/2 suffices.
  return product_expand(
      [](std::uint32_t n) { return MultiPoly(1L) + monomial(2 * n + 1, 1) + monomial(4 * n + 2, 2); },
      order / 2, order);
}

TruncatedSeries distinct_nonmultiple_of_3_product(std::uint32_t order) {
  return product_expand(
      [](std::uint32_t n) {
        return (MultiPoly(1L) + monomial(3 * n + 1, 1)) * (MultiPoly(1L) + monomial(3 * n + 2, 1));
      },
      order / 3, order);
}

TruncatedSeries geometric(const MultiPoly& u, std::uint32_t order) {
  if (!u.is_zero() && min_q_degree(u) == 0) throw NonUnit("geometric: ratio must have positive q-valuation");
  TruncatedSeries power = TruncatedSeries::one(order);
  TruncatedSeries sum = power;
  for (std::uint32_t k = 1; k <= order; ++k) {
    power = power.times(u);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

TruncatedSeries divide_by_unit(const TruncatedSeries& rhs, const MultiPoly& u) {
  const std::uint32_t order = rhs.order();
  auto us = q_slices(u, order);
  const MultiPoly& u0 = us[0];
  int eps = 0;
  if (u0 == MultiPoly(1L)) {
    eps = 1;
  } else if (u0 == MultiPoly(-1L)) {
    eps = -1;
  } else {
    throw NonUnit("divide_by_unit: q-free part is " + to_string(u0));
  }
  auto rs = q_slices(rhs.poly(), order);
  std::vector<MultiPoly> bs(order + 1);
  for (std::uint32_t d = 0; d <= order; ++d) {
    MultiPoly acc = rs[d];
    for (std::uint32_t k = 1; k <= d; ++k)
      if (!us[k].is_zero() && !bs[d - k].is_zero()) acc -= us[k] * bs[d - k];
    bs[d] = eps == 1 ? acc : -acc;
  }
  return TruncatedSeries(from_slices(bs), order);
}

SeriesComparison series_eq(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_eq");
  SeriesComparison out;
  if (a.poly() == b.poly()) return out;
  MultiPoly diff = a.poly() - b.poly();
  const Monomial& m = diff.terms().front().first;
  out.equal = false;
  out.first_difference = m;
  out.lhs = a.coeff(m);
  out.rhs = b.coeff(m);
  return out;
}

}  // namespace qlink
