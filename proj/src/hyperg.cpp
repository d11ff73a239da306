#include "qlink/hyperg.hpp"

#include <functional>
#include <map>

#include "qlink/errors.hpp"
#include "qlink/parse.hpp"

namespace qlink {

namespace {

using L4 = LaurentMonomial<4>;

Laurent4 lm(int q, int u, int v, int w, long c = 1) {
  L4 m;
  m.e = {q, u, v, w};
  return Laurent4(m, Integer(c));
}

const Laurent4 one = lm(0, 0, 0, 0);
const Laurent4 U = lm(0, 1, 0, 0);
const Laurent4 V = lm(0, 0, 1, 0);
const Laurent4 W = lm(0, 0, 0, 1);

// Sparse univariate Laurent polynomial in q.
using QLaurent = std::map<long, Integer>;

QLaurent substitute(const Laurent4& p, const std::vector<int>& n) {
  QLaurent out;
  for (const auto& [m, c] : p.terms()) {
    const long e = m.e[0] + 2L * n[0] * m.e[1] + 2L * n[1] * m.e[2] + 6L * n[2] * m.e[3];
    out[e] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// sum over the box of spec(box_beta) at order + slack of sigma(beta) * weight(n).
TruncatedSeries weighted_sum(const Beta& beta, const Beta& box_beta, std::uint32_t slack,
                             const std::function<QLaurent(const std::vector<int>&)>& weight, std::uint32_t order) {
  const AGSpec spec = sigma_spec(beta);
  std::vector<MultiPoly::Term> terms;
  for_each_box_point(sigma_spec(box_beta), order + slack, [&](const std::vector<int>& n) {
    const QLaurent w = weight(n);
    if (w.empty()) return;
    const Rational e = spec.exponent(n);
    if (e.denominator() != 1) throw NonIntegralExponent("sigma exponent is not an integer");
    const long base = static_cast<long>(e.numerator());
    if (base + w.begin()->first < 0) throw Error("weighted sigma sum: negative q-power at a lattice point");
    if (base + w.begin()->first > static_cast<long>(order)) return;
    const auto room = static_cast<std::uint32_t>(order - (base + w.begin()->first));
    const auto dense = denominator_expansion(spec.bases, n, room);
    const std::uint32_t xp = static_cast<std::uint32_t>(n[0] + 2 * n[1] + 3 * n[2]);
    const bool negative = n[2] % 2 == 1;
    for (const auto& [we, wc] : w) {
      const long start = base + we;
      for (std::uint32_t k = 0; start + k <= static_cast<long>(order); ++k) {
        if (dense[k] == 0) continue;
        Integer c = wc * dense[k];
        if (negative) c = -c;
        terms.emplace_back(Monomial{static_cast<std::uint32_t>(start + k), xp, 0}, std::move(c));
      }
    }
  });
  return TruncatedSeries(MultiPoly::from_terms(std::move(terms)), order);
}

// Builds a series from c x^a q^b times s, keeping the given order.
TruncatedSeries monomial_times(int sign, std::uint32_t a, std::uint32_t b, const TruncatedSeries& s,
                               std::uint32_t order) {
  MultiPoly p = s.poly().times_monomial(Monomial{b, a, 0});
  return TruncatedSeries(sign < 0 ? -p : p, order);
}

}  // namespace

AGSpec sigma_spec(const Beta& beta) {
  AGSpec s;
  s.r = 3;
  s.Q = {{2, 1, 3}, {1, 2, 3}, {3, 3, 9}};
  s.L2 = {Rational(beta[0] - 2), Rational(beta[1] - 2), Rational(beta[2] - 9)};
  s.L1 = {0, 0, 1};
  s.wx = {1, 2, 3};
  s.wy = {0, 0, 0};
  s.bases = {2, 2, 6};
  return s;
}

TruncatedSeries sigma_evaluate(const Beta& beta, std::uint32_t order) { return ag_evaluate(sigma_spec(beta), order); }

Laurent4 split_term(int j) {
  const Laurent4 q2 = lm(2, 0, 0, 0);
  const Laurent4 u_inv = lm(0, -1, 0, 0);
  switch (j) {
    case 1: return U * V * V * W;
    case 2: return q2 * u_inv * V * (one - U);
    case 3: return one - V;
    case 4: return U * U * V * W * (one - V);
    case 5: return -(q2 * u_inv * V * (one - U) * (one - lm(-2, 1, 0, 0)));
    case 6: return lm(-2, 1, 2, 1) * (one - U) * (one - V);
    case 7: return U * V * V * (one - W);
    case 8: return U * V * W * (one - U) * (one - V) * (one - lm(-2, 0, 1, 0));
    case 9: return U * V * (one - V) * (one - W);
    default: throw InvalidSpec("split_term: j must be in 1..9");
  }
}

bool splitting_identity_check() {
  const Laurent4 mult = lm(2, 1, 0, 0);
  Laurent4 total;
  for (int j = 1; j <= 9; ++j) {
    const Laurent4 t = mult * split_term(j);
    for (const auto& [m, c] : t.terms())
      for (auto e : m.e)
        if (e < 0) return false;
    total += t;
  }
  return total == mult;
}

NineTermForm nine_term_form(int j) {
  switch (j) {
    case 1: return {1, 0, 0, {3, 6, 15}};
    case 2: return {1, 1, 1, {3, 6, 15}};
    case 3: return {1, 2, 2, {3, 6, 15}};
    case 4: return {1, 2, 4, {7, 8, 21}};
    case 5: return {-1, 2, 4, {7, 8, 21}};
    case 6: return {1, 3, 9, {9, 12, 27}};
    case 7: return {-1, 3, 9, {9, 12, 27}};
    case 8: return {1, 5, 19, {11, 14, 33}};
    case 9: return {-1, 5, 19, {11, 14, 33}};
    default: throw InvalidSpec("nine_term_form: j must be in 1..9");
  }
}

TruncatedSeries nine_term_lhs(int j, std::uint32_t order) {
  const Laurent4 term = split_term(j);
  // Every monomial of every I_j has q-exponent at least -2 - 2 n1, so the box
  // of sigma(-1,2,9) at order + 2 covers all contributing points.
  return weighted_sum({1, 2, 9}, {-1, 2, 9}, 2, [&](const std::vector<int>& n) { return substitute(term, n); },
                      order);
}

TruncatedSeries nine_term_rhs(int j, std::uint32_t order) {
  const NineTermForm f = nine_term_form(j);
  if (f.q_power > order) return TruncatedSeries::zero(order);
  return monomial_times(f.sign, f.x_power, f.q_power, sigma_evaluate(f.beta, order - f.q_power), order);
}

bool nine_term_check(int j, std::uint32_t order) { return nine_term_lhs(j, order) == nine_term_rhs(j, order); }

TruncatedSeries shift_lemma_lhs(const Beta& beta, const std::array<int, 3>& k, std::uint32_t order) {
  for (int v : k)
    if (v < 0) throw InvalidSpec("shift lemma: k must be nonnegative");
  const std::array<int, 3> scale = {2, 2, 6};
  return weighted_sum(
      beta, beta, 0,
      [&](const std::vector<int>& n) {
        QLaurent w{{0, Integer(1)}};
        for (int i = 0; i < 3; ++i) {
          if (n[i] < k[i]) return QLaurent{};
          for (int s = 0; s < k[i]; ++s) {
            // multiply by 1 - q^{scale (n - s)}
            const long e = static_cast<long>(scale[i]) * (n[i] - s);
            QLaurent next;
            for (const auto& [a, c] : w) {
              next[a] += c;
              next[a + e] -= c;
            }
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            w = std::move(next);
          }
        }
        return w;
      },
      order);
}

TruncatedSeries shift_lemma_rhs(const Beta& beta, const std::array<int, 3>& k, std::uint32_t order) {
  auto c2 = [](long n) { return n * (n - 1) / 2; };
  const long k1 = k[0], k2 = k[1], k3 = k[2];
  const long e = 4 * c2(k1) + 4 * c2(k2) + 18 * c2(k3) + 2 * k1 * k2 + 6 * k2 * k3 + 6 * k3 * k1 + k1 * beta[0] +
                 k2 * beta[1] + k3 * beta[2];
  if (e < 0) throw Error("shift lemma: negative q-power in the closed form");
  if (e > static_cast<long>(order)) return TruncatedSeries::zero(order);
  const Beta shifted = {static_cast<int>(beta[0] + 4 * k1 + 2 * k2 + 6 * k3),
                        static_cast<int>(beta[1] + 2 * k1 + 4 * k2 + 6 * k3),
                        static_cast<int>(beta[2] + 6 * k1 + 6 * k2 + 18 * k3)};
  const auto room = static_cast<std::uint32_t>(order - e);
  return monomial_times(k3 % 2 ? -1 : 1, static_cast<std::uint32_t>(k1 + 2 * k2 + 3 * k3),
                        static_cast<std::uint32_t>(e), sigma_evaluate(shifted, room), order);
}

bool shift_lemma_check(const Beta& beta, const std::array<int, 3>& k, std::uint32_t order) {
  return shift_lemma_lhs(beta, k, order) == shift_lemma_rhs(beta, k, order);
}

TruncatedSeries functional_equation_iterate(std::uint32_t order) {
  const MultiPoly f = parse_poly("1 + xq + x^2q^2");
  TruncatedSeries s = TruncatedSeries::one(order);
  for (;;) {
    TruncatedSeries next = shift_x(s, 2).times(f);
    if (next == s) return s;
    s = std::move(next);
  }
}

bool functional_equation_check(std::uint32_t order) {
  const MultiPoly f = parse_poly("1 + xq + x^2q^2");
  if (sigma_evaluate({1, 2, 9}, order) != sigma_evaluate({3, 6, 15}, order).times(f)) return false;
  return functional_equation_iterate(order) == trinomial_product(order);
}

}  // namespace qlink
