#pragma once

// Exact sparse polynomials over arbitrary-precision integers.
//
// SparsePoly<Mono> keeps its terms in a vector sorted by the monomial order
// with no zero coefficients, so structural equality is polynomial equality.
// MultiPoly is the ring Z[q, x, y] used everywhere else in the library;
// LaurentMonomial<N> gives small Laurent rings for identity checks.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qlink {

using Integer = mpz_class;

/// q^q x^x y^y; ordered lexicographically on (q, x, y).
struct Monomial {
  std::uint32_t q = 0;
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    return {a.q + b.q, a.x + b.x, a.y + b.y};
  }
  static constexpr Monomial one() { return {}; }
  constexpr bool is_one() const { return q == 0 && x == 0 && y == 0; }
  constexpr bool divides(Monomial o) const { return q <= o.q && x <= o.x && y <= o.y; }
  static constexpr Monomial gcd(Monomial a, Monomial b) {
    return {std::min(a.q, b.q), std::min(a.x, b.x), std::min(a.y, b.y)};
  }
  /// Exact quotient; requires divides(o) of the divisor.
  friend constexpr Monomial operator/(Monomial a, Monomial b) {
    return {a.q - b.q, a.x - b.x, a.y - b.y};
  }
};

std::string to_string(const Monomial& m);

/// Monomial with signed exponents in N variables.
template <std::size_t N>
struct LaurentMonomial {
  std::array<std::int32_t, N> e{};

  friend constexpr auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;
  friend constexpr LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) {
    for (std::size_t i = 0; i < N; ++i) a.e[i] += b.e[i];
    return a;
  }
  static constexpr LaurentMonomial one() { return {}; }
  constexpr bool is_one() const {
    for (auto v : e)
      if (v != 0) return false;
    return true;
  }
  static constexpr LaurentMonomial var(std::size_t i, std::int32_t power = 1) {
    LaurentMonomial m;
    m.e[i] = power;
    return m;
  }
};

template <class Mono>
class SparsePoly {
 public:
  using Term = std::pair<Mono, Integer>;

  SparsePoly() = default;
  SparsePoly(long c) : SparsePoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(const Integer& c) {                  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Mono::one(), c);
  }
  explicit SparsePoly(const Mono& m, const Integer& c = 1) {
    if (c != 0) terms_.emplace_back(m, c);
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  static SparsePoly from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    SparsePoly p;
    for (auto& t : raw) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    return p;
  }

  /// Adopts terms already sorted, merged and free of zeros.
  static SparsePoly from_canonical(std::vector<Term> sorted) {
    SparsePoly p;
    p.terms_ = std::move(sorted);
    return p;
  }

  static SparsePoly from_map(const std::map<Mono, Integer>& acc) {
    SparsePoly p;
    p.terms_.reserve(acc.size());
    for (const auto& [m, c] : acc)
      if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
  }

  /// Coefficient of the identity monomial.
  Integer constant_term() const { return coeff(Mono::one()); }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  SparsePoly scaled(const Integer& c) const {
    if (c == 0) return {};
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  SparsePoly times_monomial(const Mono& m) const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    // Multiplying by a monomial preserves the order for these monoids.
    return r;
  }

  /// Applies a monomial map and re-canonicalizes.
  template <class F>
  auto map_monomials(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Mono&>()))>;
    std::vector<typename SparsePoly<Out>::Term> raw;
    raw.reserve(terms_.size());
    for (const auto& [m, c] : terms_) raw.emplace_back(f(m), c);
    return SparsePoly<Out>::from_terms(std::move(raw));
  }

  template <class Pred>
  SparsePoly filter(Pred&& keep) const {
    SparsePoly r;
    for (const auto& t : terms_)
      if (keep(t.first)) r.terms_.push_back(t);
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && a.terms_[0].first == Mono::one()) return b.scaled(a.terms_[0].second);
    if (b.size() == 1 && b.terms_[0].first == Mono::one()) return a.scaled(b.terms_[0].second);
    std::map<Mono, Integer> acc;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Integer& slot = acc[ma * mb];
        mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    }
    return from_map(acc);
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(unsigned n) const {
    SparsePoly r(1L);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

 private:
  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.emplace_back(j->first, subtract ? Integer(-j->second) : j->second);
        ++j;
      } else {
        Integer c = subtract ? Integer(i->second - j->second) : Integer(i->second + j->second);
        if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using MultiPoly = SparsePoly<Monomial>;

/// c · q^eq x^ex y^ey
MultiPoly monomial(std::uint32_t eq, std::uint32_t ex = 0, std::uint32_t ey = 0, long c = 1);
inline MultiPoly var_q() { return monomial(1); }
inline MultiPoly var_x() { return monomial(0, 1); }
inline MultiPoly var_y() { return monomial(0, 0, 1); }

/// x^m q^j y^l -> x^m q^{j + k m} y^l
MultiPoly shift_x(const MultiPoly& p, std::uint32_t k);

/// Partial substitution of x and/or y by monomials.
struct Substitution {
  std::optional<Monomial> x;
  std::optional<Monomial> y;
};
MultiPoly specialize(const MultiPoly& p, const Substitution& sub);

std::uint32_t max_x_degree(const MultiPoly& p);
std::uint32_t max_q_degree(const MultiPoly& p);
/// Smallest q exponent; requires a nonzero polynomial.
std::uint32_t min_q_degree(const MultiPoly& p);

/// Coefficient of x^m as a polynomial in q, y.
MultiPoly x_coefficient(const MultiPoly& p, std::uint32_t m);

/// Non-negative gcd of all coefficients (0 for the zero polynomial).
Integer integer_content(const MultiPoly& p);
/// Componentwise minimum of the exponents of all terms; requires nonzero p.
Monomial monomial_content(const MultiPoly& p);
/// Divides every coefficient by c and every monomial by m; both must divide exactly.
MultiPoly divide_exact(const MultiPoly& p, const Integer& c, const Monomial& m);

/// Human readable form accepted back by parse_poly, e.g. "1 + q^7*x + q^8*x*y".
std::string to_string(const MultiPoly& p);

}  // namespace qlink
