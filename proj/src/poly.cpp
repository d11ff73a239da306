#include "qlink/poly.hpp"

#include <limits>
#include <sstream>

namespace qlink {

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](char v, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << v;
    if (e != 1) os << '^' << e;
  };
  put('q', m.q);
  put('x', m.x);
  put('y', m.y);
  if (first) os << '1';
  return os.str();
}

MultiPoly monomial(std::uint32_t eq, std::uint32_t ex, std::uint32_t ey, long c) {
  return MultiPoly(Monomial{eq, ex, ey}, Integer(c));
}

MultiPoly shift_x(const MultiPoly& p, std::uint32_t k) {
  if (k == 0) return p;
  return p.map_monomials([k](const Monomial& m) { return Monomial{m.q + k * m.x, m.x, m.y}; });
}

MultiPoly specialize(const MultiPoly& p, const Substitution& sub) {
  return p.map_monomials([&sub](const Monomial& m) {
    Monomial out{m.q, 0, 0};
    auto apply = [&out](std::uint32_t e, const std::optional<Monomial>& target, Monomial keep) {
      if (target) {
        out = out * Monomial{target->q * e, target->x * e, target->y * e};
      } else {
        out = out * keep;
      }
    };
    apply(m.x, sub.x, Monomial{0, m.x, 0});
    apply(m.y, sub.y, Monomial{0, 0, m.y});
    return out;
  });
}

std::uint32_t max_x_degree(const MultiPoly& p) {
  std::uint32_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.first.x);
  return d;
}

std::uint32_t max_q_degree(const MultiPoly& p) {
  // Terms are sorted by q first.
  return p.is_zero() ? 0 : p.terms().back().first.q;
}

std::uint32_t min_q_degree(const MultiPoly& p) { return p.terms().front().first.q; }

MultiPoly x_coefficient(const MultiPoly& p, std::uint32_t m) {
  std::vector<MultiPoly::Term> out;
  for (const auto& [mono, c] : p.terms())
    if (mono.x == m) out.emplace_back(Monomial{mono.q, 0, mono.y}, c);
  // Dropping x from a fixed-x slice keeps the (q, y) order.
  return MultiPoly::from_canonical(std::move(out));
}

Integer integer_content(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial monomial_content(const MultiPoly& p) {
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  Monomial g{kMax, kMax, kMax};
  for (const auto& t : p.terms()) g = Monomial::gcd(g, t.first);
  return g;
}

MultiPoly divide_exact(const MultiPoly& p, const Integer& c, const Monomial& m) {
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [mono, coeff] : p.terms()) {
    Integer qd;
    mpz_divexact(qd.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
    out.emplace_back(mono / m, std::move(qd));
  }
  return MultiPoly::from_canonical(std::move(out));
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

}  // namespace qlink
