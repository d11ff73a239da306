#include "qlink/agsum.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "qlink/errors.hpp"

namespace qlink {

void AGSpec::validate() const {
  auto bad = [](const std::string& what) { throw InvalidSpec("AGSpec: " + what); };
  if (r == 0) bad("r must be positive");
  if (Q.size() != r) bad("Q must have r rows");
  for (const auto& row : Q)
    if (row.size() != r) bad("Q must be r x r");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (Q[i][j] != Q[j][i]) bad("Q must be symmetric");
  if (L2.size() != r || L1.size() != r || wx.size() != r || wy.size() != r || bases.size() != r)
    bad("L2, L1, wx, wy and bases must have length r");
  for (std::size_t i = 0; i < r; ++i) {
    if (wx[i] < 0 || wy[i] < 0) bad("weights must be nonnegative");
    if (bases[i] < 1) bad("bases must be positive");
  }
}

Rational AGSpec::exponent(const std::vector<int>& n) const {
  Rational e = 0;
  for (std::size_t i = 0; i < r; ++i) {
    e += L2[i] * Rational(n[i]);
    for (std::size_t j = 0; j < r; ++j) e += Q[i][j] * Rational(static_cast<std::int64_t>(n[i]) * n[j]);
  }
  return e;
}

namespace {

// exponent(n) * denom as an exact int64 quadratic form.
struct ScaledExponent {
  std::int64_t denom = 1;
  std::vector<std::vector<std::int64_t>> q;
  std::vector<std::int64_t> l;

  explicit ScaledExponent(const AGSpec& spec) {
    for (const auto& row : spec.Q)
      for (const auto& v : row) denom = std::lcm(denom, v.denominator());
    for (const auto& v : spec.L2) denom = std::lcm(denom, v.denominator());
    q.assign(spec.r, std::vector<std::int64_t>(spec.r));
    l.assign(spec.r, 0);
    for (std::size_t i = 0; i < spec.r; ++i) {
      l[i] = spec.L2[i].numerator() * (denom / spec.L2[i].denominator());
      for (std::size_t j = 0; j < spec.r; ++j)
        q[i][j] = spec.Q[i][j].numerator() * (denom / spec.Q[i][j].denominator());
    }
  }

  std::int64_t operator()(const std::vector<int>& n) const {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (n[i] == 0) continue;
      e += l[i] * n[i];
      for (std::size_t j = 0; j < l.size(); ++j) e += q[i][j] * n[i] * n[j];
    }
    return e;
  }
};

std::string point_string(const std::vector<int>& n) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
  os << ')';
  return os.str();
}

void box_rec(const std::vector<int>& bounds, std::vector<int>& n, std::size_t i,
             const std::function<void(const std::vector<int>&)>& visit) {
  if (i == bounds.size()) {
    visit(n);
    return;
  }
  for (int v = 0; v <= bounds[i]; ++v) {
    n[i] = v;
    box_rec(bounds, n, i + 1, visit);
  }
  n[i] = 0;
}

AGSpec make_spec(std::vector<std::vector<Rational>> q, std::vector<Rational> l2, std::vector<int> l1,
                 std::vector<int> wx, std::vector<int> wy, std::vector<int> bases) {
  AGSpec s;
  s.r = q.size();
  s.Q = std::move(q);
  s.L2 = std::move(l2);
  s.L1 = std::move(l1);
  s.wx = std::move(wx);
  s.wy = std::move(wy);
  s.bases = std::move(bases);
  s.validate();
  return s;
}

// 3C(n1,2) + 3C(n2,2) + 6C(n3,2) + 3n1n2 + 3n2n3 + 3n3n1 + b.n over (q^3;q^3) denominators;
// C(n,2) contributes n^2/2 to Q and -n/2 to L2.
AGSpec mod3_family(int b1, int b2, int b3) {
  const Rational h(3, 2);
  return make_spec({{h, h, h}, {h, h, h}, {h, h, Rational(3)}},
                   {Rational(b1) - h, Rational(b2) - h, Rational(b3) - 3}, {0, 0, 0}, {1, 1, 1}, {0, 0, 1},
                   {3, 3, 3});
}

// 4C(n1,2) + 4C(n2,2) + 18C(n3,2) + 2n1n2 + 6n2n3 + 6n3n1 + b.n with (q^2;q^2),(q^2;q^2),(q^6;q^6).
AGSpec even_family(int b1, int b2, int b3, std::vector<int> wx, std::vector<int> wy) {
  return make_spec({{2, 1, 3}, {1, 2, 3}, {3, 3, 9}}, {Rational(b1 - 2), Rational(b2 - 2), Rational(b3 - 9)},
                   {0, 0, 1}, std::move(wx), std::move(wy), {2, 2, 6});
}

}  // namespace

std::vector<PresetId> all_presets() {
  return {PresetId::S31, PresetId::S32, PresetId::S33, PresetId::S21,        PresetId::S22,
          PresetId::S23, PresetId::ABM, PresetId::KUR, PresetId::G_ANALYTIC, PresetId::A_ANALYTIC};
}

std::string preset_name(PresetId id) {
  switch (id) {
    case PresetId::S31: return "S31";
    case PresetId::S32: return "S32";
    case PresetId::S33: return "S33";
    case PresetId::S21: return "S21";
    case PresetId::S22: return "S22";
    case PresetId::S23: return "S23";
    case PresetId::ABM: return "ABM";
    case PresetId::KUR: return "KUR";
    case PresetId::G_ANALYTIC: return "G_ANALYTIC";
    case PresetId::A_ANALYTIC: return "A_ANALYTIC";
  }
  return "?";
}

std::optional<PresetId> preset_from_name(const std::string& name) {
  for (auto id : all_presets())
    if (preset_name(id) == name) return id;
  return std::nullopt;
}

PresetSum preset(PresetId id) {
  const Substitution y_to_x{std::nullopt, Monomial{0, 1, 0}};
  switch (id) {
    case PresetId::S31: return {id, mod3_family(1, 2, 3), std::nullopt};
    case PresetId::S32: return {id, mod3_family(4, 2, 3), std::nullopt};
    case PresetId::S33: return {id, mod3_family(4, 5, 6), std::nullopt};
    case PresetId::G_ANALYTIC: return {id, mod3_family(1, 2, 3), y_to_x};
    case PresetId::S21: return {id, even_family(1, 2, 9, {1, 1, 2}, {0, 1, 1}), std::nullopt};
    case PresetId::S22: return {id, even_family(3, 2, 9, {1, 1, 2}, {0, 1, 1}), std::nullopt};
    case PresetId::S23: return {id, even_family(5, 4, 15, {1, 1, 2}, {0, 1, 1}), std::nullopt};
    case PresetId::A_ANALYTIC: return {id, even_family(1, 2, 9, {1, 1, 2}, {0, 1, 1}), y_to_x};
    case PresetId::ABM:
      // (m + 3n)^2 + m(m-1)/2 over (q;q)_m (q^6;q^6)_n, sign (-1)^n, x^{m+2n}
      return {id,
              make_spec({{Rational(3, 2), Rational(3)}, {Rational(3), Rational(9)}}, {Rational(-1, 2), Rational(0)},
                        {0, 1}, {1, 2}, {0, 0}, {1, 6}),
              std::nullopt};
    case PresetId::KUR:
      // 2n1^2 - n1 + 6n21^2 - n21 + 6n22^2 + n22 + 6n1(n21 + n22) + 12 n21 n22
      return {id,
              make_spec({{2, 3, 3}, {3, 6, 6}, {3, 6, 6}}, {Rational(-1), Rational(-1), Rational(1)}, {0, 0, 0},
                        {1, 2, 2}, {0, 0, 0}, {1, 6, 6}),
              std::nullopt};
  }
  throw InvalidSpec("unknown preset");
}

AGSpec effective_spec(const PresetSum& p) {
  AGSpec s = p.spec;
  if (!p.specialization) return s;
  const auto& sub = *p.specialization;
  // Only monomial substitutions into x are folded; y -> x is the only one used.
  if (sub.x || !sub.y || !(*sub.y == Monomial{0, 1, 0}))
    throw InvalidSpec("effective_spec: only y -> x can be folded into the weights");
  for (std::size_t i = 0; i < s.r; ++i) {
    s.wx[i] += s.wy[i];
    s.wy[i] = 0;
  }
  return s;
}

std::vector<int> lattice_bounds(const AGSpec& spec, std::uint32_t order) {
  spec.validate();
  const ScaledExponent ex(spec);
  const std::int64_t limit = static_cast<std::int64_t>(order) * ex.denom;
  std::vector<int> bounds(spec.r, 0);
  for (std::size_t i = 0; i < spec.r; ++i) {
    const std::int64_t a = ex.q[i][i];
    const std::int64_t b = ex.l[i];
    if (a < 0 || (a == 0 && b <= 0))
      throw NonTermination("index " + std::to_string(i + 1) + " has a non-divergent exponent");
    std::int64_t last_inside = 0;
    for (std::int64_t t = 0;; ++t) {
      const std::int64_t f = a * t * t + b * t;
      const std::int64_t next = a * (t + 1) * (t + 1) + b * (t + 1);
      if (f <= limit) last_inside = t;
      if (f > limit && next > f) break;
      if (t > 1000000) throw NonTermination("index bound search did not terminate");
    }
    bounds[i] = static_cast<int>(last_inside);
  }
  return bounds;
}

void for_each_box_point(const AGSpec& spec, std::uint32_t order,
                        const std::function<void(const std::vector<int>&)>& visit) {
  const auto bounds = lattice_bounds(spec, order);
  const ScaledExponent ex(spec);
  const std::int64_t limit = static_cast<std::int64_t>(order) * ex.denom;
  // Every point just beyond a face of the box must already exceed the order.
  for (std::size_t i = 0; i < spec.r; ++i) {
    auto face = bounds;
    face[i] = 0;
    std::vector<int> n(spec.r, 0);
    box_rec(face, n, 0, [&](const std::vector<int>& p) {
      auto beyond = p;
      beyond[i] = bounds[i] + 1;
      if (ex(beyond) <= limit)
        throw NonTermination("index bounds cut the lattice point " + point_string(beyond));
    });
  }
  std::vector<int> n(spec.r, 0);
  box_rec(bounds, n, 0, visit);
}

std::vector<Integer> denominator_expansion(const std::vector<int>& bases, const std::vector<int>& n,
                                           std::uint32_t order) {
  std::vector<Integer> acc = inv_pochhammer_dense(static_cast<std::uint32_t>(bases[0]),
                                                  static_cast<std::uint32_t>(n[0]), order);
  for (std::size_t i = 1; i < bases.size(); ++i) {
    if (n[i] == 0) continue;
    auto f = inv_pochhammer_dense(static_cast<std::uint32_t>(bases[i]), static_cast<std::uint32_t>(n[i]), order);
    std::vector<Integer> out(order + 1, 0);
    for (std::uint32_t a = 0; a <= order; ++a) {
      if (acc[a] == 0) continue;
      for (std::uint32_t b = 0; a + b <= order; ++b)
        if (f[b] != 0) mpz_addmul(out[a + b].get_mpz_t(), acc[a].get_mpz_t(), f[b].get_mpz_t());
    }
    acc = std::move(out);
  }
  return acc;
}

namespace {

TruncatedSeries evaluate_filtered(const AGSpec& spec, std::uint32_t order, std::optional<std::uint32_t> x_degree) {
  const ScaledExponent ex(spec);
  std::vector<MultiPoly::Term> terms;
  for_each_box_point(spec, order, [&](const std::vector<int>& n) {
    const std::int64_t scaled = ex(n);
    if (scaled % ex.denom != 0)
      throw NonIntegralExponent("exponent at " + point_string(n) + " is not an integer");
    const std::int64_t e = scaled / ex.denom;
    if (e < 0) throw NonIntegralExponent("exponent at " + point_string(n) + " is negative");
    if (e > static_cast<std::int64_t>(order)) return;
    std::uint32_t mx = 0, my = 0;
    int sign = 0;
    for (std::size_t i = 0; i < spec.r; ++i) {
      mx += static_cast<std::uint32_t>(spec.wx[i] * n[i]);
      my += static_cast<std::uint32_t>(spec.wy[i] * n[i]);
      sign += spec.L1[i] * n[i];
    }
    if (x_degree && mx != *x_degree) return;
    if (x_degree) mx = 0;
    const auto room = static_cast<std::uint32_t>(order - e);
    auto dense = denominator_expansion(spec.bases, n, room);
    const bool negative = (sign % 2 + 2) % 2 == 1;
    for (std::uint32_t k = 0; k <= room; ++k) {
      if (dense[k] == 0) continue;
      terms.emplace_back(Monomial{static_cast<std::uint32_t>(e) + k, mx, my},
                         negative ? Integer(-dense[k]) : dense[k]);
    }
  });
  return TruncatedSeries(MultiPoly::from_terms(std::move(terms)), order);
}

}  // namespace

TruncatedSeries ag_evaluate(const AGSpec& spec, std::uint32_t order) {
  return evaluate_filtered(spec, order, std::nullopt);
}

TruncatedSeries ag_coefficient(const AGSpec& spec, std::uint32_t m, std::uint32_t order) {
  return evaluate_filtered(spec, order, m);
}

TruncatedSeries evaluate_preset(PresetId id, std::uint32_t order) {
  const PresetSum p = preset(id);
  TruncatedSeries s = ag_evaluate(p.spec, order);
  return p.specialization ? specialize(s, *p.specialization) : s;
}

}  // namespace qlink
