#include "qlink/qde.hpp"

#include <map>
#include <sstream>

#include "qlink/errors.hpp"
#include "qlink/parse.hpp"

namespace qlink {

namespace {

MultiPoly carrier(std::string_view text) { return parse_poly(text, ParseOptions{true}); }

std::uint32_t series_order(const std::vector<TruncatedSeries>& v) {
  std::uint32_t order = v.front().order();
  for (const auto& s : v) order = std::min(order, s.order());
  return order;
}

}  // namespace

QDifferenceEquation QDifferenceEquation::canonical() const {
  std::map<std::uint32_t, MultiPoly> acc;
  for (const auto& t : terms) acc[t.shift] += t.p;
  QDifferenceEquation out;
  out.step = step;
  for (auto& [j, p] : acc)
    if (!p.is_zero()) out.terms.push_back({j, std::move(p)});
  return out;
}

const MultiPoly* QDifferenceEquation::coefficient(std::uint32_t shift) const {
  for (const auto& t : terms)
    if (t.shift == shift) return &t.p;
  return nullptr;
}

QDifferenceEquation QDifferenceEquation::negated() const {
  QDifferenceEquation out = *this;
  for (auto& t : out.terms) t.p = -t.p;
  return out;
}

CoefficientRecurrence CoefficientRecurrence::canonical() const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, MultiPoly> acc;
  for (const auto& t : terms) acc[{t.offset, t.alpha}] += t.p;
  CoefficientRecurrence out;
  out.step = step;
  for (auto& [key, p] : acc)
    if (!p.is_zero()) out.terms.push_back({key.first, key.second, std::move(p)});
  return out;
}

std::uint32_t CoefficientRecurrence::order() const {
  std::uint32_t d = 0;
  for (const auto& t : terms) d = std::max(d, t.offset);
  return d;
}

MultiPoly CoefficientRecurrence::carrier_coefficient(std::uint32_t offset) const {
  MultiPoly out;
  for (const auto& t : terms)
    if (t.offset == offset) out += t.p.times_monomial(Monomial{0, t.alpha, 0});
  return out;
}

MultiPoly CoefficientRecurrence::instantiate(std::uint32_t offset, long m) const {
  MultiPoly out;
  for (const auto& t : terms) {
    if (t.offset != offset) continue;
    if (m >= 0) {
      out += t.p.times_monomial(Monomial{static_cast<std::uint32_t>(t.alpha * m), 0, 0});
      continue;
    }
    const auto drop = static_cast<std::uint32_t>(t.alpha * -m);
    if (drop > 0 && min_q_degree(t.p) < drop)
      throw InvalidSpec("recurrence coefficient of a(M+" + std::to_string(offset) + ") has a negative q-power at M=" +
                        std::to_string(m));
    out += divide_exact(t.p, 1, Monomial{drop, 0, 0});
  }
  return out;
}

CoefficientRecurrence CoefficientRecurrence::from_carriers(std::uint32_t step, const std::vector<MultiPoly>& by_offset) {
  CoefficientRecurrence rec;
  rec.step = step;
  for (std::uint32_t o = 0; o < by_offset.size(); ++o) {
    const auto deg = by_offset[o].is_zero() ? 0 : max_x_degree(by_offset[o]);
    for (std::uint32_t a = 0; a <= deg; ++a) {
      MultiPoly p = x_coefficient(by_offset[o], a);
      if (!p.is_zero()) rec.terms.push_back({o, a, std::move(p)});
    }
  }
  return rec.canonical();
}

TruncatedSeries CoefficientSequence::assemble() const {
  TruncatedSeries out = TruncatedSeries::zero(order);
  for (std::uint32_t m = 0; m < entries.size(); ++m) out += entries[m].truncate(order).times(monomial(0, m));
  return out;
}

CoefficientSequence CoefficientSequence::from_series(const TruncatedSeries& s, std::uint32_t m_max) {
  CoefficientSequence seq;
  seq.order = s.order();
  for (std::uint32_t m = 0; m <= m_max; ++m) seq.entries.push_back(x_coefficient(s, m));
  return seq;
}

QDifferenceEquation schur_qde() {
  QDifferenceEquation eq;
  eq.step = 6;
  eq.terms = {
      {0, parse_poly("1 + x(q^7 + yq^8)")},
      {1, parse_poly("-(1 + x(q + q^3 + q^5 + q^7 + yq^2 + yq^4 + yq^6 + yq^8)"
                     " + x^2(q^6 + q^8 + q^{10} + yq^5 + 2yq^7 + 2yq^9 + 2yq^{11} + yq^{13}"
                     " + y^2q^8 + y^2q^{10} + y^2q^{12})"
                     " + x^3(yq^{12} + yq^{14} + y^2q^{13} + y^2q^{15}))")},
      {2, parse_poly("x^2 yq^{15} + x^3(-q^{21} + yq^{16} + y^2q^{17} - y^3q^{24})"
                     " + x^4(-q^{22} - yq^{23} + y^2q^{30} - y^3q^{25} - y^4q^{26})"
                     " + x^5(y^2q^{31} + y^3q^{32})")},
  };
  return eq.canonical();
}

CoefficientRecurrence schur_recurrence() {
  return CoefficientRecurrence::from_carriers(
      6, {
             carrier("q^{12M}(y^2q^{31} + y^3q^{32})"),
             carrier("q^{12(M+1)}(-q^{22} - yq^{23} + y^2q^{30} - y^3q^{25} - y^4q^{26})"),
             carrier("-q^{6(M+2)}(yq^{12} + yq^{14} + y^2q^{13} + y^2q^{15})"
                     " + q^{12(M+2)}(-q^{21} + yq^{16} + y^2q^{17} - y^3q^{24})"),
             carrier("-q^{6(M+3)}(q^6 + q^8 + q^{10} + yq^5 + 2yq^7 + 2yq^9 + 2yq^{11} + yq^{13}"
                     " + y^2q^8 + y^2q^{10} + y^2q^{12}) + q^{12(M+3)}yq^{15}"),
             carrier("(q^7 + yq^8) - q^{6(M+4)}(q + q^3 + q^5 + q^7 + yq^2 + yq^4 + yq^6 + yq^8)"),
             carrier("1 - q^{6(M+5)}"),
         });
}

CoefficientRecurrence multisum_recurrence() {
  return CoefficientRecurrence::from_carriers(
      6, {
             carrier("q^{12M+24} y^2 (1 + 2yq + y^2q^2 + q^{6M+22} + yq^{6M+23} + y^2q^{6M+24})"),
             carrier("-q^{12M+27}(1 + yq)(1 + yq + y^2q^2 - y^2q^8 + y^3q^3 + y^4q^4"
                     " + q^{6M+22} + y^2q^{6M+24} + y^4q^{6M+26})"),
             carrier("-q^{6M+17}(y + yq^2 + 2y^2q + 2y^2q^3 + y^3q^2 + y^3q^4 - q^{6M+15} + q^{6M+21}"
                     " - 2yq^{6M+16} + 2yq^{6M+22} + yq^{6M+24} - yq^{12M+38}"
                     " - 3y^2q^{6M+17} + 2y^2q^{6M+23} + y^2q^{6M+25} - y^2q^{12M+39}"
                     " - 2y^3q^{6M+18} + 2y^3q^{6M+24} + y^3q^{6M+26} - y^3q^{12M+40}"
                     " - y^4q^{6M+19} + y^4q^{6M+25})"),
             carrier("-q^{6M+17}(1 + q^2 + q^4)(1 + yq)(1 + yq + yq^3 + y^2q^2"
                     " + q^{6M+20} + yq^{6M+21} + y^2q^{6M+22})"),
             carrier("(1 - q^{6M+24})(1 + 2yq + y^2q^2 + q^{6M+16} + yq^{6M+17} + y^2q^{6M+18})"),
         });
}

CoefficientRecurrence closure_recurrence() {
  // Offsets -5..0 in the printed form; everything moved to one side.
  const std::vector<MultiPoly> printed = {
      carrier("q^{12M} y^2 (1 + yq)"),
      carrier("-q^{12M+3}(1 + yq - y^2q^8 + y^3q^3 + y^4q^4)"),
      carrier("-q^{6M+9}(1 + yq)(yq^{14} + yq^{16} + q^{6M+5} - yq^{6M} - yq^{6M+6} + y^2q^{6M+7})"),
      carrier("-q^{6M+20}(q^3 + q^5 + q^7 + yq^2 + 2yq^4 + 2yq^6 + 2yq^8 + yq^{10}"
              " + y^2q^5 + y^2q^7 + y^2q^9 - yq^{6M})"),
      carrier("q^{24}(1 + yq)(q^{12} - q^{6M} - q^{6M+2} - q^{6M+4} - q^{6M+6})"),
      carrier("q^{29}(1 - q^{6M})"),
  };
  // M -> M + 5 turns q^{aM} into q^{5a} q^{aM}.
  std::vector<MultiPoly> shifted;
  for (const auto& p : printed) shifted.push_back(shift_x(p, 5));
  return CoefficientRecurrence::from_carriers(6, shifted);
}

CoefficientRecurrence sigma_recurrence() {
  return CoefficientRecurrence::from_carriers(2, {
                                                     carrier("q^{6M+24}"),
                                                     MultiPoly(),
                                                     carrier("-q^{4M+18}(1 + q^2 + q^4)"),
                                                     carrier("-q^{6M+27}"),
                                                     carrier("q^{2M+10}(1 + q^2 + q^4 - q^{2M+12})"),
                                                     carrier("q^{4M+21}"),
                                                     carrier("-(1 - q^{2M+12})"),
                                                 });
}

QDifferenceEquation sigma_qde() {
  QDifferenceEquation eq;
  eq.step = 2;
  eq.terms = {
      {0, parse_poly("1")},
      {1, parse_poly("-(x^2q^2(1 + q^2 + q^4) + 1)")},
      {2, parse_poly("x^4q^{10}(1 + q^2 + q^4) + x^2q^6 - xq")},
      {3, parse_poly("-(x^6q^{24} - x^3q^9)")},
  };
  return eq.canonical();
}

TruncatedSeries printed_coefficient(std::uint32_t m, std::uint32_t order) {
  switch (m) {
    case 1:
      return inv_pochhammer(2, 1, order).times(parse_poly("q(1 + yq)"));
    case 2:
      return inv_pochhammer(2, 3, order).times(
          parse_poly("q^5(q - q^7 + y + yq^2 - yq^4 - yq^{10} + y^2q^3 - y^2q^9)"));
    case 3:
      return inv_pochhammer(2, 3, order).times(parse_poly("q^{12}(1 + yq)(q^3 + y + yq^2 - yq^4 + yq^8 + y^2q^5)"));
    default:
      throw InvalidSpec("printed_coefficient: only a(1), a(2), a(3) are available");
  }
}

PolyMatrix stacked_rows(const PolyMatrix& m, std::uint32_t step) {
  const std::size_t k = m.rows();
  if (m.cols() != k || k == 0) throw DimensionMismatch("derive_qde: matrix must be square");
  PolyMatrix r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<MultiPoly> v(k);
    v[0] = MultiPoly(1L);
    for (std::size_t s = i; s + 2 <= k; ++s) v = row_times(v, shift_x(m, static_cast<std::uint32_t>(s) * step));
    for (std::size_t j = 0; j < k; ++j) r(i, j) = v[j];
  }
  return r;
}

QDifferenceEquation derive_qde(const PolyMatrix& m, std::uint32_t step) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DimensionMismatch("derive_qde: matrix must be square");
  QDifferenceEquation eq;
  eq.step = step;
  if (m.rows() == 1) {
    eq.terms = {{0, MultiPoly(1L)}, {1, -m(0, 0)}};
    return eq.canonical();
  }
  const auto c = left_kernel(stacked_rows(m, step));
  for (std::size_t j = 0; j < c.size(); ++j) eq.terms.push_back({static_cast<std::uint32_t>(j), c[j]});
  return eq.canonical();
}

CoefficientRecurrence qde_to_recurrence(const QDifferenceEquation& eq) {
  std::uint32_t d = 0;
  for (const auto& t : eq.terms) d = std::max(d, max_x_degree(t.p));
  CoefficientRecurrence rec;
  rec.step = eq.step;
  for (const auto& t : eq.terms) {
    const std::uint32_t alpha = eq.step * t.shift;
    for (std::uint32_t i = 0; i <= d; ++i) {
      MultiPoly c = x_coefficient(t.p, i);
      if (c.is_zero()) continue;
      rec.terms.push_back({d - i, alpha, c.times_monomial(Monomial{alpha * (d - i), 0, 0})});
    }
  }
  return rec.canonical();
}

QDifferenceEquation recurrence_to_qde(const CoefficientRecurrence& rec, const std::vector<TruncatedSeries>& initial) {
  const std::uint32_t d = rec.order();
  if (initial.size() < d)
    throw InvalidSpec("recurrence_to_qde: need " + std::to_string(d) + " initial values, got " +
                      std::to_string(initial.size()));
  const std::uint32_t order = d ? series_order(initial) : 0;
  QDifferenceEquation eq;
  eq.step = rec.step;
  TruncatedSeries boundary = TruncatedSeries::zero(order);
  for (const auto& t : rec.terms) {
    if (t.alpha % rec.step != 0)
      throw InvalidSpec("recurrence_to_qde: carrier q^{" + std::to_string(t.alpha) + "M} is not a multiple of the step");
    const std::uint32_t drop = t.alpha * t.offset;
    if (drop > 0 && min_q_degree(t.p) < drop)
      throw InvalidSpec("recurrence_to_qde: term of a(M+" + std::to_string(t.offset) + ") leaves a negative q-power");
    const MultiPoly p = divide_exact(t.p, 1, Monomial{drop, 0, 0}).times_monomial(Monomial{0, d - t.offset, 0});
    eq.terms.push_back({t.alpha / rec.step, p});
    for (std::uint32_t n = 0; n < t.offset; ++n)
      boundary += initial[n].truncate(order).times(p.times_monomial(Monomial{t.alpha * n, n, 0}));
  }
  if (!boundary.is_zero())
    throw BoundaryNotCollapsed("recurrence_to_qde: boundary term " + to_string(boundary.terms().front().first) +
                               " survives; the initial values do not fit the recurrence");
  eq = eq.canonical();
  const MultiPoly* p0 = eq.coefficient(0);
  const MultiPoly& lead = p0 ? *p0 : eq.terms.front().p;
  if (lead.terms().front().second < 0) eq = eq.negated();
  return eq;
}

CoefficientSequence recurrence_solve(const CoefficientRecurrence& rec, const std::vector<TruncatedSeries>& initial,
                                     std::uint32_t m_max, std::uint32_t order) {
  if (initial.empty()) throw InvalidSpec("recurrence_solve: no initial values");
  const std::uint32_t d = rec.order();
  if (d == 0) throw InvalidSpec("recurrence_solve: recurrence has order 0");
  CoefficientSequence seq;
  seq.order = order;
  for (const auto& s : initial) {
    if (s.order() < order) throw OrderMismatch("recurrence_solve: initial value below the requested order");
    seq.entries.push_back(s.truncate(order));
  }
  for (std::uint32_t n = static_cast<std::uint32_t>(initial.size()); n <= m_max; ++n) {
    const long m = static_cast<long>(n) - static_cast<long>(d);
    TruncatedSeries rhs = TruncatedSeries::zero(order);
    for (std::uint32_t j = 0; j < d; ++j) {
      if (m + static_cast<long>(j) < 0) continue;
      const MultiPoly c = rec.instantiate(j, m);
      if (!c.is_zero()) rhs -= seq.entries[static_cast<std::size_t>(m + j)].times(c);
    }
    seq.entries.push_back(divide_by_unit(rhs, rec.instantiate(d, m)));
  }
  seq.entries.resize(std::min<std::size_t>(seq.entries.size(), m_max + 1));
  return seq;
}

std::optional<Monomial> ResidualEntry::first_nonzero() const {
  if (residual.is_zero()) return std::nullopt;
  return residual.terms().front().first;
}

bool ResidualReport::all_zero() const {
  for (const auto& e : entries)
    if (!e.residual.is_zero()) return false;
  return true;
}

ResidualReport recurrence_check(const CoefficientRecurrence& rec, const CoefficientSequence& seq, long m_from,
                                long m_to, std::uint32_t order) {
  const std::uint32_t d = rec.order();
  if (m_to >= 0 && static_cast<long>(seq.size()) <= m_to + static_cast<long>(d))
    throw InvalidSpec("recurrence_check: sequence too short for M=" + std::to_string(m_to));
  ResidualReport report;
  for (long m = m_from; m <= m_to; ++m) {
    TruncatedSeries r = TruncatedSeries::zero(order);
    for (std::uint32_t j = 0; j <= d; ++j) {
      if (m + static_cast<long>(j) < 0) continue;
      const MultiPoly c = rec.instantiate(j, m);
      if (!c.is_zero()) r += seq[static_cast<std::size_t>(m + j)].truncate(order).times(c);
    }
    report.entries.push_back({m, std::move(r)});
  }
  return report;
}

TruncatedSeries qde_check(const QDifferenceEquation& eq, const TruncatedSeries& series, std::uint32_t order) {
  if (series.order() < order) throw OrderMismatch("qde_check: series order below the requested order");
  const TruncatedSeries s = series.truncate(order);
  TruncatedSeries r = TruncatedSeries::zero(order);
  for (const auto& t : eq.terms) r += shift_x(s, eq.step * t.shift).times(t.p);
  return r;
}

TruncatedSeries qde_solve(const QDifferenceEquation& eq, const TruncatedSeries& c, std::uint32_t order) {
  const auto rec = qde_to_recurrence(eq);
  return recurrence_solve(rec, {c}, order, order).assemble();
}

MultiPoly product_qde_residual() {
  const MultiPoly f = parse_poly("1 + xq + x^2q^2");
  // F_j is the part of P(x q^{2j}) made of the factors n = j..2.
  std::vector<MultiPoly> window(4, MultiPoly(1L));
  for (int j = 2; j >= 0; --j) window[j] = shift_x(f, 2 * j) * window[j + 1];
  const auto eq = sigma_qde();
  MultiPoly r;
  for (const auto& t : eq.terms) r += t.p * window[t.shift];
  return r;
}

bool verify_product_qde() { return product_qde_residual().is_zero(); }

bool ClosureReport::passed() const { return !first_mismatch && on_difference.all_zero() && leading_factor_ok; }

ClosureReport closure_check(const CoefficientSequence& a, const CoefficientSequence& ta, std::uint32_t m_max,
                            std::uint32_t order) {
  if (a.size() <= m_max || ta.size() <= m_max) throw InvalidSpec("closure_check: sequences shorter than m_max");
  ClosureReport report;
  CoefficientSequence d;
  CoefficientSequence a_cut;
  d.order = a_cut.order = order;
  for (std::uint32_t m = 0; m <= m_max; ++m) {
    const TruncatedSeries x = a[m].truncate(order);
    const TruncatedSeries y = ta[m].truncate(order);
    if (!report.first_mismatch && x != y) report.first_mismatch = m;
    d.entries.push_back(x - y);
    a_cut.entries.push_back(x);
  }
  const auto rec = closure_recurrence();
  const long last = static_cast<long>(m_max) - 5;
  if (last >= 0) {
    report.on_difference = recurrence_check(rec, d, 0, last, order);
    report.on_a = recurrence_check(rec, a_cut, 0, last, order);
    for (auto* r : {&report.on_difference, &report.on_a})
      for (auto& e : r->entries) e.m += 5;
  }
  for (long m = 0; m <= last; ++m) {
    const MultiPoly lead = rec.instantiate(5, m);
    if (lead.is_zero()) {
      report.leading_factor_ok = false;
      continue;
    }
    const MultiPoly unit = divide_exact(lead, 1, monomial_content(lead));
    const MultiPoly q_free = unit.filter([](const Monomial& mono) { return mono.q == 0; });
    if (q_free != MultiPoly(1L) && q_free != MultiPoly(-1L)) report.leading_factor_ok = false;
  }
  return report;
}

std::string to_string(const QDifferenceEquation& eq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < eq.terms.size(); ++i) {
    const auto& t = eq.terms[i];
    os << (i ? " + " : "") << '[' << to_string(t.p) << "] A(x";
    if (t.shift) os << " q^" << eq.step * t.shift;
    os << ')';
  }
  os << " = 0";
  return os.str();
}

std::string to_string(const CoefficientRecurrence& rec) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rec.terms.size(); ++i) {
    const auto& t = rec.terms[i];
    os << (i ? " + " : "") << '[' << to_string(t.p) << ']';
    if (t.alpha) os << " q^{" << t.alpha << "M}";
    os << " a(M";
    if (t.offset) os << '+' << t.offset;
    os << ')';
  }
  os << " = 0";
  return os.str();
}

}  // namespace qlink
