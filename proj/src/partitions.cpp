#include "qlink/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "qlink/errors.hpp"

namespace qlink {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw Error("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ')';
  return os.str();
}

Partition partition_merge(const Partition& mu, const Partition& nu) {
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
  return Partition(std::move(parts));
}

Partition partition_shift(const Partition& mu, int m) {
  std::vector<int> parts = mu.parts();
  for (int& p : parts) p += m;
  return Partition(std::move(parts));
}

bool is_schur_partition(const Partition& lambda) {
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int gap = p[i] - p[i + 1];
    if (gap < 3 || (gap == 3 && p[i] % 3 == 0)) return false;
  }
  return true;
}

bool is_schur_partition_alt(const Partition& lambda) {
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] - p[i + 1] < 3) return false;
  for (int a : p)
    if (a % 3 == 0 && std::find(p.begin(), p.end(), a + 3) != p.end()) return false;
  return true;
}

namespace {

void schur_rec(std::vector<int>& parts, int remaining, int max_next, const std::set<int>& excluded,
               const std::function<void(const Partition&)>& visit) {
  if (parts.empty() || !excluded.count(parts.back())) visit(Partition(parts));
  for (int p = std::min(max_next, remaining); p >= 1; --p) {
    parts.push_back(p);
    schur_rec(parts, remaining - p, p % 3 == 0 ? p - 4 : p - 3, excluded, visit);
    parts.pop_back();
  }
}

void partition_rec(std::vector<int>& parts, int remaining, int max_part,
                   const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(parts));
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    parts.push_back(p);
    partition_rec(parts, remaining - p, p, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_schur(int max_weight, const std::set<int>& excluded_smallest,
                    const std::function<void(const Partition&)>& visit) {
  if (max_weight < 0) return;
  std::vector<int> parts;
  schur_rec(parts, max_weight, max_weight, excluded_smallest, visit);
}

std::vector<Partition> enumerate_schur(int max_weight, const std::set<int>& excluded_smallest) {
  std::vector<Partition> out;
  for_each_schur(max_weight, excluded_smallest, [&out](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) return;
  std::vector<int> parts;
  partition_rec(parts, n, n, visit);
}

void for_each_partition_upto(int max_weight, const std::function<void(const Partition&)>& visit) {
  for (int n = 0; n <= max_weight; ++n) for_each_partition(n, visit);
}

PartStat PartStat::residue_count(int a, int m) {
  if (m < 1 || a < 0 || a >= m) throw InvalidSpec("residue counter needs m >= 1 and 0 <= a < m");
  return {Kind::Residue, a, m};
}

int PartStat::evaluate(const Partition& p) const {
  switch (kind) {
    case Kind::None:
      return 0;
    case Kind::Parts:
      return static_cast<int>(p.size());
    case Kind::Residue: {
      int n = 0;
      for (int part : p.parts()) n += (part % modulus == residue);
      return n;
    }
  }
  return 0;
}

Monomial StatSpec::weight(const Partition& p) const {
  return Monomial{static_cast<std::uint32_t>(p.weight()), static_cast<std::uint32_t>(x.evaluate(p)),
                  static_cast<std::uint32_t>(y.evaluate(p))};
}

TruncatedSeries gf_from_enumeration(std::uint32_t order, const std::set<int>& excluded_smallest,
                                    const StatSpec& stats) {
  std::vector<MultiPoly::Term> terms;
  for_each_schur(static_cast<int>(order), excluded_smallest,
                 [&](const Partition& p) { terms.emplace_back(stats.weight(p), 1); });
  return TruncatedSeries(MultiPoly::from_terms(std::move(terms)), order);
}

std::optional<TheoremStat> theorem_stat_from_name(const std::string& name) {
  if (name == "A") return TheoremStat::A;
  if (name == "B") return TheoremStat::B;
  if (name == "C") return TheoremStat::C;
  if (name == "D") return TheoremStat::D;
  if (name == "Dprime") return TheoremStat::Dprime;
  if (name == "G_D") return TheoremStat::G_D;
  return std::nullopt;
}

std::string theorem_stat_name(TheoremStat which) {
  switch (which) {
    case TheoremStat::A: return "A";
    case TheoremStat::B: return "B";
    case TheoremStat::C: return "C";
    case TheoremStat::D: return "D";
    case TheoremStat::Dprime: return "Dprime";
    case TheoremStat::G_D: return "G_D";
  }
  return "?";
}

bool theorem_stat_is_refined(TheoremStat which) {
  return which != TheoremStat::A && which != TheoremStat::D;
}

std::optional<int> theorem_stat_value(TheoremStat which, const Partition& p) {
  const auto& parts = p.parts();
  const int n_parts = static_cast<int>(parts.size());
  switch (which) {
    case TheoremStat::A:
      for (int a : parts)
        if (a % 6 != 1 && a % 6 != 5) return std::nullopt;
      return 0;
    case TheoremStat::B:
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 3 == 0) return std::nullopt;
        if (i && parts[i] == parts[i - 1]) return std::nullopt;
      }
      return n_parts;
    case TheoremStat::C:
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 == 0) return std::nullopt;
        if (i >= 2 && parts[i] == parts[i - 2]) return std::nullopt;
      }
      return n_parts;
    case TheoremStat::D:
      if (!is_schur_partition(p)) return std::nullopt;
      return 0;
    case TheoremStat::G_D:
      if (!is_schur_partition(p)) return std::nullopt;
      return n_parts + PartStat::residue_count(0, 3).evaluate(p);
    case TheoremStat::Dprime:
      if (!is_schur_partition(p)) return std::nullopt;
      return n_parts + PartStat::residue_count(0, 2).evaluate(p);
  }
  return std::nullopt;
}

std::uint64_t count_theorem_stat(TheoremStat which, std::optional<int> m, int n) {
  if (theorem_stat_is_refined(which) != m.has_value())
    throw InvalidSpec("count_theorem_stat: " + theorem_stat_name(which) +
                      (m ? " takes no refinement m" : " needs a refinement m"));
  std::uint64_t count = 0;
  for_each_partition(n, [&](const Partition& p) {
    auto v = theorem_stat_value(which, p);
    if (v && (!m || *v == *m)) ++count;
  });
  return count;
}

StatTable theorem_stat_table(TheoremStat which, int max_n) {
  StatTable table;
  for_each_partition_upto(max_n, [&](const Partition& p) {
    if (auto v = theorem_stat_value(which, p)) ++table[{*v, p.weight()}];
  });
  return table;
}

std::vector<std::uint64_t> marginal_by_n(const StatTable& table, int max_n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(max_n) + 1, 0);
  for (const auto& [key, count] : table)
    if (key.second <= max_n) out[static_cast<std::size_t>(key.second)] += count;
  return out;
}

}  // namespace qlink
