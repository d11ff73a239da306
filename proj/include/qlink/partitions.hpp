#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qlink/series.hpp"

namespace qlink {

/// Integer partition; parts are kept weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  int weight() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// Multiset union of parts.
Partition partition_merge(const Partition& mu, const Partition& nu);
/// Adds m to every part.
Partition partition_shift(const Partition& mu, int m);

/// Consecutive parts differ by >= 3, and by > 3 when the larger is a multiple of 3.
bool is_schur_partition(const Partition& lambda);
/// Same class phrased as: gaps >= 3 and no two consecutive multiples of 3 as parts.
bool is_schur_partition_alt(const Partition& lambda);

/// Visits every Schur partition with weight <= max_weight whose smallest part
/// is not in excluded_smallest. The empty partition is always visited.
void for_each_schur(int max_weight, const std::set<int>& excluded_smallest,
                    const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_schur(int max_weight, const std::set<int>& excluded_smallest = {});

/// Visits every partition of n (in reverse lexicographic order).
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
/// Visits every partition of weight 0..max_weight, by increasing weight.
void for_each_partition_upto(int max_weight, const std::function<void(const Partition&)>& visit);

/// A per-partition statistic routed to one of the variables x, y.
struct PartStat {
  enum class Kind { None, Parts, Residue };
  Kind kind = Kind::None;
  int residue = 0;
  int modulus = 1;

  static PartStat none() { return {}; }
  static PartStat parts() { return {Kind::Parts, 0, 1}; }
  static PartStat residue_count(int a, int m);

  int evaluate(const Partition& p) const;
  friend bool operator==(const PartStat&, const PartStat&) = default;
};

struct StatSpec {
  PartStat x = PartStat::parts();
  PartStat y = PartStat::none();

  /// x counts parts, y counts parts divisible by modulus.
  static StatSpec parts_and_multiples_of(int modulus) { return {PartStat::parts(), PartStat::residue_count(0, modulus)}; }
  static StatSpec even_parts() { return parts_and_multiples_of(2); }
  static StatSpec multiples_of_3() { return parts_and_multiples_of(3); }
  static StatSpec parts_only() { return {PartStat::parts(), PartStat::none()}; }

  /// x^{stat_x} y^{stat_y} q^{|p|}
  Monomial weight(const Partition& p) const;
  friend bool operator==(const StatSpec&, const StatSpec&) = default;
};

/// Sum of x^{stat_x} y^{stat_y} q^{|lambda|} over the enumerated Schur class.
TruncatedSeries gf_from_enumeration(std::uint32_t order, const std::set<int>& excluded_smallest,
                                    const StatSpec& stats);

/// Counting statistics of the classical Schur-type theorems.
///   A:      parts congruent to +-1 mod 6
///   B:      m distinct nonmultiples of 3
///   C:      m odd parts, none appearing more than twice
///   D:      Schur partitions
///   G_D:    Schur partitions with #parts + #multiples of 3 = m
///   Dprime: Schur partitions with #parts + #even parts = m
enum class TheoremStat { A, B, C, D, Dprime, G_D };

std::optional<TheoremStat> theorem_stat_from_name(const std::string& name);
std::string theorem_stat_name(TheoremStat which);
bool theorem_stat_is_refined(TheoremStat which);

/// Refinement value of p under a refined statistic, or nullopt when p is not
/// counted by it at all. For unrefined statistics the value is 0.
std::optional<int> theorem_stat_value(TheoremStat which, const Partition& p);

/// Brute-force count over all partitions of n. m must be given exactly for
/// the refined statistics (B, C, G_D, Dprime) and omitted for A and D.
std::uint64_t count_theorem_stat(TheoremStat which, std::optional<int> m, int n);

/// Counts keyed by (m, n) for every n <= max_n in one enumeration pass; for
/// unrefined statistics m is always 0.
using StatTable = std::map<std::pair<int, int>, std::uint64_t>;
StatTable theorem_stat_table(TheoremStat which, int max_n);

/// Sum over m of a refined table, indexed by n.
std::vector<std::uint64_t> marginal_by_n(const StatTable& table, int max_n);

}  // namespace qlink
