#include "qlink/lpi.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qlink/errors.hpp"

namespace qlink {

void IdealSpec::validate() const {
  const int k = static_cast<int>(blocks.size());
  if (k == 0) throw InvalidSpec("ideal: no blocks");
  if (modulus < 1) throw InvalidSpec("ideal: modulus must be positive");
  if (!blocks[0].empty()) throw InvalidSpec("ideal: block 1 must be the empty partition");
  if (linking.size() != blocks.size()) throw InvalidSpec("ideal: linking map must cover every block");
  std::set<Partition> seen;
  for (int i = 0; i < k; ++i) {
    if (!seen.insert(blocks[i]).second)
      throw InvalidSpec("ideal: block " + std::to_string(i + 1) + " is repeated");
    if (blocks[i].largest() > modulus)
      throw InvalidSpec("ideal: block " + std::to_string(i + 1) + " has a part above the modulus");
    for (int j : linking[i])
      if (j < 0 || j >= k) throw InvalidSpec("ideal: linking set of block " + std::to_string(i + 1) +
                                             " names an unknown block");
    if (!linking[i].count(0))
      throw InvalidSpec("ideal: the empty block must follow block " + std::to_string(i + 1));
  }
  if (static_cast<int>(linking[0].size()) != k) throw InvalidSpec("ideal: the empty block must link to every block");
}

namespace {

std::set<int> one_based(std::initializer_list<int> idx) {
  std::set<int> s;
  for (int i : idx) s.insert(i - 1);
  return s;
}

std::set<int> all_blocks(int k) {
  std::set<int> s;
  for (int i = 0; i < k; ++i) s.insert(i);
  return s;
}

}  // namespace

IdealSpec schur_mod6_preset() {
  IdealSpec spec;
  spec.modulus = 6;
  spec.stats = StatSpec::even_parts();
  spec.blocks = {Partition{}, Partition{1}, Partition{2},    Partition{3},    Partition{4},    Partition{4, 1},
                 Partition{5}, Partition{5, 1}, Partition{5, 2}, Partition{6}, Partition{6, 1}, Partition{6, 2}};
  const auto all = all_blocks(12);
  const auto after_five = one_based({1, 3, 4, 5, 7, 9, 10, 12});
  const auto after_six = one_based({1, 5, 7, 10});
  spec.linking = {all, all, all, all, all, all, after_five, after_five, after_five, after_six, after_six, after_six};
  spec.validate();
  return spec;
}

IdealSpec schur_mod3_preset() {
  IdealSpec spec;
  spec.modulus = 3;
  spec.stats = StatSpec::multiples_of_3();
  spec.blocks = {Partition{}, Partition{1}, Partition{2}, Partition{3}};
  const auto all = all_blocks(4);
  spec.linking = {all, all, one_based({1, 3, 4}), one_based({1})};
  spec.validate();
  return spec;
}

BlockDecomposition decompose(const Partition& lambda, const IdealSpec& spec) {
  const int t = spec.modulus;
  std::map<int, std::vector<int>> windows;
  for (int p : lambda.parts()) windows[(p - 1) / t].push_back(p);
  BlockDecomposition out;
  if (windows.empty()) return out;
  const int last = windows.rbegin()->first;
  out.block_indices.assign(static_cast<std::size_t>(last) + 1, 0);
  for (auto& [i, parts] : windows) {
    Partition block = partition_shift(Partition(parts), -i * t);
    auto it = std::find(spec.blocks.begin(), spec.blocks.end(), block);
    if (it == spec.blocks.end())
      throw UnknownBlock("decompose: window " + std::to_string(i) + " of " + to_string(lambda) +
                         " shifts down to " + to_string(block) + ", which is not a block");
    out.block_indices[static_cast<std::size_t>(i)] = static_cast<int>(it - spec.blocks.begin());
  }
  return out;
}

bool ideal_member(const Partition& lambda, const IdealSpec& spec) {
  BlockDecomposition d;
  try {
    d = decompose(lambda, spec);
  } catch (const UnknownBlock&) {
    return false;
  }
  for (std::size_t i = 1; i < d.block_indices.size(); ++i)
    if (!spec.linking[static_cast<std::size_t>(d.block_indices[i - 1])].count(d.block_indices[i])) return false;
  return true;
}

EquivalenceReport verify_equivalence(const IdealSpec& spec, const std::function<bool(const Partition&)>& predicate,
                                     int max_weight) {
  EquivalenceReport report;
  for_each_partition_upto(max_weight, [&](const Partition& p) {
    ++report.checked;
    if (predicate(p) != ideal_member(p, spec)) {
      report.equal = false;
      if (!report.first_counterexample) report.first_counterexample = p;
      report.counterexamples.push_back(p);
    }
  });
  return report;
}

PolyMatrix weight_matrix(const IdealSpec& spec) {
  std::vector<MultiPoly> diag;
  diag.reserve(spec.blocks.size());
  for (const auto& b : spec.blocks) diag.emplace_back(spec.stats.weight(b));
  return PolyMatrix::diagonal(diag);
}

PolyMatrix linking_matrix(const IdealSpec& spec) {
  const std::size_t k = spec.blocks.size();
  PolyMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (int j : spec.linking[i]) a(i, static_cast<std::size_t>(j)) = MultiPoly(1L);
  return a;
}

ClassReduction reduce_classes(const IdealSpec& spec) {
  const PolyMatrix a = linking_matrix(spec);
  const PolyMatrix w = weight_matrix(spec);
  const std::size_t k = spec.blocks.size();
  ClassReduction red;
  red.class_of.assign(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (red.class_of[i] >= 0) continue;
    const int c = static_cast<int>(red.classes.size());
    red.classes.push_back({});
    const auto row_i = a.row(i);
    for (std::size_t j = i; j < k; ++j)
      if (red.class_of[j] < 0 && a.row(j) == row_i) {
        red.class_of[j] = c;
        red.classes.back().push_back(static_cast<int>(j));
      }
  }
  const std::size_t n = red.classes.size();
  red.reduced = PolyMatrix(n, n);
  for (std::size_t ci = 0; ci < n; ++ci) {
    const auto rep = static_cast<std::size_t>(red.classes[ci].front());
    for (std::size_t cj = 0; cj < n; ++cj)
      for (int b : red.classes[cj]) {
        const auto bj = static_cast<std::size_t>(b);
        if (!a(rep, bj).is_zero()) red.reduced(ci, cj) += w(bj, bj);
      }
  }
  return red;
}

PolyMatrix lift_reduced(const ClassReduction& reduction, const IdealSpec& spec) {
  const PolyMatrix a = linking_matrix(spec);
  const std::size_t k = spec.blocks.size();
  const std::size_t n = reduction.classes.size();
  // lift = S . M . R with S the block->class indicator and R the class representative rows of A.
  PolyMatrix s(k, n);
  for (std::size_t b = 0; b < k; ++b) s(b, static_cast<std::size_t>(reduction.class_of[b])) = MultiPoly(1L);
  PolyMatrix r(n, k);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t j = 0; j < k; ++j) r(c, j) = a(static_cast<std::size_t>(reduction.classes[c].front()), j);
  return mat_mul(mat_mul(s, reduction.reduced), r);
}

std::vector<TruncatedSeries> vector_equation_residual(const PolyMatrix& m, std::uint32_t modulus,
                                                      const std::vector<TruncatedSeries>& a) {
  if (m.rows() != m.cols() || m.rows() != a.size()) throw DimensionMismatch("vector equation: size mismatch");
  std::vector<TruncatedSeries> shifted;
  shifted.reserve(a.size());
  for (const auto& s : a) shifted.push_back(shift_x(s, modulus));
  std::vector<TruncatedSeries> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    TruncatedSeries r = a[i];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r -= shifted[j].times(m(i, j));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TruncatedSeries> solve_vector_equation(const PolyMatrix& m, std::uint32_t modulus, std::uint32_t order) {
  const std::size_t n = m.rows();
  if (m.cols() != n || n == 0) throw DimensionMismatch("solve_vector_equation: matrix must be square");
  if (modulus == 0) throw DivergentSpec("solve_vector_equation: modulus must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_sum = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [mono, c] : m(i, j).terms()) {
        if (mono.x != 0) continue;
        if (mono.q != 0 || mono.y != 0)
          throw DivergentSpec("solve_vector_equation: x-free term " + to_string(mono) + " in entry (" +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        row_sum += c;
      }
    if (row_sum != 1)
      throw DivergentSpec("solve_vector_equation: x-free part of row " + std::to_string(i + 1) +
                          " does not fix the all-ones constant vector");
  }
  std::vector<TruncatedSeries> a(n, TruncatedSeries::one(order));
  const std::uint32_t passes = (order + modulus - 1) / modulus + 2;
  std::vector<TruncatedSeries> previous;
  for (std::uint32_t pass = 0; pass < passes; ++pass) {
    std::vector<TruncatedSeries> shifted;
    shifted.reserve(n);
    for (const auto& s : a) shifted.push_back(shift_x(s, modulus));
    previous = std::move(a);
    a.assign(n, TruncatedSeries::zero(order));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m(i, j).is_zero()) a[i] += shifted[j].times(m(i, j));
  }
  if (a != previous) throw DivergentSpec("solve_vector_equation: iteration did not stabilise");
  return a;
}

TruncatedSeries ideal_gf_by_membership(const IdealSpec& spec, std::uint32_t order) {
  std::vector<MultiPoly::Term> terms;
  for_each_partition_upto(static_cast<int>(order), [&](const Partition& p) {
    if (ideal_member(p, spec)) terms.emplace_back(spec.stats.weight(p), 1);
  });
  return TruncatedSeries(MultiPoly::from_terms(std::move(terms)), order);
}

}  // namespace qlink
