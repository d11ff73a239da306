#pragma once

// Span-one linked partition ideals.
//
// An ideal is given by a finite block set (block 0 is the empty partition), a
// linking map saying which block may follow which, and a modulus T. Its
// members are the partitions that split into windows (iT, (i+1)T] whose
// down-shifted contents are blocks, each allowed after its predecessor.
//
// Indices are 0-based in the API; JSON and printed output use 1-based
// indices so that block 1 is the empty block.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "qlink/matrix.hpp"
#include "qlink/partitions.hpp"
#include "qlink/series.hpp"

namespace qlink {

struct IdealSpec {
  std::vector<Partition> blocks;
  std::vector<std::set<int>> linking;  // linking[k] = blocks allowed right after block k
  int modulus = 1;
  StatSpec stats;

  /// Throws InvalidSpec unless: block 0 is empty and blocks are distinct,
  /// linking[0] is the full set, 0 is in every linking set, every part is <= modulus.
  void validate() const;
  std::size_t size() const { return blocks.size(); }
};

/// The 12-block modulus-6 description of the Schur class with y counting even parts.
IdealSpec schur_mod6_preset();
/// The 4-block modulus-3 description with y counting multiples of 3.
IdealSpec schur_mod3_preset();

struct BlockDecomposition {
  std::vector<int> block_indices;  // trailing empty blocks removed
  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// Throws UnknownBlock when a window's down-shifted contents are not a block.
BlockDecomposition decompose(const Partition& lambda, const IdealSpec& spec);

bool ideal_member(const Partition& lambda, const IdealSpec& spec);

struct EquivalenceReport {
  bool equal = true;
  std::size_t checked = 0;
  std::optional<Partition> first_counterexample;  // least weight, then enumeration order
  std::vector<Partition> counterexamples;
};

EquivalenceReport verify_equivalence(const IdealSpec& spec, const std::function<bool(const Partition&)>& predicate,
                                     int max_weight);

/// diag(x^{stat_x} y^{stat_y} q^{|block|})
PolyMatrix weight_matrix(const IdealSpec& spec);
/// 0/1 matrix with (k, j) = 1 iff block j may follow block k.
PolyMatrix linking_matrix(const IdealSpec& spec);

struct ClassReduction {
  std::vector<std::vector<int>> classes;  // groups of blocks with equal linking-matrix rows
  std::vector<int> class_of;
  PolyMatrix reduced;                     // class-level matrix M(x)
};

ClassReduction reduce_classes(const IdealSpec& spec);

/// Lifts the class-level matrix back to block level; equals A.W(x).A.
PolyMatrix lift_reduced(const ClassReduction& reduction, const IdealSpec& spec);

/// Solves A(x) = M(x) A(x q^T) modulo q^{order+1} with A_1(0) = 1.
/// The x-free part of M must be an integer matrix with unit row sums.
std::vector<TruncatedSeries> solve_vector_equation(const PolyMatrix& m, std::uint32_t modulus, std::uint32_t order);

/// A(x) - M(x) A(x q^T), componentwise.
std::vector<TruncatedSeries> vector_equation_residual(const PolyMatrix& m, std::uint32_t modulus,
                                                      const std::vector<TruncatedSeries>& a);

/// Generating function of the ideal's members by brute-force membership
/// testing over every partition of weight <= order.
TruncatedSeries ideal_gf_by_membership(const IdealSpec& spec, std::uint32_t order);

}  // namespace qlink
