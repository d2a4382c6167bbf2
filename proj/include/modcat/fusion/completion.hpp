#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modcat/fusion/quadratic.hpp"
#include "modcat/fusion/ring.hpp"

namespace modcat::fusion {

/// sum over terms of coeff * N[flat index] == rhs; coefficients must be
/// nonnegative.
struct LinearConstraint {
  std::vector<std::pair<std::size_t, int>> terms;
  int rhs = 0;
  std::string name;
};

/// A partially known based ring to be completed by exhaustive search.
///
/// The unit laws follow from each dual candidate; Frobenius reciprocity (and
/// commutativity, when requested) identify unknowns, and every completion
/// must satisfy associativity and the exact dimension equations.
struct CompletionProblem {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  /// Duality involutions to try, in order.
  std::vector<std::vector<std::size_t>> dual_candidates;
  /// Flat N array with -1 for unknown entries; empty means all unknown.
  std::vector<int> known;
  std::vector<LinearConstraint> linear;
  /// Exact dimensions; they bound every entry and are enforced exactly.
  std::vector<QuadraticInteger> dims;
  bool commutative = false;
  int max_value = 64;
  /// Basis permutations under which solutions count as the same; the
  /// identity is implied. Should form a group with the identity.
  std::vector<std::vector<std::size_t>> relabelings;
  /// Nonzero seeds shuffle the order in which each entry's values are tried.
  std::uint64_t seed = 0;
  /// Stop after this many raw solutions; 0 means no limit.
  std::size_t max_solutions = 0;
};

struct CompletionResult {
  /// Distinct solutions in canonical form, sorted.
  std::vector<FusionRing> solutions;
  std::size_t raw_solutions = 0;
  std::size_t nodes = 0;
  std::size_t variables = 0;
};

CompletionResult complete_ring(const CompletionProblem& problem);

/// All involutions fixing `unit` that map every index to one with the same
/// class id, in lexicographic order.
std::vector<std::vector<std::size_t>> class_preserving_involutions(const std::vector<int>& classes, std::size_t unit);

/// Lexicographically least (dual, N) over the identity and `relabelings`;
/// labels stay attached to positions.
FusionRing canonical_form(const FusionRing& ring, const std::vector<std::vector<std::size_t>>& relabelings);

}  // namespace modcat::fusion
