#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modcat/report.hpp"

namespace modcat::fusion {

/// Based ring with nonnegative integer structure constants.
///
/// `N` is stored flat: N(i, j, k) = multiplicity of basis element k in i*j,
/// at offset (i * rank + j) * rank + k.
struct FusionRing {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  std::vector<int> N;

  /// All structure constants zero; caller fills them in.
  static FusionRing zeros(std::vector<std::string> labels, std::size_t unit, std::vector<std::size_t> dual);

  std::size_t rank() const noexcept { return labels.size(); }
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * rank() + j) * rank() + k;
  }
  int operator()(std::size_t i, std::size_t j, std::size_t k) const { return N[offset(i, j, k)]; }
  int& operator()(std::size_t i, std::size_t j, std::size_t k) { return N[offset(i, j, k)]; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; throws InvalidArgument when absent.
  std::size_t index(std::string_view label) const;

  /// Nonzero entries of i*j as (k, multiplicity), ascending k.
  std::vector<std::pair<std::size_t, int>> product(std::size_t i, std::size_t j) const;
  /// e.g. "I+2Y1+Y4".
  std::string product_string(std::size_t i, std::size_t j) const;

  /// i is invertible iff i * dual(i) is the unit alone.
  bool is_invertible(std::size_t i) const;

  /// Basis relabelled so old index i becomes perm[i].
  FusionRing permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;
};

/// Unit laws, duality, Frobenius reciprocity and associativity, each checked
/// exhaustively. Each family reports its first violation in lexicographic
/// index order.
CheckReport verify_ring(const FusionRing& ring);

bool is_commutative(const FusionRing& ring);

/// Group ring of Z/n with labels I, g, g^2, ...
FusionRing cyclic_group_ring(int n);

struct NearGroupType {
  std::size_t group_order = 0;
  int multiplicity = 0;
  friend bool operator==(const NearGroupType&, const NearGroupType&) = default;
};

/// (|G|, n) when exactly one basis element X is non-invertible and
/// X*X = sum of all invertibles + n X.
std::optional<NearGroupType> near_group_recognize(const FusionRing& ring);

}  // namespace modcat::fusion
