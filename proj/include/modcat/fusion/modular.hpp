#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modcat/exact/cycnum.hpp"
#include "modcat/fusion/ring.hpp"
#include "modcat/report.hpp"

namespace modcat::fusion {

using exact::CycNum;
using Matrix = std::vector<std::vector<CycNum>>;

/// Fusion ring with exact dimensions, twists and the unnormalised S-matrix
/// (S[unit][unit] = 1).
struct ModularData {
  FusionRing ring;
  std::vector<CycNum> dims;
  std::vector<CycNum> twists;
  Matrix S;

  std::size_t rank() const noexcept { return ring.rank(); }
  /// Sum of squared dimensions.
  CycNum global_dimension() const;
};

/// Cyclic metric group Z/n with quadratic form values eta[a] = eta(g^a).
struct PointedData {
  int order = 1;
  std::vector<CycNum> eta;
};

/// eta(g^a) = eta(g)^(a^2).
PointedData cyclic_quadratic_form(int n, const CycNum& eta_generator);

/// Group ring, unit dimensions, twists eta and the balancing S-matrix.
ModularData pointed_modular_data(const PointedData& pointed);

/// S[X][Y] = theta_X^-1 theta_Y^-1 sum_Z N[X][Y][Z] dim(Z) theta_Z.
Matrix balancing_S(const FusionRing& ring, const std::vector<CycNum>& dims, const std::vector<CycNum>& twists);

/// N'[i][j][k] = (1/D) sum_m S[i][m] S[j][m] conj(S[k][m]) / S[unit][m],
/// flat in the FusionRing layout. Throws SingularS when the S-matrix is
/// degenerate and NonIntegerOutcome when an entry is not a nonnegative
/// integer.
std::vector<int> verlinde(const ModularData& md);

/// Symmetry, unit row, S*conj(S) = D*Id, Verlinde integrality and round
/// trip, and the Gauss sum identity p+ p- = D.
CheckReport verify_modular(const ModularData& md);

/// Gauss sums p+ = sum d_i^2 theta_i and p- = sum d_i^2 theta_i^-1.
std::pair<CycNum, CycNum> gauss_sums(const ModularData& md);

/// Labels "a⊠b"; basis index (i, j) -> i * rank(b) + j.
ModularData deligne_product(const ModularData& a, const ModularData& b);

struct TrivialTwists {
  std::size_t count = 0;
  std::vector<std::string> labels;
};

TrivialTwists count_trivial_twists(const ModularData& md);

}  // namespace modcat::fusion
