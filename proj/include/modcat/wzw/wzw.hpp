#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "modcat/exact/cycnum.hpp"
#include "modcat/fusion/modular.hpp"
#include "modcat/fusion/ring.hpp"

namespace modcat::wzw {

using exact::CycNum;

enum class RankType { A1, A2 };

struct AlgebraSpec {
  RankType rank_type = RankType::A2;
  int level = 1;
};

/// Highest weight in fundamental-weight coordinates; m2 is unused (0) for A1.
struct LevelWeight {
  int m1 = 0;
  int m2 = 0;

  friend auto operator<=>(const LevelWeight&, const LevelWeight&) = default;
};

/// "(m1,m2)" for A2, "(m)" for A1.
std::string label(const AlgebraSpec& spec, const LevelWeight& w);

/// "sl2" or "sl3".
std::string algebra_name(RankType type);

/// A2: m1, m2 >= 0 with m1 + m2 <= k; A1: 0 <= m <= k.
bool in_alcove(const AlgebraSpec& spec, const LevelWeight& w);

/// Lexicographic list of all alcove weights.
std::vector<LevelWeight> alcove(const AlgebraSpec& spec);

/// A2: sin((m1+1)t) sin((m2+1)t) sin((m1+m2+2)t) / (sin(2t) sin(t)^2) with
/// t = pi/(k+3); A1: sin((m+1)t)/sin(t) with t = pi/(k+2). Stored at the
/// smallest cyclotomic order containing it.
CycNum qdim(const AlgebraSpec& spec, const LevelWeight& w);

/// A2: exp(2 pi i (m1^2 + 3m1 + m1m2 + 3m2 + m2^2) / 3(k+3));
/// A1: exp(2 pi i m(m+2) / 4(k+2)).
CycNum twist(const AlgebraSpec& spec, const LevelWeight& w);

/// Exponent of the twist as a reduced fraction p/q in [0, 1).
std::pair<long long, long long> twist_exponent(const AlgebraSpec& spec, const LevelWeight& w);

/// Weights of the finite-dimensional irreducible with highest weight w,
/// with multiplicity (Gelfand-Tsetlin patterns for A2).
std::vector<std::pair<LevelWeight, int>> weight_multiset(const AlgebraSpec& spec, const LevelWeight& w);

/// Classical tensor product decomposition by the Klimyk formula: each weight
/// of the smaller factor shifts the other highest weight, and the result is
/// reflected into the dominant chamber with signs.
std::vector<std::pair<LevelWeight, int>> classical_tensor(const AlgebraSpec& spec, const LevelWeight& a,
                                                          const LevelWeight& b);

/// Level-k fusion: classical decomposition folded into the alcove by the
/// shifted affine Weyl group. Sorted by weight.
std::vector<std::pair<LevelWeight, int>> fuse(const AlgebraSpec& spec, const LevelWeight& a, const LevelWeight& b);

/// Alcove weights of quantum dimension exactly 1.
std::vector<LevelWeight> simple_currents(const AlgebraSpec& spec);

/// The unique summand of J*w; throws NotASimpleCurrent otherwise.
LevelWeight current_action(const AlgebraSpec& spec, const LevelWeight& J, const LevelWeight& w);

LevelWeight dual(const AlgebraSpec& spec, const LevelWeight& w);

/// A2: m1 = m2 mod 3.
bool in_root_lattice(const LevelWeight& w);

/// Labels in alcove order, unit (0,0).
fusion::FusionRing fusion_ring(const AlgebraSpec& spec);

/// Fusion ring, quantum dimensions, twists and balancing S-matrix.
fusion::ModularData modular_data(const AlgebraSpec& spec);

/// Throws InvalidArgument for level < 1.
void validate(const AlgebraSpec& spec);

}  // namespace modcat::wzw
