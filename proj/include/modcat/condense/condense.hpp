#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcat/fusion/completion.hpp"
#include "modcat/fusion/modular.hpp"
#include "modcat/fusion/quadratic.hpp"
#include "modcat/fusion/ring.hpp"
#include "modcat/report.hpp"
#include "modcat/wzw/wzw.hpp"

namespace modcat::condense {

using wzw::AlgebraSpec;
using wzw::LevelWeight;

struct CondensedLabel {
  enum class Kind { orbit, split };
  Kind kind = Kind::orbit;
  /// Lexicographically least member of the simple-current orbit.
  LevelWeight orbit_rep;
  /// 1..3 for split simples, 0 otherwise.
  int split_index = 0;

  friend bool operator==(const CondensedLabel&, const CondensedLabel&) = default;
};

struct CondensedSimple {
  CondensedLabel label;
  /// I, Y1, Y2, ... for orbits, X1, X2, X3 for the split fixed point.
  std::string name;
  /// Orbit member of least m1 + m2 (ties: larger m1); fixes the display
  /// order and the inherited twist.
  LevelWeight display;
  /// Image under the forgetful functor: the orbit, or the fixed point.
  std::vector<LevelWeight> ambient;
  exact::CycNum dim;
  exact::CycNum twist;
};

struct OrbitPartition {
  std::vector<std::vector<LevelWeight>> free_orbits;
  std::vector<LevelWeight> fixed_points;
};

/// Passes iff the algebra is sl3, 3 | k and every nontrivial simple current
/// has twist 1.
CheckReport etale_check(const AlgebraSpec& spec);

/// Orbits of the current (k,0) on the alcove; each orbit is sorted and the
/// list is ordered by least member. Throws PreconditionFailed when the
/// etale check fails.
OrbitPartition orbits(const AlgebraSpec& spec);

/// Local simples in display order: the unit, orbit simples Y1.. sorted by
/// display weight, then the split family X1..X3. Throws ConsistencyError
/// when the root-lattice test and twist constancy disagree.
std::vector<CondensedSimple> local_simples(const AlgebraSpec& spec);

/// sum of N[a][b][c] over a in a_set, b in b_set, c in c_set equals value.
struct FamilySum {
  std::vector<std::size_t> a_set, b_set, c_set;
  int value = 0;
};

/// Structure constants known from F_A(x) * F_A(y) = F_A(x y). Products of
/// orbit simples are known exactly (F_A of the fixed point is X1+X2+X3);
/// products involving the split family are known only as sums over it.
struct InducedFusion {
  std::vector<CondensedSimple> simples;
  std::vector<std::size_t> family;
  /// Flat N array, -1 where only family sums are known.
  std::vector<int> known;
  std::vector<FamilySum> sums;

  /// e.g. "I+2Y1+Y2+Y3+Y4"; "?" when the product is not known exactly.
  std::string product_string(std::size_t a, std::size_t b) const;
};

InducedFusion induced_fusion(const AlgebraSpec& spec);

struct SplitResolution {
  fusion::FusionRing ring;
  /// All solutions up to relabeling of the split family.
  std::vector<fusion::FusionRing> solutions;
  /// How many of them admit modular data with the inherited twists (set by
  /// condense()).
  std::size_t modular_solutions = 0;
  std::size_t nodes = 0;
  std::size_t variables = 0;
};

/// Exhaustive completion of the split-family constants subject to the
/// family sums, reciprocity, commutativity, associativity and exact
/// dimensions, up to permutations of the split family. Throws NoSolution or
/// AmbiguousBeyondRelabeling (listing every solution).
SplitResolution resolve_split(const AlgebraSpec& spec, const InducedFusion& partial, std::uint64_t seed = 0);

/// Same search, returning every solution (possibly none) without throwing.
SplitResolution resolve_split_all(const AlgebraSpec& spec, const InducedFusion& partial, std::uint64_t seed = 0);

/// Dims as elements of Z[sqrt3]; throws ConsistencyError otherwise.
std::vector<fusion::QuadraticInteger> quadratic_dims(const std::vector<exact::CycNum>& dims);

struct CondensedCategory {
  AlgebraSpec spec;
  std::vector<LevelWeight> algebra;
  std::vector<CondensedSimple> simples;
  fusion::ModularData md;
  SplitResolution resolution;
};

/// Full pipeline. Ring-level completions of the split family are filtered
/// by modularity of the balancing S-matrix built from the inherited twists;
/// exactly one must remain.
CondensedCategory condense(const AlgebraSpec& spec, std::uint64_t seed = 0);

fusion::ModularData condensed_modular_data(const AlgebraSpec& spec);

struct EtaleCandidate {
  std::vector<std::string> summands;
  fusion::QuadraticInteger fpdim;
  /// FPdim(A) / FPdim(candidate): the FPdim of the matching subcategory.
  fusion::QuadraticInteger subcategory_fpdim;
};

struct NearGroupPipeline {
  fusion::ModularData product;
  std::vector<std::string> trivial_twists;
  fusion::QuadraticInteger fpdim_a;
  std::vector<EtaleCandidate> etale_candidates;
  std::vector<std::vector<fusion::QuadraticInteger>> decompositions;
  /// Search effort spent refuting the branch with three objects.
  std::size_t rejected_nodes = 0;
  fusion::FusionRing ring;
  std::optional<fusion::NearGroupType> type;
  fusion::QuadraticInteger fpdim_x;
  CheckReport report;
};

/// C(Z3, eta^-1) x condensed level 9: trivial twists, etale candidates,
/// dimension decompositions, refutation of the three-object branch and the
/// resulting near-group ring. Throws PipelineBranchSurvived if the
/// three-object branch admits a ring.
NearGroupPipeline near_group_pipeline();

/// Exhaustive search for a based ring with the given dims, unit at index 0
/// and all constants bounded by `bound`.
fusion::CompletionResult ring_with_dims(const std::vector<fusion::QuadraticInteger>& dims, int bound,
                                        std::size_t max_solutions = 0);

struct AdjointSector {
  std::vector<LevelWeight> weights;
  std::vector<exact::CycNum> dims;
  std::vector<exact::CycNum> twists;
};

/// Root-lattice weights of the level-k alcove.
AdjointSector adjoint_sector(const AlgebraSpec& spec);

/// Level-5 adjoint sector data and the rank-4 ring `b_prime`:
/// twists, the fusion (1,4)*(1,4), and FPdim(X) = 1+sqrt2 exactly.
CheckReport level5_quotient_checks(const fusion::FusionRing& b_prime);

}  // namespace modcat::condense
