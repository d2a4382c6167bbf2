#pragma once

#include <cstddef>
#include <vector>

#include "modcat/exact/cycnum.hpp"
#include "modcat/fusion/ring.hpp"
#include "modcat/golden/catalog.hpp"
#include "modcat/report.hpp"

namespace modcat::golden {

/// Ring graded by the cyclic group Z/group; component_of[i] is the degree
/// of basis element i.
struct GradedRing {
  fusion::FusionRing ring;
  int group = 1;
  std::vector<int> component_of;
};

/// Ring plus "grading": {"group_order", "components"} of a golden table.
GradedRing decode_graded(const GoldenTable& table);

/// Grading law, unit in degree 0, faithfulness, duality inverting degrees,
/// and degree 0 being the near-group ring of type Z3+6.
CheckReport verify_graded(const GradedRing& gr);

/// N[i][j][k] = N[j][i][k] for all triples.
bool verify_commutativity(const fusion::FusionRing& ring);

/// d_i d_j = sum_k N[i][j][k] d_k exactly; the first failing pair is named.
CheckItem dimension_additivity(const fusion::FusionRing& ring, const std::vector<exact::CycNum>& dims);

/// Trivial twists, distinctness and FPdims of the summands of I(I) in
/// C(Z3, eta^-1) x C(sl3, 9). With `apply_corrections` the table's recorded
/// corrections replace the stated entries first.
CheckReport induction_unit_check(const GoldenTable& table, bool apply_corrections = true);

/// Same, on the shipped table.
CheckReport induction_unit_check();

/// Component inventory of the rank-24 extension: six components of four
/// labels, duality pairing h with h^-1, agreement with the Z2 and Z3
/// extensions, FPdim(U), the bound for FPdim(T_j) and per-component global
/// dimensions. The fusion table itself is not checked.
CheckReport component_inventory_checks(const GoldenTable& components, const GoldenTable& z2_extension,
                                       const GoldenTable& z3_extension);

}  // namespace modcat::golden
