#pragma once

#include <optional>
#include <vector>

#include "modcat/fusion/quadratic.hpp"
#include "modcat/fusion/ring.hpp"

namespace modcat::fusion {

struct FpDims {
  /// Frobenius-Perron dimensions, unit normalised to 1.
  std::vector<double> values;
  /// Exact values in Z[sqrt(d)], d in {3, 2}, when recognition succeeds and
  /// the homomorphism identity holds exactly.
  std::optional<std::vector<QuadraticInteger>> exact;
};

/// Power iteration on sum_i L_i, whose Perron vector is the dimension
/// vector. Throws NoConvergence after `max_iterations`.
FpDims fp_dims(const FusionRing& ring, int max_iterations = 100000, double tolerance = 1e-12);

/// d_i d_j = sum_k N[i][j][k] d_k and d_i > 0, exactly.
bool is_dimension_homomorphism(const FusionRing& ring, const std::vector<QuadraticInteger>& dims);

}  // namespace modcat::fusion
