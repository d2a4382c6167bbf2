#pragma once

#include <vector>

#include "modcat/fusion/quadratic.hpp"

namespace modcat::fusion {

/// Every multiset {d_1, ..., d_r} of elements d = a + b sqrt(3) with a >= 1,
/// b >= 0, d != 1 such that forced_invertibles + sum d_i^2 = total.
///
/// Depth-first over candidates in decreasing order of size; the remainder
/// must stay totally nonnegative, which bounds both embeddings. Each
/// decomposition is listed in non-increasing order; decompositions appear in
/// search order (larger first elements first).
std::vector<std::vector<QuadraticInteger>> sum_of_squares_search(const QuadraticInteger& total, long long forced_invertibles);

}  // namespace modcat::fusion
