#include "modcat/fusion/dimension_search.hpp"

#include <algorithm>
#include <cmath>

#include "modcat/errors.hpp"

namespace modcat::fusion {

namespace {

bool greater(const QuadraticInteger& x, const QuadraticInteger& y) {
  const QuadraticInteger diff = x - y;
  return diff.is_nonnegative() && !(diff == QuadraticInteger{0, 0, diff.d});
}

void search(const QuadraticInteger& remainder, const std::vector<QuadraticInteger>& squares,
            const std::vector<QuadraticInteger>& roots, std::size_t start, std::vector<QuadraticInteger>& current,
            std::vector<std::vector<QuadraticInteger>>& out) {
  if (remainder == QuadraticInteger{0, 0, 3}) {
    out.push_back(current);
    return;
  }
  for (std::size_t c = start; c < squares.size(); ++c) {
    const QuadraticInteger rest = remainder - squares[c];
    if (!rest.is_totally_nonnegative()) continue;
    current.push_back(roots[c]);
    search(rest, squares, roots, c, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<QuadraticInteger>> sum_of_squares_search(const QuadraticInteger& total,
                                                                 long long forced_invertibles) {
  if (total.d != 3) throw InvalidArgument("sum_of_squares_search works in Z[sqrt(3)]");
  if (forced_invertibles < 0) throw InvalidArgument("negative number of invertibles");
  if (!total.is_totally_nonnegative()) throw PreconditionFailed("total " + total.str() + " is not totally positive");
  const QuadraticInteger remainder = total - QuadraticInteger{forced_invertibles, 0, 3};
  std::vector<std::vector<QuadraticInteger>> out;
  if (!remainder.is_totally_nonnegative()) return out;

  // d^2 <= remainder bounds d <= sqrt(value); conjugate bound |a - b sqrt3|
  // <= sqrt(conjugate value) then bounds a and b separately.
  const double bound = std::sqrt(std::max(0.0, remainder.value())) + 1;
  const double conj_bound = std::sqrt(std::max(0.0, remainder.conjugate().value())) + 1;
  std::vector<QuadraticInteger> roots;
  const long long a_max = static_cast<long long>((bound + conj_bound) / 2) + 1;
  const long long b_max = static_cast<long long>((bound + conj_bound) / (2 * std::sqrt(3.0))) + 1;
  for (long long a = 1; a <= a_max; ++a) {
    for (long long b = 0; b <= b_max; ++b) {
      if (a == 1 && b == 0) continue;
      const QuadraticInteger d{a, b, 3};
      if ((remainder - d * d).is_totally_nonnegative()) roots.push_back(d);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return greater(x, y); });
  std::vector<QuadraticInteger> squares;
  for (const auto& r : roots) squares.push_back(r * r);

  std::vector<QuadraticInteger> current;
  search(remainder, squares, roots, 0, current, out);
  return out;
}

}  // namespace modcat::fusion
