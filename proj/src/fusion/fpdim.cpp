#include "modcat/fusion/fpdim.hpp"

#include <cmath>

#include "modcat/errors.hpp"

namespace modcat::fusion {

namespace {

constexpr double kMatchTolerance = 1e-8;
constexpr std::size_t kMaxCombinations = 4096;

// Candidates a + b sqrt(d) close to x whose conjugate stays in [-x, x].
std::vector<QuadraticInteger> candidates(double x, int d) {
  std::vector<QuadraticInteger> out;
  const double root = std::sqrt(static_cast<double>(d));
  const long long b_max = static_cast<long long>(std::floor(x / root)) + 1;
  for (long long b = 0; b <= b_max; ++b) {
    const double a_real = x - static_cast<double>(b) * root;
    const long long a = std::llround(a_real);
    if (std::abs(a_real - static_cast<double>(a)) > kMatchTolerance * std::max(1.0, x)) continue;
    const double conjugate = static_cast<double>(a) - static_cast<double>(b) * root;
    if (std::abs(conjugate) > x + kMatchTolerance) continue;
    out.push_back({a, b, d});
  }
  return out;
}

std::optional<std::vector<QuadraticInteger>> recognise(const FusionRing& ring, const std::vector<double>& values,
                                                       int d) {
  std::vector<std::vector<QuadraticInteger>> options;
  std::size_t combos = 1;
  for (double x : values) {
    options.push_back(candidates(x, d));
    if (options.back().empty()) return std::nullopt;
    combos *= options.back().size();
    if (combos > kMaxCombinations) return std::nullopt;
  }
  std::vector<std::size_t> pick(values.size(), 0);
  std::vector<QuadraticInteger> dims(values.size());
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    for (std::size_t i = 0; i < values.size(); ++i) {
      dims[i] = options[i][rest % options[i].size()];
      rest /= options[i].size();
    }
    if (is_dimension_homomorphism(ring, dims)) return dims;
  }
  return std::nullopt;
}

}  // namespace

bool is_dimension_homomorphism(const FusionRing& ring, const std::vector<QuadraticInteger>& dims) {
  const std::size_t n = ring.rank();
  if (dims.size() != n) return false;
  for (const auto& v : dims) {
    if (!v.is_nonnegative() || v == QuadraticInteger{0, 0, v.d}) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      QuadraticInteger sum{0, 0, dims[i].d};
      for (const auto& [k, m] : ring.product(i, j)) sum = sum + dims[k] * m;
      if (!(sum == dims[i] * dims[j])) return false;
    }
  }
  return true;
}

FpDims fp_dims(const FusionRing& ring, int max_iterations, double tolerance) {
  const std::size_t n = ring.rank();
  // M[j][k] = sum_i N[i][j][k]; then M d = (sum d) d.
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m[j * n + k] += ring(i, j, k);
    }
  }
  std::vector<double> v(n, 1.0), next(n);
  bool converged = false;
  for (int it = 0; it < max_iterations; ++it) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < n; ++k) s += m[j * n + k] * v[k];
      next[j] = s;
    }
    const double scale = next[ring.unit];
    if (!(scale > 0)) throw NoConvergence("unit component of the iterate vanished");
    double delta = 0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= scale;
      delta = std::max(delta, std::abs(next[j] - v[j]) / std::max(1.0, std::abs(next[j])));
    }
    v.swap(next);
    if (delta < tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NoConvergence("power iteration did not reach " + std::to_string(tolerance));

  FpDims out;
  out.values = v;
  for (int d : {3, 2}) {
    if (auto exact = recognise(ring, v, d)) {
      out.exact = std::move(exact);
      break;
    }
  }
  return out;
}

}  // namespace modcat::fusion
