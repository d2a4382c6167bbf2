#include "modcat/wzw/wzw.hpp"

#include <map>

#include "modcat/errors.hpp"

namespace modcat::wzw {

namespace {

bool is_a2(const AlgebraSpec& spec) { return spec.rank_type == RankType::A2; }

void require_in_alcove(const AlgebraSpec& spec, const LevelWeight& w) {
  if (!in_alcove(spec, w)) {
    throw OutOfAlcove(label(spec, w) + " is not in the level " + std::to_string(spec.level) + " alcove");
  }
}

// Reflect a shifted weight into the open dominant chamber; returns the sign,
// or 0 when it lies on a wall. With `affine`, also folds through the wall
// a1 + a2 = K (A2) or a = K (A1).
int reflect(const AlgebraSpec& spec, LevelWeight& a, bool affine) {
  const int K = spec.level + (is_a2(spec) ? 3 : 2);
  int sign = 1;
  if (!is_a2(spec)) {
    while (true) {
      if (a.m1 == 0 || (affine && a.m1 == K)) return 0;
      if (a.m1 < 0) {
        a.m1 = -a.m1;
      } else if (affine && a.m1 > K) {
        a.m1 = 2 * K - a.m1;
      } else {
        return sign;
      }
      sign = -sign;
    }
  }
  while (true) {
    if (a.m1 == 0 || a.m2 == 0 || (affine && a.m1 + a.m2 == K)) return 0;
    if (a.m1 < 0) {
      a = {-a.m1, a.m1 + a.m2};
    } else if (a.m2 < 0) {
      a = {a.m1 + a.m2, -a.m2};
    } else if (affine && a.m1 + a.m2 > K) {
      a = {K - a.m2, K - a.m1};
    } else {
      return sign;
    }
    sign = -sign;
  }
}

long long dimension_of(const AlgebraSpec& spec, const LevelWeight& w) {
  if (!is_a2(spec)) return w.m1 + 1;
  return static_cast<long long>(w.m1 + 1) * (w.m2 + 1) * (w.m1 + w.m2 + 2) / 2;
}

std::vector<std::pair<LevelWeight, int>> collect(const std::map<LevelWeight, int>& acc) {
  std::vector<std::pair<LevelWeight, int>> out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw ConsistencyError("negative multiplicity in tensor decomposition");
    if (m > 0) out.emplace_back(w, m);
  }
  return out;
}

}  // namespace

std::string algebra_name(RankType type) { return type == RankType::A2 ? "sl3" : "sl2"; }

std::string label(const AlgebraSpec& spec, const LevelWeight& w) {
  if (!is_a2(spec)) return "(" + std::to_string(w.m1) + ")";
  return "(" + std::to_string(w.m1) + "," + std::to_string(w.m2) + ")";
}

void validate(const AlgebraSpec& spec) {
  if (spec.level < 1) throw InvalidArgument("level must be at least 1");
}

bool in_alcove(const AlgebraSpec& spec, const LevelWeight& w) {
  if (!is_a2(spec)) return w.m2 == 0 && w.m1 >= 0 && w.m1 <= spec.level;
  return w.m1 >= 0 && w.m2 >= 0 && w.m1 + w.m2 <= spec.level;
}

std::vector<LevelWeight> alcove(const AlgebraSpec& spec) {
  validate(spec);
  std::vector<LevelWeight> out;
  for (int m1 = 0; m1 <= spec.level; ++m1) {
    if (!is_a2(spec)) {
      out.push_back({m1, 0});
      continue;
    }
    for (int m2 = 0; m1 + m2 <= spec.level; ++m2) out.push_back({m1, m2});
  }
  return out;
}

CycNum qdim(const AlgebraSpec& spec, const LevelWeight& w) {
  validate(spec);
  require_in_alcove(spec, w);
  if (!is_a2(spec)) {
    const int K = spec.level + 2;
    return (exact::sin_pi(w.m1 + 1, K) / exact::sin_pi(1, K)).minimized();
  }
  const int K = spec.level + 3;
  const CycNum s1 = exact::sin_pi(1, K);
  const CycNum num = exact::sin_pi(w.m1 + 1, K) * exact::sin_pi(w.m2 + 1, K) * exact::sin_pi(w.m1 + w.m2 + 2, K);
  return (num / (exact::sin_pi(2, K) * s1 * s1)).minimized();
}

std::pair<long long, long long> twist_exponent(const AlgebraSpec& spec, const LevelWeight& w) {
  validate(spec);
  require_in_alcove(spec, w);
  long long p = 0, q = 0;
  if (is_a2(spec)) {
    p = 1LL * w.m1 * w.m1 + 3LL * w.m1 + 1LL * w.m1 * w.m2 + 3LL * w.m2 + 1LL * w.m2 * w.m2;
    q = 3LL * (spec.level + 3);
  } else {
    p = 1LL * w.m1 * (w.m1 + 2);
    q = 4LL * (spec.level + 2);
  }
  p %= q;
  const long long g = exact::gcd_ll(p, q);
  if (p == 0) return {0, 1};
  return {p / g, q / g};
}

CycNum twist(const AlgebraSpec& spec, const LevelWeight& w) {
  const auto [p, q] = twist_exponent(spec, w);
  return CycNum::root_of_unity(static_cast<int>(q), p);
}

std::vector<std::pair<LevelWeight, int>> weight_multiset(const AlgebraSpec& spec, const LevelWeight& w) {
  std::map<LevelWeight, int> acc;
  if (!is_a2(spec)) {
    for (int m = w.m1; m >= -w.m1; m -= 2) ++acc[{m, 0}];
    return collect(acc);
  }
  const int a = w.m1, b = w.m2;
  // Gelfand-Tsetlin patterns with top row (a+b, b, 0).
  for (int x = b; x <= a + b; ++x) {
    for (int y = 0; y <= b; ++y) {
      for (int z = y; z <= x; ++z) {
        const int w1 = z, w2 = x + y - z, w3 = a + 2 * b - x - y;
        ++acc[{w1 - w2, w2 - w3}];
      }
    }
  }
  return collect(acc);
}

std::vector<std::pair<LevelWeight, int>> classical_tensor(const AlgebraSpec& spec, const LevelWeight& a,
                                                          const LevelWeight& b) {
  const bool a_smaller = dimension_of(spec, a) <= dimension_of(spec, b);
  const LevelWeight& small = a_smaller ? a : b;
  const LevelWeight& big = a_smaller ? b : a;
  std::map<LevelWeight, int> acc;
  for (const auto& [mu, mult] : weight_multiset(spec, small)) {
    LevelWeight s{big.m1 + mu.m1 + 1, is_a2(spec) ? big.m2 + mu.m2 + 1 : 0};
    const int sign = reflect(spec, s, false);
    if (sign == 0) continue;
    acc[{s.m1 - 1, is_a2(spec) ? s.m2 - 1 : 0}] += sign * mult;
  }
  return collect(acc);
}

std::vector<std::pair<LevelWeight, int>> fuse(const AlgebraSpec& spec, const LevelWeight& a, const LevelWeight& b) {
  validate(spec);
  require_in_alcove(spec, a);
  require_in_alcove(spec, b);
  std::map<LevelWeight, int> acc;
  for (const auto& [lambda, mult] : classical_tensor(spec, a, b)) {
    LevelWeight s{lambda.m1 + 1, is_a2(spec) ? lambda.m2 + 1 : 0};
    const int sign = reflect(spec, s, true);
    if (sign == 0) continue;
    acc[{s.m1 - 1, is_a2(spec) ? s.m2 - 1 : 0}] += sign * mult;
  }
  return collect(acc);
}

std::vector<LevelWeight> simple_currents(const AlgebraSpec& spec) {
  std::vector<LevelWeight> out;
  for (const auto& w : alcove(spec)) {
    if (qdim(spec, w) == CycNum(1)) out.push_back(w);
  }
  return out;
}

LevelWeight current_action(const AlgebraSpec& spec, const LevelWeight& J, const LevelWeight& w) {
  require_in_alcove(spec, J);
  if (!(qdim(spec, J) == CycNum(1))) throw NotASimpleCurrent(label(spec, J) + " has quantum dimension != 1");
  const auto product = fuse(spec, J, w);
  if (product.size() != 1 || product[0].second != 1) {
    throw NotASimpleCurrent(label(spec, J) + " does not act by a permutation on " + label(spec, w));
  }
  return product[0].first;
}

LevelWeight dual(const AlgebraSpec& spec, const LevelWeight& w) {
  if (!is_a2(spec)) return w;
  return {w.m2, w.m1};
}

bool in_root_lattice(const LevelWeight& w) { return (w.m1 - w.m2) % 3 == 0; }

fusion::FusionRing fusion_ring(const AlgebraSpec& spec) {
  const auto weights = alcove(spec);
  const std::size_t n = weights.size();
  std::map<LevelWeight, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    index[weights[i]] = i;
    labels.push_back(label(spec, weights[i]));
  }
  std::vector<std::size_t> duals;
  for (const auto& w : weights) duals.push_back(index.at(dual(spec, w)));
  auto ring = fusion::FusionRing::zeros(std::move(labels), 0, std::move(duals));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (const auto& [w, m] : fuse(spec, weights[i], weights[j])) {
        ring(i, j, index.at(w)) = m;
        ring(j, i, index.at(w)) = m;
      }
    }
  }
  return ring;
}

fusion::ModularData modular_data(const AlgebraSpec& spec) {
  fusion::ModularData md;
  md.ring = fusion_ring(spec);
  for (const auto& w : alcove(spec)) {
    md.dims.push_back(qdim(spec, w));
    md.twists.push_back(twist(spec, w));
  }
  md.S = fusion::balancing_S(md.ring, md.dims, md.twists);
  return md;
}

}  // namespace modcat::wzw
