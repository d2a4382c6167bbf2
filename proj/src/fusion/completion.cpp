#include "modcat/fusion/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "modcat/errors.hpp"
#include "modcat/fusion/fpdim.hpp"

namespace modcat::fusion {

namespace {

constexpr double kEps = 1e-7;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Constraint {
  std::vector<std::pair<std::size_t, double>> vars;  // (variable, coefficient)
  double rhs = 0;
  double assigned = 0;
  double slack = 0;  // sum of coefficient * upper bound over unassigned
};

class Search {
 public:
  Search(const CompletionProblem& p, const std::vector<std::size_t>& dual) : p_(p), dual_(dual), n_(p.labels.size()) {}

  // Returns false when the dual candidate is infeasible before search.
  bool setup() {
    const std::size_t n = n_, n3 = n * n * n;
    ring_ = FusionRing::zeros(p_.labels, p_.unit, dual_);
    std::vector<int> fixed(n3, -1);
    auto fix = [&](std::size_t t, int v) {
      if (fixed[t] >= 0 && fixed[t] != v) return false;
      fixed[t] = v;
      return true;
    };
    if (!p_.known.empty()) {
      for (std::size_t t = 0; t < n3; ++t) {
        if (p_.known[t] >= 0 && !fix(t, p_.known[t])) return false;
      }
    }
    const std::size_t u = p_.unit;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!fix(ring_.offset(u, i, j), i == j ? 1 : 0)) return false;
        if (!fix(ring_.offset(i, u, j), i == j ? 1 : 0)) return false;
        if (!fix(ring_.offset(i, j, u), j == dual_[i] ? 1 : 0)) return false;
      }
    }

    UnionFind uf(n3);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t t = ring_.offset(i, j, k);
          uf.unite(t, ring_.offset(dual_[i], k, j));
          uf.unite(t, ring_.offset(k, dual_[j], i));
          if (p_.commutative) uf.unite(t, ring_.offset(j, i, k));
        }
      }
    }

    // Classes: fixed value or a fresh variable.
    std::vector<int> class_value(n3, -1);
    for (std::size_t t = 0; t < n3; ++t) {
      if (fixed[t] < 0) continue;
      const std::size_t r = uf.find(t);
      if (class_value[r] >= 0 && class_value[r] != fixed[t]) return false;
      class_value[r] = fixed[t];
    }
    std::vector<std::size_t> var_of_root(n3, kNone);
    var_of_entry_.assign(n3, kNone);
    for (std::size_t t = 0; t < n3; ++t) {
      const std::size_t r = uf.find(t);
      if (class_value[r] >= 0) {
        ring_.N[t] = class_value[r];
        continue;
      }
      if (var_of_root[r] == kNone) {
        var_of_root[r] = members_.size();
        members_.emplace_back();
      }
      var_of_entry_[t] = var_of_root[r];
      members_[var_of_root[r]].push_back(t);
    }
    const std::size_t nv = members_.size();

    // Upper bounds from N[i][j][k] d_k <= d_i d_j.
    std::vector<double> dim(n, 1.0);
    if (!p_.dims.empty()) {
      for (std::size_t i = 0; i < n; ++i) dim[i] = p_.dims[i].value();
    }
    upper_.assign(nv, p_.max_value);
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t t : members_[v]) {
        const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
        if (!p_.dims.empty()) {
          const int b = static_cast<int>(std::floor(dim[i] * dim[j] / dim[k] + kEps));
          upper_[v] = std::min(upper_[v], b);
        }
      }
    }

    // Variable order, and the order in which each variable's values are tried.
    order_.resize(nv);
    std::iota(order_.begin(), order_.end(), 0);
    values_.assign(nv, {});
    std::mt19937_64 rng(p_.seed);
    for (std::size_t v = 0; v < nv; ++v) {
      values_[v].resize(static_cast<std::size_t>(std::max(upper_[v] + 1, 0)));
      std::iota(values_[v].begin(), values_[v].end(), 0);
      if (p_.seed != 0) std::shuffle(values_[v].begin(), values_[v].end(), rng);
    }
    position_.assign(nv, 0);
    for (std::size_t pos = 0; pos < nv; ++pos) position_[order_[pos]] = pos;

    // Linear constraints: family sums and dimension rows.
    auto add_constraint = [&](const std::vector<std::pair<std::size_t, double>>& terms, double rhs) {
      Constraint c;
      c.rhs = rhs;
      std::vector<double> coef(nv, 0.0);
      std::vector<std::size_t> touched;
      for (const auto& [t, w] : terms) {
        if (w < 0) throw InvalidArgument("negative coefficient in a linear constraint");
        if (var_of_entry_[t] == kNone) {
          c.rhs -= w * ring_.N[t];
        } else {
          const std::size_t v = var_of_entry_[t];
          if (coef[v] == 0.0) touched.push_back(v);
          coef[v] += w;
        }
      }
      for (std::size_t v : touched) {
        c.vars.emplace_back(v, coef[v]);
        c.slack += coef[v] * upper_[v];
      }
      if (c.rhs < -kEps || c.slack < c.rhs - kEps) return false;
      if (c.vars.empty()) return std::abs(c.rhs) < kEps;
      for (const auto& [v, w] : c.vars) touching_[v].push_back(constraints_.size());
      constraints_.push_back(std::move(c));
      return true;
    };
    touching_.assign(nv, {});
    for (const auto& lc : p_.linear) {
      std::vector<std::pair<std::size_t, double>> terms;
      for (const auto& [t, w] : lc.terms) terms.emplace_back(t, static_cast<double>(w));
      if (!add_constraint(terms, lc.rhs)) return false;
    }
    if (!p_.dims.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<std::pair<std::size_t, double>> terms;
          for (std::size_t k = 0; k < n; ++k) terms.emplace_back(ring_.offset(i, j, k), dim[k]);
          if (!add_constraint(terms, dim[i] * dim[j])) return false;
        }
      }
    }

    // Associativity equations keyed by the last variable (in search order).
    triggered_.assign(nv, {});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            std::size_t last = kNone;
            auto see = [&](std::size_t t) {
              const std::size_t v = var_of_entry_[t];
              if (v != kNone && (last == kNone || position_[v] > position_[last])) last = v;
            };
            for (std::size_t m = 0; m < n; ++m) {
              see(ring_.offset(i, j, m));
              see(ring_.offset(m, k, l));
              see(ring_.offset(j, k, m));
              see(ring_.offset(i, m, l));
            }
            const Assoc eq{i, j, k, l};
            if (last == kNone) {
              if (!holds(eq)) return false;
            } else {
              triggered_[last].push_back(eq);
            }
          }
        }
      }
    }
    return true;
  }

  std::size_t variables() const { return members_.size(); }

  void run(std::vector<FusionRing>& found, std::size_t& raw, std::size_t& nodes) {
    found_ = &found;
    raw_ = &raw;
    nodes_ = &nodes;
    descend(0);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Assoc {
    std::size_t i, j, k, l;
  };

  bool holds(const Assoc& e) const {
    long long lhs = 0, rhs = 0;
    for (std::size_t m = 0; m < n_; ++m) {
      lhs += static_cast<long long>(ring_(e.i, e.j, m)) * ring_(m, e.k, e.l);
      rhs += static_cast<long long>(ring_(e.j, e.k, m)) * ring_(e.i, m, e.l);
    }
    return lhs == rhs;
  }

  bool done() const { return p_.max_solutions != 0 && *raw_ >= p_.max_solutions; }

  void assign(std::size_t v, int value) {
    for (std::size_t t : members_[v]) ring_.N[t] = value;
  }

  void descend(std::size_t pos) {
    if (done()) return;
    ++*nodes_;
    if (pos == order_.size()) {
      leaf();
      return;
    }
    const std::size_t v = order_[pos];
    for (const int value : values_[v]) {
      assign(v, value);
      bool ok = true;
      std::size_t applied = 0;
      for (; applied < touching_[v].size(); ++applied) {
        Constraint& c = constraints_[touching_[v][applied]];
        const double w = coefficient(c, v);
        c.assigned += w * value;
        c.slack -= w * upper_[v];
        if (c.assigned > c.rhs + kEps || c.assigned + c.slack < c.rhs - kEps) {
          ++applied;
          ok = false;
          break;
        }
      }
      if (ok) {
        for (const auto& eq : triggered_[v]) {
          if (!holds(eq)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) descend(pos + 1);
      for (std::size_t a = 0; a < applied; ++a) {
        Constraint& c = constraints_[touching_[v][a]];
        const double w = coefficient(c, v);
        c.assigned -= w * value;
        c.slack += w * upper_[v];
      }
      if (done()) break;
    }
    assign(v, 0);
  }

  static double coefficient(const Constraint& c, std::size_t v) {
    for (const auto& [u, w] : c.vars) {
      if (u == v) return w;
    }
    return 0.0;
  }

  void leaf() {
    if (!verify_ring(ring_).passed()) return;
    if (!p_.dims.empty() && !is_dimension_homomorphism(ring_, p_.dims)) return;
    ++*raw_;
    found_->push_back(canonical_form(ring_, p_.relabelings));
  }

  const CompletionProblem& p_;
  const std::vector<std::size_t>& dual_;
  std::size_t n_;
  FusionRing ring_;
  std::vector<std::size_t> var_of_entry_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<int> upper_;
  std::vector<std::size_t> order_, position_;
  std::vector<std::vector<int>> values_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::vector<Assoc>> triggered_;
  std::vector<FusionRing>* found_ = nullptr;
  std::size_t* raw_ = nullptr;
  std::size_t* nodes_ = nullptr;
};

bool ring_less(const FusionRing& a, const FusionRing& b) {
  if (a.dual != b.dual) return a.dual < b.dual;
  return a.N < b.N;
}

}  // namespace

FusionRing canonical_form(const FusionRing& ring, const std::vector<std::vector<std::size_t>>& relabelings) {
  FusionRing best = ring;
  for (const auto& perm : relabelings) {
    FusionRing candidate = ring.permuted(perm);
    candidate.labels = ring.labels;
    if (ring_less(candidate, best)) best = std::move(candidate);
  }
  return best;
}

std::vector<std::vector<std::size_t>> class_preserving_involutions(const std::vector<int>& classes, std::size_t unit) {
  const std::size_t n = classes.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n, n);
  perm[unit] = unit;
  // Pair off the first unassigned index with itself or a later one.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    while (i < n && perm[i] != n) ++i;
    if (i == n) {
      out.push_back(perm);
      return;
    }
    perm[i] = i;
    self(self, i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (perm[j] != n || classes[j] != classes[i]) continue;
      perm[i] = j;
      perm[j] = i;
      self(self, i + 1);
      perm[j] = n;
    }
    perm[i] = n;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

CompletionResult complete_ring(const CompletionProblem& problem) {
  const std::size_t n = problem.labels.size();
  if (n == 0) throw InvalidArgument("empty basis");
  if (problem.unit >= n) throw InvalidArgument("unit out of range");
  if (!problem.known.empty() && problem.known.size() != n * n * n) throw InvalidArgument("known array has wrong size");
  if (!problem.dims.empty() && problem.dims.size() != n) throw InvalidArgument("dims have wrong length");
  for (const auto& perm : problem.relabelings) {
    if (perm.size() != n) throw InvalidArgument("relabeling has wrong length");
  }

  CompletionResult result;
  std::vector<FusionRing> found;
  for (const auto& dual : problem.dual_candidates) {
    if (dual.size() != n || dual[problem.unit] != problem.unit) throw InvalidArgument("bad dual candidate");
    for (std::size_t i = 0; i < n; ++i) {
      if (dual[i] >= n || dual[dual[i]] != i) throw InvalidArgument("dual candidate is not an involution");
    }
    Search search(problem, dual);
    if (!search.setup()) continue;
    result.variables = std::max(result.variables, search.variables());
    search.run(found, result.raw_solutions, result.nodes);
    if (problem.max_solutions != 0 && result.raw_solutions >= problem.max_solutions) break;
  }
  std::sort(found.begin(), found.end(), ring_less);
  found.erase(std::unique(found.begin(), found.end(),
                          [](const FusionRing& a, const FusionRing& b) { return a.dual == b.dual && a.N == b.N; }),
              found.end());
  result.solutions = std::move(found);
  return result;
}

}  // namespace modcat::fusion
