#include "modcat/fusion/ring.hpp"

#include <algorithm>
#include <sstream>

#include "modcat/errors.hpp"

namespace modcat::fusion {

namespace {

std::string triple(const FusionRing& r, std::size_t i, std::size_t j, std::size_t k) {
  return "N[" + r.labels[i] + "][" + r.labels[j] + "][" + r.labels[k] + "]";
}

CheckItem check_shape(const FusionRing& r) {
  const std::size_t n = r.rank();
  if (n == 0) return {"shape", false, "empty basis"};
  if (r.unit >= n) return {"shape", false, "unit index out of range"};
  if (r.dual.size() != n) return {"shape", false, "dual permutation has wrong length"};
  if (r.N.size() != n * n * n) return {"shape", false, "structure constant array has wrong length"};
  for (std::size_t i = 0; i < n; ++i) {
    if (r.dual[i] >= n || r.dual[r.dual[i]] != i) {
      return {"shape", false, "dual is not an involution at " + r.labels[i]};
    }
  }
  for (std::size_t t = 0; t < r.N.size(); ++t) {
    if (r.N[t] < 0) return {"shape", false, "negative structure constant"};
  }
  return {"shape", true, {}};
}

CheckItem check_unit(const FusionRing& r) {
  const std::size_t n = r.rank();
  const std::size_t u = r.unit;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int delta = i == j ? 1 : 0;
      if (r(u, i, j) != delta) return {"unit", false, triple(r, u, i, j) + " = " + std::to_string(r(u, i, j))};
      if (r(i, u, j) != delta) return {"unit", false, triple(r, i, u, j) + " = " + std::to_string(r(i, u, j))};
      const int dual_delta = j == r.dual[i] ? 1 : 0;
      if (r(i, j, u) != dual_delta) {
        return {"unit", false, triple(r, i, j, u) + " = " + std::to_string(r(i, j, u)) + ", dual of " + r.labels[i] +
                                   " is " + r.labels[r.dual[i]]};
      }
    }
  }
  return {"unit", true, {}};
}

CheckItem check_reciprocity(const FusionRing& r) {
  const std::size_t n = r.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int v = r(i, j, k);
        const int a = r(r.dual[i], k, j);
        const int b = r(k, r.dual[j], i);
        if (v != a || v != b) {
          std::ostringstream os;
          os << triple(r, i, j, k) << " = " << v << " but " << triple(r, r.dual[i], k, j) << " = " << a << ", "
             << triple(r, k, r.dual[j], i) << " = " << b;
          return {"reciprocity", false, os.str()};
        }
      }
    }
  }
  return {"reciprocity", true, {}};
}

CheckItem check_associativity(const FusionRing& r) {
  const std::size_t n = r.rank();
  std::vector<std::vector<std::pair<std::size_t, int>>> rows(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i * n + j] = r.product(i, j);
  }
  std::vector<long long> lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [m, a] : rows[i * n + j]) {
          for (const auto& [l, b] : rows[m * n + k]) lhs[l] += static_cast<long long>(a) * b;
        }
        for (const auto& [m, a] : rows[j * n + k]) {
          for (const auto& [l, b] : rows[i * n + m]) rhs[l] += static_cast<long long>(a) * b;
        }
        for (std::size_t l = 0; l < n; ++l) {
          if (lhs[l] != rhs[l]) {
            std::ostringstream os;
            os << "(" << r.labels[i] << "*" << r.labels[j] << ")*" << r.labels[k] << " has " << lhs[l] << " "
               << r.labels[l] << " but " << r.labels[i] << "*(" << r.labels[j] << "*" << r.labels[k] << ") has "
               << rhs[l];
            return {"associativity", false, os.str()};
          }
        }
      }
    }
  }
  return {"associativity", true, {}};
}

}  // namespace

FusionRing FusionRing::zeros(std::vector<std::string> labels, std::size_t unit, std::vector<std::size_t> dual) {
  FusionRing r;
  const std::size_t n = labels.size();
  r.labels = std::move(labels);
  r.unit = unit;
  r.dual = std::move(dual);
  r.N.assign(n * n * n, 0);
  return r;
}

std::optional<std::size_t> FusionRing::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FusionRing::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InvalidArgument("no basis element labelled '" + std::string(label) + "'");
}

std::vector<std::pair<std::size_t, int>> FusionRing::product(std::size_t i, std::size_t j) const {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (const int v = (*this)(i, j, k); v != 0) out.emplace_back(k, v);
  }
  return out;
}

std::string FusionRing::product_string(std::size_t i, std::size_t j) const {
  std::string out;
  for (const auto& [k, v] : product(i, j)) {
    if (!out.empty()) out += "+";
    if (v != 1) out += std::to_string(v);
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

bool FusionRing::is_invertible(std::size_t i) const {
  const auto p = product(i, dual[i]);
  return p.size() == 1 && p[0].first == unit && p[0].second == 1;
}

FusionRing FusionRing::permuted(const std::vector<std::size_t>& perm) const {
  const std::size_t n = rank();
  FusionRing out;
  out.labels = labels;
  out.unit = perm[unit];
  out.dual.assign(n, 0);
  out.N.assign(N.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.labels[perm[i]] = labels[i];
    out.dual[perm[i]] = perm[dual[i]];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(perm[i], perm[j], perm[k]) = (*this)(i, j, k);
    }
  }
  return out;
}

CheckReport verify_ring(const FusionRing& ring) {
  CheckReport report;
  const CheckItem shape = check_shape(ring);
  report.items.push_back(shape);
  if (!shape.passed) return report;
  report.items.push_back(check_unit(ring));
  report.items.push_back(check_reciprocity(ring));
  report.items.push_back(check_associativity(ring));
  return report;
}

bool is_commutative(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ring(i, j, k) != ring(j, i, k)) return false;
      }
    }
  }
  return true;
}

FusionRing cyclic_group_ring(int n) {
  if (n < 1) throw InvalidArgument("group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "I" : a == 1 ? "g" : "g^" + std::to_string(a));
    dual.push_back(static_cast<std::size_t>((n - a) % n));
  }
  FusionRing r = FusionRing::zeros(std::move(labels), 0, std::move(dual));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) r(a, b, (a + b) % n) = 1;
  }
  return r;
}

std::optional<NearGroupType> near_group_recognize(const FusionRing& ring) {
  const std::size_t n = ring.rank();
  std::vector<std::size_t> invertible;
  std::optional<std::size_t> x;
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.is_invertible(i)) {
      invertible.push_back(i);
    } else if (x) {
      return std::nullopt;
    } else {
      x = i;
    }
  }
  if (!x) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k) {
    const int v = ring(*x, *x, k);
    if (k == *x) continue;
    if (v != 1) return std::nullopt;  // every invertible exactly once
  }
  return NearGroupType{invertible.size(), ring(*x, *x, *x)};
}

}  // namespace modcat::fusion
