#include "modcat/fusion/modular.hpp"

#include <cmath>
#include <complex>

#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"

namespace modcat::fusion {

namespace {

// Inverse of a twist; roots of unity are inverted by conjugation.
CycNum twist_inverse(const CycNum& t) {
  const CycNum c = t.conj();
  if (t * c == CycNum(1)) return c;
  return t.inverse();
}

// Float-embedded S is numerically nonsingular (partial pivoting).
bool numerically_nonsingular(const Matrix& S) {
  const std::size_t n = S.size();
  std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(n));
  double scale = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = S[i][j].embed();
      scale = std::max(scale, std::abs(a[i][j]));
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-9 * scale) return false;
    std::swap(a[p], a[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const auto f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return true;
}

}  // namespace

CycNum ModularData::global_dimension() const {
  CycNum total;
  for (const auto& d : dims) total += d * d;
  return total;
}

PointedData cyclic_quadratic_form(int n, const CycNum& eta_generator) {
  PointedData p;
  p.order = n;
  CycNum power(1);
  std::vector<CycNum> powers;  // eta_g^m for m = 0 .. n^2
  for (int m = 0; m <= (n - 1) * (n - 1); ++m) {
    powers.push_back(power);
    power *= eta_generator;
  }
  for (int a = 0; a < n; ++a) p.eta.push_back(powers[static_cast<std::size_t>(a * a)]);
  return p;
}

ModularData pointed_modular_data(const PointedData& pointed) {
  if (static_cast<int>(pointed.eta.size()) != pointed.order) throw InvalidArgument("quadratic form has wrong length");
  ModularData md;
  md.ring = cyclic_group_ring(pointed.order);
  md.dims.assign(pointed.order, CycNum(1));
  md.twists = pointed.eta;
  md.S = balancing_S(md.ring, md.dims, md.twists);
  return md;
}

Matrix balancing_S(const FusionRing& ring, const std::vector<CycNum>& dims, const std::vector<CycNum>& twists) {
  const std::size_t n = ring.rank();
  if (dims.size() != n || twists.size() != n) throw InvalidArgument("balancing_S: dims/twists length mismatch");
  std::vector<CycNum> dim_twist(n), inv_twist(n);
  for (std::size_t z = 0; z < n; ++z) {
    dim_twist[z] = dims[z] * twists[z];
    inv_twist[z] = twist_inverse(twists[z]);
  }
  Matrix S(n, std::vector<CycNum>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      CycNum sum;
      for (const auto& [z, mult] : ring.product(x, y)) sum += CycNum(mult) * dim_twist[z];
      S[x][y] = inv_twist[x] * inv_twist[y] * sum;
    }
  }
  return S;
}

std::vector<int> verlinde(const ModularData& md) {
  const std::size_t n = md.rank();
  const std::size_t u = md.ring.unit;
  for (std::size_t m = 0; m < n; ++m) {
    if (md.S[u][m].is_zero()) throw SingularS("S[unit][" + md.ring.labels[m] + "] vanishes");
  }
  if (!numerically_nonsingular(md.S)) throw SingularS("S-matrix is degenerate");
  const CycNum inv_d = md.global_dimension().inverse();

  // Q[k][m] = conj(S[k][m]) / (D * S[unit][m])
  std::vector<CycNum> inv_unit_row(n);
  for (std::size_t m = 0; m < n; ++m) inv_unit_row[m] = md.S[u][m].inverse() * inv_d;
  Matrix q(n, std::vector<CycNum>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) q[k][m] = md.S[k][m].conj() * inv_unit_row[m];
  }

  std::vector<int> out(n * n * n, 0);
  std::vector<CycNum> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) r[m] = md.S[i][m] * md.S[j][m];
      for (std::size_t k = 0; k < n; ++k) {
        CycNum acc;
        for (std::size_t m = 0; m < n; ++m) acc += r[m] * q[k][m];
        const auto v = acc.as_nonnegative_integer();
        if (!v) {
          throw NonIntegerOutcome("N[" + md.ring.labels[i] + "][" + md.ring.labels[j] + "][" + md.ring.labels[k] +
                                  "] = " + exact::render(acc));
        }
        out[(i * n + j) * n + k] = static_cast<int>(*v);
      }
    }
  }
  return out;
}

std::pair<CycNum, CycNum> gauss_sums(const ModularData& md) {
  CycNum plus, minus;
  for (std::size_t i = 0; i < md.rank(); ++i) {
    const CycNum d2 = md.dims[i] * md.dims[i];
    plus += d2 * md.twists[i];
    minus += d2 * twist_inverse(md.twists[i]);
  }
  return {plus, minus};
}

CheckReport verify_modular(const ModularData& md) {
  CheckReport report;
  const std::size_t n = md.rank();
  const std::size_t u = md.ring.unit;
  const auto& labels = md.ring.labels;

  if (md.dims.size() != n || md.twists.size() != n || md.S.size() != n) {
    report.add("shape", false, "dims, twists or S do not match the rank");
    return report;
  }

  std::string detail;
  bool ok = md.dims[u] == CycNum(1);
  if (!ok) detail = "dim of unit is " + exact::render(md.dims[u]);
  for (std::size_t i = 0; ok && i < n; ++i) {
    if (!(md.dims[i] == md.dims[md.ring.dual[i]])) {
      ok = false;
      detail = "dim(" + labels[i] + ") differs from its dual";
    }
  }
  report.add("dimensions", ok, detail);

  ok = true;
  detail.clear();
  for (std::size_t i = 0; ok && i < n; ++i) {
    for (std::size_t j = i + 1; ok && j < n; ++j) {
      if (!(md.S[i][j] == md.S[j][i])) {
        ok = false;
        detail = "S[" + labels[i] + "][" + labels[j] + "] != S[" + labels[j] + "][" + labels[i] + "]";
      }
    }
  }
  report.add("S symmetric", ok, detail);

  ok = true;
  detail.clear();
  for (std::size_t i = 0; ok && i < n; ++i) {
    if (!(md.S[u][i] == md.dims[i])) {
      ok = false;
      detail = "S[unit][" + labels[i] + "] = " + exact::render(md.S[u][i]) + ", dim = " + exact::render(md.dims[i]);
    }
  }
  report.add("unit row equals dims", ok, detail);

  const CycNum D = md.global_dimension();
  ok = true;
  detail.clear();
  Matrix conj_s(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) conj_s[i][j] = md.S[i][j].conj();
  }
  for (std::size_t i = 0; ok && i < n; ++i) {
    for (std::size_t j = 0; ok && j < n; ++j) {
      CycNum acc;
      for (std::size_t m = 0; m < n; ++m) acc += md.S[i][m] * conj_s[m][j];
      const CycNum expected = i == j ? D : CycNum(0);
      if (!(acc == expected)) {
        ok = false;
        detail = "(S conj S)[" + labels[i] + "][" + labels[j] + "] = " + exact::render(acc) + ", D = " + exact::render(D);
      }
    }
  }
  report.add("S conj(S) = D Id", ok, detail);
  const bool nondegenerate = ok;

  if (!nondegenerate) {
    report.add("Verlinde", false, "skipped: S is degenerate");
  } else {
    try {
      const auto n2 = verlinde(md);
      if (n2 == md.ring.N) {
        report.add("Verlinde", true);
      } else {
        for (std::size_t t = 0; t < n2.size(); ++t) {
          if (n2[t] != md.ring.N[t]) {
            const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
            report.add("Verlinde", false,
                       "N[" + labels[i] + "][" + labels[j] + "][" + labels[k] + "]: Verlinde gives " +
                           std::to_string(n2[t]) + ", ring has " + std::to_string(md.ring.N[t]));
            break;
          }
        }
      }
    } catch (const Error& e) {
      report.add("Verlinde", false, e.what());
    }
  }

  const auto [plus, minus] = gauss_sums(md);
  const CycNum prod = plus * minus;
  report.add("Gauss sums", prod == D, "p+ p- = " + exact::render(prod) + ", D = " + exact::render(D));
  return report;
}

ModularData deligne_product(const ModularData& a, const ModularData& b) {
  const std::size_t na = a.rank(), nb = b.rank(), n = na * nb;
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back(a.ring.labels[i] + "⊠" + b.ring.labels[j]);
      dual.push_back(a.ring.dual[i] * nb + b.ring.dual[j]);
    }
  }
  ModularData md;
  md.ring = FusionRing::zeros(std::move(labels), a.ring.unit * nb + b.ring.unit, std::move(dual));
  for (std::size_t i1 = 0; i1 < na; ++i1) {
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const auto pa = a.ring.product(i1, j1);
      for (std::size_t i2 = 0; i2 < nb; ++i2) {
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const auto pb = b.ring.product(i2, j2);
          for (const auto& [k1, m1] : pa) {
            for (const auto& [k2, m2] : pb) md.ring(i1 * nb + i2, j1 * nb + j2, k1 * nb + k2) = m1 * m2;
          }
        }
      }
    }
  }
  md.dims.reserve(n);
  md.twists.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      md.dims.push_back(a.dims[i] * b.dims[j]);
      md.twists.push_back(a.twists[i] * b.twists[j]);
    }
  }
  md.S.assign(n, std::vector<CycNum>(n));
  for (std::size_t i1 = 0; i1 < na; ++i1) {
    for (std::size_t i2 = 0; i2 < nb; ++i2) {
      for (std::size_t j1 = 0; j1 < na; ++j1) {
        for (std::size_t j2 = 0; j2 < nb; ++j2) md.S[i1 * nb + i2][j1 * nb + j2] = a.S[i1][j1] * b.S[i2][j2];
      }
    }
  }
  return md;
}

TrivialTwists count_trivial_twists(const ModularData& md) {
  TrivialTwists out;
  for (std::size_t i = 0; i < md.rank(); ++i) {
    if (md.twists[i] == CycNum(1)) {
      ++out.count;
      out.labels.push_back(md.ring.labels[i]);
    }
  }
  return out;
}

}  // namespace modcat::fusion
