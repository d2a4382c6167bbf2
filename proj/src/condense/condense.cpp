#include "modcat/condense/condense.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/fusion/dimension_search.hpp"
#include "modcat/fusion/fpdim.hpp"

namespace modcat::condense {

using exact::CycNum;
using fusion::FusionRing;
using fusion::QuadraticInteger;

namespace {

std::string wlabel(const AlgebraSpec& spec, const LevelWeight& w) { return wzw::label(spec, w); }

// Display key: least m1 + m2, ties broken by larger m1.
bool display_less(const LevelWeight& a, const LevelWeight& b) {
  if (a.m1 + a.m2 != b.m1 + b.m2) return a.m1 + a.m2 < b.m1 + b.m2;
  return a.m1 > b.m1;
}

LevelWeight display_member(const std::vector<LevelWeight>& orbit) {
  return *std::min_element(orbit.begin(), orbit.end(), display_less);
}

void require_etale(const AlgebraSpec& spec) {
  const CheckReport r = etale_check(spec);
  if (!r.passed()) throw PreconditionFailed(r.first_failure()->detail);
}

// All permutations of `family` positions, as permutations of 0..n-1.
std::vector<std::vector<std::size_t>> family_permutations(std::size_t n, const std::vector<std::size_t>& family) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image = family;
  std::sort(image.begin(), image.end());
  do {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t t = 0; t < family.size(); ++t) perm[family[t]] = image[t];
    out.push_back(std::move(perm));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Permutations fixing index 0 and preserving the dimension classes.
std::vector<std::vector<std::size_t>> class_permutations(const std::vector<int>& classes) {
  const std::size_t n = classes.size();
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 1; i < n; ++i) groups[classes[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  out.push_back(identity);
  for (const auto& [cls, members] : groups) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : out) {
      std::vector<std::size_t> image = members;
      do {
        std::vector<std::size_t> perm = base;
        for (std::size_t t = 0; t < members.size(); ++t) perm[members[t]] = image[t];
        next.push_back(std::move(perm));
      } while (std::next_permutation(image.begin(), image.end()));
    }
    out = std::move(next);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

CheckReport etale_check(const AlgebraSpec& spec) {
  CheckReport report;
  if (spec.rank_type != wzw::RankType::A2) {
    report.add("sl3", false, "condensation is defined for sl3 only");
    return report;
  }
  wzw::validate(spec);
  if (spec.level % 3 != 0) {
    report.add("level divisible by 3", false, "level not divisible by 3");
    return report;
  }
  report.add("level divisible by 3", true);
  const int k = spec.level;
  for (const LevelWeight& J : {LevelWeight{k, 0}, LevelWeight{0, k}}) {
    const CycNum t = wzw::twist(spec, J);
    report.add("twist of " + wlabel(spec, J), t == CycNum(1), "twist " + exact::render(t));
  }
  return report;
}

OrbitPartition orbits(const AlgebraSpec& spec) {
  require_etale(spec);
  const LevelWeight J{spec.level, 0};
  OrbitPartition out;
  std::set<LevelWeight> seen;
  for (const auto& w : wzw::alcove(spec)) {
    if (seen.contains(w)) continue;
    std::vector<LevelWeight> orbit{w};
    for (LevelWeight x = wzw::current_action(spec, J, w); x != w; x = wzw::current_action(spec, J, x)) {
      orbit.push_back(x);
      if (orbit.size() > 3) throw ConsistencyError("current action has order > 3");
    }
    for (const auto& x : orbit) seen.insert(x);
    std::sort(orbit.begin(), orbit.end());
    if (orbit.size() == 1) {
      out.fixed_points.push_back(w);
    } else if (orbit.size() == 3) {
      out.free_orbits.push_back(std::move(orbit));
    } else {
      throw ConsistencyError("orbit of size " + std::to_string(orbit.size()) + " at " + wlabel(spec, w));
    }
  }
  return out;
}

std::vector<CondensedSimple> local_simples(const AlgebraSpec& spec) {
  const OrbitPartition part = orbits(spec);
  std::vector<CondensedSimple> orbit_simples;
  for (const auto& orbit : part.free_orbits) {
    const bool root = wzw::in_root_lattice(orbit[0]);
    bool constant = true;
    const CycNum t0 = wzw::twist(spec, orbit[0]);
    for (const auto& w : orbit) {
      if (wzw::in_root_lattice(w) != root) throw ConsistencyError("root-lattice test varies on an orbit");
      constant = constant && wzw::twist(spec, w) == t0;
    }
    if (root != constant) {
      throw ConsistencyError("root-lattice test and twist constancy disagree on the orbit of " + wlabel(spec, orbit[0]));
    }
    if (!root) continue;
    CondensedSimple s;
    s.label = {CondensedLabel::Kind::orbit, orbit[0], 0};
    s.display = display_member(orbit);
    s.ambient = orbit;
    s.dim = wzw::qdim(spec, s.display);
    s.twist = wzw::twist(spec, s.display);
    orbit_simples.push_back(std::move(s));
  }
  std::sort(orbit_simples.begin(), orbit_simples.end(),
            [](const CondensedSimple& a, const CondensedSimple& b) { return display_less(a.display, b.display); });
  if (orbit_simples.empty() || orbit_simples[0].display != LevelWeight{0, 0}) {
    throw ConsistencyError("unit orbit missing");
  }
  std::vector<CondensedSimple> out;
  for (std::size_t i = 0; i < orbit_simples.size(); ++i) {
    orbit_simples[i].name = i == 0 ? "I" : "Y" + std::to_string(i);
    out.push_back(std::move(orbit_simples[i]));
  }
  for (const auto& f : part.fixed_points) {
    if (!wzw::in_root_lattice(f)) throw ConsistencyError("fixed point outside the root lattice");
    const CycNum dim = wzw::qdim(spec, f) / CycNum(3);
    for (int i = 1; i <= 3; ++i) {
      CondensedSimple s;
      s.label = {CondensedLabel::Kind::split, f, i};
      s.name = "X" + std::to_string(i);
      s.display = f;
      s.ambient = {f};
      s.dim = dim;
      s.twist = wzw::twist(spec, f);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string InducedFusion::product_string(std::size_t a, std::size_t b) const {
  const std::size_t n = simples.size();
  std::vector<std::string> parts;
  for (std::size_t c = 0; c < n; ++c) {
    const int v = known[(a * n + b) * n + c];
    if (v < 0) return "?";
    if (v > 0) parts.push_back((v == 1 ? "" : std::to_string(v)) + simples[c].name);
  }
  return parts.empty() ? "0" : join(parts, "+");
}

InducedFusion induced_fusion(const AlgebraSpec& spec) {
  InducedFusion out;
  out.simples = local_simples(spec);
  const std::size_t n = out.simples.size();
  std::map<LevelWeight, std::size_t> orbit_of;
  std::optional<LevelWeight> fixed;
  std::vector<std::size_t> orbit_idx;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = out.simples[i];
    if (s.label.kind == CondensedLabel::Kind::split) {
      out.family.push_back(i);
      fixed = s.display;
    } else {
      orbit_idx.push_back(i);
      for (const auto& w : s.ambient) orbit_of[w] = i;
    }
  }
  out.known.assign(n * n * n, -1);

  // Objects F_A(x): the orbit simples and the whole split family.
  struct Source {
    LevelWeight rep;
    std::vector<std::size_t> set;
  };
  std::vector<Source> sources;
  for (auto i : orbit_idx) sources.push_back({out.simples[i].display, {i}});
  if (fixed) sources.push_back({*fixed, out.family});

  for (const auto& P : sources) {
    for (const auto& Q : sources) {
      std::map<std::size_t, int> orbit_hits;
      int family_hits = 0;
      for (const auto& [w, m] : wzw::fuse(spec, P.rep, Q.rep)) {
        if (fixed && w == *fixed) {
          family_hits += m;
        } else if (auto it = orbit_of.find(w); it != orbit_of.end()) {
          orbit_hits[it->second] += m;
        } else {
          throw ConsistencyError("product of local objects has non-local summand " + wlabel(spec, w));
        }
      }
      // F_A(fixed) = X1+X2+X3, so each split simple receives family_hits.
      const bool exact_pair = P.set.size() == 1 && Q.set.size() == 1;
      for (std::size_t c = 0; c < n; ++c) {
        const bool split = std::find(out.family.begin(), out.family.end(), c) != out.family.end();
        const int v = split ? family_hits : (orbit_hits.contains(c) ? orbit_hits[c] : 0);
        if (exact_pair) {
          out.known[(P.set[0] * n + Q.set[0]) * n + c] = v;
        } else {
          out.sums.push_back({P.set, Q.set, {c}, v});
        }
      }
    }
  }
  return out;
}

std::vector<QuadraticInteger> quadratic_dims(const std::vector<CycNum>& dims) {
  std::vector<QuadraticInteger> out;
  for (const auto& d : dims) {
    auto q = fusion::to_quadratic(d, 3);
    if (!q) throw ConsistencyError("dimension " + exact::render(d) + " is not in Z[√3]");
    out.push_back(*q);
  }
  return out;
}

namespace {

// Among relabelings of the split family, the least table with X1 in X1*X1.
FusionRing apply_split_convention(const FusionRing& ring, const std::vector<std::size_t>& family) {
  const std::size_t x1 = family[0];
  std::optional<FusionRing> best;
  for (const auto& perm : family_permutations(ring.rank(), family)) {
    FusionRing r = ring.permuted(perm);
    r.labels = ring.labels;
    if (r(x1, x1, x1) == 0) continue;
    if (!best || std::tie(r.dual, r.N) < std::tie(best->dual, best->N)) best = std::move(r);
  }
  return best ? *best : ring;
}

}  // namespace

SplitResolution resolve_split_all(const AlgebraSpec& spec, const InducedFusion& partial, std::uint64_t seed) {
  const std::size_t n = partial.simples.size();
  if (partial.family.size() != 3) throw PreconditionFailed("expected exactly one split family of size 3");

  fusion::CompletionProblem p;
  std::vector<CycNum> dims;
  for (const auto& s : partial.simples) {
    p.labels.push_back(s.name);
    dims.push_back(s.dim);
  }
  p.unit = 0;
  p.known = partial.known;
  p.dims = quadratic_dims(dims);
  p.commutative = true;
  p.seed = seed;

  // Orbit duals are determined by the weights; the split family's duality
  // is enumerated.
  std::vector<std::size_t> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = partial.simples[i];
    if (s.label.kind == CondensedLabel::Kind::split) {
      base[i] = i;
      continue;
    }
    const LevelWeight dw = wzw::dual(spec, s.display);
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      const auto& amb = partial.simples[j].ambient;
      if (partial.simples[j].label.kind == CondensedLabel::Kind::orbit &&
          std::find(amb.begin(), amb.end(), dw) != amb.end()) {
        base[i] = j;
        found = true;
      }
    }
    if (!found) throw ConsistencyError("dual of " + s.name + " is not local");
  }
  const auto family_duals = fusion::class_preserving_involutions({-1, 0, 0, 0}, 0);
  for (const auto& inv : family_duals) {
    std::vector<std::size_t> dual = base;
    for (std::size_t t = 0; t < 3; ++t) dual[partial.family[t]] = partial.family[inv[t + 1] - 1];
    p.dual_candidates.push_back(std::move(dual));
  }

  for (const auto& fs : partial.sums) {
    fusion::LinearConstraint lc;
    for (auto a : fs.a_set) {
      for (auto b : fs.b_set) {
        for (auto c : fs.c_set) lc.terms.emplace_back((a * n + b) * n + c, 1);
      }
    }
    lc.rhs = fs.value;
    p.linear.push_back(std::move(lc));
  }
  const auto perms = family_permutations(n, partial.family);
  p.relabelings.assign(perms.begin() + 1, perms.end());

  const auto result = fusion::complete_ring(p);
  SplitResolution out;
  out.solutions = result.solutions;
  out.nodes = result.nodes;
  out.variables = result.variables;
  for (auto& sol : out.solutions) sol = apply_split_convention(sol, partial.family);
  if (!out.solutions.empty()) out.ring = out.solutions[0];
  return out;
}

SplitResolution resolve_split(const AlgebraSpec& spec, const InducedFusion& partial, std::uint64_t seed) {
  SplitResolution out = resolve_split_all(spec, partial, seed);
  if (out.solutions.empty()) throw NoSolution("no completion of the split-family constants exists");
  if (out.solutions.size() > 1) {
    std::string msg = std::to_string(out.solutions.size()) + " inequivalent completions:";
    for (const auto& sol : out.solutions) {
      msg += "\n";
      for (auto x : partial.family) {
        for (auto y : partial.family) msg += " " + sol.labels[x] + "*" + sol.labels[y] + "=" + sol.product_string(x, y);
      }
    }
    throw AmbiguousBeyondRelabeling(msg);
  }
  return out;
}

CondensedCategory condense(const AlgebraSpec& spec, std::uint64_t seed) {
  CondensedCategory out;
  out.spec = spec;
  const InducedFusion partial = induced_fusion(spec);
  out.simples = partial.simples;
  out.algebra = {LevelWeight{0, 0}, LevelWeight{spec.level, 0}, LevelWeight{0, spec.level}};
  std::sort(out.algebra.begin(), out.algebra.end());
  out.resolution = resolve_split_all(spec, partial, seed);
  for (const auto& s : out.simples) {
    out.md.dims.push_back(s.dim);
    out.md.twists.push_back(s.twist);
  }
  // Ring-level completions that also carry modular data with the inherited
  // twists.
  std::vector<FusionRing> modular;
  for (const auto& ring : out.resolution.solutions) {
    fusion::ModularData md = out.md;
    md.ring = ring;
    md.S = fusion::balancing_S(md.ring, md.dims, md.twists);
    if (fusion::verify_modular(md).passed()) modular.push_back(ring);
  }
  out.resolution.modular_solutions = modular.size();
  if (modular.empty()) throw NoSolution("no completion of the split-family constants is modular");
  if (modular.size() > 1) {
    throw AmbiguousBeyondRelabeling(std::to_string(modular.size()) + " inequivalent modular completions");
  }
  out.resolution.ring = modular[0];
  out.md.ring = modular[0];
  out.md.S = fusion::balancing_S(out.md.ring, out.md.dims, out.md.twists);
  return out;
}

fusion::ModularData condensed_modular_data(const AlgebraSpec& spec) { return condense(spec).md; }

fusion::CompletionResult ring_with_dims(const std::vector<QuadraticInteger>& dims, int bound,
                                        std::size_t max_solutions) {
  fusion::CompletionProblem p;
  const std::size_t n = dims.size();
  std::vector<int> classes;
  std::map<std::pair<long long, long long>, int> class_id;
  std::size_t others = 0;
  for (const auto& d : dims) {
    if (!(d == QuadraticInteger{1, 0, d.d})) ++others;
  }
  std::size_t gi = 0, zi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = dims[i];
    const bool inv = d == QuadraticInteger{1, 0, d.d};
    if (i == 0) {
      if (!inv) throw InvalidArgument("index 0 must have dimension 1");
      p.labels.push_back("I");
      ++gi;
    } else if (inv) {
      p.labels.push_back(gi == 1 ? "g" : "g^" + std::to_string(gi));
      ++gi;
    } else {
      ++zi;
      p.labels.push_back(others == 1 ? "X" : "Z" + std::to_string(zi));
    }
    const auto key = std::make_pair(d.a, d.b);
    if (!class_id.contains(key)) class_id.emplace(key, static_cast<int>(class_id.size()));
    classes.push_back(class_id.at(key));
  }
  p.unit = 0;
  p.dims = dims;
  p.max_value = bound;
  p.dual_candidates = fusion::class_preserving_involutions(classes, 0);
  auto perms = class_permutations(classes);
  p.relabelings.assign(perms.begin() + 1, perms.end());
  p.max_solutions = max_solutions;
  return fusion::complete_ring(p);
}

NearGroupPipeline near_group_pipeline() {
  NearGroupPipeline out;
  const AlgebraSpec spec{wzw::RankType::A2, 9};
  const fusion::ModularData condensed = condensed_modular_data(spec);

  // eta(g) = zeta_3^2, so eta^-1(g) = zeta_3.
  const auto pointed = fusion::pointed_modular_data(fusion::cyclic_quadratic_form(3, CycNum::root_of_unity(3, 1)));
  out.product = fusion::deligne_product(pointed, condensed);
  const auto trivial = fusion::count_trivial_twists(out.product);
  out.trivial_twists = trivial.labels;
  out.report.add("trivial twists", true, join(trivial.labels, ", "));

  const auto d_condensed = fusion::to_quadratic(condensed.global_dimension(), 3);
  if (!d_condensed) throw ConsistencyError("global dimension not in Z[√3]");
  const auto fp_a = fusion::exact_sqrt(*d_condensed * 3);
  if (!fp_a) throw ConsistencyError("3 FPdim(C) is not a square in Z[√3]");
  out.fpdim_a = *fp_a;
  out.report.add("FPdim(A)^2 = 3 FPdim(C)", true, out.fpdim_a.str() + " squared is " + (*d_condensed * 3).str());

  // Connected etale subalgebras: subsets of trivial-twist simples containing
  // the unit whose FPdim divides FPdim(A).
  std::vector<std::size_t> idx;
  const std::size_t unit = out.product.ring.unit;
  for (const auto& l : trivial.labels) {
    const std::size_t i = out.product.ring.index(l);
    if (i != unit) idx.push_back(i);
  }
  const auto pdims = quadratic_dims(out.product.dims);
  for (std::size_t mask = 1; mask < (std::size_t{1} << idx.size()); ++mask) {
    EtaleCandidate c;
    c.summands.push_back(out.product.ring.labels[unit]);
    c.fpdim = {1, 0, 3};
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (!(mask & (std::size_t{1} << t))) continue;
      c.summands.push_back(out.product.ring.labels[idx[t]]);
      c.fpdim = c.fpdim + pdims[idx[t]];
    }
    const auto q = fusion::exact_quotient(out.fpdim_a, c.fpdim);
    if (!q) continue;
    c.subcategory_fpdim = *q;
    out.etale_candidates.push_back(std::move(c));
  }
  std::sort(out.etale_candidates.begin(), out.etale_candidates.end(), [](const auto& a, const auto& b) {
    return a.summands.size() < b.summands.size();
  });
  {
    std::vector<std::string> lines;
    for (const auto& c : out.etale_candidates) {
      lines.push_back(join(c.summands, "+") + " (FPdim " + c.fpdim.str() + ", subcategory " + c.subcategory_fpdim.str() + ")");
    }
    out.report.add("etale candidates", !out.etale_candidates.empty(), join(lines, "; "));
  }
  if (out.etale_candidates.empty()) throw NoSolution("no etale candidates");

  // The smallest candidate fixes the pointed subcategory.
  const auto& pointed_sub = out.etale_candidates.front().subcategory_fpdim;
  if (pointed_sub.b != 0) throw ConsistencyError("pointed subcategory has irrational FPdim");
  const long long forced = pointed_sub.a;

  out.decompositions = fusion::sum_of_squares_search(out.fpdim_a, forced);
  {
    std::vector<std::string> lines;
    for (const auto& dec : out.decompositions) {
      std::vector<std::string> parts;
      for (const auto& d : dec) parts.push_back(d.str());
      lines.push_back("{" + join(parts, ", ") + "}");
    }
    out.report.add("sum-of-squares decompositions", !out.decompositions.empty(), join(lines, " "));
  }

  std::optional<FusionRing> survivor;
  std::optional<QuadraticInteger> survivor_dim;
  for (const auto& dec : out.decompositions) {
    std::vector<QuadraticInteger> dims(static_cast<std::size_t>(forced), QuadraticInteger{1, 0, 3});
    dims.insert(dims.end(), dec.begin(), dec.end());
    const auto result = ring_with_dims(dims, 64);
    if (dec.size() > 1) {
      out.rejected_nodes += result.nodes;
      if (!result.solutions.empty()) {
        throw PipelineBranchSurvived("a ring exists with " + std::to_string(dec.size()) + " non-invertible simples");
      }
      out.report.add("branch with " + std::to_string(dec.size()) + " objects of FPdim " + dec[0].str() + " refuted", true,
                     std::to_string(result.nodes) + " search nodes");
      continue;
    }
    if (result.solutions.size() != 1) {
      throw NoSolution("expected a unique ring with one non-invertible, found " + std::to_string(result.solutions.size()));
    }
    survivor = result.solutions[0];
    survivor_dim = dec[0];
  }
  if (!survivor) throw NoSolution("no branch admits a ring");
  out.ring = *survivor;
  out.fpdim_x = *survivor_dim;
  out.type = fusion::near_group_recognize(out.ring);
  const std::size_t x = out.ring.index("X");
  out.report.add("near-group type", out.type.has_value(),
                 out.type ? "Z" + std::to_string(out.type->group_order) + "+" + std::to_string(out.type->multiplicity) +
                                ", X*X = " + out.ring.product_string(x, x)
                          : "not near-group");
  return out;
}

AdjointSector adjoint_sector(const AlgebraSpec& spec) {
  AdjointSector out;
  for (const auto& w : wzw::alcove(spec)) {
    if (!wzw::in_root_lattice(w)) continue;
    out.weights.push_back(w);
    out.dims.push_back(wzw::qdim(spec, w));
    out.twists.push_back(wzw::twist(spec, w));
  }
  return out;
}

CheckReport level5_quotient_checks(const FusionRing& b_prime) {
  CheckReport report;
  const AlgebraSpec spec{wzw::RankType::A2, 5};
  const AdjointSector sector = adjoint_sector(spec);
  std::vector<std::string> names;
  for (const auto& w : sector.weights) names.push_back(wlabel(spec, w));
  report.add("adjoint sector", sector.weights.size() == 7, join(names, ", "));

  const CycNum t22 = wzw::twist(spec, {2, 2});
  report.add("twist (2,2) = 1", t22 == CycNum(1), exact::render(t22));
  const CycNum t30 = wzw::twist(spec, {3, 0});
  report.add("twist (3,0) = ζ_4^3", t30 == CycNum::root_of_unity(4, 3), exact::render(t30));

  const auto prod = wzw::fuse(spec, {1, 4}, {1, 4});
  std::vector<std::string> parts;
  for (const auto& [w, m] : prod) parts.push_back((m == 1 ? "" : std::to_string(m)) + wlabel(spec, w));
  const bool prod_ok = prod.size() == 2 && prod[0] == std::pair<LevelWeight, int>{{3, 0}, 1} &&
                       prod[1] == std::pair<LevelWeight, int>{{4, 1}, 1};
  report.add("(1,4)*(1,4) = (3,0)+(4,1)", prod_ok, join(parts, "+"));

  const CycNum d14 = wzw::qdim(spec, {1, 4});
  const CycNum d30 = wzw::qdim(spec, {3, 0});
  report.add("qdim (1,4) = 1+√2", d14 == exact::quadratic(1, 1, 2), exact::render(d14));
  report.add("qdim (3,0) = 2+√2", d30 == exact::quadratic(2, 1, 2), exact::render(d30));

  const CheckReport ring_report = fusion::verify_ring(b_prime);
  report.add("rank-4 ring axioms", ring_report.passed(),
             ring_report.passed() ? "" : ring_report.first_failure()->name + ": " + ring_report.first_failure()->detail);
  const auto fp = fusion::fp_dims(b_prime);
  const auto x = b_prime.find("X");
  const bool exact_ok = fp.exact && x && (*fp.exact)[*x] == QuadraticInteger{1, 1, 2};
  report.add("FPdim(X) = 1+√2", exact_ok, fp.exact && x ? (*fp.exact)[*x].str() : "not recognised");
  report.add("not near-group", !fusion::near_group_recognize(b_prime).has_value());
  return report;
}

}  // namespace modcat::condense
