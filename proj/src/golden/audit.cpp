#include "modcat/golden/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "modcat/condense/condense.hpp"
#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/fusion/fpdim.hpp"
#include "modcat/fusion/modular.hpp"
#include "modcat/golden/graded.hpp"
#include "modcat/wzw/wzw.hpp"

namespace modcat::golden {

using exact::CycNum;
using fusion::FusionRing;

namespace {

const wzw::AlgebraSpec kLevel9{wzw::RankType::A2, 9};

// Values computed once and shared by the sections.
struct Context {
  std::optional<condense::CondensedCategory> condensed;
  std::optional<condense::NearGroupPipeline> near_group;

  const condense::CondensedCategory& cc() {
    if (!condensed) condensed = condense::condense(kLevel9);
    return *condensed;
  }
  const condense::NearGroupPipeline& ng() {
    if (!near_group) near_group = condense::near_group_pipeline();
    return *near_group;
  }
};

class Recorder {
 public:
  Recorder(Audit& audit, std::string locus) : audit_(audit), locus_(std::move(locus)) {}

  void add(std::string check, bool ok, std::string detail = {}) { add(std::move(check), ok ? Status::pass : Status::fail, std::move(detail)); }
  void add(std::string check, Status status, std::string detail = {}) {
    audit_.lines.push_back({locus_, std::move(check), status, std::move(detail)});
  }
  void add(const CheckItem& item, const std::string& prefix = {}) { add(prefix + item.name, item.passed, item.detail); }
  void add(const CheckReport& report, const std::string& prefix = {}) {
    for (const auto& item : report.items) add(item, prefix);
  }
  void at(std::string locus) { locus_ = std::move(locus); }

 private:
  Audit& audit_;
  std::string locus_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::vector<std::string> strings(const Json& list) {
  std::vector<std::string> out;
  for (const auto& s : list) out.push_back(s.get<std::string>());
  return out;
}

std::string report_failure(const CheckReport& r) {
  const auto* f = r.first_failure();
  return f ? f->name + ": " + f->detail : "";
}

// Entries of `computed` re-indexed by the labels of `golden`.
std::optional<FusionRing> align(const FusionRing& computed, const FusionRing& golden) {
  if (computed.rank() != golden.rank()) return std::nullopt;
  std::vector<std::size_t> perm(computed.rank());
  for (std::size_t i = 0; i < computed.rank(); ++i) {
    const auto j = golden.find(computed.labels[i]);
    if (!j) return std::nullopt;
    perm[i] = *j;
  }
  return computed.permuted(perm);
}

const Json* discrepancy(const GoldenTable& t, const std::string& quantity) {
  if (!t.data.contains("known_discrepancies")) return nullptr;
  for (const auto& kd : t.data["known_discrepancies"]) {
    if (kd.value("quantity", "") == quantity) return &kd;
  }
  return nullptr;
}

std::string discrepancy_text(const Json& kd) {
  return "stated " + kd.value("stated", "") + ", derived " + kd.value("derived", "") + " (" + kd.value("reason", "") +
         ")";
}

void check_simples(const GoldenTable& t, Context& ctx, Recorder& rec) {
  const auto& simples = ctx.cc().simples;
  const auto& golden = member(t.data, "simples");
  const Json symbols = member(t.data, "symbols");
  rec.add("number of simples", golden.size() == simples.size(),
          std::to_string(simples.size()) + " computed, " + std::to_string(golden.size()) + " listed");

  std::vector<std::string> names;
  for (const auto& s : simples) names.push_back(s.name);
  std::vector<std::string> golden_names;
  for (const auto& g : golden) golden_names.push_back(member(g, "name").get<std::string>());
  rec.add("names", names == golden_names, join(names));

  std::vector<std::string> orbit_bad, dim_bad;
  for (const auto& g : golden) {
    const auto name = member(g, "name").get<std::string>();
    const auto it = std::find_if(simples.begin(), simples.end(), [&](const auto& s) { return s.name == name; });
    if (it == simples.end()) {
      orbit_bad.push_back(name + " missing");
      continue;
    }
    std::set<std::string> computed;
    for (const auto& w : it->ambient) computed.insert(wzw::label(kLevel9, w));
    const auto listed = strings(member(g, "ambient"));
    if (computed != std::set<std::string>(listed.begin(), listed.end())) {
      orbit_bad.push_back(name + ": computed " + join({computed.begin(), computed.end()}, "+"));
    }
    const CycNum want = decode_value(member(g, "dim"), symbols);
    if (!(it->dim == want)) dim_bad.push_back(name + ": computed " + exact::render(it->dim) + ", listed " + exact::render(want));
  }
  rec.add("ambient orbits", orbit_bad.empty(), join(orbit_bad, "; "));
  rec.add("dimensions", dim_bad.empty(), dim_bad.empty() ? "d = " + exact::render(decode_value(symbols["d"])) : join(dim_bad, "; "));

  std::set<std::string> algebra;
  for (const auto& w : ctx.cc().algebra) algebra.insert(wzw::label(kLevel9, w));
  const auto listed = strings(member(t.data, "etale_algebra"));
  rec.add("etale algebra", algebra == std::set<std::string>(listed.begin(), listed.end()),
          join({algebra.begin(), algebra.end()}, "+"));
}

void check_fusion(const GoldenTable& t, Context& ctx, Recorder& rec) {
  const GoldenRing gr = decode_ring(member(t.data, "ring"), t.locus);
  rec.add("transcribed ring axioms", verify_ring(gr.ring).passed(), report_failure(verify_ring(gr.ring)));

  const auto& cc = ctx.cc();
  const auto base = align(cc.md.ring, gr.ring);
  if (!base) {
    rec.add("labels", false, "computed labels differ from the table");
    return;
  }
  std::vector<std::size_t> family;
  for (const auto& l : member(member(t.data, "relabeling"), "family")) family.push_back(gr.ring.index(l.get<std::string>()));

  // Best relabeling of the split family: fewest mismatching rows.
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::optional<FusionRing> best;
  std::size_t best_bad = SIZE_MAX;
  do {
    std::vector<std::size_t> perm(gr.ring.rank());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t p = 0; p < family.size(); ++p) perm[family[p]] = family[order[p]];
    FusionRing candidate = base->permuted(perm);
    candidate.labels = gr.ring.labels;
    std::size_t bad = 0;
    for (const auto& row : gr.rows) {
      for (std::size_t k = 0; k < gr.ring.rank(); ++k) bad += candidate(row.a, row.b, k) != row.rhs[k];
    }
    if (bad < best_bad) {
      best_bad = bad;
      best = std::move(candidate);
    }
  } while (std::next_permutation(order.begin(), order.end()));

  std::map<std::string, std::vector<std::string>> bad_by_locus;
  std::vector<std::string> loci;
  for (const auto& row : gr.rows) {
    if (std::find(loci.begin(), loci.end(), row.locus) == loci.end()) loci.push_back(row.locus);
    std::vector<int> computed(gr.ring.rank());
    for (std::size_t k = 0; k < computed.size(); ++k) computed[k] = (*best)(row.a, row.b, k);
    if (computed != row.rhs) {
      bad_by_locus[row.locus].push_back(gr.ring.labels[row.a] + "⊗" + gr.ring.labels[row.b] + ": table " + row.text +
                                        " = " + combination_string(gr.ring, row.rhs) + ", computed " +
                                        combination_string(gr.ring, computed));
    }
  }
  for (const auto& locus : loci) {
    rec.at(locus);
    const auto& bad = bad_by_locus[locus];
    rec.add("transcribed products", bad.empty(), bad.empty() ? "" : join(bad, "; "));
  }
  rec.at(t.locus);
  std::size_t entries_bad = 0;
  for (std::size_t i = 0; i < best->N.size(); ++i) entries_bad += best->N[i] != gr.ring.N[i];
  rec.add("all structure constants", entries_bad == 0,
          std::to_string(gr.ring.N.size()) + " entries, " + std::to_string(entries_bad) + " differ");
  rec.add("unique up to relabeling", cc.resolution.solutions.size() == 1,
          std::to_string(cc.resolution.solutions.size()) + " completion(s), " +
              std::to_string(cc.resolution.variables) + " unknowns");
}

void check_twists(const GoldenTable& t, Context& ctx, Recorder& rec) {
  const auto labels = strings(member(t.data, "labels"));
  const auto& values = member(t.data, "twists");
  const auto& simples = ctx.cc().simples;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = std::find_if(simples.begin(), simples.end(), [&](const auto& s) { return s.name == labels[i]; });
    const CycNum want = decode_value(values.at(i));
    if (it == simples.end()) {
      bad.push_back(labels[i] + " missing");
    } else if (!(it->twist == want)) {
      bad.push_back(labels[i] + ": computed " + exact::render(it->twist) + ", table " + exact::render(want));
    }
  }
  rec.add("inherited twists", bad.empty() && labels.size() == simples.size(), join(bad, "; "));

  bad.clear();
  const int order = 3 * (kLevel9.level + 3);
  for (const auto& w : wzw::alcove(kLevel9)) {
    const long long e = w.m1 * w.m1 + 3 * w.m1 + w.m1 * w.m2 + 3 * w.m2 + w.m2 * w.m2;
    if (!(wzw::twist(kLevel9, w) == CycNum::root_of_unity(order, e))) bad.push_back(wzw::label(kLevel9, w));
  }
  rec.add("ribbon formula on the level-9 alcove", bad.empty(), join(bad));
}

void check_s(const GoldenTable& t, Context& ctx, Recorder& rec) {
  const auto& md = ctx.cc().md;
  const auto labels = strings(member(t.data, "labels"));
  const Json symbols = member(t.data, "symbols");
  const auto& entries = member(t.data, "entries");
  std::vector<std::size_t> idx;
  for (const auto& l : labels) idx.push_back(md.ring.index(l));
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const CycNum want = decode_value(entries.at(i).at(j), symbols);
      const CycNum& got = md.S[idx[i]][idx[j]];
      ++checked;
      if (!(got == want)) {
        bad.push_back("S[" + labels[i] + "][" + labels[j] + "]: table " + exact::render(want) + ", computed " +
                      exact::render(got));
      }
    }
  }
  rec.add("balancing S-matrix", bad.empty() && checked == md.rank() * md.rank(),
          bad.empty() ? std::to_string(checked) + " entries equal" : join(bad, "; "));
  const CycNum d = md.global_dimension();
  const CycNum want_d = decode_value(member(t.data, "global_dimension"));
  rec.add("global dimension", d == want_d, exact::render(d));
  rec.add(fusion::verify_modular(md), "modular: ");
}

void check_near_group(const GoldenTable& t, Context& ctx, Recorder& rec) {
  const auto& p = ctx.ng();
  const auto twists = strings(member(t.data, "trivial_twists"));
  rec.add("trivial-twist simples",
          std::set<std::string>(twists.begin(), twists.end()) ==
                  std::set<std::string>(p.trivial_twists.begin(), p.trivial_twists.end()) &&
              twists.size() == p.trivial_twists.size(),
          join(p.trivial_twists));

  const CycNum fp = p.fpdim_a.to_cycnum();
  rec.add("FPdim(A)", fp == decode_value(member(t.data, "fpdim")), p.fpdim_a.str());
  rec.add("FPdim(A)^2 = 3 FPdim(condensed)",
          fp * fp == decode_value(member(t.data, "fpdim_squared")) && fp * fp == CycNum(3) * ctx.cc().md.global_dimension(),
          exact::render(fp * fp));

  std::set<std::set<std::string>> want, got;
  for (const auto& c : member(t.data, "etale_candidates")) {
    const auto v = strings(c);
    want.insert({v.begin(), v.end()});
  }
  std::vector<std::string> shown;
  for (const auto& c : p.etale_candidates) {
    got.insert({c.summands.begin(), c.summands.end()});
    shown.push_back("{" + join(c.summands, "+") + "}");
  }
  rec.add("etale subalgebra candidates", want == got && got.size() == p.etale_candidates.size(), join(shown, " "));

  std::vector<std::vector<std::string>> want_dec, got_dec;
  for (const auto& dcmp : member(t.data, "decompositions")) {
    std::vector<std::string> v;
    for (const auto& x : dcmp) v.push_back(exact::render(decode_value(x)));
    want_dec.push_back(v);
  }
  shown.clear();
  for (const auto& dcmp : p.decompositions) {
    std::vector<std::string> v;
    for (const auto& x : dcmp) v.push_back(exact::render(x.to_cycnum()));
    shown.push_back("{" + join(v) + "}");
    got_dec.push_back(std::move(v));
  }
  rec.add("sum-of-squares decompositions", want_dec == got_dec,
          join(shown, " ") + "; search over a+b√3 with a >= 1, b >= 0, " +
              std::to_string(member(t.data, "forced_invertibles").get<int>()) + " invertibles");
  rec.add("three-object branch refuted", p.rejected_nodes > 0, std::to_string(p.rejected_nodes) + " nodes");

  const GoldenRing gr = decode_ring(member(t.data, "ring"), t.locus);
  const auto ring_report = verify_ring(gr.ring);
  rec.add("transcribed ring axioms", ring_report.passed(), report_failure(ring_report));
  const auto& type = member(t.data, "near_group_type");
  const fusion::NearGroupType want_type{member(type, "group_order").get<std::size_t>(), member(type, "multiplicity").get<int>()};
  const auto golden_type = fusion::near_group_recognize(gr.ring);
  rec.add("near-group type", golden_type == want_type && p.type == want_type,
          p.type ? "Z" + std::to_string(p.type->group_order) + "+" + std::to_string(p.type->multiplicity) : "none");
  const auto aligned = align(p.ring, gr.ring);
  rec.add("pipeline ring equals the table", aligned && aligned->N == gr.ring.N,
          "X⊗X = " + p.ring.product_string(p.ring.index("X"), p.ring.index("X")));

  const CycNum stated = decode_value(member(member(t.data, "dims"), "X"));
  const auto fpd = fusion::fp_dims(gr.ring);
  const std::size_t x = gr.ring.index("X");
  const std::optional<CycNum> derived =
      fpd.exact ? std::optional<CycNum>((*fpd.exact)[x].to_cycnum()) : std::nullopt;
  if (derived && *derived == stated) {
    rec.add("FPdim(X)", Status::pass, exact::render(stated));
  } else if (const Json* kd = discrepancy(t, "FPdim(X)");
             kd && derived && decode_value((*kd)["derived"]) == *derived && p.fpdim_x.to_cycnum() == *derived) {
    rec.add("FPdim(X)", Status::warn, discrepancy_text(*kd));
  } else {
    rec.add("FPdim(X)", Status::fail,
            "table " + exact::render(stated) + ", derived " + (derived ? exact::render(*derived) : "unrecognised"));
  }
}

void check_graded_common(const GoldenTable& t, const GradedRing& gr, Recorder& rec) {
  const auto ring_report = verify_ring(gr.ring);
  rec.add("ring axioms", ring_report.passed(), report_failure(ring_report));
  rec.add(verify_graded(gr), "graded: ");
  const bool want_comm = member(t.data, "commutative").get<bool>();
  const bool comm = verify_commutativity(gr.ring);
  rec.add(want_comm ? "commutative" : "noncommutative", comm == want_comm);
  const auto dims = decode_dims(member(t.data, "dims"), gr.ring);
  rec.add(dimension_additivity(gr.ring, dims));
  const auto fpd = fusion::fp_dims(gr.ring);
  bool fp_ok = fpd.exact.has_value();
  for (std::size_t i = 0; fp_ok && i < dims.size(); ++i) fp_ok = (*fpd.exact)[i].to_cycnum() == dims[i];
  rec.add("dims are the Perron-Frobenius dims", fp_ok);

  std::vector<std::string> comps;
  for (int h = 0; h < gr.group; ++h) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < gr.ring.rank(); ++i) {
      if (gr.component_of[i] == h) parts.push_back(gr.ring.labels[i] + ":" + exact::render(dims[i]));
    }
    comps.push_back("{" + join(parts) + "}");
  }
  rec.add("components", true, join(comps, " | "));
}

void check_z2(const GoldenTable& t, Context& ctx, Recorder& rec) {
  const GradedRing gr = decode_graded(t);
  check_graded_common(t, gr, rec);
  const auto& r = gr.ring;
  const auto& w = member(t.data, "noncommutative_witness");
  const auto l = strings(member(w, "left")), rr = strings(member(w, "right"));
  const std::string lp = r.product_string(r.index(l[0]), r.index(l[1]));
  const std::string rp = r.product_string(r.index(rr[0]), r.index(rr[1]));
  rec.add("noncommutativity witness", lp != rp, l[0] + "⊗" + l[1] + " = " + lp + ", " + rr[0] + "⊗" + rr[1] + " = " + rp);

  std::vector<int> ks;
  const std::size_t g = r.index("g"), z3 = r.index("Z3");
  const std::size_t powers[] = {r.index("I"), g, r.index("g^2")};
  for (int k = 0; k < 3; ++k) {
    if (r.product(g, z3) == r.product(z3, powers[k])) ks.push_back(k);
  }
  rec.add("exponent k in g⊗Z3 = Z3⊗g^k", ks == std::vector<int>{2},
          ks.size() == 1 ? "k = " + std::to_string(ks[0]) : "no unique k");

  const auto sl2 = wzw::modular_data({wzw::RankType::A1, 4});
  std::vector<std::string> got, want;
  for (const auto& tw : sl2.twists) got.push_back(exact::render(tw));
  for (const auto& tw : member(t.data, "sl2_level4_twists")) want.push_back(exact::render(decode_value(tw)));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  rec.add("sl2 level 4 twists", got == want, join(got));

  const auto product = fusion::deligne_product(sl2, ctx.cc().md);
  const auto trivial = fusion::count_trivial_twists(product);
  rec.add("trivial twists in C(sl2,4)⊠condensed",
          static_cast<int>(trivial.count) == member(t.data, "trivial_twist_count").get<int>(), join(trivial.labels));
}

void check_level5(const GoldenTable& t, Recorder& rec) {
  const GoldenRing gr = decode_ring(member(t.data, "ring"), t.locus);
  rec.add(condense::level5_quotient_checks(gr.ring));
  const wzw::AlgebraSpec spec{wzw::RankType::A2, member(t.data, "level").get<int>()};
  const auto sector = condense::adjoint_sector(spec);
  std::set<std::string> got;
  for (const auto& w : sector.weights) got.insert(wzw::label(spec, w));
  const auto want = strings(member(t.data, "adjoint_weights"));
  rec.add("adjoint weights match the table", got == std::set<std::string>(want.begin(), want.end()) && got.size() == want.size());

  auto weight = [&](const std::string& s) {
    for (const auto& w : wzw::alcove(spec)) {
      if (wzw::label(spec, w) == s) return w;
    }
    throw MalformedGoldenFile("weight '" + s + "' is not in the alcove");
  };
  std::vector<std::string> bad;
  for (const auto& [w, v] : member(t.data, "twists").items()) {
    if (!(wzw::twist(spec, weight(w)) == decode_value(v))) bad.push_back("twist " + w);
  }
  for (const auto& [w, v] : member(t.data, "qdims").items()) {
    if (!(wzw::qdim(spec, weight(w)) == decode_value(v))) bad.push_back("qdim " + w);
  }
  for (const auto& f : member(t.data, "fusion")) {
    const auto lhs = strings(member(f, "lhs"));
    std::vector<std::string> got_terms;
    for (const auto& [w, m] : wzw::fuse(spec, weight(lhs[0]), weight(lhs[1]))) {
      for (int c = 0; c < m; ++c) got_terms.push_back(wzw::label(spec, w));
    }
    auto want_terms = strings(member(f, "rhs"));
    std::sort(want_terms.begin(), want_terms.end());
    std::sort(got_terms.begin(), got_terms.end());
    if (got_terms != want_terms) bad.push_back(lhs[0] + "⊗" + lhs[1] + " = " + join(got_terms, "+"));
  }
  rec.add("twists, qdims and fusion match the table", bad.empty(), join(bad, "; "));

  std::set<std::string> algebra;
  for (const auto& w : strings(member(t.data, "etale_algebra"))) {
    if (wzw::twist(spec, weight(w)) == CycNum(1)) algebra.insert(w);
  }
  rec.add("etale algebra summands have trivial twist", algebra.size() == member(t.data, "etale_algebra").size());
  rec.add(dimension_additivity(gr.ring, decode_dims(member(t.data, "dims"), gr.ring)));
}

void check_z3(const GoldenTable& t, Recorder& rec) {
  const GradedRing gr = decode_graded(t);
  check_graded_common(t, gr, rec);
  const auto dims = decode_dims(member(t.data, "dims"), gr.ring);
  CycNum total;
  for (const auto& dd : dims) total += dd * dd;
  rec.add("FPdim", total == decode_value(member(t.data, "fpdim")), exact::render(total));
  std::vector<std::string> bad;
  const auto& r = gr.ring;
  for (const auto& l : strings(member(t.data, "self_square_contains_dual"))) {
    const std::size_t i = r.index(l);
    if (r(i, i, r.dual[i]) == 0) bad.push_back(l);
  }
  rec.add("W_j* in W_j⊗W_j", bad.empty(), join(bad));
}

void check_extension_dimension(const GoldenTable& t, const GoldenTable& z3, Recorder& rec) {
  const std::string ws = member(t.data, "weight").get<std::string>();
  std::optional<wzw::LevelWeight> w;
  for (const auto& v : wzw::alcove(kLevel9)) {
    if (wzw::label(kLevel9, v) == ws) w = v;
  }
  if (!w) throw MalformedGoldenFile("weight '" + ws + "' is not in the alcove");
  const CycNum dim = decode_value(member(t.data, "dim"));
  rec.add("qdim " + ws, wzw::qdim(kLevel9, *w) == dim, exact::render(wzw::qdim(kLevel9, *w)));
  const bool trivial = wzw::twist(kLevel9, *w) == CycNum(1);
  rec.add("twist of " + ws + " nontrivial", trivial == member(t.data, "twist_trivial").get<bool>(),
          exact::render(wzw::twist(kLevel9, *w)));

  // 2cos(pi/3) and 2cos(pi/6), the only values 2cos(pi/n) summing to the dim.
  const auto split = member(t.data, "split_dims");
  const CycNum c3 = CycNum::root_of_unity(6, 1) + CycNum::root_of_unity(6, 5);
  const CycNum c6 = CycNum::root_of_unity(12, 1) + CycNum::root_of_unity(12, 11);
  const CycNum s0 = decode_value(split.at(0)), s1 = decode_value(split.at(1));
  rec.add("split into 2cos(π/3)+2cos(π/6)", s0 == c3 && s1 == c6 && s0 + s1 == dim,
          exact::render(s0) + "+" + exact::render(s1));

  const GradedRing d = decode_graded(z3);
  const auto dims = decode_dims(member(z3.data, "dims"), d.ring);
  CycNum total;
  bool has = false;
  for (const auto& x : dims) {
    total += x * x;
    has = has || x == dim;
  }
  rec.add("FPdim of the extension", total == decode_value(member(t.data, "ambient_fpdim")), exact::render(total));
  rec.add("extension has a simple of this dim", has);
}

void check_induction(const GoldenTable& t, Recorder& rec) {
  const CheckReport stated = induction_unit_check(t, false);
  const CheckReport corrected = induction_unit_check(t, true);
  std::string notes;
  if (t.data.contains("known_discrepancies")) {
    for (const auto& kd : t.data["known_discrepancies"]) notes += (notes.empty() ? "" : "; ") + discrepancy_text(kd);
  }
  for (std::size_t i = 0; i < stated.items.size(); ++i) {
    const auto& s = stated.items[i];
    if (s.passed) {
      rec.add(s);
    } else if (!notes.empty() && i < corrected.items.size() && corrected.items[i].passed) {
      rec.add(s.name, Status::warn, s.detail + "; " + notes);
    } else {
      rec.add(s);
    }
  }
}

}  // namespace

std::string_view status_name(Status status) {
  switch (status) {
    case Status::pass:
      return "PASS";
    case Status::warn:
      return "WARN";
    case Status::fail:
      return "FAIL";
  }
  return "FAIL";
}

std::size_t Audit::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [&](const AuditLine& l) { return l.status == status; }));
}

Audit verify_paper(const std::filesystem::path& dir) {
  Audit audit;
  Catalog catalog;
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
  } else {
    audit.lines.push_back({dir.string(), "golden directory", Status::fail, "not a directory"});
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      catalog.tables.push_back(load_table(f));
    } catch (const Error& e) {
      audit.lines.push_back({f.filename().string(), "load", Status::fail, e.what()});
    }
  }

  Context ctx;
  using Section = std::function<void(const GoldenTable&, Recorder&)>;
  const std::vector<std::pair<std::string, Section>> sections = {
      {"condensed-simples", [&](const GoldenTable& t, Recorder& r) { check_simples(t, ctx, r); }},
      {"condensed-fusion", [&](const GoldenTable& t, Recorder& r) { check_fusion(t, ctx, r); }},
      {"condensed-twists", [&](const GoldenTable& t, Recorder& r) { check_twists(t, ctx, r); }},
      {"condensed-S", [&](const GoldenTable& t, Recorder& r) { check_s(t, ctx, r); }},
      {"near-group", [&](const GoldenTable& t, Recorder& r) { check_near_group(t, ctx, r); }},
      {"z2-extension", [&](const GoldenTable& t, Recorder& r) { check_z2(t, ctx, r); }},
      {"sl3-level5-quotient", [&](const GoldenTable& t, Recorder& r) { check_level5(t, r); }},
      {"z3-extension", [&](const GoldenTable& t, Recorder& r) { check_z3(t, r); }},
      {"extension-dimension",
       [&](const GoldenTable& t, Recorder& r) { check_extension_dimension(t, catalog.at("z3-extension"), r); }},
      {"induction-unit", [&](const GoldenTable& t, Recorder& r) { check_induction(t, r); }},
      {"z6-components",
       [&](const GoldenTable& t, Recorder& r) {
         r.add(component_inventory_checks(t, catalog.at("z2-extension"), catalog.at("z3-extension")));
       }},
  };
  for (const auto& [name, run] : sections) {
    const GoldenTable* t = catalog.find(name);
    if (!t) {
      audit.lines.push_back({name, "table present", Status::fail, "no golden table named '" + name + "'"});
      continue;
    }
    Recorder rec(audit, t->locus);
    rec.add("file round-trip", round_trips(*t), round_trips(*t) ? t->file.filename().string() : "re-serialised text differs");
    try {
      run(*t, rec);
    } catch (const Error& e) {
      rec.at(t->locus);
      rec.add("evaluation", false, e.what());
    } catch (const Json::exception& e) {
      rec.at(t->locus);
      rec.add("evaluation", false, std::string("MalformedGoldenFile: ") + e.what());
    }
  }

  audit.notes.push_back(
      "Tensor equivalences of categories and Witt-class statements are not reproducible from ring and modular data; "
      "they are covered only through the numerical invariants checked above.");
  audit.notes.push_back("The fusion table of the rank-24 Z6-extension is absent from the source and is not checked.");
  audit.notes.push_back("Dimension decompositions search a+b√3 with a >= 1, b >= 0 only.");
  return audit;
}

}  // namespace modcat::golden
