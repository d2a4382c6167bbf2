#include "modcat/golden/graded.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/fusion/quadratic.hpp"
#include "modcat/wzw/wzw.hpp"

namespace modcat::golden {

using exact::CycNum;
using fusion::FusionRing;

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

wzw::LevelWeight parse_weight(const std::string& s) {
  int m1 = 0, m2 = 0;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(s);
  if (!(in >> c1 >> m1 >> c2 >> m2 >> c3) || c1 != '(' || c2 != ',' || c3 != ')') {
    throw MalformedGoldenFile("bad weight '" + s + "'");
  }
  return {m1, m2};
}

int group_degree(const std::string& label) {
  if (label == "I") return 0;
  if (label == "g") return 1;
  if (label == "g^2") return 2;
  throw MalformedGoldenFile("bad group label '" + label + "'");
}

using Summand = std::pair<int, wzw::LevelWeight>;

std::vector<Summand> summands(const Json& list) {
  std::vector<Summand> out;
  for (const auto& s : list) {
    if (!s.is_array() || s.size() != 2) throw MalformedGoldenFile("summand must be [group label, weight]");
    out.emplace_back(group_degree(s[0].get<std::string>()), parse_weight(s[1].get<std::string>()));
  }
  return out;
}

std::string summand_label(const Summand& s) {
  static const char* g[] = {"I", "g", "g^2"};
  return std::string(g[s.first]) + "⊠(" + std::to_string(s.second.m1) + "," + std::to_string(s.second.m2) + ")";
}

std::string join_summands(const std::vector<Summand>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + summand_label(s);
  return out;
}

std::string with_star_toggled(const std::string& label) {
  if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

}  // namespace

GradedRing decode_graded(const GoldenTable& table) {
  GradedRing gr;
  gr.ring = decode_ring(member(table.data, "ring"), table.locus).ring;
  const auto& grading = member(table.data, "grading");
  gr.group = member(grading, "group_order").get<int>();
  gr.component_of.assign(gr.ring.rank(), -1);
  int degree = 0;
  for (const auto& comp : member(grading, "components")) {
    for (const auto& l : comp) {
      const auto i = gr.ring.find(l.get<std::string>());
      if (!i) throw MalformedGoldenFile("grading names unknown label '" + l.get<std::string>() + "'");
      if (gr.component_of[*i] != -1) throw MalformedGoldenFile("label '" + gr.ring.labels[*i] + "' graded twice");
      gr.component_of[*i] = degree;
    }
    ++degree;
  }
  for (std::size_t i = 0; i < gr.ring.rank(); ++i) {
    if (gr.component_of[i] == -1) throw MalformedGoldenFile("label '" + gr.ring.labels[i] + "' has no degree");
  }
  return gr;
}

CheckReport verify_graded(const GradedRing& gr) {
  CheckReport report;
  const FusionRing& r = gr.ring;
  const std::size_t n = r.rank();
  if (gr.component_of.size() != n || gr.group < 1) {
    report.add("shape", false, "degree map does not match the rank");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gr.component_of[i] < 0 || gr.component_of[i] >= gr.group) {
      report.add("shape", false, "degree of " + r.labels[i] + " outside Z/" + std::to_string(gr.group));
      return report;
    }
  }

  std::string detail;
  for (std::size_t i = 0; i < n && detail.empty(); ++i) {
    for (std::size_t j = 0; j < n && detail.empty(); ++j) {
      for (std::size_t k = 0; k < n && detail.empty(); ++k) {
        if (r(i, j, k) > 0 && gr.component_of[k] != mod(gr.component_of[i] + gr.component_of[j], gr.group)) {
          detail = r.labels[k] + " in " + r.labels[i] + "⊗" + r.labels[j] + " has degree " +
                   std::to_string(gr.component_of[k]);
        }
      }
    }
  }
  report.add("grading law", detail.empty(), detail);
  report.add("unit in degree 0", gr.component_of[r.unit] == 0);

  std::vector<int> sizes(static_cast<std::size_t>(gr.group), 0);
  for (const int c : gr.component_of) ++sizes[static_cast<std::size_t>(c)];
  const bool faithful = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
  report.add("faithful", faithful);

  detail.clear();
  for (std::size_t i = 0; i < n && detail.empty(); ++i) {
    if (gr.component_of[r.dual[i]] != mod(-gr.component_of[i], gr.group)) {
      detail = "dual of " + r.labels[i] + " is " + r.labels[r.dual[i]];
    }
  }
  report.add("duality inverts degree", detail.empty(), detail);

  std::vector<std::size_t> trivial;
  for (std::size_t i = 0; i < n; ++i) {
    if (gr.component_of[i] == 0) trivial.push_back(i);
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  std::vector<std::size_t> position(n, trivial.size());
  for (std::size_t p = 0; p < trivial.size(); ++p) position[trivial[p]] = p;
  for (const auto i : trivial) {
    labels.push_back(r.labels[i]);
    dual.push_back(position[r.dual[i]] < trivial.size() ? position[r.dual[i]] : 0);
  }
  FusionRing sub = FusionRing::zeros(labels, position[r.unit] < trivial.size() ? position[r.unit] : 0, dual);
  for (std::size_t a = 0; a < trivial.size(); ++a) {
    for (std::size_t b = 0; b < trivial.size(); ++b) {
      for (std::size_t c = 0; c < trivial.size(); ++c) sub(a, b, c) = r(trivial[a], trivial[b], trivial[c]);
    }
  }
  const auto type = fusion::near_group_recognize(sub);
  const bool near_group = type && *type == fusion::NearGroupType{3, 6};
  report.add("degree 0 is near-group Z3+6", near_group,
             type ? "Z" + std::to_string(type->group_order) + "+" + std::to_string(type->multiplicity)
                  : "not near-group");
  return report;
}

bool verify_commutativity(const FusionRing& ring) { return fusion::is_commutative(ring); }

CheckItem dimension_additivity(const FusionRing& ring, const std::vector<CycNum>& dims) {
  const std::size_t n = ring.rank();
  if (dims.size() != n) return {"dimension additivity", false, "dims have wrong length"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CycNum rhs;
      for (const auto& [k, m] : ring.product(i, j)) rhs += CycNum(m) * dims[k];
      const CycNum lhs = dims[i] * dims[j];
      if (!(lhs == rhs)) {
        return {"dimension additivity", false,
                "d(" + ring.labels[i] + ") d(" + ring.labels[j] + ") = " + exact::render(lhs) + " but " +
                    ring.product_string(i, j) + " has " + exact::render(rhs)};
      }
    }
  }
  return {"dimension additivity", true, {}};
}

CheckReport induction_unit_check(const GoldenTable& table, bool apply_corrections) {
  CheckReport report;
  const Json& d = table.data;
  Json lists = {{"trivial_twists", member(d, "trivial_twists")}, {"A1", member(d, "A1")}};
  if (apply_corrections && d.contains("known_discrepancies")) {
    for (const auto& kd : d["known_discrepancies"]) {
      if (!kd.contains("corrections")) continue;
      for (const auto& c : kd["corrections"]) {
        const auto list = member(c, "list").get<std::string>();
        const auto index = member(c, "index").get<std::size_t>();
        if (!lists.contains(list) || index >= lists[list].size()) throw MalformedGoldenFile("bad correction");
        lists[list][index] = member(c, "value");
      }
    }
  }
  const auto listed = summands(lists["trivial_twists"]);
  const auto a1 = summands(lists["A1"]);
  const auto a2_extra = summands(member(d, "A2_extra"));

  const wzw::AlgebraSpec spec{wzw::RankType::A2, 9};
  const CycNum eta_gen = decode_value(member(d, "eta_generator"));
  const CycNum eta[3] = {CycNum(1), eta_gen, eta_gen * eta_gen * eta_gen * eta_gen};
  auto twist = [&](const Summand& s) { return eta[s.first] * wzw::twist(spec, s.second); };
  auto dim = [&](const Summand& s) { return wzw::qdim(spec, s.second); };

  std::vector<Summand> bad;
  for (const auto& s : listed) {
    if (!(twist(s) == CycNum(1))) bad.push_back(s);
  }
  report.add("listed summands have trivial twist", bad.empty(), join_summands(bad));

  std::vector<Summand> all_trivial;
  for (int a = 0; a < 3; ++a) {
    for (const auto& w : wzw::alcove(spec)) {
      if (twist({a, w}) == CycNum(1)) all_trivial.emplace_back(a, w);
    }
  }
  std::set<Summand> listed_set(listed.begin(), listed.end());
  report.add("multiplicity-free", listed_set.size() == listed.size(),
             std::to_string(listed.size()) + " listed, " + std::to_string(listed_set.size()) + " distinct");
  const std::set<Summand> trivial_set(all_trivial.begin(), all_trivial.end());
  std::vector<Summand> missing;
  for (const auto& s : all_trivial) {
    if (!listed_set.count(s)) missing.push_back(s);
  }
  report.add("list is every trivial-twist simple", listed_set == trivial_set,
             missing.empty() ? std::to_string(trivial_set.size()) + " simples" : "missing " + join_summands(missing));

  const std::set<Summand> a1_set(a1.begin(), a1.end());
  std::set<Summand> currents;
  for (const auto& w : wzw::simple_currents(spec)) currents.emplace(0, w);
  report.add("A1 is the simple-current algebra", a1_set == currents && a1.size() == currents.size(),
             join_summands(a1));

  CycNum fp_a1, fp_a2, fp_all;
  for (const auto& s : a1) fp_a1 += dim(s);
  fp_a2 = fp_a1;
  for (const auto& s : a2_extra) fp_a2 += dim(s);
  for (const auto& s : listed) fp_all += dim(s);
  const CycNum want_a1 = decode_value(member(d, "fpdim_A1"));
  const CycNum want_a2 = decode_value(member(d, "fpdim_A2"));
  const CycNum want_all = decode_value(member(d, "fpdim_induction"));
  report.add("FPdim(A1)", fp_a1 == want_a1, exact::render(fp_a1));
  report.add("FPdim(A2)", fp_a2 == want_a2, exact::render(fp_a2));
  report.add("FPdim(I(I))", fp_all == want_all, exact::render(fp_all));
  report.add("FPdim(I(I)) = 3 FPdim(A2)", fp_all == CycNum(3) * fp_a2);

  const CycNum t = twist({1, {2, 2}});
  report.add("twist of g⊠(2,2) = 1", t == CycNum(1), exact::render(t));
  return report;
}

CheckReport induction_unit_check() { return induction_unit_check(golden_tables().at("induction-unit")); }

CheckReport component_inventory_checks(const GoldenTable& components, const GoldenTable& z2_extension,
                                       const GoldenTable& z3_extension) {
  CheckReport report;
  const Json& d = components.data;
  const int order = member(d, "group_order").get<int>();
  const auto& comps = member(d, "components");

  const GradedRing b = decode_graded(z2_extension);
  const GradedRing dd = decode_graded(z3_extension);
  const auto b_dims = decode_dims(member(z2_extension.data, "dims"), b.ring);
  const auto d_dims = decode_dims(member(z3_extension.data, "dims"), dd.ring);

  std::set<std::string> all;
  bool sizes_ok = static_cast<int>(comps.size()) == order;
  for (const auto& c : comps) {
    sizes_ok = sizes_ok && c.size() == 4;
    for (const auto& l : c) all.insert(l.get<std::string>());
  }
  const int rank = member(d, "rank").get<int>();
  report.add("six components of four", sizes_ok && order == 6 && static_cast<int>(all.size()) == rank && rank == 24,
             std::to_string(comps.size()) + " components, " + std::to_string(all.size()) + " labels");

  auto component_set = [](const Json& c) {
    std::set<std::string> s;
    for (const auto& l : c) s.insert(l.get<std::string>());
    return s;
  };
  auto graded_component = [](const GradedRing& gr, int deg) {
    std::set<std::string> s;
    for (std::size_t i = 0; i < gr.ring.rank(); ++i) {
      if (gr.component_of[i] == deg) s.insert(gr.ring.labels[i]);
    }
    return s;
  };
  std::string detail;
  for (const auto& [deg_text, source] : member(d, "sources").items()) {
    const int deg = std::stoi(deg_text);
    const GradedRing& gr = source.get<std::string>() == z2_extension.name ? b : dd;
    const int step = order / gr.group;
    if (deg % step != 0 || deg >= order ||
        component_set(comps[static_cast<std::size_t>(deg)]) != graded_component(gr, deg / step)) {
      detail += (detail.empty() ? "" : "; ") + std::string("degree ") + deg_text + " differs from " +
                source.get<std::string>();
    }
  }
  report.add("components agree with the extensions", detail.empty(), detail);

  auto dual_label = [&](const std::string& l) {
    if (const auto i = dd.ring.find(l)) return dd.ring.labels[dd.ring.dual[*i]];
    if (const auto i = b.ring.find(l)) return b.ring.labels[b.ring.dual[*i]];
    return with_star_toggled(l);
  };
  detail.clear();
  for (int h = 0; h < static_cast<int>(comps.size()) && detail.empty(); ++h) {
    const auto target = component_set(comps[static_cast<std::size_t>(mod(-h, static_cast<int>(comps.size())))]);
    for (const auto& l : comps[static_cast<std::size_t>(h)]) {
      if (!target.count(dual_label(l.get<std::string>()))) {
        detail = "dual of " + l.get<std::string>() + " is not in degree " + std::to_string(mod(-h, order));
        break;
      }
    }
  }
  report.add("duality pairs h with h^-1", detail.empty(), detail);

  std::map<std::string, CycNum> dims;
  for (std::size_t i = 0; i < b.ring.rank(); ++i) dims[b.ring.labels[i]] = b_dims[i];
  for (std::size_t i = 0; i < dd.ring.rank(); ++i) dims[dd.ring.labels[i]] = d_dims[i];

  const auto& golden_dims = member(d, "dims");
  const CycNum u_golden = decode_value(member(golden_dims, "U"));
  const CycNum t_golden = decode_value(member(golden_dims, "T"));

  CycNum uu;
  const auto coeffs = decode_combination(dd.ring, member(d, "U_times_U_dual").get<std::string>());
  for (std::size_t k = 0; k < coeffs.size(); ++k) uu += CycNum(coeffs[k]) * d_dims[k];
  const auto uu_q = fusion::to_quadratic(uu, 3);
  const auto u_root = uu_q ? fusion::exact_sqrt(*uu_q) : std::nullopt;
  const bool u_ok = u_root && u_root->to_cycnum() == u_golden;
  report.add("FPdim(U) from U⊗U*", u_ok,
             "FPdim(U)^2 = " + exact::render(uu) + ", FPdim(U) = " + (u_root ? u_root->str() : "not a square"));

  const auto& arg = member(d, "dimension_argument");
  const CycNum y = decode_value(member(arg, "Y")), v = decode_value(member(arg, "V"));
  const CycNum bound = decode_value(member(arg, "bound"));
  const bool argument_ok = y == dims.at("Y") && v == dims.at("V") && y * bound == v &&
                           v * y == CycNum(3) * bound && bound == t_golden;
  report.add("FPdim(T_j) squeezed to 1+√3", argument_ok,
             "FPdim(Y) FPdim(T) >= FPdim(V) gives >= " + exact::render(v / y) + ", three summands of V⊗Y give <= " +
                 exact::render(v * y / CycNum(3)));

  dims["U"] = dims["U*"] = u_golden;
  for (int j = 1; j <= 3; ++j) dims["T" + std::to_string(j)] = dims["T" + std::to_string(j) + "*"] = t_golden;
  CycNum trivial_dim, total;
  detail.clear();
  for (std::size_t h = 0; h < comps.size(); ++h) {
    CycNum sum;
    for (const auto& l : comps[h]) {
      const auto it = dims.find(l.get<std::string>());
      if (it == dims.end()) throw MalformedGoldenFile("no dimension for '" + l.get<std::string>() + "'");
      sum += it->second * it->second;
    }
    if (h == 0) trivial_dim = sum;
    if (!(sum == trivial_dim)) detail = "degree " + std::to_string(h) + " has " + exact::render(sum);
    total += sum;
  }
  report.add("every component has FPdim(A)", detail.empty() && total == CycNum(order) * trivial_dim,
             detail.empty() ? "FPdim(C) = " + exact::render(total) : detail);
  return report;
}

}  // namespace modcat::golden
