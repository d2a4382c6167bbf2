#include "modcat/cli/serialize.hpp"

#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/wzw/wzw.hpp"

namespace modcat::cli {

using exact::CycNum;

namespace {

template <class T, class F>
Json array_of(const std::vector<T>& items, F f) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(f(x));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

}  // namespace

Json to_json(const CycNum& value) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : value.coeffs()) {
    num.push_back(c.get_num().get_str());
    den.push_back(c.get_den().get_str());
  }
  return {{"order", value.order()}, {"num", num}, {"den", den}, {"text", exact::render(value)}};
}

CycNum cycnum_from_json(const Json& j) {
  const int order = field(j, "order").get<int>();
  const auto& num = field(j, "num");
  const auto& den = field(j, "den");
  if (num.size() != den.size()) throw ParseError("num and den differ in length");
  std::vector<exact::Rational> coeffs;
  for (std::size_t i = 0; i < num.size(); ++i) {
    exact::Rational q(exact::BigInt(num[i].get<std::string>()), exact::BigInt(den[i].get<std::string>()));
    q.canonicalize();
    coeffs.push_back(q);
  }
  CycNum value = CycNum::from_coeffs(order, coeffs);
  if (j.contains("text") && !(exact::parse_cycnum(j["text"].get<std::string>()) == value)) {
    throw ParseError("text '" + j["text"].get<std::string>() + "' disagrees with the coefficients");
  }
  return value;
}

Json to_json(const fusion::FusionRing& ring) {
  return {{"labels", ring.labels}, {"unit", ring.unit}, {"dual", ring.dual}, {"N", ring.N}};
}

fusion::FusionRing ring_from_json(const Json& j) {
  fusion::FusionRing r;
  r.labels = field(j, "labels").get<std::vector<std::string>>();
  r.unit = field(j, "unit").get<std::size_t>();
  r.dual = field(j, "dual").get<std::vector<std::size_t>>();
  r.N = field(j, "N").get<std::vector<int>>();
  const std::size_t n = r.labels.size();
  if (r.dual.size() != n || r.N.size() != n * n * n || r.unit >= n) throw ParseError("ring shape mismatch");
  return r;
}

Json to_json(const fusion::ModularData& md) {
  Json s = Json::array();
  for (const auto& row : md.S) s.push_back(array_of(row, [](const CycNum& v) { return to_json(v); }));
  return {{"ring", to_json(md.ring)},
          {"dims", array_of(md.dims, [](const CycNum& v) { return to_json(v); })},
          {"twists", array_of(md.twists, [](const CycNum& v) { return to_json(v); })},
          {"S", s}};
}

fusion::ModularData modular_from_json(const Json& j) {
  fusion::ModularData md;
  md.ring = ring_from_json(field(j, "ring"));
  for (const auto& v : field(j, "dims")) md.dims.push_back(cycnum_from_json(v));
  for (const auto& v : field(j, "twists")) md.twists.push_back(cycnum_from_json(v));
  for (const auto& row : field(j, "S")) {
    std::vector<CycNum> r;
    for (const auto& v : row) r.push_back(cycnum_from_json(v));
    md.S.push_back(std::move(r));
  }
  const std::size_t n = md.ring.rank();
  if (md.dims.size() != n || md.twists.size() != n || md.S.size() != n) throw ParseError("modular data shape mismatch");
  return md;
}

Json to_json(const condense::CondensedCategory& cc) {
  auto wl = [&](const wzw::LevelWeight& w) { return wzw::label(cc.spec, w); };
  Json simples = Json::array();
  Json ambient_map = Json::object();
  for (const auto& s : cc.simples) {
    Json ambient = Json::array();
    for (const auto& w : s.ambient) ambient.push_back(wl(w));
    ambient_map[s.name] = ambient;
    simples.push_back({{"name", s.name},
                       {"kind", s.label.kind == condense::CondensedLabel::Kind::orbit ? "orbit" : "split"},
                       {"orbit_rep", wl(s.label.orbit_rep)},
                       {"split_index", s.label.split_index},
                       {"display", wl(s.display)},
                       {"ambient", ambient},
                       {"dim", to_json(s.dim)},
                       {"twist", to_json(s.twist)}});
  }
  Json algebra = Json::array();
  for (const auto& w : cc.algebra) algebra.push_back(wl(w));
  return {{"algebra", wzw::algebra_name(cc.spec.rank_type)},
          {"level", cc.spec.level},
          {"etale_algebra", algebra},
          {"simples", simples},
          {"ambient_map", ambient_map},
          {"modular_data", to_json(cc.md)},
          {"resolution",
           {{"solutions", cc.resolution.solutions.size()},
            {"modular_solutions", cc.resolution.modular_solutions},
            {"nodes", cc.resolution.nodes},
            {"variables", cc.resolution.variables}}}};
}

Json to_json(const golden::Audit& audit) {
  Json lines = Json::array();
  for (const auto& l : audit.lines) {
    lines.push_back({{"locus", l.locus},
                     {"check", l.check},
                     {"status", std::string(golden::status_name(l.status))},
                     {"detail", l.detail}});
  }
  return {{"lines", lines},
          {"notes", audit.notes},
          {"summary",
           {{"pass", audit.count(golden::Status::pass)},
            {"warn", audit.count(golden::Status::warn)},
            {"fail", audit.count(golden::Status::fail)},
            {"passed", audit.passed()}}}};
}

}  // namespace modcat::cli
