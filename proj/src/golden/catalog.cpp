#include "modcat/golden/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"

namespace modcat::golden {

namespace {

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw MalformedGoldenFile(file.string() + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_terms(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<int> parse_combination(const fusion::FusionRing& ring, const Json& macros, std::string_view text,
                                   int depth) {
  if (depth > 4) throw MalformedGoldenFile("macro expansion too deep in '" + std::string(text) + "'");
  std::vector<int> out(ring.rank(), 0);
  if (trim(text) == "0") return out;
  for (const auto& term : split_terms(text)) {
    if (term.empty()) throw MalformedGoldenFile("empty term in '" + std::string(text) + "'");
    std::size_t p = 0;
    while (p < term.size() && std::isdigit(static_cast<unsigned char>(term[p]))) ++p;
    const int coeff = p == 0 ? 1 : std::stoi(term.substr(0, p));
    const std::string name = term.substr(p);
    if (macros.is_object() && macros.contains(name)) {
      if (!macros[name].is_string()) throw MalformedGoldenFile("macro '" + name + "' is not a string");
      const auto inner = parse_combination(ring, macros, macros[name].get<std::string>(), depth + 1);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += coeff * inner[k];
    } else if (const auto k = ring.find(name)) {
      out[*k] += coeff;
    } else {
      throw MalformedGoldenFile("unknown label '" + name + "' in '" + std::string(text) + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<int> decode_combination(const fusion::FusionRing& ring, std::string_view text, const Json& macros) {
  return parse_combination(ring, macros, text, 0);
}

namespace {

std::string as_string(const Json& j, std::string_view what) {
  if (!j.is_string()) throw MalformedGoldenFile(std::string(what) + " is not a string");
  return j.get<std::string>();
}

}  // namespace

std::string serialize(const GoldenTable& table) { return table.data.dump(2) + "\n"; }

bool round_trips(const GoldenTable& table) { return serialize(table) == table.text; }

const GoldenTable* Catalog::find(std::string_view name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const GoldenTable& Catalog::at(std::string_view name) const {
  if (const auto* t = find(name)) return *t;
  throw MalformedGoldenFile("no golden table named '" + std::string(name) + "'");
}

std::filesystem::path default_data_dir() { return std::filesystem::path(MODCAT_DATA_DIR) / "golden"; }

const Json& member(const Json& object, std::string_view key) {
  const std::string k(key);
  if (!object.is_object() || !object.contains(k)) throw MalformedGoldenFile("missing key '" + k + "'");
  return object[k];
}

GoldenTable load_table(const std::filesystem::path& file) {
  GoldenTable t;
  t.file = file;
  t.text = read_file(file);
  try {
    t.data = Json::parse(t.text);
  } catch (const Json::parse_error& e) {
    throw MalformedGoldenFile(file.filename().string() + ": " + e.what());
  }
  try {
    t.name = as_string(member(t.data, "name"), "name");
    t.locus = as_string(member(t.data, "locus"), "locus");
    t.kind = as_string(member(t.data, "kind"), "kind");
  } catch (const MalformedGoldenFile& e) {
    throw MalformedGoldenFile(file.filename().string() + ": " + e.what());
  }
  return t;
}

Catalog golden_tables(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw MalformedGoldenFile(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Catalog c;
  for (const auto& f : files) c.tables.push_back(load_table(f));
  return c;
}

exact::CycNum decode_value(const Json& text, const Json& symbols) {
  std::string s = as_string(text, "value");
  if (symbols.is_object()) {
    for (const auto& [name, value] : symbols.items()) {
      const std::string replacement = "(" + as_string(value, "symbol " + name) + ")";
      std::string out;
      for (std::size_t i = 0; i < s.size();) {
        if (s.compare(i, name.size(), name) == 0) {
          out += replacement;
          i += name.size();
        } else {
          out += s[i++];
        }
      }
      s = std::move(out);
    }
  }
  try {
    return exact::parse_cycnum(s);
  } catch (const ParseError& e) {
    throw MalformedGoldenFile("value '" + text.get<std::string>() + "': " + e.what());
  }
}

GoldenRing decode_ring(const Json& ring_json, std::string_view default_locus) {
  std::vector<std::string> labels;
  for (const auto& l : member(ring_json, "labels")) labels.push_back(as_string(l, "label"));
  const std::size_t n = labels.size();
  if (n == 0) throw MalformedGoldenFile("ring has no labels");

  GoldenRing out;
  out.ring = fusion::FusionRing::zeros(labels, 0, std::vector<std::size_t>(n, 0));
  auto& r = out.ring;
  const auto unit = r.find(as_string(member(ring_json, "unit"), "unit"));
  if (!unit) throw MalformedGoldenFile("unit is not a label");
  r.unit = *unit;

  bool unit_closure = false, commutative = false;
  if (ring_json.contains("closure")) {
    for (const auto& c : ring_json["closure"]) {
      const auto name = as_string(c, "closure");
      if (name == "unit") {
        unit_closure = true;
      } else if (name == "commutative") {
        commutative = true;
      } else {
        throw MalformedGoldenFile("unknown closure '" + name + "'");
      }
    }
  }
  const Json macros = ring_json.contains("macros") ? ring_json["macros"] : Json::object();

  std::vector<int> filled(n * n, 0);
  auto assign = [&](std::size_t a, std::size_t b, const std::vector<int>& rhs) {
    if (filled[a * n + b]) {
      for (std::size_t k = 0; k < n; ++k) {
        if (r(a, b, k) != rhs[k]) {
          throw MalformedGoldenFile("conflicting rows for " + labels[a] + "⊗" + labels[b] + ": " +
                                    r.product_string(a, b) + " vs " + combination_string(r, rhs));
        }
      }
      return;
    }
    filled[a * n + b] = 1;
    for (std::size_t k = 0; k < n; ++k) r(a, b, k) = rhs[k];
  };

  if (unit_closure) {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> e(n, 0);
      e[x] = 1;
      assign(r.unit, x, e);
      assign(x, r.unit, e);
    }
  }
  for (const auto& row : member(ring_json, "rows")) {
    const auto& lhs = member(row, "lhs");
    if (!lhs.is_array() || lhs.size() != 2) throw MalformedGoldenFile("row lhs must have two labels");
    GoldenRow gr;
    const auto a = r.find(as_string(lhs[0], "lhs")), b = r.find(as_string(lhs[1], "lhs"));
    if (!a || !b) throw MalformedGoldenFile("row lhs uses an unknown label");
    gr.a = *a;
    gr.b = *b;
    gr.text = as_string(member(row, "rhs"), "rhs");
    gr.rhs = parse_combination(r, macros, gr.text, 0);
    gr.stated = row.contains("stated") ? row["stated"].get<bool>() : true;
    gr.locus = row.contains("locus") ? as_string(row["locus"], "locus") : std::string(default_locus);
    assign(gr.a, gr.b, gr.rhs);
    if (commutative) assign(gr.b, gr.a, gr.rhs);
    out.rows.push_back(std::move(gr));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!filled[a * n + b]) throw MalformedGoldenFile("no row for " + labels[a] + "⊗" + labels[b]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    r.dual[i] = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (r(i, j, r.unit) > 0) {
        r.dual[i] = j;
        break;
      }
    }
  }
  return out;
}

std::vector<exact::CycNum> decode_dims(const Json& dims, const fusion::FusionRing& ring) {
  std::vector<exact::CycNum> out;
  for (const auto& l : ring.labels) {
    if (!dims.contains(l)) throw MalformedGoldenFile("no dimension for '" + l + "'");
    out.push_back(decode_value(dims[l]));
  }
  return out;
}

std::string combination_string(const fusion::FusionRing& ring, const std::vector<int>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (coeffs[k] != 1) out += std::to_string(coeffs[k]);
    out += ring.labels[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace modcat::golden
