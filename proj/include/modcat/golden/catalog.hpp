#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "modcat/exact/cycnum.hpp"
#include "modcat/fusion/ring.hpp"

namespace modcat::golden {

using Json = nlohmann::json;

/// One transcribed table, immutable after loading.
struct GoldenTable {
  std::string name;
  std::string locus;
  std::string kind;
  std::filesystem::path file;
  Json data;
  /// File contents as read.
  std::string text;
};

/// Canonical text of a table: two-space indented, sorted keys, trailing
/// newline.
std::string serialize(const GoldenTable& table);

/// serialize(table) equals the file contents byte for byte.
bool round_trips(const GoldenTable& table);

struct Catalog {
  std::vector<GoldenTable> tables;

  const GoldenTable* find(std::string_view name) const;
  /// Throws MalformedGoldenFile when absent.
  const GoldenTable& at(std::string_view name) const;
};

/// Directory of the shipped golden files.
std::filesystem::path default_data_dir();

/// Reads one file; throws MalformedGoldenFile on unreadable JSON or missing
/// name / locus / kind.
GoldenTable load_table(const std::filesystem::path& file);

/// Every *.json file of `dir`, ordered by file name.
Catalog golden_tables(const std::filesystem::path& dir = default_data_dir());

/// Required member of a JSON object; throws MalformedGoldenFile naming the
/// key.
const Json& member(const Json& object, std::string_view key);

/// Exact value from its text form; symbols (e.g. {"d": "3+2√3"}) are
/// substituted as parenthesised subexpressions.
exact::CycNum decode_value(const Json& text, const Json& symbols = Json::object());

/// One transcribed product a*b = sum rhs[k] k.
struct GoldenRow {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<int> rhs;
  bool stated = true;
  std::string locus;
  std::string text;
};

struct GoldenRing {
  fusion::FusionRing ring;
  std::vector<GoldenRow> rows;
};

/// Builds the ring from its rows, expanding macros and applying the listed
/// closures ("unit": unit laws, "commutative": b*a = a*b). Duals are read
/// off the unit coefficient. Throws MalformedGoldenFile on conflicting or
/// missing products.
GoldenRing decode_ring(const Json& ring, std::string_view default_locus = {});

/// Label -> value map decoded in ring order; labels missing from the map are
/// an error.
std::vector<exact::CycNum> decode_dims(const Json& dims, const fusion::FusionRing& ring);

/// Coefficients of a combination such as "I+2f1+Y4", macros expanded.
std::vector<int> decode_combination(const fusion::FusionRing& ring, std::string_view text,
                                    const Json& macros = Json::object());

/// "2Y1+X3" style combination of basis elements.
std::string combination_string(const fusion::FusionRing& ring, const std::vector<int>& coeffs);

}  // namespace modcat::golden
