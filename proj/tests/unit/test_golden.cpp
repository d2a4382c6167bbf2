#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "modcat/errors.hpp"
#include "modcat/golden/audit.hpp"
#include "modcat/golden/catalog.hpp"
#include "modcat/golden/graded.hpp"

using namespace modcat;
using golden::Json;
using golden::Status;

namespace {

namespace fs = std::filesystem;

// Copy of the shipped tables in a fresh temporary directory.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& tag) {
    dir = fs::temp_directory_path() / ("modcat-golden-" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& e : fs::directory_iterator(golden::default_data_dir())) fs::copy_file(e.path(), dir / e.path().filename());
  }
  ~Scratch() { fs::remove_all(dir); }

  void write(const std::string& file, const std::string& text) const {
    std::ofstream(dir / file, std::ios::binary) << text;
  }
  Json read(const std::string& file) const {
    std::ifstream in(dir / file);
    return Json::parse(in);
  }
};

std::size_t count_at(const golden::Audit& audit, const std::string& locus, Status status) {
  std::size_t n = 0;
  for (const auto& l : audit.lines) n += l.locus == locus && l.status == status;
  return n;
}

}  // namespace

TEST_CASE("every golden file round-trips byte for byte") {
  const auto c = golden::golden_tables();
  CHECK(c.tables.size() == 11);
  for (const auto& t : c.tables) {
    INFO(t.file.string());
    CHECK(golden::round_trips(t));
  }
  CHECK_THROWS_AS(c.at("no-such-table"), MalformedGoldenFile);
}

TEST_CASE("value decoding with symbols") {
  const Json symbols{{"d", "3+2√3"}};
  CHECK(golden::decode_value("2(1+d)", symbols) == exact::quadratic(8, 4, 3));
  CHECK(golden::decode_value("-(1+2ζ_4)d", symbols) ==
        -(exact::CycNum(1) + exact::CycNum::root_of_unity(4, 1) * 2) * exact::quadratic(3, 2, 3));
  CHECK_THROWS_AS(golden::decode_value("2(1+", symbols), MalformedGoldenFile);
}

TEST_CASE("ring decoding rejects conflicting and missing rows") {
  Json ring = Json::parse(R"({"labels": ["I", "g"], "unit": "I", "closure": ["unit"],
                              "rows": [{"lhs": ["g", "g"], "rhs": "I"}]})");
  const auto ok = golden::decode_ring(ring, "here");
  CHECK(fusion::verify_ring(ok.ring).passed());
  CHECK(ok.rows[0].locus == "here");

  Json conflict = ring;
  conflict["rows"].push_back(Json::parse(R"({"lhs": ["g", "g"], "rhs": "g"})"));
  CHECK_THROWS_AS(golden::decode_ring(conflict, ""), MalformedGoldenFile);

  Json missing = ring;
  missing["rows"] = Json::array();
  CHECK_THROWS_AS(golden::decode_ring(missing, ""), MalformedGoldenFile);

  Json unknown = ring;
  unknown["rows"][0]["rhs"] = "h";
  CHECK_THROWS_AS(golden::decode_ring(unknown, ""), MalformedGoldenFile);
}

TEST_CASE("extension rings: gradings and commutativity") {
  const auto c = golden::golden_tables();
  const auto b = golden::decode_graded(c.at("z2-extension"));
  CHECK(golden::verify_graded(b).passed());
  CHECK_FALSE(golden::verify_commutativity(b.ring));

  auto wrong = b;
  wrong.group = 3;
  CHECK_FALSE(golden::verify_graded(wrong).passed());

  const auto d = golden::decode_graded(c.at("z3-extension"));
  CHECK(golden::verify_graded(d).passed());
  CHECK(golden::verify_commutativity(d.ring));
  CHECK(golden::verify_commutativity(fusion::cyclic_group_ring(3)));
}

TEST_CASE("induction unit: stated list fails, corrected list passes") {
  const auto c = golden::golden_tables();
  const auto& t = c.at("induction-unit");
  CHECK_FALSE(golden::induction_unit_check(t, false).passed());
  const auto fixed = golden::induction_unit_check(t, true);
  CHECK(fixed.passed());
  CHECK(fixed.find("FPdim(I(I))")->detail == "72+36√3");
}

TEST_CASE("component inventory") {
  const auto c = golden::golden_tables();
  CHECK(golden::component_inventory_checks(c.at("z6-components"), c.at("z2-extension"), c.at("z3-extension")).passed());
}

TEST_CASE("default audit has no FAIL and warns where expected") {
  const auto audit = golden::verify_paper();
  CHECK(audit.passed());
  CHECK(audit.count(Status::warn) == 4);
  const auto c = golden::golden_tables();
  CHECK(count_at(audit, c.at("near-group").locus, Status::warn) == 1);
  CHECK(count_at(audit, c.at("induction-unit").locus, Status::warn) == 3);
  CHECK(audit.notes.size() == 3);
}

TEST_CASE("fault injection: a corrupted S entry fails at its locus") {
  Scratch s("s-entry");
  Json j = s.read("condensed_S.json");
  const std::string locus = j["locus"];
  j["entries"][2][2] = "-(1-2ζ_4)d";
  s.write("condensed_S.json", j.dump(2) + "\n");
  const auto audit = golden::verify_paper(s.dir);
  CHECK_FALSE(audit.passed());
  CHECK(count_at(audit, locus, Status::fail) >= 1);
  for (const auto& l : audit.lines) {
    if (l.status == Status::fail) CHECK(l.locus == locus);
  }
}

TEST_CASE("fault injection: a corrupted fusion row fails with a diff") {
  Scratch s("fusion-row");
  Json j = s.read("condensed_fusion.json");
  auto& rows = j["ring"]["rows"];
  std::string row_locus;
  for (auto& r : rows) {
    if (r["lhs"] == Json::array({"Y1", "Y1"})) {
      r["rhs"] = "I+Y1+Y2+Y3+Y4";
      row_locus = r.value("locus", std::string(j["locus"]));
    }
  }
  REQUIRE_FALSE(row_locus.empty());
  s.write("condensed_fusion.json", j.dump(2) + "\n");
  const auto audit = golden::verify_paper(s.dir);
  CHECK_FALSE(audit.passed());
  bool diff = false;
  for (const auto& l : audit.lines) {
    if (l.status == Status::fail && l.locus == row_locus && l.detail.find("Y1⊗Y1") != std::string::npos) diff = true;
  }
  CHECK(diff);
}

TEST_CASE("fault injection: unparsable and non-canonical files") {
  Scratch s("broken");
  s.write("condensed_twists.json", "{ not json");
  auto audit = golden::verify_paper(s.dir);
  CHECK_FALSE(audit.passed());

  Scratch t("spacing");
  Json j = t.read("extension_dimension.json");
  t.write("extension_dimension.json", j.dump() + "\n");
  audit = golden::verify_paper(t.dir);
  CHECK_FALSE(audit.passed());
  CHECK(count_at(audit, j["locus"], Status::fail) == 1);
}
