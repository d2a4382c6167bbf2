#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "modcat/cli/commands.hpp"
#include "modcat/cli/serialize.hpp"
#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/wzw/wzw.hpp"

using namespace modcat;
using cli::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "modcat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_starting(const std::string& text, char c) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] == c) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("wzw dims at level 9") {
  const auto r = invoke({"wzw", "--algebra", "sl3", "--level", "9", "--dims"});
  CHECK(r.code == 0);
  const auto rows = lines_starting(r.out, '(');
  CHECK(rows.size() == 55);
  CHECK(std::find(rows.begin(), rows.end(), "(1,1)  3+2√3") != rows.end());
}

TEST_CASE("wzw twists at sl2 level 4") {
  const auto r = invoke({"wzw", "--algebra", "sl2", "--level", "4", "--twists"});
  CHECK(r.code == 0);
  CHECK(r.out == "(0)  1\n(1)  ζ_8\n(2)  ζ_3\n(3)  ζ_8^5\n(4)  1\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({"wzw", "--algebra", "sl3", "--level", "0", "--dims"}).code == 2);
  CHECK(invoke({"wzw", "--algebra", "sl3", "--level", "x"}).code == 2);
  CHECK(invoke({"wzw", "--algebra", "so5", "--level", "3"}).code == 2);
  CHECK(invoke({"wzw", "--level", "3", "--frobnicate"}).code == 2);
  CHECK(invoke({"wzw"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"condense", "--help"}).code == 0);
}

TEST_CASE("condense") {
  const auto r = invoke({"condense", "--algebra", "sl3", "--level", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# simples (9)") != std::string::npos);

  const auto checked = invoke({"condense", "--algebra", "sl3", "--level", "9", "--check"});
  CHECK(checked.code == 0);
  CHECK(checked.out.find("FAIL") == std::string::npos);
  CHECK(lines_starting(checked.out, 'P').size() >= 10);

  const auto bad = invoke({"condense", "--algebra", "sl3", "--level", "4"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("level not divisible by 3") != std::string::npos);
}

TEST_CASE("verify-paper exits 0 with warnings only") {
  const auto r = invoke({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL ") == std::string::npos);
  CHECK(r.out.find("WARN") != std::string::npos);
  CHECK(r.out.find("notes:") != std::string::npos);
  CHECK(invoke({"verify-paper", "--data-dir", "/nonexistent/modcat"}).code == 1);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"wzw", "--algebra", "sl3", "--level", "6", "--fusion", "--s"},
           {"condense", "--algebra", "sl3", "--level", "9", "--json"},
           {"verify-paper", "--json"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("--output writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "modcat-cli-output.json";
  const auto r = invoke({"wzw", "--algebra", "sl2", "--level", "3", "--json", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["kind"] == "wzw");
  std::filesystem::remove(path);
}

TEST_CASE("JSON round-trips to equal values") {
  const auto md = wzw::modular_data({wzw::RankType::A2, 9});
  const Json j = Json::parse(cli::to_json(md).dump());
  const auto back = cli::modular_from_json(j);
  CHECK(back.ring == md.ring);
  CHECK(back.dims == md.dims);
  CHECK(back.twists == md.twists);
  CHECK(back.S == md.S);

  const auto r = invoke({"condense", "--algebra", "sl3", "--level", "9", "--json"});
  const Json c = Json::parse(r.out);
  const auto cmd = cli::modular_from_json(c["category"]["modular_data"]);
  CHECK(fusion::verify_modular(cmd).passed());
  CHECK(c["category"]["ambient_map"]["X1"] == Json::array({"(3,3)"}));

  const auto v = exact::CycNum::root_of_unity(5, 2) / 3 + exact::quadratic(1, 1, 3);
  CHECK(cli::cycnum_from_json(cli::to_json(v)) == v);
  Json tampered = cli::to_json(exact::quadratic(3, 2, 3));
  tampered["text"] = "3+√3";
  CHECK_THROWS_AS(cli::cycnum_from_json(tampered), ParseError);
}
