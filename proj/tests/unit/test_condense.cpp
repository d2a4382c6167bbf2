#include <set>

#include "doctest.h"
#include "modcat/condense/condense.hpp"
#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/fusion/fpdim.hpp"

using namespace modcat;
using exact::CycNum;
using wzw::AlgebraSpec;
using wzw::LevelWeight;
using wzw::RankType;

namespace {

const AlgebraSpec kSl3k9{RankType::A2, 9};

const condense::CondensedCategory& condensed() {
  static const auto cc = condense::condense(kSl3k9);
  return cc;
}

}  // namespace

TEST_CASE("etale check") {
  CHECK(condense::etale_check(kSl3k9).passed());
  const auto bad = condense::etale_check({RankType::A2, 4});
  CHECK_FALSE(bad.passed());
  CHECK(bad.first_failure()->detail == "level not divisible by 3");
  CHECK_FALSE(condense::etale_check({RankType::A1, 9}).passed());
  CHECK_THROWS_WITH_AS(condense::condense({RankType::A2, 4}), "PreconditionFailed: level not divisible by 3",
                       PreconditionFailed);
}

TEST_CASE("orbit partition at level 9") {
  const auto parts = condense::orbits(kSl3k9);
  CHECK(parts.fixed_points == std::vector<LevelWeight>{{3, 3}});
  CHECK(parts.free_orbits.size() == 18);
  std::size_t covered = parts.fixed_points.size();
  for (const auto& o : parts.free_orbits) {
    CHECK(o.size() == 3);
    covered += o.size();
  }
  CHECK(covered == 55);
}

TEST_CASE("local simples") {
  const auto& cc = condensed();
  std::vector<std::string> names;
  for (const auto& s : cc.simples) names.push_back(s.name);
  CHECK(names == std::vector<std::string>{"I", "Y1", "Y2", "Y3", "Y4", "Y5", "X1", "X2", "X3"});
  CHECK(cc.algebra == std::vector<LevelWeight>{{0, 0}, {0, 9}, {9, 0}});
  for (const auto& s : cc.simples) {
    CHECK(s.label.kind == (s.name[0] == 'X' ? condense::CondensedLabel::Kind::split : condense::CondensedLabel::Kind::orbit));
    for (const auto& w : s.ambient) CHECK(wzw::in_root_lattice(w));
  }
  CHECK(cc.simples[6].ambient == std::vector<LevelWeight>{{3, 3}});
}

TEST_CASE("global dimension is the ambient one over |A|^2") {
  const auto ambient = wzw::modular_data(kSl3k9).global_dimension();
  CHECK(condensed().md.global_dimension() * 9 == ambient);
}

TEST_CASE("induced fusion leaves only the split family unknown") {
  const auto partial = condense::induced_fusion(kSl3k9);
  CHECK(partial.family.size() == 3);
  const std::size_t n = partial.simples.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const bool in_family = a >= 6 || b >= 6 || c >= 6;
        if (!in_family) CHECK(partial.known[(a * n + b) * n + c] >= 0);
      }
    }
  }
  CHECK(partial.product_string(1, 1) == "I+2Y1+Y2+Y3+Y4");
  CHECK_FALSE(partial.sums.empty());
}

TEST_CASE("split resolution is unique up to relabeling and modular") {
  const auto& cc = condensed();
  CHECK(cc.resolution.solutions.size() == 1);
  CHECK(cc.resolution.modular_solutions == 1);
  CHECK(fusion::verify_ring(cc.md.ring).passed());
  CHECK(fusion::verify_modular(cc.md).passed());
}

TEST_CASE("property: resolution is independent of the search seed") {
  const auto partial = condense::induced_fusion(kSl3k9);
  const auto base = condense::resolve_split(kSl3k9, partial, 0).ring;
  for (const std::uint64_t seed : {1ULL, 1234ULL, 987654321ULL}) {
    const auto r = condense::resolve_split(kSl3k9, partial, seed);
    CHECK(r.ring == base);
    CHECK(condense::condense(kSl3k9, seed).md.S == condensed().md.S);
  }
}

TEST_CASE("property: twists are constant on every local orbit") {
  for (const int k : {3, 6, 9}) {
    const AlgebraSpec spec{RankType::A2, k};
    for (const auto& s : condense::local_simples(spec)) {
      for (const auto& w : s.ambient) CHECK(wzw::twist(spec, w) == s.twist);
    }
  }
}

TEST_CASE("condensed dims are exact FP dimensions of the condensed ring") {
  const auto fp = fusion::fp_dims(condensed().md.ring);
  REQUIRE(fp.exact);
  for (std::size_t i = 0; i < fp.exact->size(); ++i) CHECK((*fp.exact)[i].to_cycnum() == condensed().md.dims[i]);
}

TEST_CASE("near-group pipeline") {
  const auto p = condense::near_group_pipeline();
  CHECK(p.trivial_twists == std::vector<std::string>{"I⊠I", "I⊠Y5", "g⊠Y4", "g^2⊠Y4"});
  CHECK(p.fpdim_a == fusion::QuadraticInteger{24, 12, 3});
  CHECK(p.etale_candidates.size() == 2);
  CHECK(p.decompositions.size() == 2);
  CHECK(p.rejected_nodes > 0);
  REQUIRE(p.type);
  CHECK(*p.type == fusion::NearGroupType{3, 6});
  CHECK(p.fpdim_x == fusion::QuadraticInteger{3, 2, 3});
  CHECK(p.report.passed());
}

TEST_CASE("adjoint sector at level 5") {
  const auto sector = condense::adjoint_sector({RankType::A2, 5});
  CHECK(std::set<LevelWeight>(sector.weights.begin(), sector.weights.end()) ==
        std::set<LevelWeight>{{0, 0}, {0, 3}, {3, 0}, {1, 1}, {2, 2}, {1, 4}, {4, 1}});
}
