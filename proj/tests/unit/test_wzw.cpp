#include <set>

#include "../support/generators.hpp"
#include "doctest.h"
#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/golden/graded.hpp"
#include "modcat/wzw/wzw.hpp"

using namespace modcat;
using exact::CycNum;
using wzw::AlgebraSpec;
using wzw::LevelWeight;
using wzw::RankType;

namespace {

const AlgebraSpec kSl3k9{RankType::A2, 9};

// Numerical Weyl-dimension oracle for sl3 at level k.
double qdim_float(int k, const LevelWeight& w) {
  const double t = std::numbers::pi / (k + 3);
  return std::sin((w.m1 + 1) * t) * std::sin((w.m2 + 1) * t) * std::sin((w.m1 + w.m2 + 2) * t) /
         (std::sin(2 * t) * std::sin(t) * std::sin(t));
}

}  // namespace

TEST_CASE("alcove sizes") {
  CHECK(wzw::alcove(kSl3k9).size() == 55);
  CHECK(wzw::alcove({RankType::A2, 5}).size() == 21);
  CHECK(wzw::alcove({RankType::A1, 4}).size() == 5);
  CHECK_THROWS_AS(wzw::validate({RankType::A2, 0}), InvalidArgument);
}

TEST_CASE("quantum dimensions at level 9") {
  CHECK(wzw::qdim(kSl3k9, {1, 1}) == exact::quadratic(3, 2, 3));
  CHECK(wzw::qdim(kSl3k9, {9, 0}) == CycNum(1));
  for (const auto& w : wzw::alcove(kSl3k9)) {
    CHECK(std::abs(wzw::qdim(kSl3k9, w).embed().real() - qdim_float(9, w)) < 1e-9);
  }
}

TEST_CASE("twists") {
  CHECK(wzw::twist({RankType::A2, 5}, {3, 0}) == CycNum::root_of_unity(4, 3));
  CHECK(wzw::twist(kSl3k9, {9, 0}) == CycNum(1));
  CHECK(wzw::twist(kSl3k9, {1, 1}) == CycNum::root_of_unity(4, 1));
  std::vector<std::string> sl2;
  for (const auto& w : wzw::alcove({RankType::A1, 4})) sl2.push_back(exact::render(wzw::twist({RankType::A1, 4}, w)));
  CHECK(sl2 == std::vector<std::string>{"1", "ζ_8", "ζ_3", "ζ_8^5", "1"});
}

TEST_CASE("simple currents") {
  CHECK(wzw::simple_currents(kSl3k9) == std::vector<LevelWeight>{{0, 0}, {0, 9}, {9, 0}});
  CHECK(wzw::current_action(kSl3k9, {9, 0}, {1, 1}) == LevelWeight{7, 1});
  CHECK_THROWS_AS(wzw::current_action(kSl3k9, {1, 1}, {1, 1}), NotASimpleCurrent);
}

TEST_CASE("classical tensor products") {
  const AlgebraSpec spec{RankType::A2, 20};
  const auto p = wzw::classical_tensor(spec, {1, 0}, {1, 0});
  CHECK(p == std::vector<std::pair<LevelWeight, int>>{{{0, 1}, 1}, {{2, 0}, 1}});
  const auto adj = wzw::classical_tensor(spec, {1, 1}, {1, 1});
  auto dim = [&](const LevelWeight& w) {
    int d = 0;
    for (const auto& [mu, m] : wzw::weight_multiset(spec, w)) d += m;
    return d;
  };
  int total = 0, summands = 0;
  for (const auto& [w, m] : adj) {
    total += m * dim(w);
    summands += m;
  }
  CHECK(total == 64);
  CHECK(summands == 6);
}

TEST_CASE("level-5 fusion of (1,4) with itself") {
  const auto p = wzw::fuse({RankType::A2, 5}, {1, 4}, {1, 4});
  CHECK(p == std::vector<std::pair<LevelWeight, int>>{{{3, 0}, 1}, {{4, 1}, 1}});
}

TEST_CASE("modular data of small levels") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(fusion::verify_modular(wzw::modular_data({RankType::A2, k})).passed());
    CHECK(fusion::verify_modular(wzw::modular_data({RankType::A1, k})).passed());
  }
}

TEST_CASE("property: level-9 fusion is associative on every triple") {
  const auto r = wzw::fusion_ring(kSl3k9);
  const auto rep = fusion::verify_ring(r);
  CHECK(rep.find("associativity")->passed);
  CHECK(rep.passed());
  CHECK(fusion::is_commutative(r));
}

TEST_CASE("property: dimensions are additive on every pair") {
  const auto md = wzw::modular_data(kSl3k9);
  CHECK(golden::dimension_additivity(md.ring, md.dims).passed);
}

TEST_CASE("property: random fusion products preserve dimension and duality") {
  for (const std::uint64_t seed : {3ULL, 11ULL, 29ULL}) {
    testgen::Gen gen(seed);
    for (int s = 0; s < 40; ++s) {
      const AlgebraSpec spec{gen.integer(0, 1) ? RankType::A2 : RankType::A1, static_cast<int>(gen.integer(1, 12))};
      const auto a = gen.weight(spec), b = gen.weight(spec);
      const auto ab = wzw::fuse(spec, a, b);
      CycNum sum = 0;
      for (const auto& [w, m] : ab) sum += wzw::qdim(spec, w) * m;
      CHECK(sum == wzw::qdim(spec, a) * wzw::qdim(spec, b));
      CHECK(ab == wzw::fuse(spec, b, a));
      const auto with_dual = wzw::fuse(spec, a, wzw::dual(spec, a));
      CHECK(with_dual.front() == std::pair<LevelWeight, int>{{0, 0}, 1});
    }
  }
}

TEST_CASE("property: simple currents act with twist ratio fixed on root-lattice orbits") {
  for (const int k : {3, 6, 9, 12}) {
    const AlgebraSpec spec{RankType::A2, k};
    for (const auto& w : wzw::alcove(spec)) {
      if (!wzw::in_root_lattice(w)) continue;
      const auto moved = wzw::current_action(spec, {k, 0}, w);
      CHECK(wzw::twist(spec, moved) == wzw::twist(spec, w));
    }
  }
}
