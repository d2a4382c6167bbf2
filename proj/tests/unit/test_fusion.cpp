#include "../support/generators.hpp"
#include "doctest.h"
#include "modcat/errors.hpp"
#include "modcat/exact/format.hpp"
#include "modcat/fusion/dimension_search.hpp"
#include "modcat/fusion/fpdim.hpp"
#include "modcat/fusion/modular.hpp"
#include "modcat/fusion/quadratic.hpp"
#include "modcat/fusion/ring.hpp"

using namespace modcat;
using exact::CycNum;
using fusion::FusionRing;
using fusion::QuadraticInteger;

namespace {

// Near-group ring G+n on labels I, g, ..., X with G = Z/order.
FusionRing near_group_ring(int order, int n) {
  const auto group = fusion::cyclic_group_ring(order);
  auto labels = group.labels;
  labels.push_back("X");
  std::vector<std::size_t> dual = group.dual;
  dual.push_back(static_cast<std::size_t>(order));
  auto r = FusionRing::zeros(labels, 0, dual);
  const std::size_t x = static_cast<std::size_t>(order);
  for (std::size_t a = 0; a < x; ++a) {
    for (std::size_t b = 0; b < x; ++b) {
      for (std::size_t c = 0; c < x; ++c) r(a, b, c) = group(a, b, c);
    }
    r(a, x, x) = 1;
    r(x, a, x) = 1;
    r(x, x, a) = 1;
  }
  r(x, x, x) = n;
  return r;
}

}  // namespace

TEST_CASE("cyclic group rings") {
  for (int n = 1; n <= 7; ++n) {
    const auto r = fusion::cyclic_group_ring(n);
    CHECK(fusion::verify_ring(r).passed());
    CHECK(fusion::is_commutative(r));
    for (std::size_t i = 0; i < r.rank(); ++i) CHECK(r.is_invertible(i));
  }
  CHECK(fusion::cyclic_group_ring(3).labels == std::vector<std::string>{"I", "g", "g^2"});
}

TEST_CASE("near-group recognition") {
  const auto r = near_group_ring(3, 6);
  CHECK(fusion::verify_ring(r).passed());
  const auto t = fusion::near_group_recognize(r);
  REQUIRE(t);
  CHECK(*t == fusion::NearGroupType{3, 6});
  CHECK_FALSE(fusion::near_group_recognize(fusion::cyclic_group_ring(3)));
  CHECK(r.product_string(3, 3) == "I+g+g^2+6X");
}

TEST_CASE("verify_ring reports the first broken law") {
  auto r = near_group_ring(3, 6);
  r(1, 3, 3) = 2;
  const auto rep = fusion::verify_ring(r);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.first_failure());
  CHECK(rep.find("unit")->passed);
}

TEST_CASE("FP dimensions of a near-group ring are exact") {
  const auto fp = fusion::fp_dims(near_group_ring(3, 6));
  REQUIRE(fp.exact);
  CHECK((*fp.exact)[3] == QuadraticInteger{3, 2, 3});
  const auto fp2 = fusion::fp_dims(near_group_ring(3, 1));
  CHECK(std::abs(fp2.values[3] - (1 + std::sqrt(13.0)) / 2) < 1e-9);
  CHECK_FALSE(fp2.exact);
}

TEST_CASE("quadratic integers") {
  const QuadraticInteger d{3, 2, 3};
  CHECK(d * d == QuadraticInteger{21, 12, 3});
  CHECK(d.norm() == -3);
  CHECK(fusion::exact_sqrt(QuadraticInteger{21, 12, 3}) == d);
  CHECK(fusion::exact_sqrt(QuadraticInteger{4, 2, 3}) == QuadraticInteger{1, 1, 3});
  CHECK_FALSE(fusion::exact_sqrt(QuadraticInteger{3, 2, 3}));
  CHECK_FALSE(fusion::exact_sqrt(QuadraticInteger{-1, 0, 3}));
  CHECK(fusion::exact_quotient(QuadraticInteger{24, 12, 3}, QuadraticInteger{3, 0, 3}) == QuadraticInteger{8, 4, 3});
  CHECK(QuadraticInteger{2, 1, 3}.divides(QuadraticInteger{1, 0, 3}));
  CHECK(d.str() == "3+2√3");
  CHECK(fusion::to_quadratic(exact::quadratic(1, 1, 2), 2) == QuadraticInteger{1, 1, 2});
  CHECK_FALSE(fusion::to_quadratic(CycNum::root_of_unity(4, 1), 3));
}

TEST_CASE("sum-of-squares search") {
  const auto one = fusion::sum_of_squares_search(QuadraticInteger{7, 2, 3}, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<QuadraticInteger>{{1, 1, 3}});
  CHECK(fusion::sum_of_squares_search(QuadraticInteger{6, 2, 3}, 3).empty());
  const auto two = fusion::sum_of_squares_search(QuadraticInteger{24, 12, 3}, 3);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<QuadraticInteger>{{3, 2, 3}});
  CHECK(two[1] == std::vector<QuadraticInteger>(3, QuadraticInteger{2, 1, 3}));
}

TEST_CASE("pointed modular data of Z3") {
  const auto md = fusion::pointed_modular_data(fusion::cyclic_quadratic_form(3, CycNum::root_of_unity(3, 1)));
  CHECK(md.twists[1] == CycNum::root_of_unity(3, 1));
  CHECK(md.twists[2] == CycNum::root_of_unity(3, 1));
  CHECK(fusion::verify_modular(md).passed());
  CHECK(fusion::verlinde(md) == md.ring.N);
  const auto [pp, pm] = fusion::gauss_sums(md);
  CHECK(pp * pm == CycNum(3));
}

TEST_CASE("degenerate twists give a singular S-matrix") {
  const auto ring = fusion::cyclic_group_ring(2);
  fusion::ModularData md{ring, {1, 1}, {1, 1}, {}};
  md.S = fusion::balancing_S(ring, md.dims, md.twists);
  CHECK_THROWS_AS(fusion::verlinde(md), SingularS);
  CHECK_FALSE(fusion::verify_modular(md).passed());
}

TEST_CASE("Deligne products multiply data") {
  const auto a = fusion::pointed_modular_data(fusion::cyclic_quadratic_form(3, CycNum::root_of_unity(3, 1)));
  const auto b = fusion::pointed_modular_data(fusion::cyclic_quadratic_form(3, CycNum::root_of_unity(3, 2)));
  const auto p = fusion::deligne_product(a, b);
  CHECK(p.rank() == 9);
  CHECK(p.ring.labels[4] == "g⊠g");
  CHECK(fusion::verify_modular(p).passed());
  // eta(a) eta'(b) = ζ_3^(a^2 - b^2) is trivial iff a = ±b.
  CHECK(fusion::count_trivial_twists(p).count == 5);
}

TEST_CASE("property: relabeling preserves ring axioms") {
  testgen::Gen gen(42);
  const auto base = near_group_ring(3, 6);
  for (int s = 0; s < 50; ++s) {
    std::vector<std::size_t> perm{0, 1, 2, 3};
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
      std::swap(perm[i], perm[static_cast<std::size_t>(gen.integer(0, static_cast<long long>(i)))]);
    }
    const auto r = base.permuted(perm);
    CHECK(fusion::verify_ring(r).passed());
    CHECK(fusion::near_group_recognize(r) == fusion::NearGroupType{3, 6});
  }
}
