#include <cmath>
#include <complex>
#include <numbers>

#include "../support/generators.hpp"
#include "doctest.h"
#include "modcat/errors.hpp"
#include "modcat/exact/cycnum.hpp"
#include "modcat/exact/format.hpp"

using namespace modcat;
using exact::CycNum;
using exact::Rational;

namespace {

constexpr double kTol = 1e-9;
constexpr std::uint64_t kSeeds[] = {1, 7, 20260917};

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < kTol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("quadratic surds square to their radicands") {
  CHECK(exact::sqrt3() * exact::sqrt3() == CycNum(3));
  CHECK(exact::sqrt2() * exact::sqrt2() == CycNum(2));
  const CycNum d = exact::quadratic(3, 2, 3);
  CHECK(d * d == exact::quadratic(21, 12, 3));
  CHECK(std::abs(d.embed().real() - (3 + 2 * std::sqrt(3.0))) < kTol);
}

TEST_CASE("roots of unity") {
  CHECK(CycNum::root_of_unity(12, 12) == CycNum(1));
  CHECK(CycNum::root_of_unity(4, 2) == CycNum(-1));
  CHECK(CycNum::root_of_unity(12, 3) == CycNum::root_of_unity(4, 1));
  CHECK(CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2) == CycNum(-1));
  const auto r = exact::as_root_of_unity(CycNum::root_of_unity(24, 18));
  REQUIRE(r);
  CHECK(*r == std::pair<int, int>{4, 3});
  CHECK_FALSE(exact::as_root_of_unity(CycNum(2)));
}

TEST_CASE("sin_pi matches the float sine") {
  for (int b = 2; b <= 12; ++b) {
    for (int a = 1; a < b; ++a) {
      CHECK(std::abs(exact::sin_pi(a, b).embed().real() - std::sin(std::numbers::pi * a / b)) < kTol);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(CycNum(0).inverse(), ZeroDivision);
  CHECK_THROWS_AS(CycNum::root_of_unity(73, 1), CapExceeded);
  CHECK_THROWS_AS(CycNum::root_of_unity(8, 1) * CycNum::root_of_unity(9, 1) + CycNum::root_of_unity(5, 1), CapExceeded);
  CHECK_THROWS_AS(CycNum::root_of_unity(12, 1).galois(2), BadAutomorphism);
  CHECK_THROWS_AS(exact::parse_cycnum("3+"), ParseError);
  CHECK_THROWS_AS(exact::parse_cycnum("2√5"), ParseError);
}

TEST_CASE("rendering") {
  CHECK(exact::render(exact::quadratic(3, 2, 3)) == "3+2√3");
  CHECK(exact::render(exact::quadratic(1, 1, 2)) == "1+√2");
  CHECK(exact::render(CycNum::root_of_unity(3, 2)) == "ζ_3^2");
  CHECK(exact::render(CycNum::root_of_unity(4, 1)) == "ζ_4");
  CHECK(exact::render(CycNum(-1)) == "-1");
  CHECK(exact::render(CycNum(Rational(3, 4))) == "3/4");
  CHECK(exact::render(exact::quadratic(336, 192, 3)) == "336+192√3");
  CHECK(exact::render(CycNum::root_of_unity(5, 1)) == "ζ_5");
  CHECK(exact::render(CycNum::root_of_unity(5, 1) + 1).front() == '[');
}

TEST_CASE("parsing") {
  const CycNum d = exact::quadratic(3, 2, 3);
  const CycNum i = CycNum::root_of_unity(4, 1);
  CHECK(exact::parse_cycnum("-(1+2ζ_4)(3+2√3)") == -(CycNum(1) + i * 2) * d);
  CHECK(exact::parse_cycnum("2(1+√3)") == exact::quadratic(2, 2, 3));
  CHECK(exact::parse_cycnum("36(2+√3)") == exact::quadratic(72, 36, 3));
  CHECK(exact::parse_cycnum("zeta_12^5") == CycNum::root_of_unity(12, 5));
  CHECK(exact::parse_cycnum("sqrt3") == exact::sqrt3());
  CHECK(exact::parse_cycnum("i") == i);
}

TEST_CASE("property: arithmetic agrees with the complex embedding") {
  for (const auto seed : kSeeds) {
    testgen::Gen gen(seed);
    for (int s = 0; s < 1000; ++s) {
      const int n = gen.order();
      const CycNum a = gen.cycnum(n);
      const CycNum b = gen.nonzero_cycnum(gen.compatible_order(n));
      const auto ea = a.embed(), eb = b.embed();
      CHECK(close((a + b).embed(), ea + eb));
      CHECK(close((a - b).embed(), ea - eb));
      CHECK(close((a * b).embed(), ea * eb));
      CHECK(close((a / b).embed(), ea / eb));
      CHECK(close(a.conj().embed(), std::conj(ea)));
    }
  }
}

TEST_CASE("property: field identities hold exactly") {
  testgen::Gen gen(kSeeds[2]);
  for (int s = 0; s < 300; ++s) {
    const int n = gen.order();
    const CycNum a = gen.cycnum(n), b = gen.cycnum(n), c = gen.cycnum(n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycNum(1));
      CHECK(a.inverse().inverse() == a);
    }
  }
}

TEST_CASE("property: coercion between orders preserves value") {
  testgen::Gen gen(kSeeds[1]);
  for (int s = 0; s < 300; ++s) {
    const int n = gen.order();
    const CycNum a = gen.cycnum(n);
    for (int m = n; m <= exact::kMaxOrder; m += n) {
      const CycNum up = a.lifted(m);
      CHECK(up == a);
      CHECK(up.order() == m);
      const auto down = up.restricted(n);
      REQUIRE(down);
      CHECK(down->coeffs() == a.coeffs());
    }
    const CycNum small = a.minimized();
    CHECK(small == a);
    CHECK(n % small.order() == 0);
  }
}

TEST_CASE("property: galois automorphisms are ring homomorphisms") {
  testgen::Gen gen(kSeeds[0]);
  for (int s = 0; s < 200; ++s) {
    const int n = gen.order();
    long long j = gen.integer(1, n);
    while (exact::gcd_ll(j, n) != 1) j = gen.integer(1, n);
    const CycNum a = gen.cycnum(n), b = gen.cycnum(n);
    CHECK((a * b).galois(j) == a.galois(j) * b.galois(j));
    CHECK((a + b).galois(j) == a.galois(j) + b.galois(j));
  }
}

TEST_CASE("property: render and parse round-trip") {
  testgen::Gen gen(kSeeds[2]);
  for (int s = 0; s < 500; ++s) {
    const CycNum a = gen.cycnum(gen.order());
    CHECK(exact::parse_cycnum(exact::render(a)) == a);
  }
}
