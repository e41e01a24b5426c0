#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "twistspin/abelian.hpp"
#include "twistspin/error.hpp"
#include "twistspin/finquot.hpp"
#include "twistspin/knot.hpp"

using namespace twistspin;
using testing::W;

TEST_CASE("parse_braid") {
  auto b = parse_braid("1 1 1");
  CHECK(b.strands == 2);
  CHECK(b.letters == std::vector<int>{1, 1, 1});
  b = parse_braid("1 -2 1 -2");
  CHECK(b.strands == 3);
  CHECK(b.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(parse_braid("", 1).strands == 1);
  CHECK_THROWS_AS(parse_braid("0"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 x"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 3", 3), ParseError);
}

TEST_CASE("braid closure") {
  auto const t = braid_closure_presentation(parse_braid("1 1 1"));
  CHECK(abelianization(t).invariants() == AbelianInvariants{1, {}});
  CHECK(count_homomorphisms(t, group_by_name("S3")) == 12);
  CHECK(oracle::brute_force_homs(t, oracle::by_name("S3")) == 12);
  CHECK(*t.meridian() == W({{0, 1}}));

  auto const unknot = braid_closure_presentation(parse_braid("", 1));
  CHECK(unknot.num_generators() == 1);
  CHECK(unknot.num_relators() == 0);
  CHECK(*unknot.meridian() == W({{0, 1}}));

  CHECK_THROWS_AS(braid_closure_presentation(parse_braid("1", 3)), Error);
  CHECK_THROWS_AS(braid_closure_presentation(parse_braid("1 1")), Error);
}

TEST_CASE("braid closure of the trefoil matches the hand-written group") {
  auto const b = default_battery();
  CHECK(hom_count_signature(braid_closure_presentation(parse_braid("1 1 1")), b)
        == hom_count_signature(testing::trefoil_by_hand(), b));
}

TEST_CASE("property: braid closures have Z abelianization and meridian +-1") {
  for (auto const* text : {"1 1 1", "1 -2 1 -2", "1 1 1 1 1", "1 2 1 2 1 2 1",
                           "-1 -1 -1", "1 2 -1 2", "1 2 3", "1 -2 3 -2 1 2"}) {
    Presentation p;
    try {
      p = braid_closure_presentation(parse_braid(text));
    } catch (Error const&) {
      continue;
    }
    CAPTURE(text);
    Abelianization const ab(p);
    CHECK(ab.invariants() == AbelianInvariants{1, {}});
    auto const m = ab.image(*p.meridian());
    REQUIRE(m.free_part.size() == 1);
    CHECK(abs(m.free_part[0]) == 1);
  }
}

TEST_CASE("torus presentation") {
  auto const p = torus_presentation(2, 3);
  CHECK(p.generators() == std::vector<std::string>{"x", "y"});
  CHECK(p.relators()[0] == W({{0, 2}, {1, -3}}));
  CHECK(*p.meridian() == W({{0, 1}, {1, -1}}));
  auto const [r, s] = torus_meridian_exponents(2, 3);
  CHECK(r == -1);
  CHECK(s == 1);
  CHECK(abs(Abelianization(p).image(*p.meridian()).free_part[0]) == 1);
  CHECK_THROWS_AS(torus_presentation(2, 4), Error);
  CHECK_THROWS_AS(torus_presentation(1, 3), Error);
}

TEST_CASE("property: torus abelianization and meridian for 2 <= p < q <= 9") {
  for (std::int64_t p = 2; p <= 9; ++p) {
    for (std::int64_t q = p + 1; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      auto const [r, s] = torus_meridian_exponents(p, q);
      CHECK(p * r + q * s == 1);
      CHECK(s >= 0);
      CHECK(s < p);
      auto const pres = torus_presentation(p, q);
      Abelianization const ab(pres);
      CHECK(ab.invariants() == AbelianInvariants{1, {}});
      CHECK(abs(ab.image(*pres.meridian()).free_part[0]) == 1);
    }
  }
}

TEST_CASE("knot classes") {
  CHECK(parse_knot_class("torus:2,3") == KnotClass::torus(2, 3));
  CHECK(parse_knot_class("prime-satellite") == KnotClass::prime_satellite());
  CHECK(to_string(parse_knot_class("hyperbolic")) == "hyperbolic");
  CHECK_THROWS_AS(parse_knot_class("torus:2,4"), ParseError);
  CHECK_THROWS_AS(parse_knot_class("torus:2"), ParseError);
  CHECK_THROWS_AS(parse_knot_class("figure8"), ParseError);
}

TEST_CASE("knot input consistency") {
  auto const k = KnotInput::make(TorusSource{2, 3}, KnotClass::unknown());
  CHECK(k.knot_class == KnotClass::torus(2, 3));
  CHECK_THROWS_AS(KnotInput::make(TorusSource{2, 3}, KnotClass::hyperbolic()), Error);
  CHECK_THROWS_AS(KnotInput::make(Presentation({"a"}, {}), KnotClass::unknown()), Error);
  CHECK_THROWS_AS(KnotInput::make(TorusSource{2, 4}, KnotClass::unknown()), Error);
}
