#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "twistspin/error.hpp"
#include "twistspin/finquot.hpp"
#include "twistspin/presentation.hpp"

using namespace twistspin;
using testing::W;

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Presentation({""}, {}), Error);
  CHECK_THROWS_AS(Presentation({"a b"}, {}), Error);
  CHECK_THROWS_AS(Presentation({"a^2"}, {}), Error);
  CHECK_THROWS_AS(Presentation({"a"}, {W({{1, 1}})}), Error);
  CHECK_THROWS_AS(Presentation({"a"}, {}, W({{1, 1}})), Error);
  Presentation p({"a", "b"}, {W({{0, 1}, {1, 1}, {0, -1}})});
  CHECK(p.relators().front() == W({{1, 1}}));
  CHECK(p.find_generator("b") == 1);
  CHECK_FALSE(p.find_generator("c"));
}

TEST_CASE("fresh_name avoids collisions") {
  Presentation p({"h", "h_1"}, {});
  CHECK(p.fresh_name("g") == "g");
  CHECK(p.fresh_name("h") != "h");
  CHECK(p.fresh_name("h") != "h_1");
}

TEST_CASE("add_relators") {
  Presentation const a({"a"}, {});
  CHECK(add_relators(a, {W({{0, 2}})}) == Presentation({"a"}, {W({{0, 2}})}));
  CHECK(add_relators(a, {}) == a);
  Presentation const ab({"a", "b"}, {W({{0, 1}, {1, 1}, {0, 1}, {1, -1}})});
  auto const     out = add_relators(ab, {W({{0, 1}, {1, -1}})});
  REQUIRE(out.num_relators() == 2);
  CHECK(out.relators()[0] == ab.relators()[0]);
  CHECK(out.relators()[1] == W({{0, 1}, {1, -1}}));
  CHECK_THROWS_AS(add_relators(a, {W({{3, 1}})}), Error);
}

TEST_CASE("tietze_simplify examples") {
  auto r = tietze_simplify(Presentation({"a", "b"}, {W({{1, 1}, {0, -1}})}));
  // lowest index first: a is eliminated as b
  CHECK(r.presentation == Presentation({"b"}, {}));
  CHECK(r.eliminated == 1);
  CHECK_FALSE(r.budget_exhausted);

  Presentation const fixed({"a"}, {});
  CHECK(tietze_simplify(fixed).presentation == fixed);

  // h is eliminated through a^2 h = 1.
  Presentation const spun({"a", "b", "h"},
                          {W({{0, 1}, {2, 1}, {0, -1}, {2, -1}}),
                           W({{1, 1}, {2, 1}, {1, -1}, {2, -1}}),
                           W({{0, 2}, {2, 1}})});
  auto const out = tietze_simplify(spun).presentation;
  CHECK(out.generators() == std::vector<std::string>{"a", "b"});
  REQUIRE(out.num_relators() == 1);
  CHECK(cyclic_class_key(out.relators()[0])
        == cyclic_class_key(W({{1, 1}, {0, -2}, {1, -1}, {0, 2}})));
  auto const battery = parse_battery("C2,C3,S3,D4");
  CHECK(hom_count_signature(out, battery) == hom_count_signature(spun, battery));
}

TEST_CASE("tietze_simplify removes duplicate and empty relators") {
  Presentation const p({"a", "b"}, {W({{0, 2}, {1, 3}}), W({{1, 3}, {0, 2}}),
                                    W({{1, -3}, {0, -2}}), Word{}});
  auto const out = tietze_simplify(p).presentation;
  CHECK(out.num_relators() == 1);
}

TEST_CASE("tietze_simplify rewrites the meridian") {
  Presentation const p({"a", "b"}, {W({{1, 1}, {0, -1}})}, W({{1, 1}}));
  auto const out = tietze_simplify(p).presentation;
  REQUIRE(out.meridian());
  CHECK(*out.meridian() == W({{0, 1}}));
}

TEST_CASE("tietze_simplify flags an exhausted budget") {
  Presentation const p({"a", "b", "c"}, {W({{1, 1}, {0, -1}}), W({{2, 1}, {0, -1}})});
  auto const r = tietze_simplify(p, 1);
  CHECK(r.budget_exhausted);
  CHECK(r.presentation.num_generators() == 2);
  CHECK(tietze_simplify(p).presentation.num_generators() == 1);
}

TEST_CASE("property: tietze_simplify is deterministic and keeps hom counts") {
  std::mt19937_64 rng(23);
  auto const      battery = parse_battery("C2,C3,S3");
  for (int t = 0; t < 40; ++t) {
    std::vector<Word> rels;
    for (int i = 0; i < 3; ++i) {
      rels.push_back(testing::random_word(rng, 2, 4, 2));
    }
    rels.push_back(Word::generator(2) * testing::random_word(rng, 2, 3, 2));
    Presentation const p({"a", "b", "c"}, rels);
    auto const         x = tietze_simplify(p);
    auto const         y = tietze_simplify(p);
    CHECK(x.presentation == y.presentation);
    CHECK(x.presentation.num_generators() < 3);
    CHECK(hom_count_signature(x.presentation, battery)
          == hom_count_signature(p, battery));
  }
}

TEST_CASE("parse_presentation_text") {
  auto const p = testing::trefoil_by_hand();
  CHECK(p.generators() == std::vector<std::string>{"a", "b"});
  REQUIRE(p.num_relators() == 1);
  CHECK(p.relators()[0] == W({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}));
  CHECK(*p.meridian() == W({{0, 1}}));

  auto const a = parse_presentation_text("gens a\n");
  CHECK(a == Presentation({"a"}, {}));

  auto const powered = parse_presentation_text(
      "# comment\ngens x y\nrel x^2 y^-3   # trailing\nmeridian x y^-1\n");
  CHECK(powered.relators()[0] == W({{0, 2}, {1, -3}}));

  CHECK_THROWS_AS(parse_presentation_text("rel c\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a b\nrel c\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a\nrel a^x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a\nrel a^0\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a\ngens b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens a\nfoo a\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity on random presentations") {
  std::mt19937_64 rng(5);
  std::vector<std::string> const pool{"a", "b", "x1", "gen_2", "y"};
  for (int t = 0; t < 100; ++t) {
    std::size_t const n = 1 + rng() % pool.size();
    std::vector<std::string> names(pool.begin(), pool.begin() + n);
    std::vector<Word> rels;
    for (int i = rng() % 4; i > 0; --i) {
      rels.push_back(testing::random_word(rng, n, 6, 5));
    }
    std::optional<Word> mer;
    if (rng() % 2) {
      mer = testing::random_word(rng, n, 3);
    }
    Presentation const p(names, rels, mer);
    CHECK(parse_presentation_text(serialize(p)) == p);
  }
}
