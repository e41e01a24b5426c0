#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "twistspin/error.hpp"
#include "twistspin/finquot.hpp"

using namespace twistspin;
using testing::W;

namespace {
  std::size_t count_of_order(FiniteGroup const& g, std::size_t k) {
    std::size_t n = 0;
    for (FiniteGroup::element_type a = 0; a < g.order(); ++a) {
      n += g.element_order(a) == k;
    }
    return n;
  }
}  // namespace

TEST_CASE("build_group") {
  auto const c1 = build_group(GroupKind::cyclic, 1);
  CHECK(c1.order() == 1);
  auto const s3 = build_group(GroupKind::symmetric, 3);
  CHECK(s3.order() == 6);
  CHECK(count_of_order(s3, 2) == 3);
  CHECK(build_group(GroupKind::dihedral, 4).order() == 8);
  CHECK(build_group(GroupKind::alternating, 4).order() == 12);
  CHECK(build_group(GroupKind::symmetric, 5).order() == 120);
  CHECK(count_of_order(build_group(GroupKind::alternating, 4), 2) == 3);
  CHECK(build_group(GroupKind::cyclic, 6).exponent() == 6);
  CHECK(build_group(GroupKind::symmetric, 4).exponent() == 12);
  CHECK_THROWS_AS(build_group(GroupKind::symmetric, 6), Error);
  CHECK_THROWS_AS(build_group(GroupKind::cyclic, 0), Error);
}

TEST_CASE("FiniteGroup rejects bad tables") {
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1, 0, 1}), Error);
  CHECK_THROWS_AS(FiniteGroup("short", 2, {0, 1, 1}), Error);
  // Latin square with identity 0 but not associative.
  CHECK_THROWS_AS(FiniteGroup("loop", 5,
                              {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                               3, 2, 4, 0, 1, 4, 3, 1, 2, 0}),
                  Error);
}

TEST_CASE("group names and batteries") {
  CHECK(group_by_name("D4").order() == 8);
  CHECK(group_by_name("A4").order() == 12);
  CHECK_THROWS_AS(group_by_name("Q8"), ParseError);
  CHECK_THROWS_AS(group_by_name("C"), ParseError);
  auto const b = default_battery();
  REQUIRE(b.size() == 7);
  std::vector<std::size_t> orders;
  for (auto const& g : b) {
    orders.push_back(g.order());
  }
  CHECK(orders == std::vector<std::size_t>{2, 3, 6, 6, 8, 12, 24});
  CHECK_THROWS_AS(parse_battery("C2,,S3"), ParseError);
}

TEST_CASE("count_homomorphisms examples") {
  auto const s3 = group_by_name("S3");
  CHECK(count_homomorphisms(Presentation({"a"}, {}), s3) == 6);
  CHECK(count_homomorphisms(Presentation({"a"}, {W({{0, 2}})}), s3) == 4);
  CHECK(count_homomorphisms(testing::trefoil_by_hand(), s3) == 12);
}

TEST_CASE("hom_count_signature examples") {
  auto const b = default_battery();
  CHECK(hom_count_signature(Presentation({"a"}, {}), b)
        == std::vector<std::uint64_t>{2, 3, 6, 6, 8, 12, 24});
  CHECK(hom_count_signature(Presentation({}, {}), b)
        == std::vector<std::uint64_t>(7, 1));
  auto const t = testing::trefoil_by_hand();
  CHECK(hom_count_signature(tietze_simplify(t).presentation, b)
        == hom_count_signature(t, b));
  Presentation const alt({"u", "v"}, {W({{0, 2}, {1, -3}})});
  CHECK(hom_count_signature(alt, b) == hom_count_signature(t, b));
}

TEST_CASE("budget exhaustion is an error, never a wrong count") {
  Presentation const p({"a", "b", "c"}, {W({{0, 1}, {1, 1}, {2, 1}})});
  CHECK_THROWS_AS(count_homomorphisms(p, group_by_name("S4"), 10), BudgetExceeded);
}

TEST_CASE("properties: trivial group, free groups, relabelling") {
  std::mt19937_64 rng(17);
  auto const      c1      = build_group(GroupKind::cyclic, 1);
  auto const      battery = parse_battery("C2,C3,S3,D4");
  for (int t = 0; t < 30; ++t) {
    std::vector<Word> rels;
    for (int i = 0; i < 3; ++i) {
      rels.push_back(testing::random_word(rng, 3, 5));
    }
    Presentation const p({"a", "b", "c"}, rels);
    CHECK(count_homomorphisms(p, c1) == 1);

    std::vector<Word> reversed(rels.rbegin(), rels.rend());
    CHECK(hom_count_signature(Presentation({"a", "b", "c"}, reversed), battery)
          == hom_count_signature(p, battery));
    CHECK(hom_count_signature(Presentation({"p", "q", "r"}, rels), battery)
          == hom_count_signature(p, battery));

    // swapping generator indices a <-> c
    std::vector<Word> swapped;
    for (auto const& r : rels) {
      std::vector<Syllable> s = r.syllables();
      for (auto& x : s) {
        x.gen = 2 - x.gen;
      }
      swapped.push_back(Word(s));
    }
    CHECK(hom_count_signature(Presentation({"a", "b", "c"}, swapped), battery)
          == hom_count_signature(p, battery));
  }
  for (std::size_t u = 0; u <= 3; ++u) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < u; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    std::uint64_t expect = 1;
    for (std::size_t i = 0; i < u; ++i) {
      expect *= 8;
    }
    CHECK(count_homomorphisms(Presentation(names, {}), group_by_name("D4")) == expect);
  }
}

TEST_CASE("property: counts agree with the brute-force permutation oracle") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    std::vector<Word> rels;
    for (int i = 0; i < 2; ++i) {
      rels.push_back(testing::random_word(rng, 2, 5));
    }
    Presentation const p({"a", "b"}, rels);
    for (auto const* name : {"C3", "S3", "D4", "A4"}) {
      CHECK(count_homomorphisms(p, group_by_name(name))
            == oracle::brute_force_homs(p, oracle::by_name(name)));
    }
  }
}
