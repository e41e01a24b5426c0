#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "twistspin/presentation.hpp"
#include "twistspin/word.hpp"

namespace testing {

  // Builds a word from (generator, exponent) pairs without reducing by hand.
  inline twistspin::Word W(std::initializer_list<std::pair<std::size_t, long>> s) {
    std::vector<twistspin::Syllable> out;
    for (auto [g, e] : s) {
      out.push_back({g, twistspin::BigInt(e)});
    }
    return twistspin::Word(std::move(out));
  }

  inline std::vector<twistspin::Syllable> raw(
      std::initializer_list<std::pair<std::size_t, long>> s) {
    std::vector<twistspin::Syllable> out;
    for (auto [g, e] : s) {
      out.push_back({g, twistspin::BigInt(e)});
    }
    return out;
  }

  inline twistspin::Word random_word(std::mt19937_64& rng, std::size_t gens,
                                     int max_len, int max_exp = 3) {
    std::uniform_int_distribution<int>         len(0, max_len);
    std::uniform_int_distribution<std::size_t> gen(0, gens - 1);
    std::uniform_int_distribution<int>         exp(-max_exp, max_exp);
    std::vector<twistspin::Syllable>           out;
    for (int i = len(rng); i > 0; --i) {
      int e = 0;
      while (e == 0) {
        e = exp(rng);
      }
      out.push_back({gen(rng), twistspin::BigInt(e)});
    }
    return twistspin::Word(std::move(out));
  }

  inline twistspin::Presentation trefoil_by_hand() {
    return twistspin::parse_presentation_text(
        "gens a b\nrel a b a B A B\nmeridian a\n");
  }

}  // namespace testing
