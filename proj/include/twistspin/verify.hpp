#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/abelian.hpp"

namespace twistspin {

  // Batch cross-checks between independent routes (hom counts vs. Tietze
  // moves, closed formulas vs. Smith normal form) at desk scale.

  struct VerifyRow {
    std::string label;
    bool        pass = false;
    std::string detail;
  };

  struct VerifyReport {
    std::string            suite;
    std::vector<VerifyRow> rows;

    std::size_t failures() const;
    bool        all_pass() const {
      return failures() == 0;
    }
  };

  inline constexpr std::uint64_t default_seed = 20240607;

  // lemma21 | lemma33 | theorem41 | snf. Throws ParseError on other names.
  VerifyReport run_verify_suite(std::string_view name,
                                std::uint64_t    seed = default_seed);

  std::vector<std::string> verify_suite_names();

  // Laplace expansion; independent of the elimination used for the Smith form.
  BigInt cofactor_determinant(IntMatrix const& m);

  // Known test knots as braid closures.
  Presentation trefoil_closure();
  Presentation figure_eight_closure();

}  // namespace twistspin
