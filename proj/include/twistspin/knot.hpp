#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twistspin/presentation.hpp"

namespace twistspin {

  // Artin braid word; letter i > 0 is sigma_i, i < 0 its inverse.
  struct BraidWord {
    std::size_t      strands = 1;
    std::vector<int> letters;

    friend bool operator==(BraidWord const&, BraidWord const&) = default;
  };

  // Whitespace-separated nonzero integers. The strand count defaults to
  // 1 + max |letter|.
  BraidWord parse_braid(std::string_view              text,
                        std::optional<std::size_t> strands = std::nullopt);

  // Wirtinger presentation of the closure: one generator per top strand
  // (named a, b, c, ...), relators x_i * beta(x_i)^-1 with the last one
  // dropped, meridian x_1. Throws Error when the closure is a link.
  Presentation braid_closure_presentation(BraidWord const& b);

  // Meridian exponents of a (p, q) torus knot: the solution of
  // p r + q s = 1 with 0 <= s < p.
  struct TorusMeridian {
    std::int64_t r;
    std::int64_t s;
  };
  TorusMeridian torus_meridian_exponents(std::int64_t p, std::int64_t q);

  // <x, y | x^p y^-q> with meridian x^s y^r. Requires p, q >= 2 coprime.
  Presentation torus_presentation(std::int64_t p, std::int64_t q);

  // Presentation file text (see presentation.hpp for the format).
  inline Presentation parse_presentation(std::string_view text) {
    return parse_presentation_text(text);
  }

  // User-declared classification of the input knot; never computed.
  struct KnotClass {
    enum class Tag { trivial, torus, hyperbolic, prime_satellite, unknown };

    Tag          tag = Tag::unknown;
    std::int64_t p   = 0;
    std::int64_t q   = 0;

    static KnotClass trivial() {
      return {Tag::trivial};
    }
    static KnotClass torus(std::int64_t p, std::int64_t q);
    static KnotClass hyperbolic() {
      return {Tag::hyperbolic};
    }
    static KnotClass prime_satellite() {
      return {Tag::prime_satellite};
    }
    static KnotClass unknown() {
      return {Tag::unknown};
    }

    friend bool operator==(KnotClass const&, KnotClass const&) = default;
  };

  // trivial | torus:p,q | hyperbolic | prime-satellite | unknown
  KnotClass   parse_knot_class(std::string_view text);
  std::string to_string(KnotClass const& c);

  struct TorusSource {
    std::int64_t p;
    std::int64_t q;
  };

  struct KnotInput {
    std::variant<BraidWord, TorusSource, Presentation> source;
    KnotClass                                          knot_class;

    // Enforces that explicit presentations carry a meridian and that a torus
    // source has the matching torus class (an unknown class is upgraded).
    static KnotInput make(std::variant<BraidWord, TorusSource, Presentation> source,
                          KnotClass knot_class = KnotClass::unknown());
  };

  // The knot group presentation with meridian for any source.
  Presentation knot_presentation(KnotInput const& k);

  // Parses "a,b" with both parts integers.
  std::pair<std::int64_t, std::int64_t> parse_int_pair(std::string_view text);

}  // namespace twistspin
