#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/word.hpp"

namespace twistspin {

  // A finitely presented group <gens | relators>, optionally carrying a
  // distinguished meridian word. Values are immutable after construction.
  //
  // Relators are stored cyclically reduced. Duplicates are kept here;
  // tietze_simplify is the place that removes them.
  class Presentation {
   public:
    Presentation() = default;

    // Throws Error if a name is empty or repeated, or a word uses an index
    // outside the generator table.
    Presentation(std::vector<std::string> generators,
                 std::vector<Word>        relators,
                 std::optional<Word>      meridian = std::nullopt);

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::optional<Word> const& meridian() const noexcept {
      return _meridian;
    }

    std::size_t num_generators() const noexcept {
      return _generators.size();
    }
    std::size_t num_relators() const noexcept {
      return _relators.size();
    }

    // Index of the generator called `name`, if any.
    std::optional<std::size_t> find_generator(std::string_view name) const;

    // A name not yet in the generator table: `base` itself, else `base_1`,
    // `base_2`, ...
    std::string fresh_name(std::string const& base) const;

    // Throws Error if `w` uses an index outside the generator table.
    void check_word(Word const& w) const;

    Presentation with_meridian(std::optional<Word> meridian) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::vector<std::string> _generators;
    std::vector<Word>        _relators;
    std::optional<Word>      _meridian;
  };

  // Quotient by the normal closure of `words`: relators appended in order,
  // generator table and meridian untouched.
  Presentation add_relators(Presentation const& p, std::vector<Word> const& words);

  struct TietzeResult {
    Presentation presentation;
    std::size_t  passes           = 0;
    std::size_t  eliminated       = 0;
    bool         budget_exhausted = false;
  };

  inline constexpr std::size_t default_tietze_budget = 100;

  // Deterministic simplification to an isomorphic presentation. Each pass
  // reduces relators, drops empty ones and duplicates up to rotation and
  // inversion, then eliminates the lowest-index generator that occurs exactly
  // once, with exponent +-1, in some relator (first such relator in list
  // order). The meridian is rewritten through each substitution.
  TietzeResult tietze_simplify(Presentation const& p,
                               std::size_t budget = default_tietze_budget);

  ////////////////////////////////////////////////////////////////////////
  // Text format
  //
  //   gens a b
  //   rel a b a b^-1 a^-1 b^-1
  //   meridian a
  //
  // One `rel` line per relator (an empty `rel` line is the identity), an
  // optional `meridian` line, `#` starts a comment. A single uppercase letter
  // stands for the inverse of its lowercase generator when that generator's
  // name is exactly that one letter.
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Word const& w, std::vector<std::string> const& names);
  std::string serialize(Presentation const& p);

  // Throws ParseError on unknown generators, malformed exponents, duplicate
  // names or unknown keywords.
  Presentation parse_presentation_text(std::string_view text);

  // Parses whitespace-separated syllable tokens against a generator table.
  Word parse_word(std::string_view text, std::vector<std::string> const& names);

}  // namespace twistspin
