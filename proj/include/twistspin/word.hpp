#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twistspin {

  using BigInt = mpz_class;

  // One maximal power g^e of a generator inside a word.
  struct Syllable {
    std::size_t gen;
    BigInt      exp;

    friend bool operator==(Syllable const& a, Syllable const& b) {
      return a.gen == b.gen && a.exp == b.exp;
    }
  };

  // Element of a free group in syllable normal form: exponents are nonzero
  // and adjacent syllables never share a generator. The alphabet size is not
  // stored; range checks happen where a word meets a Presentation.
  class Word {
   public:
    Word() = default;

    // Freely reduces `syllables`. Zero exponents are dropped.
    explicit Word(std::vector<Syllable> syllables);

    static Word generator(std::size_t gen, BigInt exp = 1);

    std::vector<Syllable> const& syllables() const noexcept {
      return _syllables;
    }
    std::size_t size() const noexcept {
      return _syllables.size();
    }
    bool empty() const noexcept {
      return _syllables.empty();
    }
    Syllable const& operator[](std::size_t i) const {
      return _syllables[i];
    }

    // Sum of the exponents of `gen`.
    BigInt exponent_sum(std::size_t gen) const;

    // Largest generator index used plus one; 0 for the empty word.
    std::size_t generator_bound() const noexcept;

    friend bool operator==(Word const&, Word const&) = default;

   private:
    std::vector<Syllable> _syllables;
  };

  // Free reduction with a range check against an alphabet of `num_gens`
  // generators. Throws Error on an out-of-range index.
  Word free_reduce(std::span<Syllable const> raw, std::size_t num_gens);

  // Strips conjugating syllables until the first and last syllables are no
  // longer inverse to each other (partial cancellation included).
  Word cyclic_reduce(Word const& w);

  Word invert(Word const& w);
  Word multiply(Word const& u, Word const& v);
  Word power(Word const& w, BigInt const& n);

  // x y x^-1 y^-1
  Word commutator(Word const& x, Word const& y);

  // Rotation/inversion-invariant key: two cyclically reduced relators with the
  // same key have the same normal closure.
  std::vector<Syllable> cyclic_class_key(Word const& w);

  inline Word operator*(Word const& u, Word const& v) {
    return multiply(u, v);
  }

}  // namespace twistspin
