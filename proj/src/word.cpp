#include "twistspin/word.hpp"

#include <algorithm>
#include <utility>

#include "twistspin/error.hpp"

namespace twistspin {

  namespace {
    void push_syllable(std::vector<Syllable>& out, Syllable s) {
      if (s.exp == 0) {
        return;
      }
      if (!out.empty() && out.back().gen == s.gen) {
        out.back().exp += s.exp;
        if (out.back().exp == 0) {
          out.pop_back();
        }
        return;
      }
      out.push_back(std::move(s));
    }

    bool syllable_less(Syllable const& a, Syllable const& b) {
      if (a.gen != b.gen) {
        return a.gen < b.gen;
      }
      return a.exp < b.exp;
    }

    bool sequence_less(std::vector<Syllable> const& a,
                       std::vector<Syllable> const& b) {
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(), syllable_less);
    }

    // Cyclically reduced form whose first and last syllables use different
    // generators, so that syllable rotations enumerate all conjugates.
    std::vector<Syllable> seam_merged(Word const& w) {
      std::vector<Syllable> s = cyclic_reduce(w).syllables();
      while (s.size() >= 2 && s.front().gen == s.back().gen) {
        s.front().exp += s.back().exp;
        s.pop_back();
      }
      return s;
    }
  }  // namespace

  Word::Word(std::vector<Syllable> syllables) {
    _syllables.reserve(syllables.size());
    for (auto& s : syllables) {
      push_syllable(_syllables, std::move(s));
    }
  }

  Word Word::generator(std::size_t gen, BigInt exp) {
    return Word({Syllable{gen, std::move(exp)}});
  }

  BigInt Word::exponent_sum(std::size_t gen) const {
    BigInt total = 0;
    for (auto const& s : _syllables) {
      if (s.gen == gen) {
        total += s.exp;
      }
    }
    return total;
  }

  std::size_t Word::generator_bound() const noexcept {
    std::size_t bound = 0;
    for (auto const& s : _syllables) {
      bound = std::max(bound, s.gen + 1);
    }
    return bound;
  }

  Word free_reduce(std::span<Syllable const> raw, std::size_t num_gens) {
    for (auto const& s : raw) {
      if (s.gen >= num_gens) {
        throw Error("generator index " + std::to_string(s.gen)
                    + " out of range for " + std::to_string(num_gens)
                    + " generators");
      }
    }
    return Word(std::vector<Syllable>(raw.begin(), raw.end()));
  }

  Word cyclic_reduce(Word const& w) {
    std::vector<Syllable> s = w.syllables();
    std::size_t           lo = 0;
    std::size_t           hi = s.size();  // half-open window [lo, hi)
    while (hi - lo >= 2) {
      Syllable& first = s[lo];
      Syllable& last  = s[hi - 1];
      if (first.gen != last.gen || sgn(first.exp) == sgn(last.exp)) {
        break;
      }
      BigInt cancel = abs(first.exp) < abs(last.exp) ? BigInt(abs(first.exp)) : BigInt(abs(last.exp));
      first.exp -= sgn(first.exp) * cancel;
      last.exp -= sgn(last.exp) * cancel;
      if (last.exp == 0) {
        --hi;
      }
      if (first.exp == 0) {
        ++lo;
      }
    }
    return Word(std::vector<Syllable>(s.begin() + lo, s.begin() + hi));
  }

  Word invert(Word const& w) {
    std::vector<Syllable> out;
    out.reserve(w.size());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
      out.push_back(Syllable{it->gen, -it->exp});
    }
    return Word(std::move(out));
  }

  Word multiply(Word const& u, Word const& v) {
    std::vector<Syllable> out = u.syllables();
    for (auto const& s : v.syllables()) {
      push_syllable(out, s);
    }
    return Word(std::move(out));
  }

  Word power(Word const& w, BigInt const& n) {
    if (n == 0 || w.empty()) {
      return Word();
    }
    if (w.size() == 1) {
      return Word::generator(w[0].gen, w[0].exp * n);
    }
    if (!mpz_fits_ulong_p(BigInt(abs(n)).get_mpz_t())) {
      throw Error("word power exponent too large for a multi-syllable word");
    }
    Word   square = n > 0 ? w : invert(w);
    Word   result;
    BigInt e = abs(n);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) {
        result = multiply(result, square);
      }
      e >>= 1;
      if (e > 0) {
        square = multiply(square, square);
      }
    }
    return result;
  }

  Word commutator(Word const& x, Word const& y) {
    return multiply(multiply(x, y), multiply(invert(x), invert(y)));
  }

  std::vector<Syllable> cyclic_class_key(Word const& w) {
    std::vector<Syllable> best;
    bool                  have = false;
    for (auto const& form : {seam_merged(w), seam_merged(invert(w))}) {
      std::size_t const n = form.size();
      for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
        std::vector<Syllable> rot;
        rot.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          rot.push_back(form[(r + i) % n]);
        }
        if (!have || sequence_less(rot, best)) {
          best = std::move(rot);
          have = true;
        }
      }
    }
    return best;
  }

}  // namespace twistspin
