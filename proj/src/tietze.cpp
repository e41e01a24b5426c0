#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>

#include "twistspin/presentation.hpp"

namespace twistspin {

  namespace {
    struct Elimination {
      std::size_t gen;
      std::size_t relator;
      std::size_t position;
    };

    std::vector<Word> normalized_relators(std::vector<Word> const& relators) {
      std::vector<Word>                  out;
      std::vector<std::vector<Syllable>> keys;
      for (auto const& r : relators) {
        Word reduced = cyclic_reduce(r);
        if (reduced.empty()) {
          continue;
        }
        auto key = cyclic_class_key(reduced);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
          continue;
        }
        keys.push_back(std::move(key));
        out.push_back(std::move(reduced));
      }
      return out;
    }

    std::optional<Elimination> find_elimination(std::size_t              num_gens,
                                                std::vector<Word> const& rels) {
      for (std::size_t g = 0; g < num_gens; ++g) {
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
          std::size_t count    = 0;
          std::size_t position = 0;
          for (std::size_t i = 0; i < rels[ri].size(); ++i) {
            if (rels[ri][i].gen == g) {
              ++count;
              position = i;
            }
          }
          if (count == 1 && abs(rels[ri][position].exp) == 1) {
            return Elimination{g, ri, position};
          }
        }
      }
      return std::nullopt;
    }

    // Replaces generator `gen` by `replacement` and shifts higher indices
    // down by one.
    Word substitute(Word const& w, std::size_t gen, Word const& replacement) {
      std::vector<Syllable> out;
      for (auto const& s : w.syllables()) {
        if (s.gen == gen) {
          Word const rep = power(replacement, s.exp);
          out.insert(out.end(), rep.syllables().begin(), rep.syllables().end());
        } else {
          out.push_back(Syllable{s.gen > gen ? s.gen - 1 : s.gen, s.exp});
        }
      }
      return Word(std::move(out));
    }

    Word shift_down(Word const& w, std::size_t gen) {
      std::vector<Syllable> out;
      for (auto const& s : w.syllables()) {
        out.push_back(Syllable{s.gen > gen ? s.gen - 1 : s.gen, s.exp});
      }
      return Word(std::move(out));
    }
  }  // namespace

  TietzeResult tietze_simplify(Presentation const& p, std::size_t budget) {
    std::vector<std::string> gens     = p.generators();
    std::vector<Word>        rels     = p.relators();
    std::optional<Word>      meridian = p.meridian();

    TietzeResult result;
    bool         converged = false;
    while (result.passes < budget) {
      ++result.passes;
      rels    = normalized_relators(rels);
      auto el = find_elimination(gens.size(), rels);
      if (!el) {
        converged = true;
        break;
      }
      // Rotate the defining relator to g^e W, so g = W^-1 when e = 1 and
      // g = W when e = -1.
      Word const&           r = rels[el->relator];
      std::vector<Syllable> rest;
      for (std::size_t i = 1; i < r.size(); ++i) {
        rest.push_back(r[(el->position + i) % r.size()]);
      }
      Word tail(std::move(rest));
      Word replacement = r[el->position].exp > 0 ? invert(tail) : tail;
      replacement      = shift_down(replacement, el->gen);

      std::vector<Word> next;
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (i != el->relator) {
          next.push_back(substitute(rels[i], el->gen, replacement));
        }
      }
      rels = std::move(next);
      if (meridian) {
        meridian = substitute(*meridian, el->gen, replacement);
      }
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(el->gen));
      ++result.eliminated;
    }
    if (!converged) {
      rels                    = normalized_relators(rels);
      result.budget_exhausted = true;
    }
    result.presentation
        = Presentation(std::move(gens), std::move(rels), std::move(meridian));
    return result;
  }

}  // namespace twistspin
