#include "twistspin/presentation.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "twistspin/error.hpp"

namespace twistspin {

  namespace {
    bool is_token_safe(std::string const& name) {
      return !name.empty()
             && std::none_of(name.begin(), name.end(), [](char c) {
                  return c == '^' || c == '#' || c == ',' || c <= ' ';
                });
    }
  }  // namespace

  Presentation::Presentation(std::vector<std::string> generators,
                             std::vector<Word>        relators,
                             std::optional<Word>      meridian)
      : _generators(std::move(generators)), _meridian(std::move(meridian)) {
    std::set<std::string> seen;
    for (auto const& name : _generators) {
      if (!is_token_safe(name)) {
        throw Error("invalid generator name '" + name + "'");
      }
      if (!seen.insert(name).second) {
        throw Error("duplicate generator name '" + name + "'");
      }
    }
    _relators.reserve(relators.size());
    for (auto const& r : relators) {
      check_word(r);
      _relators.push_back(cyclic_reduce(r));
    }
    if (_meridian) {
      check_word(*_meridian);
    }
  }

  std::optional<std::size_t>
  Presentation::find_generator(std::string_view name) const {
    auto it = std::find(_generators.begin(), _generators.end(), name);
    if (it == _generators.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _generators.begin());
  }

  std::string Presentation::fresh_name(std::string const& base) const {
    if (!find_generator(base)) {
      return base;
    }
    for (std::size_t i = 1;; ++i) {
      std::string candidate = base + "_" + std::to_string(i);
      if (!find_generator(candidate)) {
        return candidate;
      }
    }
  }

  void Presentation::check_word(Word const& w) const {
    if (w.generator_bound() > _generators.size()) {
      throw Error("word refers to generator index "
                  + std::to_string(w.generator_bound() - 1) + " but only "
                  + std::to_string(_generators.size())
                  + " generators are declared");
    }
  }

  Presentation Presentation::with_meridian(std::optional<Word> meridian) const {
    return Presentation(_generators, _relators, std::move(meridian));
  }

  Presentation add_relators(Presentation const&      p,
                            std::vector<Word> const& words) {
    std::vector<Word> relators = p.relators();
    relators.insert(relators.end(), words.begin(), words.end());
    return Presentation(p.generators(), std::move(relators), p.meridian());
  }

}  // namespace twistspin
