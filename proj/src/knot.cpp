#include "twistspin/knot.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "twistspin/error.hpp"

namespace twistspin {

  namespace {
    std::optional<std::int64_t> parse_int(std::string_view tok) {
      if (!tok.empty() && tok.front() == '+') {
        tok.remove_prefix(1);
      }
      std::int64_t value = 0;
      auto [ptr, ec]     = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
        return std::nullopt;
      }
      return value;
    }

    std::string strand_name(std::size_t i) {
      if (i < 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "x" + std::to_string(i + 1);
    }

    // Simultaneous substitution of generators by words.
    Word substitute(Word const& w, std::map<std::size_t, Word> const& images) {
      std::vector<Syllable> out;
      for (auto const& s : w.syllables()) {
        auto it = images.find(s.gen);
        if (it == images.end()) {
          out.push_back(s);
        } else {
          Word const rep = power(it->second, s.exp);
          out.insert(out.end(), rep.syllables().begin(), rep.syllables().end());
        }
      }
      return Word(std::move(out));
    }

    std::map<std::size_t, Word> artin_images(int letter) {
      std::size_t const i  = static_cast<std::size_t>(std::abs(letter)) - 1;
      Word const        xi = Word::generator(i);
      Word const        xj = Word::generator(i + 1);
      if (letter > 0) {
        return {{i, xi * xj * invert(xi)}, {i + 1, xi}};
      }
      return {{i, xj}, {i + 1, invert(xj) * xi * xj}};
    }
  }  // namespace

  BraidWord parse_braid(std::string_view text, std::optional<std::size_t> strands) {
    BraidWord          b;
    std::istringstream in{std::string(text)};
    std::string        tok;
    std::size_t        needed = 1;
    while (in >> tok) {
      auto v = parse_int(tok);
      if (!v) {
        throw ParseError("braid letter '" + tok + "' is not an integer");
      }
      if (*v == 0) {
        throw ParseError("braid letter 0: Artin generator indices are nonzero");
      }
      if (std::abs(*v) > 100000) {
        throw ParseError("braid letter '" + tok + "' is out of range");
      }
      b.letters.push_back(static_cast<int>(*v));
      needed = std::max(needed, static_cast<std::size_t>(std::abs(*v)) + 1);
    }
    b.strands = strands.value_or(needed);
    if (b.strands < needed) {
      throw ParseError("braid letter needs " + std::to_string(needed)
                       + " strands but only " + std::to_string(b.strands)
                       + " were declared");
    }
    if (b.strands == 0) {
      throw ParseError("a braid needs at least one strand");
    }
    return b;
  }

  Presentation braid_closure_presentation(BraidWord const& b) {
    std::size_t const n = b.strands;
    if (n == 0) {
      throw Error("a braid needs at least one strand");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : b.letters) {
      std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
      if (letter == 0 || i + 1 >= n) {
        throw Error("braid letter " + std::to_string(letter)
                    + " out of range for " + std::to_string(n) + " strands");
      }
      std::swap(perm[i], perm[i + 1]);
    }
    std::size_t components = 0;
    std::vector<char> visited(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!visited[i]) {
        ++components;
        for (std::size_t j = i; !visited[j]; j = perm[j]) {
          visited[j] = 1;
        }
      }
    }
    if (components != 1) {
      throw Error("braid closure has " + std::to_string(components)
                  + " components; only knots are supported");
    }

    std::vector<Word> images;
    for (std::size_t j = 0; j < n; ++j) {
      images.push_back(Word::generator(j));
    }
    for (int letter : b.letters) {
      auto const action = artin_images(letter);
      for (auto& w : images) {
        w = substitute(w, action);
      }
    }

    std::vector<std::string> names;
    std::vector<Word>        relators;
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back(strand_name(j));
      if (j + 1 < n) {
        relators.push_back(Word::generator(j) * invert(images[j]));
      }
    }
    return Presentation(std::move(names), std::move(relators),
                        Word::generator(0));
  }

  TorusMeridian torus_meridian_exponents(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2) {
      throw Error("torus knot parameters must satisfy p, q >= 2");
    }
    if (std::gcd(p, q) != 1) {
      throw Error("torus knot parameters must be coprime (gcd("
                  + std::to_string(p) + "," + std::to_string(q)
                  + ") = " + std::to_string(std::gcd(p, q)) + ")");
    }
    // s = q^-1 mod p by the extended Euclidean algorithm.
    __int128 old_r = q % p, r = p, old_s = 1, s = 0;
    while (r != 0) {
      __int128 quot = old_r / r;
      std::swap(old_r, r);
      r -= quot * old_r;
      std::swap(old_s, s);
      s -= quot * old_s;
    }
    __int128 inv = ((old_s % p) + p) % p;
    __int128 rr  = (1 - static_cast<__int128>(q) * inv) / p;
    return {static_cast<std::int64_t>(rr), static_cast<std::int64_t>(inv)};
  }

  Presentation torus_presentation(std::int64_t p, std::int64_t q) {
    auto [r, s] = torus_meridian_exponents(p, q);
    Word relator
        = Word({Syllable{0, BigInt(static_cast<long>(p))},
                Syllable{1, BigInt(static_cast<long>(-q))}});
    Word meridian = Word({Syllable{0, BigInt(static_cast<long>(s))},
                          Syllable{1, BigInt(static_cast<long>(r))}});
    return Presentation({"x", "y"}, {relator}, meridian);
  }

  KnotClass KnotClass::torus(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
      throw Error("torus class needs p, q >= 2 with gcd(p, q) = 1");
    }
    return {Tag::torus, p, q};
  }

  std::pair<std::int64_t, std::int64_t> parse_int_pair(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("expected 'p,q', got '" + std::string(text) + "'");
    }
    auto a = parse_int(text.substr(0, comma));
    auto b = parse_int(text.substr(comma + 1));
    if (!a || !b) {
      throw ParseError("expected two integers 'p,q', got '" + std::string(text)
                       + "'");
    }
    return {*a, *b};
  }

  KnotClass parse_knot_class(std::string_view text) {
    if (text == "trivial") {
      return KnotClass::trivial();
    }
    if (text == "hyperbolic") {
      return KnotClass::hyperbolic();
    }
    if (text == "prime-satellite" || text == "prime_satellite") {
      return KnotClass::prime_satellite();
    }
    if (text == "unknown") {
      return KnotClass::unknown();
    }
    if (text.starts_with("torus:")) {
      auto [p, q] = parse_int_pair(text.substr(6));
      try {
        return KnotClass::torus(p, q);
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }
    throw ParseError("unknown knot class '" + std::string(text)
                     + "' (expected trivial|torus:p,q|hyperbolic|"
                       "prime-satellite|unknown)");
  }

  std::string to_string(KnotClass const& c) {
    switch (c.tag) {
      case KnotClass::Tag::trivial:
        return "trivial";
      case KnotClass::Tag::torus:
        return "torus:" + std::to_string(c.p) + "," + std::to_string(c.q);
      case KnotClass::Tag::hyperbolic:
        return "hyperbolic";
      case KnotClass::Tag::prime_satellite:
        return "prime-satellite";
      case KnotClass::Tag::unknown:
        return "unknown";
    }
    return "unknown";
  }

  KnotInput KnotInput::make(std::variant<BraidWord, TorusSource, Presentation> source,
                            KnotClass knot_class) {
    if (auto const* p = std::get_if<Presentation>(&source); p && !p->meridian()) {
      throw Error("an explicit knot presentation needs a meridian line");
    }
    if (auto const* t = std::get_if<TorusSource>(&source)) {
      torus_meridian_exponents(t->p, t->q);
      KnotClass expected = KnotClass::torus(t->p, t->q);
      if (knot_class.tag == KnotClass::Tag::unknown) {
        knot_class = expected;
      } else if (!(knot_class == expected)) {
        throw Error("torus source (" + std::to_string(t->p) + ","
                    + std::to_string(t->q) + ") conflicts with class "
                    + to_string(knot_class));
      }
    }
    return KnotInput{std::move(source), knot_class};
  }

  Presentation knot_presentation(KnotInput const& k) {
    if (auto const* b = std::get_if<BraidWord>(&k.source)) {
      return braid_closure_presentation(*b);
    }
    if (auto const* t = std::get_if<TorusSource>(&k.source)) {
      return torus_presentation(t->p, t->q);
    }
    return std::get<Presentation>(k.source);
  }

}  // namespace twistspin
