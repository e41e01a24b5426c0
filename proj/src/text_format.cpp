#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "twistspin/error.hpp"
#include "twistspin/presentation.hpp"

namespace twistspin {

  namespace {
    std::vector<std::string> split_ws(std::string_view text) {
      std::vector<std::string> tokens;
      std::istringstream       in{std::string(text)};
      std::string              tok;
      while (in >> tok) {
        tokens.push_back(tok);
      }
      return tokens;
    }

    BigInt parse_exponent(std::string const& digits, std::string const& token) {
      std::size_t i = 0;
      if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) {
        ++i;
      }
      if (i == digits.size()) {
        throw ParseError("malformed exponent in token '" + token + "'");
      }
      for (std::size_t j = i; j < digits.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(digits[j]))) {
          throw ParseError("malformed exponent in token '" + token + "'");
        }
      }
      BigInt value(digits[0] == '+' ? digits.substr(1) : digits, 10);
      if (value == 0) {
        throw ParseError("zero exponent in token '" + token + "'");
      }
      return value;
    }

    Syllable parse_token(std::string const&              token,
                         std::vector<std::string> const& names) {
      auto        caret = token.find('^');
      std::string base  = token.substr(0, caret);
      BigInt      exp   = 1;
      if (caret != std::string::npos) {
        exp = parse_exponent(token.substr(caret + 1), token);
      }
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == base) {
          return Syllable{i, exp};
        }
      }
      if (base.size() == 1 && std::isupper(static_cast<unsigned char>(base[0]))) {
        std::string lower(1, static_cast<char>(std::tolower(
                                 static_cast<unsigned char>(base[0]))));
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == lower) {
            return Syllable{i, -exp};
          }
        }
      }
      throw ParseError("unknown generator '" + base + "'");
    }
  }  // namespace

  std::string to_string(Word const& w, std::vector<std::string> const& names) {
    std::string out;
    for (auto const& s : w.syllables()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += s.gen < names.size() ? names[s.gen] : "?" + std::to_string(s.gen);
      if (s.exp != 1) {
        out += '^';
        out += s.exp.get_str();
      }
    }
    return out;
  }

  std::string serialize(Presentation const& p) {
    std::string out = "gens";
    for (auto const& g : p.generators()) {
      out += ' ';
      out += g;
    }
    out += '\n';
    for (auto const& r : p.relators()) {
      out += r.empty() ? "rel" : "rel " + to_string(r, p.generators());
      out += '\n';
    }
    if (p.meridian()) {
      auto const& m = *p.meridian();
      out += m.empty() ? "meridian" : "meridian " + to_string(m, p.generators());
      out += '\n';
    }
    return out;
  }

  Word parse_word(std::string_view text, std::vector<std::string> const& names) {
    std::vector<Syllable> syllables;
    for (auto const& tok : split_ws(text)) {
      if (tok == "1" && std::find(names.begin(), names.end(), tok) == names.end()) {
        continue;
      }
      syllables.push_back(parse_token(tok, names));
    }
    return Word(std::move(syllables));
  }

  Presentation parse_presentation_text(std::string_view text) {
    std::optional<std::vector<std::string>> gens;
    std::vector<std::string>                rel_lines;
    std::optional<std::string>              meridian_line;

    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto tokens = split_ws(line);
      if (tokens.empty()) {
        continue;
      }
      std::string const& key  = tokens.front();
      auto               rest = line.substr(line.find(key) + key.size());
      if (key == "gens") {
        if (gens) {
          throw ParseError("line " + std::to_string(line_no)
                           + ": duplicate 'gens' line");
        }
        gens.emplace(tokens.begin() + 1, tokens.end());
      } else if (key == "rel") {
        rel_lines.push_back(rest);
      } else if (key == "meridian") {
        if (meridian_line) {
          throw ParseError("line " + std::to_string(line_no)
                           + ": duplicate 'meridian' line");
        }
        meridian_line = rest;
      } else {
        throw ParseError("line " + std::to_string(line_no)
                         + ": unknown keyword '" + key + "'");
      }
    }

    std::vector<std::string> names = gens.value_or(std::vector<std::string>{});
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) {
          throw ParseError("duplicate generator name '" + names[i] + "'");
        }
      }
    }
    std::vector<Word> relators;
    for (auto const& r : rel_lines) {
      relators.push_back(parse_word(r, names));
    }
    std::optional<Word> meridian;
    if (meridian_line) {
      meridian = parse_word(*meridian_line, names);
    }
    try {
      return Presentation(std::move(names), std::move(relators),
                          std::move(meridian));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace twistspin
