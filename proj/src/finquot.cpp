#include "twistspin/finquot.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "twistspin/error.hpp"

namespace twistspin {

  using element_type = FiniteGroup::element_type;

  FiniteGroup::FiniteGroup(std::string name, std::size_t order,
                           std::vector<element_type> table)
      : _name(std::move(name)), _order(order), _table(std::move(table)) {
    if (_order == 0 || _table.size() != _order * _order) {
      throw Error("group " + _name + ": table size does not match order");
    }
    std::vector<char> seen(_order);
    for (std::size_t a = 0; a < _order; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < _order; ++b) {
        element_type x = _table[a * _order + b];
        if (x >= _order || seen[x]) {
          throw Error("group " + _name + ": row " + std::to_string(a)
                      + " is not a permutation");
        }
        seen[x] = 1;
      }
    }
    for (std::size_t b = 0; b < _order; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t a = 0; a < _order; ++a) {
        element_type x = _table[a * _order + b];
        if (seen[x]) {
          throw Error("group " + _name + ": column " + std::to_string(b)
                      + " is not a permutation");
        }
        seen[x] = 1;
      }
    }
    bool found = false;
    for (element_type e = 0; e < _order && !found; ++e) {
      bool ok = true;
      for (element_type a = 0; a < _order && ok; ++a) {
        ok = product(e, a) == a && product(a, e) == a;
      }
      if (ok) {
        _identity = e;
        found     = true;
      }
    }
    if (!found) {
      throw Error("group " + _name + ": no identity element");
    }
    _inverse.resize(_order);
    for (element_type a = 0; a < _order; ++a) {
      auto row = _table.begin() + static_cast<std::ptrdiff_t>(a * _order);
      auto it  = std::find(row, row + static_cast<std::ptrdiff_t>(_order),
                          _identity);
      _inverse[a] = static_cast<element_type>(it - row);
      if (product(_inverse[a], a) != _identity) {
        throw Error("group " + _name + ": left and right inverses differ");
      }
    }
    if (_order <= 48) {
      for (element_type a = 0; a < _order; ++a) {
        for (element_type b = 0; b < _order; ++b) {
          element_type ab = product(a, b);
          for (element_type c = 0; c < _order; ++c) {
            if (product(ab, c) != product(a, product(b, c))) {
              throw Error("group " + _name + ": table is not associative");
            }
          }
        }
      }
    }
    for (element_type a = 0; a < _order; ++a) {
      _exponent = std::lcm(_exponent, element_order(a));
    }
  }

  std::size_t FiniteGroup::element_order(element_type a) const {
    std::size_t  n = 1;
    element_type x = a;
    while (x != _identity) {
      x = product(x, a);
      ++n;
    }
    return n;
  }

  namespace {
    using Perm = std::vector<std::uint8_t>;

    FiniteGroup from_permutations(std::string name, std::vector<Perm> elems) {
      std::map<Perm, element_type> index;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        index.emplace(elems[i], static_cast<element_type>(i));
      }
      std::size_t const         n = elems.size();
      std::vector<element_type> table(n * n);
      Perm                      comp(elems.empty() ? 0 : elems[0].size());
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t x = 0; x < comp.size(); ++x) {
            comp[x] = elems[a][elems[b][x]];
          }
          table[a * n + b] = index.at(comp);
        }
      }
      return FiniteGroup(std::move(name), n, std::move(table));
    }

    bool is_even(Perm const& p) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          inversions += p[i] > p[j];
        }
      }
      return inversions % 2 == 0;
    }

    std::vector<Perm> all_permutations(std::size_t n, bool even_only) {
      Perm p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<Perm> out;
      do {
        if (!even_only || is_even(p)) {
          out.push_back(p);
        }
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }
  }  // namespace

  FiniteGroup build_group(GroupKind kind, std::size_t n) {
    switch (kind) {
      case GroupKind::cyclic: {
        if (n < 1 || n > 1000) {
          throw Error("cyclic group order must be in [1, 1000]");
        }
        std::vector<element_type> table(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            table[a * n + b] = static_cast<element_type>((a + b) % n);
          }
        }
        return FiniteGroup("C" + std::to_string(n), n, std::move(table));
      }
      case GroupKind::dihedral: {
        if (n < 1 || n > 500) {
          throw Error("dihedral group parameter must be in [1, 500]");
        }
        // r^i s^j stored at i + n j; s r s = r^-1.
        std::size_t const         order = 2 * n;
        std::vector<element_type> table(order * order);
        for (std::size_t a = 0; a < order; ++a) {
          for (std::size_t b = 0; b < order; ++b) {
            std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
            std::size_t i  = j1 == 0 ? (i1 + i2) % n : (i1 + n - i2) % n;
            std::size_t j  = (j1 + j2) % 2;
            table[a * order + b] = static_cast<element_type>(i + n * j);
          }
        }
        return FiniteGroup("D" + std::to_string(n), order, std::move(table));
      }
      case GroupKind::symmetric:
      case GroupKind::alternating: {
        if (n < 1 || n > 5) {
          throw Error("symmetric/alternating degree must be in [1, 5]");
        }
        bool const even = kind == GroupKind::alternating;
        return from_permutations((even ? "A" : "S") + std::to_string(n),
                                 all_permutations(n, even));
      }
    }
    throw Error("unknown group kind");
  }

  FiniteGroup group_by_name(std::string_view name) {
    if (name.size() < 2) {
      throw ParseError("unknown group '" + std::string(name) + "'");
    }
    std::string_view digits = name.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })
        || digits.size() > 4) {
      throw ParseError("unknown group '" + std::string(name) + "'");
    }
    std::size_t n = std::stoul(std::string(digits));
    switch (name[0]) {
      case 'C':
        return build_group(GroupKind::cyclic, n);
      case 'D':
        return build_group(GroupKind::dihedral, n);
      case 'S':
        return build_group(GroupKind::symmetric, n);
      case 'A':
        return build_group(GroupKind::alternating, n);
      default:
        throw ParseError("unknown group '" + std::string(name) + "'");
    }
  }

  std::vector<FiniteGroup> parse_battery(std::string_view names) {
    std::vector<FiniteGroup> out;
    std::stringstream        in{std::string(names)};
    std::string              item;
    while (std::getline(in, item, ',')) {
      auto first = item.find_first_not_of(" \t");
      auto last  = item.find_last_not_of(" \t");
      if (first == std::string::npos) {
        throw ParseError("empty entry in group battery '" + std::string(names)
                         + "'");
      }
      try {
        out.push_back(group_by_name(item.substr(first, last - first + 1)));
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }
    if (out.empty()) {
      throw ParseError("empty group battery");
    }
    return out;
  }

  std::vector<FiniteGroup> default_battery() {
    return parse_battery(default_battery_names);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism counting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct CompiledSyllable {
      std::size_t gen;
      std::size_t exp;  // reduced into [0, exponent of the group)
    };

    using CompiledWord = std::vector<CompiledSyllable>;

    class HomCounter {
     public:
      HomCounter(Presentation const& p, FiniteGroup const& g,
                 std::uint64_t budget)
          : _group(g),
            _num_gens(p.num_generators()),
            _budget(budget),
            _checks(p.num_generators()),
            _images(p.num_generators()) {
        std::size_t const e = g.exponent();
        _powers.resize(g.order() * e);
        for (element_type x = 0; x < g.order(); ++x) {
          element_type acc = g.identity();
          for (std::size_t k = 0; k < e; ++k) {
            _powers[x * e + k] = acc;
            acc                = g.product(acc, x);
          }
        }
        BigInt const modulus(static_cast<unsigned long>(e));
        for (auto const& r : p.relators()) {
          CompiledWord w;
          for (auto const& s : r.syllables()) {
            BigInt k;
            mpz_fdiv_r(k.get_mpz_t(), s.exp.get_mpz_t(), modulus.get_mpz_t());
            if (k != 0) {
              w.push_back({s.gen, k.get_ui()});
            }
          }
          if (w.empty()) {
            continue;
          }
          std::size_t last = 0;
          for (auto const& s : w) {
            last = std::max(last, s.gen);
          }
          _checks[last].push_back(std::move(w));
        }
      }

      std::uint64_t run() {
        if (_num_gens == 0) {
          return 1;
        }
        return descend(0);
      }

     private:
      bool satisfied(CompiledWord const& w) {
        if (++_steps > _budget) {
          throw BudgetExceeded("homomorphism search into " + _group.name()
                               + " exceeded " + std::to_string(_budget)
                               + " relator evaluations");
        }
        std::size_t const e   = _group.exponent();
        element_type      acc = _group.identity();
        for (auto const& s : w) {
          acc = _group.product(acc, _powers[_images[s.gen] * e + s.exp]);
        }
        return acc == _group.identity();
      }

      std::uint64_t descend(std::size_t depth) {
        std::uint64_t total = 0;
        for (element_type x = 0; x < _group.order(); ++x) {
          _images[depth] = x;
          bool ok        = true;
          for (auto const& w : _checks[depth]) {
            if (!satisfied(w)) {
              ok = false;
              break;
            }
          }
          if (!ok) {
            continue;
          }
          total += depth + 1 == _num_gens ? 1 : descend(depth + 1);
        }
        return total;
      }

      FiniteGroup const&                     _group;
      std::size_t                            _num_gens;
      std::uint64_t                          _budget;
      std::uint64_t                          _steps = 0;
      std::vector<std::vector<CompiledWord>> _checks;
      std::vector<element_type>              _powers;
      std::vector<element_type>              _images;
    };
  }  // namespace

  std::uint64_t count_homomorphisms(Presentation const& p, FiniteGroup const& g,
                                    std::uint64_t budget) {
    return HomCounter(p, g, budget).run();
  }

  std::vector<std::uint64_t>
  hom_count_signature(Presentation const&             p,
                      std::vector<FiniteGroup> const& battery,
                      std::uint64_t                   budget) {
    std::vector<std::uint64_t> out;
    out.reserve(battery.size());
    for (auto const& g : battery) {
      out.push_back(count_homomorphisms(p, g, budget));
    }
    return out;
  }

}  // namespace twistspin
