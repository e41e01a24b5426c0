#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/presentation.hpp"

namespace twistspin {

  // A finite group given by its multiplication table. Element indices run
  // over [0, order); the table is validated on construction (Latin square,
  // identity, inverses, and associativity when order <= 48).
  class FiniteGroup {
   public:
    using element_type = std::uint32_t;

    FiniteGroup(std::string name, std::size_t order,
                std::vector<element_type> table);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t order() const noexcept {
      return _order;
    }
    element_type identity() const noexcept {
      return _identity;
    }
    element_type product(element_type a, element_type b) const {
      return _table[a * _order + b];
    }
    element_type inverse(element_type a) const {
      return _inverse[a];
    }
    std::vector<element_type> const& inverses() const noexcept {
      return _inverse;
    }
    std::size_t element_order(element_type a) const;
    // Least common multiple of the element orders.
    std::size_t exponent() const noexcept {
      return _exponent;
    }

   private:
    std::string               _name;
    std::size_t               _order;
    std::vector<element_type> _table;
    element_type              _identity = 0;
    std::vector<element_type> _inverse;
    std::size_t               _exponent = 1;
  };

  enum class GroupKind { cyclic, dihedral, symmetric, alternating };

  // cyclic(n), n >= 1 (order n); dihedral(n), n >= 1 (order 2n);
  // symmetric(n) and alternating(n), 1 <= n <= 5.
  FiniteGroup build_group(GroupKind kind, std::size_t n);

  // Resolves names like "C6", "D4", "S3", "A4".
  FiniteGroup group_by_name(std::string_view name);

  // Comma-separated group names, e.g. "C2,C3,C6,S3,D4,A4,S4".
  std::vector<FiniteGroup> parse_battery(std::string_view names);

  inline constexpr std::string_view default_battery_names
      = "C2,C3,C6,S3,D4,A4,S4";
  std::vector<FiniteGroup> default_battery();

  inline constexpr std::uint64_t default_hom_budget = 100'000'000;

  // Exact number of homomorphisms p -> g, by depth-first assignment of
  // generator images in index order. A relator is evaluated as soon as its
  // highest generator is assigned. Each evaluation costs one step; running
  // past `budget` throws BudgetExceeded.
  std::uint64_t count_homomorphisms(Presentation const& p,
                                    FiniteGroup const&  g,
                                    std::uint64_t budget = default_hom_budget);

  std::vector<std::uint64_t>
  hom_count_signature(Presentation const&             p,
                      std::vector<FiniteGroup> const& battery,
                      std::uint64_t budget = default_hom_budget);

}  // namespace twistspin
