#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/abelian.hpp"
#include "twistspin/presentation.hpp"

namespace twistspin {

  // Nonempty list of nonnegative twist counts m_1, ..., m_N.
  class SpinSequence {
   public:
    explicit SpinSequence(std::vector<BigInt> values);

    std::vector<BigInt> const& values() const noexcept {
      return _values;
    }
    std::size_t size() const noexcept {
      return _values.size();
    }
    BigInt const& operator[](std::size_t i) const {
      return _values[i];
    }

    BigInt gcd() const;

   private:
    std::vector<BigInt> _values;
  };

  // Comma-separated nonnegative integers, e.g. "2,3".
  SpinSequence parse_spin_sequence(std::string_view text);
  std::string  to_string(SpinSequence const& s);

  // Adds a central generator h (named `fresh`, suffixed on collision) with
  // relators x h x^-1 h^-1 for every existing generator x and mu^k h. The
  // meridian is unchanged. Throws on a missing meridian or k < 0.
  Presentation twist_spin(Presentation const& p, BigInt const& k,
                          std::string const& fresh = "h");

  // Folds twist_spin over the sequence; stage i adds generator h<i>.
  Presentation iterated_twist_spin(Presentation const& p, SpinSequence const& seq);

  // The iterated presentation with every h_i eliminated through
  // h_i = x_1^-m_i: appends x_k x_1^-m x_k^-1 x_1^m for each m in `seq`
  // (outer) and each generator x_k other than x_1 (inner). The meridian must
  // be a single generator to the first power.
  Presentation eliminated_presentation(Presentation const& p,
                                       SpinSequence const& seq);

  // Appends mu^m, m >= 1.
  Presentation orbifold_presentation(Presentation const& p, BigInt const& m);

  struct CentralQuotient {
    Presentation presentation;
    BigInt       m;  // gcd of the sequence
  };

  // eliminated_presentation(p, seq) with the extra relator x_1^m where
  // m = gcd(seq) >= 1.
  CentralQuotient central_quotient(Presentation const& p, SpinSequence const& seq);

  enum class TorusCenter { nontrivial, inconclusive };

  struct CenterWitnessReport {
    std::int64_t p = 0;
    std::int64_t q = 0;
    BigInt       m;
    TorusCenter  status = TorusCenter::inconclusive;
    Word         witness;        // x^p in the torus presentation
    BigInt       formula_image;  // pq mod m
    // x^p read through the Smith normal form of the orbifold presentation,
    // in the coordinate where the meridian maps to 1.
    BigInt            snf_image;
    AbelianInvariants orbifold_abelianization;
    bool              agree = false;
  };

  // Torus orbifold center test: when m does not divide pq the central element
  // x^p survives in Z/m, so the center is nontrivial.
  CenterWitnessReport torus_center_witness(std::int64_t p, std::int64_t q,
                                           BigInt const& m);

  // Image of `w` in a cyclic abelianization Z/n, normalized so the meridian of
  // `p` maps to 1. Throws if the abelianization is not cyclic of order >= 2
  // or the meridian does not generate it.
  BigInt meridian_normalized_image(Presentation const& p, Word const& w);

}  // namespace twistspin
