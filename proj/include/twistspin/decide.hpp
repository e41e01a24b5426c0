#pragma once

#include <optional>
#include <string>

#include "twistspin/knot.hpp"
#include "twistspin/spin.hpp"

namespace twistspin {

  // Rule identifiers recorded in certificates.
  namespace rules {
    // A trivial knot stays trivial under any twist spin.
    inline constexpr char const* trivial_knot = "trivial-knot-spin";
    // A 1-twist spin has a ball as fiber, hence is trivial.
    inline constexpr char const* one_twist = "one-twist-spin";
    // k >= 2 twist spins of nontrivial classical knots are nontrivial 2-knots.
    inline constexpr char const* nontrivial_twist = "nontrivial-twist-spin";
    // Coprime double twist spins are trivial 3-knots.
    inline constexpr char const* coprime_double = "coprime-double-spin";
    // An entry equal to 1 trivializes that stage; later stages keep it so.
    inline constexpr char const* unit_entry = "unit-entry-iterated-spin";
    // gcd m >= 2 and centerless orbifold group: the quotient by the center is
    // the orbifold group, which has abelianization Z/m.
    inline constexpr char const* central_quotient = "central-quotient-orbifold";
    inline constexpr char const* none = "no-applicable-rule";
  }  // namespace rules

  enum class CenterState { trivial_center, nontrivial_center, unknown };

  struct CenterStatus {
    CenterState                        status = CenterState::unknown;
    std::string                        source;
    std::optional<CenterWitnessReport> torus_witness;
  };

  // Center of the orbifold group of the declared knot class with cone angle
  // 2 pi / m. Throws for m < 2.
  CenterStatus center_status(KnotClass const& c, BigInt const& m);

  enum class VerdictStatus { trivial, nontrivial, unknown };

  struct Verdict {
    VerdictStatus status = VerdictStatus::unknown;
    std::string   rule;
    std::string   detail;
    KnotClass     knot_class;
    std::optional<BigInt>            m;  // gcd, for double/iterated spins
    std::optional<CenterStatus>      center;
    // Abelianization of the central quotient, when a Wirtinger-form knot
    // presentation was supplied.
    std::optional<AbelianInvariants> quotient_abelianization;
  };

  std::string to_string(VerdictStatus s);
  std::string to_string(CenterState s);

  Verdict decide_single(KnotClass const& c, BigInt const& k);

  // `knot`, when given and in Wirtinger form, is used to compute the
  // abelianization witness of a NonTrivial verdict.
  Verdict decide_double(KnotClass const& c, BigInt const& m1, BigInt const& m2,
                        std::optional<Presentation> const& knot = std::nullopt);

  // Sequences of length >= 3 with entries >= 1.
  Verdict decide_iterated(KnotClass const& c, SpinSequence const& seq,
                          std::optional<Presentation> const& knot = std::nullopt);

  // Dispatches on sequence length: 1 single, 2 double, >= 3 iterated.
  Verdict decide(KnotClass const& c, SpinSequence const& seq,
                 std::optional<Presentation> const& knot = std::nullopt);

}  // namespace twistspin
