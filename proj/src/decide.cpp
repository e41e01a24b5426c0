#include "twistspin/decide.hpp"

#include <algorithm>

#include "twistspin/error.hpp"

namespace twistspin {

  std::string to_string(VerdictStatus s) {
    switch (s) {
      case VerdictStatus::trivial:
        return "Trivial";
      case VerdictStatus::nontrivial:
        return "NonTrivial";
      case VerdictStatus::unknown:
        return "Unknown";
    }
    return "Unknown";
  }

  std::string to_string(CenterState s) {
    switch (s) {
      case CenterState::trivial_center:
        return "TrivialCenter";
      case CenterState::nontrivial_center:
        return "NonTrivialCenter";
      case CenterState::unknown:
        return "Unknown";
    }
    return "Unknown";
  }

  CenterStatus center_status(KnotClass const& c, BigInt const& m) {
    if (m < 2) {
      throw Error("center status needs m >= 2, got " + m.get_str());
    }
    using Tag = KnotClass::Tag;
    switch (c.tag) {
      case Tag::hyperbolic:
        if (m >= 3) {
          return {CenterState::trivial_center, "hyperbolic knot with m >= 3", {}};
        }
        return {CenterState::unknown, "hyperbolic knot with m = 2", {}};
      case Tag::prime_satellite:
        return {CenterState::trivial_center, "prime satellite knot with m >= 2",
                {}};
      case Tag::torus: {
        auto report = torus_center_witness(c.p, c.q, m);
        if (report.status == TorusCenter::nontrivial) {
          return {CenterState::nontrivial_center,
                  "torus knot with m not dividing pq: x^p is central with "
                  "nonzero abelian image",
                  report};
        }
        return {CenterState::unknown, "torus knot with m dividing pq", report};
      }
      case Tag::trivial:
        return {CenterState::unknown, "trivial knot", {}};
      case Tag::unknown:
        return {CenterState::unknown, "unclassified knot", {}};
    }
    return {CenterState::unknown, "unclassified knot", {}};
  }

  namespace {
    Verdict make(VerdictStatus s, std::string rule, std::string detail,
                 KnotClass const& c) {
      Verdict v;
      v.status     = s;
      v.rule       = std::move(rule);
      v.detail     = std::move(detail);
      v.knot_class = c;
      return v;
    }

    bool has_bare_meridian(Presentation const& p) {
      return p.meridian() && p.meridian()->size() == 1
             && (*p.meridian())[0].exp == 1;
    }

    // Shared tail of the double and iterated deciders once gcd >= 2.
    Verdict decide_by_center(KnotClass const& c, SpinSequence const& seq,
                             std::optional<Presentation> const& knot) {
      BigInt const m = seq.gcd();
      if (c.tag == KnotClass::Tag::unknown) {
        Verdict v = make(VerdictStatus::unknown, rules::none,
                         "unclassified knot with gcd " + m.get_str(), c);
        v.m       = m;
        return v;
      }
      CenterStatus center = center_status(c, m);
      if (center.status != CenterState::trivial_center) {
        Verdict v = make(VerdictStatus::unknown, rules::none,
                         "orbifold center not known to be trivial ("
                             + center.source + ")",
                         c);
        v.m       = m;
        v.center  = std::move(center);
        return v;
      }
      Verdict v = make(VerdictStatus::nontrivial, rules::central_quotient,
                       "gcd " + m.get_str()
                           + " >= 2 and the orbifold group is centerless",
                       c);
      v.m       = m;
      v.center  = std::move(center);
      if (knot && has_bare_meridian(*knot)) {
        v.quotient_abelianization
            = Abelianization(central_quotient(*knot, seq).presentation)
                  .invariants();
      }
      return v;
    }
  }  // namespace

  Verdict decide_single(KnotClass const& c, BigInt const& k) {
    if (k < 0) {
      throw Error("twist count must be nonnegative");
    }
    using Tag = KnotClass::Tag;
    if (c.tag == Tag::trivial) {
      return make(VerdictStatus::trivial, rules::trivial_knot,
                  "spins of the trivial knot are trivial", c);
    }
    if (k == 1) {
      return make(VerdictStatus::trivial, rules::one_twist,
                  "the fiber of a 1-twist spin is a ball", c);
    }
    if (c.tag != Tag::unknown && k >= 2) {
      return make(VerdictStatus::nontrivial, rules::nontrivial_twist,
                  "k = " + k.get_str() + " >= 2 on a nontrivial knot", c);
    }
    return make(VerdictStatus::unknown, rules::none,
                k == 0 ? "0-twist spins are not decided"
                       : "unclassified knot",
                c);
  }

  Verdict decide_double(KnotClass const& c, BigInt const& m1, BigInt const& m2,
                        std::optional<Presentation> const& knot) {
    if (m1 < 1 || m2 < 1) {
      throw Error("double twist spins need m1, m2 >= 1");
    }
    SpinSequence const seq({m1, m2});
    if (c.tag == KnotClass::Tag::trivial) {
      return make(VerdictStatus::trivial, rules::trivial_knot,
                  "spins of the trivial knot are trivial", c);
    }
    if (seq.gcd() == 1) {
      Verdict v = make(VerdictStatus::trivial, rules::coprime_double,
                       "gcd(m1, m2) = 1", c);
      v.m       = BigInt(1);
      return v;
    }
    return decide_by_center(c, seq, knot);
  }

  Verdict decide_iterated(KnotClass const& c, SpinSequence const& seq,
                          std::optional<Presentation> const& knot) {
    if (seq.size() < 3) {
      throw Error("iterated decisions need at least three twist counts");
    }
    auto const& vals = seq.values();
    if (std::any_of(vals.begin(), vals.end(), [](BigInt const& v) { return v < 1; })) {
      throw Error("iterated twist counts must be >= 1");
    }
    if (c.tag == KnotClass::Tag::trivial) {
      return make(VerdictStatus::trivial, rules::trivial_knot,
                  "spins of the trivial knot are trivial", c);
    }
    auto one = std::find(vals.begin(), vals.end(), BigInt(1));
    if (one != vals.end()) {
      return make(VerdictStatus::trivial, rules::unit_entry,
                  "stage " + std::to_string(one - vals.begin() + 1)
                      + " is a 1-twist spin",
                  c);
    }
    if (seq.gcd() == 1) {
      Verdict v = make(VerdictStatus::unknown, rules::none,
                       "gcd = 1 with all entries >= 2 is open beyond "
                       "double spins",
                       c);
      v.m       = BigInt(1);
      return v;
    }
    return decide_by_center(c, seq, knot);
  }

  Verdict decide(KnotClass const& c, SpinSequence const& seq,
                 std::optional<Presentation> const& knot) {
    switch (seq.size()) {
      case 1:
        return decide_single(c, seq[0]);
      case 2:
        return decide_double(c, seq[0], seq[1], knot);
      default:
        return decide_iterated(c, seq, knot);
    }
  }

}  // namespace twistspin
