#include "twistspin/spin.hpp"

#include <sstream>
#include <utility>

#include "twistspin/error.hpp"
#include "twistspin/knot.hpp"

namespace twistspin {

  SpinSequence::SpinSequence(std::vector<BigInt> values)
      : _values(std::move(values)) {
    if (_values.empty()) {
      throw Error("a spin sequence needs at least one entry");
    }
    for (auto const& v : _values) {
      if (v < 0) {
        throw Error("spin sequence entries must be nonnegative, got "
                    + v.get_str());
      }
    }
  }

  BigInt SpinSequence::gcd() const {
    BigInt g = 0;
    for (auto const& v : _values) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
  }

  SpinSequence parse_spin_sequence(std::string_view text) {
    std::vector<BigInt> values;
    std::stringstream   in{std::string(text)};
    std::string         item;
    while (std::getline(in, item, ',')) {
      BigInt v;
      if (item.empty() || v.set_str(item, 10) != 0) {
        throw ParseError("spin sequence entry '" + item + "' is not an integer");
      }
      if (v < 0) {
        throw ParseError("spin sequence entry " + item + " is negative");
      }
      values.push_back(v);
    }
    if (values.empty() || (!text.empty() && text.back() == ',')) {
      throw ParseError("malformed spin sequence '" + std::string(text) + "'");
    }
    return SpinSequence(std::move(values));
  }

  std::string to_string(SpinSequence const& s) {
    std::string out;
    for (auto const& v : s.values()) {
      if (!out.empty()) {
        out += ',';
      }
      out += v.get_str();
    }
    return out;
  }

  namespace {
    Word const& require_meridian(Presentation const& p) {
      if (!p.meridian()) {
        throw Error("the presentation has no meridian");
      }
      return *p.meridian();
    }

    std::size_t wirtinger_meridian(Presentation const& p) {
      Word const& mu = require_meridian(p);
      if (mu.size() != 1 || mu[0].exp != 1) {
        throw Error("the meridian must be a single generator (Wirtinger form)");
      }
      return mu[0].gen;
    }
  }  // namespace

  Presentation twist_spin(Presentation const& p, BigInt const& k,
                          std::string const& fresh) {
    Word const& mu = require_meridian(p);
    if (k < 0) {
      throw Error("twist count must be nonnegative");
    }
    std::vector<std::string> gens = p.generators();
    std::size_t const        h    = gens.size();
    gens.push_back(p.fresh_name(fresh));

    std::vector<Word> rels = p.relators();
    Word const        hw   = Word::generator(h);
    for (std::size_t x = 0; x < h; ++x) {
      rels.push_back(commutator(Word::generator(x), hw));
    }
    rels.push_back(power(mu, k) * hw);
    return Presentation(std::move(gens), std::move(rels), mu);
  }

  Presentation iterated_twist_spin(Presentation const& p, SpinSequence const& seq) {
    require_meridian(p);
    Presentation out = p;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      out = twist_spin(out, seq[i], "h" + std::to_string(i + 1));
    }
    return out;
  }

  Presentation eliminated_presentation(Presentation const& p,
                                       SpinSequence const& seq) {
    std::size_t const x1 = wirtinger_meridian(p);
    std::vector<Word> extra;
    for (auto const& m : seq.values()) {
      Word const up   = Word::generator(x1, m);
      Word const down = Word::generator(x1, -m);
      for (std::size_t k = 0; k < p.num_generators(); ++k) {
        if (k == x1) {
          continue;
        }
        Word const xk = Word::generator(k);
        extra.push_back(xk * down * invert(xk) * up);
      }
    }
    return add_relators(p, extra);
  }

  Presentation orbifold_presentation(Presentation const& p, BigInt const& m) {
    Word const& mu = require_meridian(p);
    if (m < 1) {
      throw Error("orbifold order m must be >= 1, got " + m.get_str());
    }
    return add_relators(p, {power(mu, m)});
  }

  CentralQuotient central_quotient(Presentation const& p, SpinSequence const& seq) {
    std::size_t const x1 = wirtinger_meridian(p);
    BigInt const      m  = seq.gcd();
    if (m < 1) {
      throw Error("central quotient needs gcd of the sequence >= 1");
    }
    return {add_relators(eliminated_presentation(p, seq),
                         {Word::generator(x1, m)}),
            m};
  }

  BigInt meridian_normalized_image(Presentation const& p, Word const& w) {
    Word const&    mu = require_meridian(p);
    Abelianization ab(p);
    auto const&    inv = ab.invariants();
    if (inv.free_rank != 0 || inv.torsion.size() != 1) {
      throw Error("abelianization " + to_string(inv) + " is not finite cyclic");
    }
    BigInt const& n    = inv.torsion[0];
    BigInt        unit = ab.image(mu).torsion_part[0];
    BigInt        unit_inv;
    if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), n.get_mpz_t()) == 0) {
      throw Error("the meridian does not generate the abelianization");
    }
    BigInt out = ab.image(w).torsion_part[0] * unit_inv;
    mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
    return out;
  }

  CenterWitnessReport torus_center_witness(std::int64_t p, std::int64_t q,
                                           BigInt const& m) {
    if (m < 2) {
      throw Error("orbifold order m must be >= 2 for the center test");
    }
    Presentation const knot = torus_presentation(p, q);
    Presentation const orb  = orbifold_presentation(knot, m);

    CenterWitnessReport r;
    r.p       = p;
    r.q       = q;
    r.m       = m;
    r.witness = Word::generator(0, BigInt(static_cast<long>(p)));
    BigInt const pq
        = BigInt(static_cast<long>(p)) * BigInt(static_cast<long>(q));
    mpz_fdiv_r(r.formula_image.get_mpz_t(), pq.get_mpz_t(), m.get_mpz_t());
    r.status = r.formula_image != 0 ? TorusCenter::nontrivial
                                    : TorusCenter::inconclusive;
    r.orbifold_abelianization = Abelianization(orb).invariants();
    r.snf_image               = meridian_normalized_image(orb, r.witness);
    r.agree                   = r.snf_image == r.formula_image;
    return r;
  }

}  // namespace twistspin
