#include "twistspin/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "twistspin/error.hpp"
#include "twistspin/finquot.hpp"
#include "twistspin/knot.hpp"
#include "twistspin/spin.hpp"

namespace twistspin {

  std::size_t VerifyReport::failures() const {
    std::size_t n = 0;
    for (auto const& r : rows) {
      n += !r.pass;
    }
    return n;
  }

  std::vector<std::string> verify_suite_names() {
    return {"lemma21", "lemma33", "theorem41", "snf"};
  }

  Presentation trefoil_closure() {
    return braid_closure_presentation(parse_braid("1 1 1"));
  }

  Presentation figure_eight_closure() {
    return braid_closure_presentation(parse_braid("1 -2 1 -2"));
  }

  BigInt cofactor_determinant(IntMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw Error("determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return m(0, 0);
    }
    BigInt det = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (m(0, c) == 0) {
        continue;
      }
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0, kk = 0; k < n; ++k) {
          if (k != c) {
            minor(r - 1, kk++) = m(r, k);
          }
        }
      }
      BigInt term = m(0, c) * cofactor_determinant(minor);
      det += c % 2 == 0 ? term : BigInt(-term);
    }
    return det;
  }

  namespace {
    std::string join(std::vector<std::uint64_t> const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
      }
      return out + "]";
    }

    std::string join(std::vector<BigInt> const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + v[i].get_str();
      }
      return out + "]";
    }

    VerifyRow compare_signatures(std::string label,
                                 std::vector<std::uint64_t> const& lhs,
                                 std::vector<std::uint64_t> const& rhs) {
      return {std::move(label), lhs == rhs, join(lhs) + " vs " + join(rhs)};
    }

    struct NamedKnot {
      std::string  name;
      Presentation presentation;
    };

    std::vector<NamedKnot> test_knots() {
      return {{"trefoil", trefoil_closure()},
              {"figure-eight", figure_eight_closure()}};
    }

    VerifyReport lemma21() {
      VerifyReport report{"lemma21", {}};
      auto const   battery  = default_battery();
      auto const   infinite = hom_count_signature(
          Presentation({"t"}, {}, Word::generator(0)), battery);
      for (auto const& [name, p] : test_knots()) {
        report.rows.push_back(compare_signatures(
            name + " k=1 vs infinite cyclic",
            hom_count_signature(twist_spin(p, 1), battery), infinite));
        report.rows.push_back(compare_signatures(
            name + " k=0 vs knot group",
            hom_count_signature(twist_spin(p, 0), battery),
            hom_count_signature(p, battery)));
        for (int k = 2; k <= 4; ++k) {
          auto inv = abelianization(twist_spin(p, k)).invariants();
          report.rows.push_back({name + " k=" + std::to_string(k)
                                     + " abelianization",
                                 inv == AbelianInvariants{1, {}},
                                 to_string(inv)});
        }
      }
      return report;
    }

    VerifyReport lemma33() {
      VerifyReport report{"lemma33", {}};
      auto const   small = parse_battery("C2,C3,S3,D4");
      auto const   full  = default_battery();
      for (auto const& [name, p] : test_knots()) {
        for (auto const& text : {"2,2", "2,4", "3,3", "2,6", "4,6"}) {
          SpinSequence const seq   = parse_spin_sequence(text);
          std::string const  label = name + " m=(" + text + ")";
          report.rows.push_back(compare_signatures(
              label + " iterated vs eliminated",
              hom_count_signature(iterated_twist_spin(p, seq), small),
              hom_count_signature(eliminated_presentation(p, seq), small)));
          auto const cq = central_quotient(p, seq);
          report.rows.push_back(compare_signatures(
              label + " central quotient vs orbifold",
              hom_count_signature(cq.presentation, full),
              hom_count_signature(orbifold_presentation(p, cq.m), full)));
          auto inv = abelianization(cq.presentation).invariants();
          report.rows.push_back({label + " central quotient abelianization",
                                 inv == AbelianInvariants{0, {cq.m}},
                                 to_string(inv)});
        }
      }
      return report;
    }

    VerifyReport theorem41() {
      VerifyReport report{"theorem41", {}};
      for (std::int64_t p = 2; p <= 7; ++p) {
        for (std::int64_t q = p + 1; q <= 7; ++q) {
          if (std::gcd(p, q) != 1) {
            continue;
          }
          for (long m = 2; m <= 12; ++m) {
            auto const r = torus_center_witness(p, q, BigInt(m));
            bool const divides = (p * q) % m == 0;
            bool const status_ok
                = (r.status == TorusCenter::nontrivial) == !divides;
            std::ostringstream detail;
            detail << "pq mod m = " << r.formula_image.get_str()
                   << ", snf image = " << r.snf_image.get_str() << ", "
                   << (r.agree ? "AGREE" : "DISAGREE") << ", "
                   << (r.status == TorusCenter::nontrivial ? "NonTrivialCenter"
                                                           : "Inconclusive");
            report.rows.push_back({"(p,q,m)=(" + std::to_string(p) + ","
                                       + std::to_string(q) + ","
                                       + std::to_string(m) + ")",
                                   status_ok && r.agree, detail.str()});
          }
        }
      }
      return report;
    }

    bool chain_ok(std::vector<BigInt> const& f) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] <= 0) {
          return false;
        }
        if (i + 1 < f.size()
            && !mpz_divisible_p(f[i + 1].get_mpz_t(), f[i].get_mpz_t())) {
          return false;
        }
      }
      return true;
    }

    VerifyReport snf(std::uint64_t seed) {
      VerifyReport report{"snf", {}};
      std::mt19937_64                    rng(seed);
      std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9), mult(-3, 3),
          op(0, 3);

      std::size_t chain_failures = 0, invariance_failures = 0,
                  det_failures = 0, det_cases = 0;
      std::string first_chain, first_invariance, first_det;
      constexpr int matrices = 500;
      for (int t = 0; t < matrices; ++t) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t r = 0; r < a.rows(); ++r) {
          for (std::size_t c = 0; c < a.cols(); ++c) {
            a(r, c) = entry(rng);
          }
        }
        auto const f = smith_invariant_factors(a);
        if (!chain_ok(f.factors)) {
          ++chain_failures;
          if (first_chain.empty()) {
            first_chain = "matrix " + std::to_string(t) + ": " + join(f.factors);
          }
        }
        IntMatrix b = a;
        for (int k = 0; k < 100; ++k) {
          std::uniform_int_distribution<std::size_t> row(0, b.rows() - 1),
              col(0, b.cols() - 1);
          switch (op(rng)) {
            case 0:
              b.swap_rows(row(rng), row(rng));
              break;
            case 1:
              b.swap_cols(col(rng), col(rng));
              break;
            case 2: {
              std::size_t i = row(rng), j = row(rng);
              if (i != j) {
                b.add_row_multiple(i, j, mult(rng));
              }
              break;
            }
            default: {
              std::size_t i = col(rng), j = col(rng);
              if (i != j) {
                b.add_col_multiple(i, j, mult(rng));
              }
              break;
            }
          }
        }
        auto const g = smith_invariant_factors(b);
        if (g.factors != f.factors || g.rank != f.rank) {
          ++invariance_failures;
          if (first_invariance.empty()) {
            first_invariance = "matrix " + std::to_string(t) + ": "
                               + join(f.factors) + " vs " + join(g.factors);
          }
        }
        if (a.rows() == a.cols()) {
          BigInt det = cofactor_determinant(a);
          if (det != 0) {
            ++det_cases;
            BigInt prod = 1;
            for (auto const& x : f.factors) {
              prod *= x;
            }
            if (prod != abs(det)) {
              ++det_failures;
              if (first_det.empty()) {
                first_det = "matrix " + std::to_string(t) + ": |det| "
                            + BigInt(abs(det)).get_str() + " vs "
                            + prod.get_str();
              }
            }
          }
        }
      }
      auto summary = [](std::size_t fails, std::size_t total,
                        std::string const& first) {
        return std::to_string(total - fails) + "/" + std::to_string(total)
               + (first.empty() ? "" : "; first failure " + first);
      };
      report.rows.push_back({"divisibility chain", chain_failures == 0,
                             summary(chain_failures, matrices, first_chain)});
      report.rows.push_back(
          {"invariance under 100 elementary operations",
           invariance_failures == 0,
           summary(invariance_failures, matrices, first_invariance)});
      report.rows.push_back({"|det| = product of invariant factors",
                             det_failures == 0 && det_cases > 0,
                             summary(det_failures, det_cases, first_det)});
      return report;
    }
  }  // namespace

  VerifyReport run_verify_suite(std::string_view name, std::uint64_t seed) {
    if (name == "lemma21") {
      return lemma21();
    }
    if (name == "lemma33") {
      return lemma33();
    }
    if (name == "theorem41") {
      return theorem41();
    }
    if (name == "snf") {
      return snf(seed);
    }
    throw ParseError("unknown verify suite '" + std::string(name)
                     + "' (expected lemma21|lemma33|theorem41|snf)");
  }

}  // namespace twistspin
