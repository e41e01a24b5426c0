#include "twistspin/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistspin/abelian.hpp"
#include "twistspin/decide.hpp"
#include "twistspin/error.hpp"
#include "twistspin/finquot.hpp"
#include "twistspin/knot.hpp"
#include "twistspin/spin.hpp"
#include "twistspin/verify.hpp"

namespace twistspin {

  namespace {
    using Record = nlohmann::ordered_json;

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error("cannot open '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    // FNV-1a, 64 bit.
    class Digest {
     public:
      void add(std::string_view s) {
        for (unsigned char c : s) {
          _h ^= c;
          _h *= 0x100000001b3ULL;
        }
        _h ^= 0xff;
        _h *= 0x100000001b3ULL;
      }
      std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(_h));
        return buf;
      }

     private:
      std::uint64_t _h = 0xcbf29ce484222325ULL;
    };

    struct KnotFlags {
      std::string  braid;
      std::size_t  strands = 0;
      std::string  torus;
      std::string  pres;
      std::string  knot_class;
      CLI::Option* braid_opt   = nullptr;
      CLI::Option* strands_opt = nullptr;
      CLI::Option* torus_opt   = nullptr;
      CLI::Option* pres_opt    = nullptr;
      CLI::Option* class_opt   = nullptr;

      void attach(CLI::App* app, bool with_class = true) {
        braid_opt   = app->add_option("--braid", braid,
                                      "Braid word, e.g. \"1 -2 1 -2\"");
        strands_opt = app->add_option("--strands", strands,
                                      "Strand count for --braid");
        torus_opt   = app->add_option("--torus", torus, "Torus knot p,q");
        pres_opt    = app->add_option("--pres", pres, "Presentation file");
        if (with_class) {
          class_opt = app->add_option(
              "--class", knot_class,
              "trivial|torus:p,q|hyperbolic|prime-satellite|unknown");
        }
      }

      std::size_t sources() const {
        return braid_opt->count() + torus_opt->count() + pres_opt->count();
      }

      KnotClass parsed_class() const {
        return class_opt && class_opt->count() ? parse_knot_class(knot_class)
                                               : KnotClass::unknown();
      }

      // Requires exactly one source flag.
      KnotInput input(Digest& digest, Record& inputs) const {
        if (sources() != 1) {
          throw ParseError(
              "exactly one of --braid, --torus, --pres is required");
        }
        if (strands_opt->count() && !braid_opt->count()) {
          throw ParseError("--strands only applies to --braid");
        }
        KnotClass const c = parsed_class();
        if (class_opt && class_opt->count()) {
          inputs["class"] = to_string(c);
        }
        if (braid_opt->count()) {
          inputs["braid"] = braid;
          std::optional<std::size_t> n;
          if (strands_opt->count()) {
            n                 = strands;
            inputs["strands"] = strands;
          }
          return KnotInput::make(parse_braid(braid, n), c);
        }
        if (torus_opt->count()) {
          inputs["torus"] = torus;
          auto [p, q]     = parse_int_pair(torus);
          return KnotInput::make(TorusSource{p, q}, c);
        }
        inputs["pres"]     = pres;
        std::string const text = read_file(pres);
        digest.add(text);
        return KnotInput::make(parse_presentation(text), c);
      }
    };

    Record verdict_record(Verdict const& v) {
      Record r;
      r["status"] = to_string(v.status);
      r["rule"]   = v.rule;
      r["detail"] = v.detail;
      r["class"]  = to_string(v.knot_class);
      if (v.m) {
        r["m"] = v.m->get_str();
      }
      if (v.center) {
        r["center"] = to_string(v.center->status);
        r["center_source"] = v.center->source;
      }
      if (v.quotient_abelianization) {
        r["central_quotient_abelianization"]
            = to_string(*v.quotient_abelianization);
      }
      return r;
    }

    Record witness_record(CenterWitnessReport const& w) {
      Presentation const torus = torus_presentation(w.p, w.q);
      Record             r;
      r["p"]                       = w.p;
      r["q"]                       = w.q;
      r["m"]                       = w.m.get_str();
      r["center"]                  = w.status == TorusCenter::nontrivial
                                         ? "NonTrivialCenter"
                                         : "Inconclusive";
      r["word"]                    = to_string(w.witness, torus.generators());
      r["formula_image"]           = w.formula_image.get_str();
      r["snf_image"]               = w.snf_image.get_str();
      r["orbifold_abelianization"] = to_string(w.orbifold_abelianization);
      r["agree"]                   = w.agree;
      return r;
    }

    std::string scalar_text(Record const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    }

    void flatten(std::ostream& out, std::string const& prefix,
                 std::string const& key, Record const& v) {
      if (v.is_object()) {
        for (auto const& [k, sub] : v.items()) {
          flatten(out, prefix, key + "." + k, sub);
        }
        return;
      }
      out << prefix << key << ": " << scalar_text(v) << '\n';
    }

    // Text form carries the same fields as the JSON record. When the record
    // holds a presentation, every other line is a comment so the output can
    // be fed back through --pres.
    void render_text(std::ostream& out, Record const& rec) {
      bool const        has_pres = rec.contains("presentation");
      std::string const prefix   = has_pres ? "# " : "";
      out << "# command: " << rec["command"].get<std::string>() << '\n';
      out << "# input_digest: " << rec["input_digest"].get<std::string>()
          << '\n';
      for (auto const& [k, v] : rec["inputs"].items()) {
        out << "# inputs." << k << ": " << scalar_text(v) << '\n';
      }
      if (has_pres) {
        out << rec["presentation"].get<std::string>();
      }
      for (auto const& [key, value] : rec.items()) {
        if (key == "command" || key == "input_digest" || key == "inputs"
            || key == "presentation") {
          continue;
        }
        if (key == "hom_counts") {
          out << prefix << "hom_counts:\n";
          for (auto const& [g, n] : value.items()) {
            out << prefix << "  " << g << ' ' << n.get<std::uint64_t>()
                << '\n';
          }
        } else if (key == "verify") {
          for (auto const& row : value["rows"]) {
            out << (row["pass"].get<bool>() ? "PASS  " : "FAIL  ")
                << row["case"].get<std::string>() << "  "
                << row["detail"].get<std::string>() << '\n';
          }
          out << "suite " << value["suite"].get<std::string>() << ": "
              << value["passed"].get<std::size_t>() << " passed, "
              << value["failed"].get<std::size_t>() << " failed\n";
        } else {
          flatten(out, prefix, key, value);
        }
      }
    }

    Record hom_count_record(Presentation const&             p,
                            std::vector<FiniteGroup> const& battery,
                            std::uint64_t                   budget) {
      Record counts = Record::object();
      auto   sig    = hom_count_signature(p, battery, budget);
      for (std::size_t i = 0; i < battery.size(); ++i) {
        counts[battery[i].name()] = sig[i];
      }
      return counts;
    }

    BigInt parse_big(std::string const& text, char const* what) {
      BigInt v;
      if (text.empty() || v.set_str(text, 10) != 0) {
        throw ParseError(std::string(what) + " '" + text
                         + "' is not an integer");
      }
      return v;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"Presentations, invariants and (non)triviality certificates "
                 "for iterated twist-spun knots"};
    app.name(args.empty() ? "twistspin" : args[0]);
    app.require_subcommand(1);
    app.fallthrough();

    bool json   = false;
    bool timing = false;
    app.add_flag("--json", json, "Emit one JSON record instead of text");
    app.add_flag("--timing", timing, "Include elapsed wall time");

    // present
    KnotFlags present_knot;
    auto*     present = app.add_subcommand(
        "present", "Print the knot group presentation with its meridian");
    present_knot.attach(present);

    // twistspin
    KnotFlags   spin_knot;
    std::string spin_m;
    bool        eliminate = false, simplify = false;
    std::size_t tietze_budget = default_tietze_budget;
    auto*       spin = app.add_subcommand(
        "twistspin", "Presentation of an (iterated) twist spin");
    spin_knot.attach(spin);
    spin->add_option("--m", spin_m, "Twist counts, e.g. 2,3")->required();
    spin->add_flag("--eliminate", eliminate,
                   "Eliminate the central generators (Wirtinger meridian)");
    spin->add_flag("--simplify", simplify, "Run Tietze simplification");
    spin->add_option("--tietze-budget", tietze_budget, "Tietze pass budget");

    // orbifold
    KnotFlags     orb_knot;
    std::string   orb_m;
    bool          abelianize = false;
    std::string   orb_groups;
    std::uint64_t orb_budget = default_hom_budget;
    auto*         orb        = app.add_subcommand(
        "orbifold", "Orbifold group: the knot group with mu^m added");
    orb_knot.attach(orb);
    orb->add_option("--m", orb_m, "Cone order m >= 1")->required();
    orb->add_flag("--abelianize", abelianize, "Print the abelianization");
    auto* orb_groups_opt
        = orb->add_option("--groups", orb_groups, "Also count homomorphisms");
    orb->add_option("--budget", orb_budget, "Homomorphism search budget");

    // homcount
    KnotFlags     hc_knot;
    std::string   hc_groups = std::string(default_battery_names);
    std::uint64_t hc_budget = default_hom_budget;
    auto*         hc        = app.add_subcommand(
        "homcount", "Exact homomorphism counts into finite groups");
    hc_knot.attach(hc, false);
    hc->add_option("--groups", hc_groups, "Battery, e.g. C2,C3,S3")
        ->capture_default_str();
    hc->add_option("--budget", hc_budget, "Relator evaluation budget");

    // decide
    KnotFlags   dec_knot;
    std::string dec_m;
    auto*       dec = app.add_subcommand(
        "decide", "Trivial / NonTrivial / Unknown with a certificate");
    dec_knot.attach(dec);
    dec_knot.class_opt->required();
    dec->add_option("--m", dec_m, "Twist counts, e.g. 3,6")->required();

    // verify
    std::string   suite;
    std::uint64_t seed = default_seed;
    auto*         ver  = app.add_subcommand("verify", "Run a cross-check suite");
    ver->add_option("--suite", suite, "lemma21|lemma33|theorem41|snf")
        ->required();
    ver->add_option("--seed", seed, "Seed for randomized suites")
        ->capture_default_str();

    std::vector<char*> argv;
    std::vector<std::string> storage = args.empty()
                                           ? std::vector<std::string>{"twistspin"}
                                           : args;
    for (auto& a : storage) {
      argv.push_back(a.data());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_code::ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_code::ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code::usage;
    }

    auto const start = std::chrono::steady_clock::now();
    Record     rec;
    std::string command;
    for (std::size_t i = 1; i < storage.size(); ++i) {
      command += (i > 1 ? " " : "") + storage[i];
    }
    rec["command"] = command;
    Digest digest;
    digest.add(command);
    Record inputs = Record::object();
    int    status = exit_code::ok;

    try {
      if (present->parsed()) {
        Presentation p = knot_presentation(present_knot.input(digest, inputs));
        rec["presentation"] = serialize(p);
      } else if (spin->parsed()) {
        SpinSequence const seq = parse_spin_sequence(spin_m);
        inputs["m"]            = to_string(seq);
        Presentation const k   = knot_presentation(spin_knot.input(digest, inputs));
        Presentation       result = eliminate ? eliminated_presentation(k, seq)
                                              : iterated_twist_spin(k, seq);
        if (simplify) {
          auto t = tietze_simplify(result, tietze_budget);
          result = t.presentation;
          rec["tietze"] = {{"passes", t.passes},
                           {"eliminated", t.eliminated},
                           {"budget_exhausted", t.budget_exhausted}};
        }
        rec["presentation"] = serialize(result);
      } else if (orb->parsed()) {
        BigInt const m = parse_big(orb_m, "--m");
        if (m < 1) {
          throw ParseError("--m must be >= 1, got " + m.get_str());
        }
        inputs["m"]          = m.get_str();
        Presentation const k = knot_presentation(orb_knot.input(digest, inputs));
        Presentation const o = orbifold_presentation(k, m);
        rec["presentation"]  = serialize(o);
        if (abelianize) {
          rec["abelianization"] = to_string(abelianization(o).invariants());
        }
        if (orb_groups_opt->count()) {
          inputs["groups"]  = orb_groups;
          rec["hom_counts"] = hom_count_record(o, parse_battery(orb_groups),
                                               orb_budget);
        }
      } else if (hc->parsed()) {
        auto const battery = parse_battery(hc_groups);
        inputs["groups"]   = hc_groups;
        Presentation p;
        if (hc_knot.pres_opt->count() && hc_knot.sources() == 1) {
          inputs["pres"]         = hc_knot.pres;
          std::string const text = read_file(hc_knot.pres);
          digest.add(text);
          p = parse_presentation(text);
        } else {
          p = knot_presentation(hc_knot.input(digest, inputs));
        }
        rec["hom_counts"] = hom_count_record(p, battery, hc_budget);
      } else if (dec->parsed()) {
        SpinSequence const seq = parse_spin_sequence(dec_m);
        inputs["m"]            = to_string(seq);
        KnotClass const c      = dec_knot.parsed_class();
        inputs["class"]        = to_string(c);
        std::optional<Presentation> knot;
        if (dec_knot.sources() > 0) {
          knot = knot_presentation(dec_knot.input(digest, inputs));
        }
        Verdict const v = decide(c, seq, knot);
        rec["verdict"]  = verdict_record(v);
        if (v.center && v.center->torus_witness) {
          rec["witness"] = witness_record(*v.center->torus_witness);
        }
      } else if (ver->parsed()) {
        inputs["suite"]     = suite;
        inputs["seed"]      = seed;
        VerifyReport report = run_verify_suite(suite, seed);
        Record       rows   = Record::array();
        for (auto const& r : report.rows) {
          rows.push_back({{"case", r.label}, {"pass", r.pass}, {"detail", r.detail}});
        }
        rec["verify"] = {{"suite", report.suite},
                         {"rows", rows},
                         {"passed", report.rows.size() - report.failures()},
                         {"failed", report.failures()}};
        if (!report.all_pass()) {
          status = exit_code::usage;
        }
      }
    } catch (BudgetExceeded const& e) {
      err << "budget exceeded: " << e.what() << '\n';
      return exit_code::budget_exceeded;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code::usage;
    }

    rec["inputs"]       = inputs;
    rec["input_digest"] = digest.hex();
    if (timing) {
      rec["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    }
    // Fixed field order: command, inputs, input_digest, then payload.
    Record ordered;
    ordered["command"]      = rec["command"];
    ordered["inputs"]       = rec["inputs"];
    ordered["input_digest"] = rec["input_digest"];
    for (auto const& [k, v] : rec.items()) {
      if (!ordered.contains(k)) {
        ordered[k] = v;
      }
    }
    if (json) {
      out << ordered.dump(2) << '\n';
    } else {
      render_text(out, ordered);
    }
    return status;
  }

}  // namespace twistspin
