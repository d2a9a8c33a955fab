#include "exotica/cli/app.hpp"

#include "exotica/classify.hpp"
#include "exotica/cli/report.hpp"
#include "exotica/decompositions.hpp"
#include "exotica/fibration.hpp"
#include "exotica/word_parser.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef EXOTICA_DEFAULT_PROOF_DIR
#define EXOTICA_DEFAULT_PROOF_DIR "proofs"
#endif

namespace exotica::cli {

  namespace fs = std::filesystem;
  using nlohmann::json;

  namespace {

    std::optional<std::string> read_file(fs::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        return std::nullopt;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    struct Streams {
      std::ostream& out;
      std::ostream& err;
    };

    int cmd_construct(Streams io, int n, int k, int m, bool as_json) {
      ConstructionOutcome const outcome = full_construction(n, k, m);
      ConstructionReport const r = build_report(outcome);
      if (as_json) {
        io.out << r.json.dump(2) << '\n';
      } else {
        auto const& f = r.json["final"];
        auto const& c = r.json["certificates"];
        io.out << "E(" << 2 * n + 1 << ") with n=" << n << " k=" << k << " m=" << m
               << '\n'
               << "  chi=" << f["chi"] << " sigma=" << f["sigma"] << " b2+="
               << f["b2plus"] << " b2-=" << f["b2minus"] << '\n'
               << "  C_" << outcome.p << " on both sections, boundary L("
               << f["lens_space"][0] << "," << f["lens_space"][1] << ")\n"
               << "  surviving classes +-(" << outcome.alpha.to_string()
               << "), |SW| = " << f["sw_abs"] << '\n'
               << "  rohlin: " << c["rohlin"].get<std::string>()
               << ", w2-type: " << c["w2type"].get<std::string>() << '\n'
               << "  quotient: chi=" << f["quotient"]["chi"]
               << " sigma=" << f["quotient"]["sigma"] << ", model Z1#"
               << 2 * n << "CP2#" << 8 * n - 6 * k << "CP2bar\n";
        for (auto const& [name, value] : c.items()) {
          bool const flag  = value.is_boolean();
          bool const inner = value.is_object() && value.contains("pass");
          if (flag || inner) {
            bool const ok = flag ? value.get<bool>() : value["pass"].get<bool>();
            io.out << "  " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
          }
        }
      }
      for (auto const& w : r.warnings) {
        io.err << "warning: " << w << '\n';
      }
      for (auto const& f : r.failures) {
        io.err << "certificate failed: " << f << '\n';
      }
      return r.passed() ? exit_verified : exit_failure;
    }

    int cmd_family(Streams io, int n, bool as_json) {
      FamilyTable const t = family_enumerator(n);
      if (as_json) {
        json rows = json::array();
        for (auto const& r : t.rows) {
          rows.push_back(
              {{"k", r.k}, {"l", r.l}, {"valid", r.valid}, {"reason", r.reason}});
        }
        io.out << json{{"n", t.n}, {"k_max", t.k_max}, {"rows", rows}, {"notes", t.notes}}
                      .dump(2)
               << '\n';
        return exit_verified;
      }
      io.out << "n=" << n << " k_max=" << t.k_max << '\n';
      if (t.rows.empty()) {
        io.out << "  empty family: no admissible k\n";
      }
      for (auto const& r : t.rows) {
        io.out << "  k=" << r.k << " l=" << r.l << ' '
               << (r.valid ? "valid" : "INVALID") << " (" << r.reason << ")\n";
      }
      for (auto const& note : t.notes) {
        io.out << "  note: " << note << '\n';
      }
      return exit_verified;
    }

    int cmd_mcg_verify(Streams io, std::string const& file) {
      auto const text = read_file(file);
      if (!text) {
        io.err << file << ": cannot read\n";
        return exit_usage;
      }
      Derivation d;
      try {
        d = parse_proof(*text);
      } catch (ParseError const& e) {
        io.err << file << ":" << e.line() << ":" << e.column() << ": " << e.what()
               << '\n';
        return exit_usage;
      }
      LemmaRegistry lemmas;
      lemmas.set_loader(proof_loader(proof_dir()));
      CheckResult const r = check_derivation(d, lemmas);
      if (!r) {
        io.err << file;
        if (r.line > 0) {
          io.err << ":" << r.line;
        }
        if (r.failed_step) {
          io.err << ": step " << *r.failed_step + 1 << " ("
                 << format_step(d.steps[*r.failed_step]) << ")";
        }
        io.err << ": " << r.message << '\n';
        return exit_failure;
      }
      if (!cap_consistent(d)) {
        io.err << file << ": capped monodromies of start and end differ\n";
        return exit_failure;
      }
      io.out << file << ": ok, " << d.steps.size() << " steps\n"
             << "  " << to_string(d.start) << " = " << to_string(d.end) << '\n';
      return exit_verified;
    }

    int cmd_survey(Streams            io,
                   int                n_max,
                   std::vector<int>   ms,
                   int                jobs,
                   bool               as_json,
                   Bookkeeping const& bk) {
      auto const points = run_survey(n_max, ms, jobs, bk);
      bool       ok     = true;
      json       rows   = json::array();
      for (auto const& p : points) {
        ok = ok && p.passed;
        rows.push_back({{"n", p.n},
                        {"k", p.k},
                        {"m", p.m},
                        {"pass", p.passed},
                        {"summary", p.summary},
                        {"failures", p.failures}});
      }
      if (as_json) {
        io.out << json{{"n_max", n_max}, {"m", ms}, {"points", rows}, {"pass", ok}}.dump(2)
               << '\n';
      } else {
        if (points.empty()) {
          io.out << "no admissible (n, k) with n <= " << n_max << ": no families\n";
        }
        std::size_t passed = 0;
        for (auto const& p : points) {
          passed += p.passed ? 1 : 0;
          io.out << (p.passed ? "PASS" : "FAIL") << " n=" << p.n << " k=" << p.k
                 << " m=" << p.m;
          if (!p.summary.empty()) {
            io.out << ' ' << p.summary;
          }
          io.out << '\n';
          for (auto const& f : p.failures) {
            io.out << "    " << f << '\n';
          }
        }
        io.out << passed << "/" << points.size() << " points verified\n";
      }
      return ok ? exit_verified : exit_failure;
    }

    int cmd_selftest(Streams io) {
      int  failed = 0;
      auto check  = [&](std::string const& name, auto&& body) {
        bool ok = false;
        try {
          ok = body();
        } catch (std::exception const& e) {
          io.out << "  error: " << e.what() << '\n';
        }
        io.out << (ok ? "PASS " : "FAIL ") << name << '\n';
        failed += ok ? 0 : 1;
      };

      check("torus relations aba = bab, (ab)^6 = 1", [] {
        return verify_torus_identity(parse_word("a b a"), parse_word("b a b"))
               && torus_matrix(torus_relator_word()) == Matrix2::identity();
      });
      check("E(1) monodromy a^4 a^4 a b^{a^6} b^{a^3} b = (a^3 b)^3 = (ab)^6", [] {
        return verify_torus_identity(torus_relator_word(), torus_nine_word())
               && verify_torus_identity(torus_relator_word(), torus_cube_word())
               && eq_nine_fibration().monodromy_closes();
      });
      for (char const* name : {"decompA", "decompB", "eqfactor_n3"}) {
        check(std::string("bundled proof ") + name, [&] {
          auto text = read_file(proof_dir() / (std::string(name) + ".proof"));
          if (!text) {
            throw Error("missing " + (proof_dir() / name).string() + ".proof");
          }
          LemmaRegistry lemmas;
          lemmas.set_loader(proof_loader(proof_dir()));
          Derivation const d = parse_proof(*text);
          return check_derivation(d, lemmas).ok && cap_consistent(d);
        });
      }
      check("generated factorizations n = 1..4", [] {
        for (int n = 1; n <= 4; ++n) {
          Derivation const  d = generate_factor_derivation(n);
          FactorShape const s = analyze_factor_word(d.end);
          if (!check_derivation(d, bundled_lemmas()) || !cap_consistent(d)
              || s.alpha1_prefix != std::size_t(8 * n - 2) || s.alpha2_block != 3
              || s.remainder != std::size_t(4 * n - 1)) {
            return false;
          }
        }
        return true;
      });
      check("construct n=2 k=0 m=3", [] {
        ConstructionReport const r = build_report(full_construction(2, 0, 3));
        return r.passed() && r.json["final"]["chi"] == 44
               && r.json["final"]["sigma"] == -24 && r.json["final"]["sw_abs"] == 9;
      });
      check("family n=2 is l = 16", [] {
        FamilyTable const t = family_enumerator(2);
        return t.rows.size() == 1 && t.rows[0].l == 16 && t.rows[0].valid;
      });
      check("survey n <= 4, m = 1,2", [] {
        for (auto const& p : run_survey(4, {1, 2}, 1)) {
          if (!p.passed) {
            return false;
          }
        }
        return true;
      });
      check("perturbed blow-up chi is caught", [] {
        Bookkeeping bk;
        bk.blowup_chi += 1;
        for (auto const& p : run_survey(4, {1}, 1, bk)) {
          if (!p.passed) {
            return true;
          }
        }
        return false;
      });
      io.out << (failed == 0 ? "selftest passed" : "selftest FAILED") << '\n';
      return failed == 0 ? exit_verified : exit_failure;
    }

  }  // namespace

  fs::path proof_dir() {
    if (char const* env = std::getenv("EXOTICA_PROOF_DIR"); env && *env) {
      return env;
    }
    return EXOTICA_DEFAULT_PROOF_DIR;
  }

  LemmaRegistry::Loader proof_loader(fs::path dir) {
    return [dir = std::move(dir)](std::string const& name) -> std::optional<Derivation> {
      auto const text = read_file(dir / (name + ".proof"));
      if (!text) {
        return std::nullopt;
      }
      try {
        return parse_proof(*text);
      } catch (ParseError const& e) {
        throw DerivationError(name + ".proof:" + std::to_string(e.line()) + ":"
                              + std::to_string(e.column()) + ": " + e.what());
      }
    };
  }

  std::optional<Bookkeeping> parse_injection(std::string const& text, Bookkeeping base) {
    auto const colon = text.find(':');
    if (colon == std::string::npos) {
      return std::nullopt;
    }
    std::string const name  = text.substr(0, colon);
    std::string const delta = text.substr(colon + 1);
    std::int64_t      d     = 0;
    if (delta == "+1" || delta == "1") {
      d = 1;
    } else if (delta == "-1") {
      d = -1;
    } else {
      return std::nullopt;
    }
    if (name == "chi") {
      base.blowup_chi += d;
    } else if (name == "sigma") {
      base.blowup_sigma += d;
    } else if (name == "section_drop") {
      base.section_drop += d;
    } else if (name == "blowdown") {
      base.blowdown_offset += d;
    } else {
      return std::nullopt;
    }
    return base;
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbolic verification of exotic structures obtained by knot "
                 "surgery and rational blow-down"};
    app.name("exotica");
    app.require_subcommand(1);

    int  n = 0, k = 0, m = 0;
    bool as_json = false;
    auto* construct =
        app.add_subcommand("construct", "Run the construction for one (n, k, m)");
    construct->add_option("--n", n, "E(2n+1) parameter")->required();
    construct->add_option("--k", k, "number of extra trefoil surgery pairs")->required();
    construct->add_option("--m", m, "twist knot K_m")->required();
    construct->add_flag("--json", as_json, "print the JSON report");

    int   family_n = 0;
    auto* family   = app.add_subcommand("family", "List the (k, l) family for n");
    family->add_option("--n", family_n)->required();
    family->add_flag("--json", as_json);

    std::string proof_file;
    auto* mcg = app.add_subcommand("mcg-verify", "Check a Dehn twist derivation file");
    mcg->add_option("file", proof_file)->required();

    int                      n_max = 0;
    std::vector<int>         ms{1};
    int                      jobs = 1;
    std::vector<std::string> injections;
    auto* survey = app.add_subcommand("survey", "Run every admissible (n, k) for each m");
    survey->add_option("--n-max", n_max)->required();
    survey->add_option("--m", ms, "comma separated list")->delimiter(',');
    survey->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    survey->add_flag("--json", as_json);
    survey->add_option("--inject", injections)->group("");

    auto* selftest = app.add_subcommand("selftest", "Quick end-to-end check");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        out << app.help();
        return exit_verified;
      }
      err << e.what() << '\n' << "run with --help for usage\n";
      return exit_usage;
    }

    Streams const io{out, err};
    try {
      if (*construct) {
        return cmd_construct(io, n, k, m, as_json);
      }
      if (*family) {
        return cmd_family(io, family_n, as_json);
      }
      if (*mcg) {
        return cmd_mcg_verify(io, proof_file);
      }
      if (*survey) {
        if (n_max < 1 || n_max > 20) {
          err << "survey: --n-max must be between 1 and 20\n";
          return exit_usage;
        }
        for (int v : ms) {
          if (v < 1) {
            err << "survey: m values must be positive\n";
            return exit_usage;
          }
        }
        Bookkeeping bk;
        for (auto const& text : injections) {
          auto next = parse_injection(text, bk);
          if (!next) {
            err << "survey: bad --inject '" << text << "'\n";
            return exit_usage;
          }
          bk = *next;
        }
        return cmd_survey(io, n_max, ms, jobs, as_json, bk);
      }
      if (*selftest) {
        return cmd_selftest(io);
      }
    } catch (InvalidArgument const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (Error const& e) {
      err << "verification failed: " << e.what() << '\n';
      return exit_failure;
    }
    return exit_usage;
  }

}  // namespace exotica::cli
