#include "exotica/decompositions.hpp"
#include "exotica/derivation.hpp"
#include "exotica/fibration.hpp"
#include "exotica/twist_word.hpp"
#include "exotica/word_parser.hpp"

#include "oracles/oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace exotica {

  namespace {
    namespace fs = std::filesystem;

    std::string slurp(fs::path const& p) {
      std::ifstream      in(p);
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    Matrix2 mat(std::initializer_list<int> v) {
      Matrix2 r;
      std::size_t i = 0;
      for (int x : v) {
        r.m[i++] = x;
      }
      return r;
    }

    Matrix2 from_oracle(oracle::mat const& x) {
      return mat({int(x[0]), int(x[1]), int(x[2]), int(x[3])});
    }

    Matrix2 capped(TwistWord const& w) {
      return torus_matrix(cap(w));
    }

    LemmaRegistry file_registry() {
      LemmaRegistry r;
      r.set_loader([](std::string const& name) -> std::optional<Derivation> {
        fs::path const p = fs::path(EXOTICA_TEST_PROOF_DIR) / (name + ".proof");
        if (!fs::exists(p)) {
          return std::nullopt;
        }
        return parse_proof(slurp(p));
      });
      return r;
    }
  }  // namespace

  TEST_CASE("torus matrices") {
    CHECK(torus_matrix(torus_relator_word()) == Matrix2::identity());
    CHECK(torus_matrix(parse_word("a b a")) == torus_matrix(parse_word("b a b")));
    CHECK(torus_matrix(parse_word("a b a")) == mat({0, 1, -1, 0}));
    CHECK(torus_matrix(parse_word("1")) == Matrix2::identity());
    CHECK(torus_matrix(parse_word("a")) == from_oracle(oracle::torus("a")));
    CHECK(torus_matrix(parse_word("~b")) == from_oracle(oracle::torus("B")));
    CHECK(torus_matrix(parse_word("b^{a^2}")) == from_oracle(oracle::torus("AAbaa")));
    CHECK_THROWS_AS(torus_matrix(parse_word("A1")), InvalidArgument);
  }

  TEST_CASE("torus identities of the E(1) monodromy") {
    CHECK(verify_torus_identity(torus_relator_word(), torus_nine_word()));
    CHECK(verify_torus_identity(torus_relator_word(), torus_cube_word()));
    CHECK_FALSE(verify_torus_identity(parse_word("a"), parse_word("b")));
    CHECK(torus_matrix(torus_cube_word()) == from_oracle(oracle::torus("aaabaaabaaab")));
    CHECK(torus_matrix(torus_nine_word())
          == from_oracle(oracle::torus("aaaaaaaaaAAAAAAbaaaaaaAAAbaaab")));
    CHECK(oracle::torus("abababababab") == oracle::mat{1, 0, 0, 1});
  }

  TEST_CASE("capping boundary components") {
    CHECK(cap(parse_word("D1 D2")).empty());
    CHECK(to_string(cap(parse_word("(A1 A2 B)^4"))) == to_string(parse_word("(a a b)^4")));
    CHECK(capped(parse_word("(A1 A2 B)^4")) == Matrix2::identity());
    CHECK(capped(decomposition_a_word()) == Matrix2::identity());
    CHECK(capped(decomposition_b_word()) == Matrix2::identity());
    CHECK(capped(decomposition_a_intermediate()) == Matrix2::identity());
    CHECK_THROWS_AS(cap(parse_word("a")), InvalidArgument);
  }

  TEST_CASE("word parser") {
    auto w = parse_word("A1^8 A2^{~B A1^5} B^{A1^4} A2^{~B A1} B");
    CHECK(w.size() == 12);
    CHECK(right_handed_count(w) == 12);
    CHECK(parse_word("(a b)^2") == parse_word("a b a b"));
    CHECK(parse_word("a^-2") == parse_word("~a ~a"));
    CHECK(parse_word("1").empty());
    CHECK(parse_word(to_string(w)) == w);
    CHECK(is_central_word(parse_word("D1 D2 D1")));
    CHECK_FALSE(is_central_word(parse_word("D1 A1")));

    try {
      parse_word("A1 Q7 B", 3, 5);
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_word("a^{b"), ParseError);
    CHECK_THROWS_AS(parse_word("(a b"), ParseError);
  }

  TEST_CASE("proof file parser") {
    auto d = parse_proof(slurp(fs::path(EXOTICA_TEST_DATA_DIR) / "torus_braid.proof"));
    CHECK(d.alphabet == Alphabet::torus);
    REQUIRE(d.steps.size() == 1);
    CHECK(d.steps[0].move == Move::braid);
    CHECK(d.steps[0].line == 4);
    CHECK(check_derivation(d, LemmaRegistry{}));
    CHECK(parse_proof(format_proof(d)).steps.size() == 1);

    try {
      parse_proof(slurp(fs::path(EXOTICA_TEST_DATA_DIR) / "bad_token.proof"));
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_proof("alphabet twoholed\nstart D1\nend D1\nfrobnicate 0\n"), ParseError);
    CHECK_THROWS_AS(parse_proof("alphabet sphere\nstart a\nend a\n"), ParseError);
    CHECK_THROWS_AS(parse_proof("alphabet torus\nstart a b a\nend b a b\nbraid\n"), ParseError);
  }

  TEST_CASE("illegal steps are rejected with their index") {
    auto const lemmas = LemmaRegistry{};
    auto commute = parse_proof(slurp(fs::path(EXOTICA_TEST_DATA_DIR) / "illegal_commute.proof"));
    auto r       = check_derivation(commute, lemmas);
    CHECK_FALSE(r.ok);
    REQUIRE(r.failed_step.has_value());
    CHECK(*r.failed_step == 1);
    CHECK(r.line == 6);

    auto braid = parse_proof(slurp(fs::path(EXOTICA_TEST_DATA_DIR) / "illegal_braid.proof"));
    auto rb    = check_derivation(braid, lemmas);
    CHECK_FALSE(rb.ok);
    CHECK(rb.failed_step == std::optional<std::size_t>(0));

    // cyclic needs a central right side
    Derivation cyc{Alphabet::twoholed, parse_word("A1 B"), parse_word("B A1"), {{Move::cyclic, 1}}};
    CHECK_FALSE(check_derivation(cyc, lemmas));
    Derivation wrong_end{Alphabet::torus, parse_word("a b a"), parse_word("a b a"), {{Move::braid, 0}}};
    CHECK_FALSE(check_derivation(wrong_end, lemmas));
  }

  TEST_CASE("legal moves") {
    LemmaRegistry const lemmas;
    auto apply = [&](char const* w, Step s, bool central = false) {
      return to_string(apply_step(parse_word(w), s, Alphabet::twoholed, central, lemmas));
    };
    CHECK(apply("A1 ~A1 B", {Move::cancel, 0}) == "B");
    CHECK(apply("B", Step{Move::insert, 0, {}, {}, false, parse_word("A1")}) == to_string(parse_word("A1 ~A1 B")));
    CHECK(apply("A1 B A1", {Move::braid, 0}) == to_string(parse_word("B A1 B")));
    CHECK(apply("A1 A2", {Move::commute, 0}) == to_string(parse_word("A2 A1")));
    CHECK(apply("D1 B", {Move::commute, 0}) == to_string(parse_word("B D1")));
    CHECK(apply("A2^{~B A1}", {Move::conj_expand, 0, {1}}) == to_string(parse_word("~A1 A2^{~B} A1")));
    CHECK(apply("~A1 A2^{~B} A1", {Move::conj_collapse, 0, {1}}) == to_string(parse_word("A2^{~B A1}")));
    CHECK(apply("A1 A2 B", {Move::cyclic, 1}, true) == to_string(parse_word("A2 B A1")));
    CHECK(apply("A1 A1 A1", {Move::regroup, 0, {1, 2}}) == to_string(parse_word("A1^3")));
    CHECK(apply("D1 D2", Step{Move::subst, 0, {}, "chain", true}) == to_string(parse_word("(A1 A2 B)^4")));
    CHECK_THROWS_AS(apply("A1 A2 A1", {Move::braid, 0}), DerivationError);
    CHECK_THROWS_AS(apply("A1 B", {Move::commute, 0}), DerivationError);
    CHECK_THROWS_AS(apply("A1 A2", {Move::cancel, 0}), DerivationError);
    CHECK_THROWS_AS(apply("A1 A1 B", {Move::regroup, 0, {1, 2}}), DerivationError);
    CHECK_THROWS_AS(apply("D1", Step{Move::subst, 0, {}, "nope"}), DerivationError);
  }

  TEST_CASE("random legal moves preserve the capped monodromy") {
    std::mt19937_64 rng(11);
    std::vector<std::string> const letters{"A1", "A2", "B", "D1", "D2", "~A1", "~B", "A2^{B}", "B^{A1 ~A2}"};
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    LemmaRegistry const lemmas;
    int applied = 0;
    for (int trial = 0; trial < 300; ++trial) {
      std::string text;
      for (int i = 0; i < 8; ++i) {
        text += letters[pick(rng)] + " ";
      }
      TwistWord w = parse_word(text);
      for (int step = 0; step < 20; ++step) {
        std::uniform_int_distribution<std::int64_t> pos(0, std::int64_t(w.size()));
        std::uniform_int_distribution<int>          mv(0, 5);
        Step s{Move::cancel, pos(rng)};
        switch (mv(rng)) {
          case 0: s.move = Move::cancel; break;
          case 1:
            s.move = Move::insert;
            s.word = parse_word(letters[pick(rng)]);
            break;
          case 2: s.move = Move::braid; break;
          case 3: s.move = Move::commute; break;
          case 4: s.move = Move::conj_expand; break;
          default:
            s.move    = Move::conj_collapse;
            s.numbers = {1};
            break;
        }
        try {
          TwistWord next = apply_step(w, s, Alphabet::twoholed, false, lemmas);
          CHECK(capped(next) == capped(w));
          w = std::move(next);
          ++applied;
        } catch (DerivationError const&) {
        }
      }
    }
    CHECK(applied > 500);
  }

  TEST_CASE("built-in decompositions") {
    LemmaRegistry const lemmas;
    auto a = decomposition_a_derivation();
    auto b = decomposition_b_derivation();
    CHECK(a.start == parse_word("D1 D2"));
    CHECK(a.end == decomposition_a_word());
    CHECK(b.end == decomposition_b_word());
    CHECK(check_derivation(a, lemmas));
    CHECK(check_derivation(b, lemmas));
    CHECK(cap_consistent(a));
    CHECK(cap_consistent(b));
    CHECK(to_string(decomposition_b_word())
          == to_string(parse_word("A1^6 A2^3 B^{A1^4 A2^2} B^{A1^2 A2} B")));
  }

  TEST_CASE("bundled proof files") {
    auto registry = file_registry();
    for (char const* name : {"decompA", "decompB", "eqfactor_n3"}) {
      CAPTURE(name);
      auto d = parse_proof(slurp(fs::path(EXOTICA_TEST_PROOF_DIR) / (std::string(name) + ".proof")));
      CHECK(check_derivation(d, registry));
      CHECK(cap_consistent(d));
    }
  }

  TEST_CASE("bundled proof files match what the generator produces") {
    auto const a = parse_proof(slurp(fs::path(EXOTICA_TEST_PROOF_DIR) / "decompA.proof"));
    auto const b = parse_proof(slurp(fs::path(EXOTICA_TEST_PROOF_DIR) / "decompB.proof"));
    auto const f = parse_proof(slurp(fs::path(EXOTICA_TEST_PROOF_DIR) / "eqfactor_n3.proof"));
    CHECK(format_proof(a) == format_proof(decomposition_a_derivation()));
    CHECK(format_proof(b) == format_proof(decomposition_b_derivation()));
    CHECK(format_proof(f) == format_proof(generate_factor_derivation(3)));
  }

  TEST_CASE("factorization of D1^n D2^n") {
    auto const& lemmas = bundled_lemmas();
    for (int n = 1; n <= 10; ++n) {
      CAPTURE(n);
      auto d = generate_factor_derivation(n);
      CHECK(d.start == power(Generator::delta1, n) * power(Generator::delta2, n));
      CHECK(check_derivation(d, lemmas));
      CHECK(cap_consistent(d));
      auto shape = analyze_factor_word(d.end);
      CHECK(shape.alpha1_prefix == std::size_t(8 * n - 2));
      CHECK(shape.alpha2_block == 3);
      CHECK(shape.remainder == std::size_t(4 * n - 1));
      CHECK(shape.total == std::size_t(12 * n));
      CHECK(shape.right_handed);
      CHECK(right_handed_count(d.end) == std::size_t(12 * n));
    }
    auto one = generate_factor_derivation(1);
    CHECK(one.end == decomposition_b_word());
    CHECK_THROWS_AS(generate_factor_derivation(0), InvalidArgument);
  }

  TEST_CASE("lemma registry") {
    LemmaRegistry r;
    CHECK(r.contains("chain"));
    CHECK(r.contains("torus6"));
    CHECK_THROWS_AS(r.lookup("decompA"), DerivationError);
    auto result = r.add_lemma("decompA", decomposition_a_derivation());
    CHECK(result.ok);
    CHECK(r.lookup("decompA").rhs == decomposition_a_word());

    LemmaRegistry cyclic;
    cyclic.set_loader([](std::string const& name) -> std::optional<Derivation> {
      Step s{Move::subst, 0, {}, name == "x" ? "y" : "x"};
      return Derivation{Alphabet::torus, parse_word("a"), parse_word("a"), {s}};
    });
    CHECK_THROWS_AS(cyclic.lookup("x"), DerivationError);
  }

  TEST_CASE("fibration bookkeeping") {
    auto e1 = eq_nine_fibration();
    CHECK(e1.fibers.size() == 6);
    CHECK(count_i4(e1) == 2);
    CHECK(e1.monodromy_closes());
    CHECK(verify_torus_identity(e1.total_monodromy(), torus_relator_word()));

    auto i8 = fibration_from_word(parse_word("a^8 b"), Alphabet::torus, {1});
    auto two = split_fiber(i8, 0, 4, 2);
    CHECK(two.fibers.size() == 3);
    CHECK(count_i4(two) == 2);
    CHECK(torus_matrix(two.total_monodromy()) == torus_matrix(i8.total_monodromy()));

    auto nodal = split_fiber(e1, 0, 1, 4);
    CHECK(nodal.fibers.size() == 9);
    CHECK(count_i4(nodal) == 1);
    CHECK(nodal.monodromy_closes());

    auto same = split_fiber(e1, 0, 4, 1);
    CHECK(same.fibers == e1.fibers);
    CHECK(split_fiber(e1, 3, 1, 1).fibers == e1.fibers);
    FibrationDescription mixed{Alphabet::torus, {parse_word("a b")}, {}};
    CHECK_THROWS_AS(split_fiber(mixed, 0, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(split_fiber(e1, 0, 3, 2), InvalidArgument);
    CHECK_THROWS_AS(split_fiber(e1, 17, 1, 1), InvalidArgument);
    CHECK(pure_power(parse_word("a^4")) == std::optional<std::size_t>(4));
    CHECK_FALSE(pure_power(parse_word("a b")).has_value());
  }

  TEST_CASE("splitting random fibers preserves the monodromy") {
    std::mt19937_64                    rng(3);
    std::uniform_int_distribution<int> exp(1, 4), letter(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
      FibrationDescription fd;
      for (int i = 0; i < 5; ++i) {
        Generator g = letter(rng) ? Generator::a : Generator::b;
        fd.fibers.push_back(power(g, exp(rng) * exp(rng)));
      }
      std::uniform_int_distribution<std::size_t> idx(0, fd.fibers.size() - 1);
      std::size_t const i = idx(rng);
      int const total = int(*pure_power(fd.fibers[i]));
      for (int parts = 1; parts <= total; ++parts) {
        if (total % parts == 0) {
          auto split = split_fiber(fd, i, total / parts, parts);
          CHECK(split.fibers.size() == fd.fibers.size() + parts - 1);
          CHECK(torus_matrix(split.total_monodromy()) == torus_matrix(fd.total_monodromy()));
        }
      }
    }
  }

  TEST_CASE("fiber budget") {
    CHECK(budget_check(2, 0).k_max == 0);
    CHECK(budget_check(4, 0).k_max == 1);
    CHECK(budget_check(5, 0).k_max == 1);
    CHECK(budget_check(1, 0).k_max < 0);
    CHECK_FALSE(budget_check(1, 0).ok);
    CHECK_FALSE(budget_check(3, 1).ok);
    CHECK(budget_check(3, 0).ok);
    for (int n = 1; n <= 40; ++n) {
      for (int k = 0; k <= 20; ++k) {
        CHECK(budget_check(n, k).ok == (2 * n + 7 + 12 * k <= 8 * n - 2));
        CHECK(budget_check(n, k).ok == (k <= budget_check(n, k).k_max));
      }
    }
  }

}  // namespace exotica
