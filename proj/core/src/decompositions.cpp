#include "exotica/decompositions.hpp"

#include "exotica/word_parser.hpp"

namespace exotica {

  namespace {

    Step at(Move m, std::int64_t position) {
      return Step{m, position};
    }

    bool is_plain(TwistLetter const& x, Generator g) {
      return x.generator == g && x.exponent == 1 && x.conjugator.empty();
    }

    // Moves every plain g letter at index >= `filled`, in order, to the block
    // starting at `filled`. Returns the end of the block.
    std::size_t gather(DerivationBuilder& b, Generator g, std::size_t filled) {
      for (std::size_t j = filled; j < b.current().size(); ++j) {
        if (is_plain(b.current()[j], g)) {
          b.move_left(j, filled);
          ++filled;
        }
      }
      return filled;
    }

    std::size_t plain_prefix(TwistWord const& w, Generator g, std::size_t from) {
      std::size_t i = from;
      while (i < w.size() && is_plain(w[i], g)) {
        ++i;
      }
      return i;
    }

    Derivation checked(DerivationBuilder const& b,
                       TwistWord const&         expected,
                       char const*              what) {
      Derivation d = b.finish();
      if (!(d.end == expected)) {
        throw InvariantViolation(std::string(what) + " ends at "
                                 + to_string(d.end) + ", expected "
                                 + to_string(expected));
      }
      return d;
    }

  }  // namespace

  TwistWord decomposition_a_word() {
    return parse_word("A1^8 A2^{~B A1^5} B^{A1^4} A2^{~B A1} B");
  }

  TwistWord decomposition_b_word() {
    return parse_word("A1^6 A2^3 B^{A1^4 A2^2} B^{A1^2 A2} B");
  }

  TwistWord decomposition_a_intermediate() {
    return parse_word("(A1^3 A2^{~B} A1 B)^2");
  }

  Derivation decomposition_a_derivation() {
    LemmaRegistry     lemmas;
    DerivationBuilder b(Alphabet::twoholed, parse_word("D1 D2"), true, lemmas);
    b.apply(Step{Move::subst, 0, {}, "chain", true});
    // (A1 A2 B)^4 -> (A1 A1 B A2 A1 B)^2
    b.apply(at(Move::commute, 6))
        .apply(at(Move::braid, 4))
        .apply(at(Move::braid, 2))
        .apply(at(Move::commute, 1))
        .apply(at(Move::commute, 4))
        .apply(at(Move::braid, 2))
        .apply(at(Move::braid, 4))
        .apply(at(Move::commute, 9));
    for (std::int64_t base : {0, 6}) {
      // a a b c a b -> a a b c ~b b a b -> a a b c ~b a b a -> a a c^{~b} a b a
      b.apply(Step{Move::insert, base + 4, {}, {}, false, parse_word("~B")});
      b.apply(at(Move::braid, base + 5));
      b.apply(Step{Move::conj_collapse, base + 2, {1}});
    }
    b.apply(at(Move::cyclic, 11));
    if (!(b.current() == decomposition_a_intermediate())) {
      throw InvariantViolation("decomposition A misses its intermediate form");
    }
    gather(b, Generator::alpha1, 0);
    return checked(b, decomposition_a_word(), "decomposition A");
  }

  Derivation decomposition_b_derivation() {
    LemmaRegistry     lemmas;
    DerivationBuilder b(Alphabet::twoholed, parse_word("D1 D2"), true, lemmas);
    b.apply(Step{Move::subst, 0, {}, "chain", true});
    // (A1 A2 B)^4 -> (A1 A1 A2 B)^3
    b.apply(at(Move::commute, 6))
        .apply(at(Move::braid, 4))
        .apply(at(Move::braid, 2))
        .apply(at(Move::braid, 6))
        .apply(at(Move::commute, 1))
        .apply(at(Move::commute, 5));
    std::size_t const filled = gather(b, Generator::alpha1, 0);
    gather(b, Generator::alpha2, filled);
    return checked(b, decomposition_b_word(), "decomposition B");
  }

  LemmaRegistry const& bundled_lemmas() {
    static LemmaRegistry const registry = [] {
      LemmaRegistry r;
      for (auto const& [name, d] :
           {std::pair{decomposition_a_name, decomposition_a_derivation()},
            std::pair{decomposition_b_name, decomposition_b_derivation()}}) {
        CheckResult res = r.add_lemma(name, d);
        if (!res) {
          throw InvariantViolation(std::string(name) + ": " + res.message);
        }
      }
      return r;
    }();
    return registry;
  }

  Derivation generate_factor_derivation(int n) {
    if (n < 1) {
      throw InvalidArgument("generate_factor_derivation: n must be >= 1");
    }
    TwistWord const start =
        power(Generator::delta1, n) * power(Generator::delta2, n);
    DerivationBuilder b(Alphabet::twoholed, start, true, bundled_lemmas());
    auto const        un = static_cast<std::size_t>(n);
    // D1^n D2^n -> (D1 D2)^n
    for (std::size_t j = 0; j < un; ++j) {
      b.move_left(un + j, 2 * j + 1);
    }
    // Substitute from the right so earlier positions stay put.
    b.apply(Step{Move::subst,
                 static_cast<std::int64_t>(2 * (un - 1)),
                 {},
                 decomposition_b_name});
    for (std::size_t j = un - 1; j-- > 0;) {
      b.apply(Step{Move::subst,
                   static_cast<std::int64_t>(2 * j),
                   {},
                   decomposition_a_name});
    }
    std::size_t const filled = gather(b, Generator::alpha1, 0);
    gather(b, Generator::alpha2, filled);
    return b.finish();
  }

  FactorShape analyze_factor_word(TwistWord const& w) {
    FactorShape s;
    std::size_t const a_end = plain_prefix(w, Generator::alpha1, 0);
    std::size_t const c_end = plain_prefix(w, Generator::alpha2, a_end);
    s.alpha1_prefix         = a_end;
    s.alpha2_block          = c_end - a_end;
    s.remainder             = w.size() - c_end;
    s.total                 = w.size();
    s.right_handed          = right_handed_count(w) == w.size();
    return s;
  }

  TwistWord torus_relator_word() {
    return parse_word("(a b)^6");
  }

  TwistWord torus_cube_word() {
    return parse_word("(a^3 b)^3");
  }

  TwistWord torus_nine_word() {
    return parse_word("a^4 a^4 a b^{a^6} b^{a^3} b");
  }

}  // namespace exotica
