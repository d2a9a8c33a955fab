#pragma once

#include "exotica/twist_word.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace exotica {

  // Rewrite moves accepted by the derivation checker. Positions index the
  // flat letter sequence, starting at 0.
  //
  //   cancel i            x x~ -> (empty)          at letters i, i+1
  //   insert i w          (empty) -> w w~          before letter i
  //   braid i             x y x -> y x y           (A1,B), (A2,B), (a,b)
  //   commute i           x y -> y x               (A1,A2), D's with anything
  //   conj-expand i [L]   x^{u v} -> v~ x^{u} v    |v| = L (default: all)
  //   conj-collapse i L   v~ x^{u} v -> x^{u v}    |v| = L
  //   cyclic k            rotate so letter k comes first; only when the
  //                       derivation equates a word with boundary twists
  //   subst i NAME [rev]  replace an occurrence of a named identity's left
  //                       side (right side with `rev`) by the other side
  //   regroup i n m       assert letters i..i+n+m-1 are one repeated letter,
  //                       i.e. read t^{n+m} as t^n t^m; the word is unchanged
  //
  // braid and commute also apply to letters sharing a common conjugator (the
  // conjugate of the plain relation); braid additionally needs a common
  // exponent.
  enum class Move {
    cancel,
    insert,
    braid,
    commute,
    conj_expand,
    conj_collapse,
    cyclic,
    subst,
    regroup
  };

  std::string_view      to_string(Move m) noexcept;
  std::optional<Move>   parse_move(std::string_view s) noexcept;

  struct Step {
    Move                      move;
    std::int64_t              position = 0;
    std::vector<std::int64_t> numbers  = {};  // L for conj-*, n m for regroup
    std::string               name     = {};  // subst target
    bool                      reverse  = false;
    TwistWord                 word     = {};  // insert payload
    int                       line     = 0;   // source line, 0 if generated
  };

  struct Derivation {
    Alphabet          alphabet = Alphabet::twoholed;
    TwistWord         start;
    TwistWord         end;
    std::vector<Step> steps;
  };

  // lhs = rhs in the mapping class group of `alphabet`.
  struct Identity {
    Alphabet  alphabet;
    TwistWord lhs;
    TwistWord rhs;
  };

  class DerivationError : public Error {
   public:
    using Error::Error;
  };

  struct CheckResult {
    bool                       ok = true;
    std::optional<std::size_t> failed_step;  // index into steps
    int                        line = 0;
    std::string                message;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Named identities available to `subst`: built-in axioms plus lemmas, i.e.
  // identities established by previously checked derivations. Lemmas that are
  // not registered yet can be fetched on demand through a loader (the CLI
  // reads them from the proof directory); a loaded derivation is checked
  // before its identity is used. Lazy loading mutates the cache, so a
  // registry must not be shared between threads while loading.
  class LemmaRegistry {
   public:
    using Loader = std::function<std::optional<Derivation>(std::string const&)>;

    // chain:  (A1 A2 B)^4 = D1 D2   (the chain relation; two-holed torus)
    // torus6: (a b)^6 = 1           (relator of the torus presentation)
    LemmaRegistry();

    void set_loader(Loader loader);

    void add_axiom(std::string const& name, Identity identity);

    // Checks `d` against this registry and registers start = end under
    // `name` on success.
    CheckResult add_lemma(std::string const& name, Derivation const& d);

    // Throws DerivationError for unknown names, failed or cyclic lemmas.
    Identity const& lookup(std::string const& name) const;

    bool contains(std::string const& name) const;

   private:
    std::map<std::string, Identity>         _identities;
    Loader                                  _loader;
    mutable std::map<std::string, Identity> _loaded;
    mutable std::set<std::string>           _loading;
  };

  // Applies one move; throws DerivationError describing why it is illegal.
  // `central` says whether the surrounding derivation equates the word with
  // a product of boundary twists (enables cyclic).
  TwistWord apply_step(TwistWord const&     current,
                       Step const&          step,
                       Alphabet             alphabet,
                       bool                 central,
                       LemmaRegistry const& lemmas);

  // True iff every step is a legal instance and they transform start into
  // end. Failures carry the step index and source line.
  CheckResult check_derivation(Derivation const& d, LemmaRegistry const& lemmas);

  // Capped monodromy of both ends agrees (two-holed derivations are capped
  // first; torus derivations are compared directly).
  bool cap_consistent(Derivation const& d);

  // Records moves while keeping the current word, for generating proofs.
  class DerivationBuilder {
   public:
    DerivationBuilder(Alphabet             alphabet,
                      TwistWord            start,
                      bool                 central,
                      LemmaRegistry const& lemmas);

    TwistWord const& current() const noexcept {
      return _current;
    }

    DerivationBuilder& apply(Step step);

    // Moves the letter at i+1 in front of the letter at i. Plain commuting
    // pairs are swapped; otherwise x y becomes y x^{y} via insert and
    // conj-collapse.
    DerivationBuilder& slide_left(std::size_t i);

    // Moves the letter at `from` to position `to` < `from` by repeated
    // slide_left.
    DerivationBuilder& move_left(std::size_t from, std::size_t to);

    Derivation finish() const;

   private:
    Derivation           _derivation;
    TwistWord            _current;
    bool                 _central;
    LemmaRegistry const& _lemmas;
  };

}  // namespace exotica
