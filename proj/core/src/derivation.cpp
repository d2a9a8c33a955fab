#include "exotica/derivation.hpp"

#include <algorithm>
#include <array>

namespace exotica {

  namespace {

    constexpr std::array<std::pair<Move, std::string_view>, 9> move_names{{
        {Move::cancel, "cancel"},
        {Move::insert, "insert"},
        {Move::braid, "braid"},
        {Move::commute, "commute"},
        {Move::conj_expand, "conj-expand"},
        {Move::conj_collapse, "conj-collapse"},
        {Move::cyclic, "cyclic"},
        {Move::subst, "subst"},
        {Move::regroup, "regroup"},
    }};

    bool is_braid_pair(Generator x, Generator y) {
      auto const one_way = [](Generator p, Generator q) {
        return (p == Generator::alpha1 && q == Generator::beta)
               || (p == Generator::alpha2 && q == Generator::beta)
               || (p == Generator::a && q == Generator::b);
      };
      return one_way(x, y) || one_way(y, x);
    }

    bool letters_commute(TwistLetter const& x, TwistLetter const& y) {
      if (is_boundary_twist(x.generator) || is_boundary_twist(y.generator)) {
        return true;
      }
      if (!(x.conjugator == y.conjugator)) {
        return false;
      }
      if (x.generator == y.generator) {
        return true;
      }
      auto const disjoint = [](Generator p, Generator q) {
        return p == Generator::alpha1 && q == Generator::alpha2;
      };
      return disjoint(x.generator, y.generator)
             || disjoint(y.generator, x.generator);
    }

    [[noreturn]] void illegal(Step const& step, std::string const& why) {
      throw DerivationError(std::string(to_string(step.move)) + " at "
                            + std::to_string(step.position) + ": " + why);
    }

    std::size_t checked_position(Step const&      step,
                                 TwistWord const& w,
                                 std::size_t      span) {
      if (step.position < 0
          || static_cast<std::size_t>(step.position) + span > w.size()) {
        illegal(step,
                "position out of range for a word of length "
                    + std::to_string(w.size()));
      }
      return static_cast<std::size_t>(step.position);
    }

    TwistWord slice(TwistWord const& w, std::size_t from, std::size_t count) {
      TwistWord out;
      out.letters.assign(w.letters.begin() + from,
                         w.letters.begin() + from + count);
      return out;
    }

    void replace(TwistWord&       w,
                 std::size_t      from,
                 std::size_t      count,
                 TwistWord const& by) {
      auto it = w.letters.erase(w.letters.begin() + from,
                                w.letters.begin() + from + count);
      w.letters.insert(it, by.letters.begin(), by.letters.end());
    }

    bool starts_at(TwistWord const& w, std::size_t i, TwistWord const& part) {
      if (i + part.size() > w.size()) {
        return false;
      }
      return std::equal(part.letters.begin(),
                        part.letters.end(),
                        w.letters.begin() + i);
    }

  }  // namespace

  std::string_view to_string(Move m) noexcept {
    for (auto const& [move, name] : move_names) {
      if (move == m) {
        return name;
      }
    }
    return "?";
  }

  std::optional<Move> parse_move(std::string_view s) noexcept {
    for (auto const& [move, name] : move_names) {
      if (name == s) {
        return move;
      }
    }
    return std::nullopt;
  }

  LemmaRegistry::LemmaRegistry() {
    _identities.emplace(
        "chain",
        Identity{Alphabet::twoholed,
                 power(power(Generator::alpha1, 1) * power(Generator::alpha2, 1)
                           * power(Generator::beta, 1),
                       4),
                 power(Generator::delta1, 1) * power(Generator::delta2, 1)});
    _identities.emplace(
        "torus6",
        Identity{Alphabet::torus,
                 power(power(Generator::a, 1) * power(Generator::b, 1), 6),
                 TwistWord{}});
  }

  void LemmaRegistry::set_loader(Loader loader) {
    _loader = std::move(loader);
  }

  void LemmaRegistry::add_axiom(std::string const& name, Identity identity) {
    if (contains(name)) {
      throw InvalidArgument("identity '" + name + "' is already registered");
    }
    _identities.emplace(name, std::move(identity));
  }

  CheckResult LemmaRegistry::add_lemma(std::string const& name,
                                       Derivation const&  d) {
    if (contains(name)) {
      throw InvalidArgument("identity '" + name + "' is already registered");
    }
    CheckResult r = check_derivation(d, *this);
    if (r) {
      _identities.emplace(name, Identity{d.alphabet, d.start, d.end});
    }
    return r;
  }

  bool LemmaRegistry::contains(std::string const& name) const {
    return _identities.count(name) > 0 || _loaded.count(name) > 0;
  }

  Identity const& LemmaRegistry::lookup(std::string const& name) const {
    if (auto it = _identities.find(name); it != _identities.end()) {
      return it->second;
    }
    if (auto it = _loaded.find(name); it != _loaded.end()) {
      return it->second;
    }
    if (!_loader) {
      throw DerivationError("unknown identity '" + name + "'");
    }
    if (_loading.count(name) > 0) {
      throw DerivationError("identity '" + name + "' depends on itself");
    }
    _loading.insert(name);
    try {
      std::optional<Derivation> d = _loader(name);
      if (!d) {
        throw DerivationError("unknown identity '" + name + "'");
      }
      CheckResult r = check_derivation(*d, *this);
      if (!r) {
        throw DerivationError("lemma '" + name + "' does not check: "
                              + r.message);
      }
      _loading.erase(name);
      return _loaded.emplace(name, Identity{d->alphabet, d->start, d->end})
          .first->second;
    } catch (...) {
      _loading.erase(name);
      throw;
    }
  }

  TwistWord apply_step(TwistWord const&     current,
                       Step const&          step,
                       Alphabet             alphabet,
                       bool                 central,
                       LemmaRegistry const& lemmas) {
    TwistWord w = current;
    switch (step.move) {
      case Move::cancel: {
        std::size_t const i = checked_position(step, w, 2);
        if (!(w[i + 1] == inverse(w[i]))) {
          illegal(step, "letters are not inverse to each other");
        }
        w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
        return w;
      }
      case Move::insert: {
        std::size_t const i = checked_position(step, w, 0);
        if (step.word.empty()) {
          illegal(step, "nothing to insert");
        }
        if (!in_alphabet(step.word, alphabet)) {
          illegal(step, "inserted word is outside the alphabet");
        }
        replace(w, i, 0, step.word * inverse(step.word));
        return w;
      }
      case Move::braid: {
        std::size_t const i = checked_position(step, w, 3);
        TwistLetter const& x = w[i];
        TwistLetter const& y = w[i + 1];
        if (!(w[i + 2] == x)) {
          illegal(step, "first and third letters differ");
        }
        if (!is_braid_pair(x.generator, y.generator)) {
          illegal(step,
                  std::string(token(x.generator)) + " and "
                      + std::string(token(y.generator))
                      + " do not satisfy a braid relation");
        }
        if (!(x.conjugator == y.conjugator) || x.exponent != y.exponent) {
          illegal(step, "letters need a common conjugator and exponent");
        }
        TwistLetter const xx = x;
        TwistLetter const yy = y;
        w.letters[i]         = yy;
        w.letters[i + 1]     = xx;
        w.letters[i + 2]     = yy;
        return w;
      }
      case Move::commute: {
        std::size_t const i = checked_position(step, w, 2);
        if (!letters_commute(w[i], w[i + 1])) {
          illegal(step,
                  std::string(token(w[i].generator)) + " and "
                      + std::string(token(w[i + 1].generator))
                      + " are not known to commute here");
        }
        std::swap(w.letters[i], w.letters[i + 1]);
        return w;
      }
      case Move::conj_expand: {
        std::size_t const  i = checked_position(step, w, 1);
        TwistLetter const  x = w[i];
        std::size_t const  c = x.conjugator.size();
        std::size_t const  L = step.numbers.empty()
                                   ? c
                                   : static_cast<std::size_t>(
                                       std::max<std::int64_t>(step.numbers[0], -1));
        if (step.numbers.size() > 1 || L == 0 || L > c) {
          illegal(step, "conjugator length out of range");
        }
        TwistWord const v = slice(x.conjugator, c - L, L);
        TwistLetter     inner{x.generator, x.exponent, slice(x.conjugator, 0, c - L)};
        replace(w, i, 1, inverse(v) * word(inner) * v);
        return w;
      }
      case Move::conj_collapse: {
        if (step.numbers.size() != 1 || step.numbers[0] < 1) {
          illegal(step, "needs a positive conjugator length");
        }
        std::size_t const L = static_cast<std::size_t>(step.numbers[0]);
        std::size_t const i = checked_position(step, w, 2 * L + 1);
        TwistWord const   left  = slice(w, i, L);
        TwistWord const   right = slice(w, i + L + 1, L);
        if (!(left == inverse(right))) {
          illegal(step, "outer words are not inverse to each other");
        }
        TwistLetter x = w[i + L];
        x.conjugator  = x.conjugator * right;
        replace(w, i, 2 * L + 1, word(x));
        return w;
      }
      case Move::cyclic: {
        if (!central) {
          illegal(step, "cyclic permutation needs a central side");
        }
        std::size_t const k = checked_position(step, w, 0);
        if (k > 0 && k == w.size()) {
          illegal(step, "rotation index out of range");
        }
        std::rotate(w.letters.begin(), w.letters.begin() + k, w.letters.end());
        return w;
      }
      case Move::subst: {
        Identity const* id = nullptr;
        try {
          id = &lemmas.lookup(step.name);
        } catch (DerivationError const& e) {
          illegal(step, e.what());
        }
        if (id->alphabet != alphabet) {
          illegal(step, "identity '" + step.name + "' lives in another alphabet");
        }
        TwistWord const& from = step.reverse ? id->rhs : id->lhs;
        TwistWord const& to   = step.reverse ? id->lhs : id->rhs;
        std::size_t const i   = checked_position(step, w, from.size());
        if (!starts_at(w, i, from)) {
          illegal(step,
                  "expected " + to_string(from) + " of identity '" + step.name
                      + "'");
        }
        replace(w, i, from.size(), to);
        return w;
      }
      case Move::regroup: {
        if (step.numbers.size() != 2 || step.numbers[0] < 1
            || step.numbers[1] < 1) {
          illegal(step, "needs two positive exponents");
        }
        std::size_t const span =
            static_cast<std::size_t>(step.numbers[0] + step.numbers[1]);
        std::size_t const i = checked_position(step, w, span);
        for (std::size_t j = 1; j < span; ++j) {
          if (!(w[i + j] == w[i])) {
            illegal(step, "letters are not one repeated twist");
          }
        }
        return w;
      }
    }
    illegal(step, "unknown move");
  }

  CheckResult check_derivation(Derivation const& d, LemmaRegistry const& lemmas) {
    CheckResult r;
    if (!in_alphabet(d.start, d.alphabet) || !in_alphabet(d.end, d.alphabet)) {
      r.ok      = false;
      r.message = "start or end word is outside the alphabet";
      return r;
    }
    bool const central = is_central_word(d.start) || is_central_word(d.end);
    TwistWord  current = d.start;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      try {
        current = apply_step(current, d.steps[i], d.alphabet, central, lemmas);
      } catch (Error const& e) {
        r.ok          = false;
        r.failed_step = i;
        r.line        = d.steps[i].line;
        r.message     = e.what();
        return r;
      }
    }
    if (!(current == d.end)) {
      r.ok      = false;
      r.message = "derivation ends at " + to_string(current) + ", expected "
                  + to_string(d.end);
    }
    return r;
  }

  bool cap_consistent(Derivation const& d) {
    if (d.alphabet == Alphabet::twoholed) {
      return torus_matrix(cap(d.start)) == torus_matrix(cap(d.end));
    }
    return torus_matrix(d.start) == torus_matrix(d.end);
  }

  DerivationBuilder::DerivationBuilder(Alphabet             alphabet,
                                       TwistWord            start,
                                       bool                 central,
                                       LemmaRegistry const& lemmas)
      : _current(start), _central(central), _lemmas(lemmas) {
    _derivation.alphabet = alphabet;
    _derivation.start    = std::move(start);
  }

  DerivationBuilder& DerivationBuilder::apply(Step step) {
    _current = apply_step(_current, step, _derivation.alphabet, _central, _lemmas);
    _derivation.steps.push_back(std::move(step));
    return *this;
  }

  DerivationBuilder& DerivationBuilder::slide_left(std::size_t i) {
    if (i + 1 >= _current.size()) {
      throw InvalidArgument("slide_left: position out of range");
    }
    auto const pos = static_cast<std::int64_t>(i);
    if (letters_commute(_current[i], _current[i + 1])) {
      return apply(Step{Move::commute, pos});
    }
    TwistLetter const y = _current[i + 1];
    apply(Step{Move::insert, pos, {}, {}, false, word(y)});
    return apply(Step{Move::conj_collapse, pos + 1, {1}});
  }

  DerivationBuilder& DerivationBuilder::move_left(std::size_t from,
                                                  std::size_t to) {
    if (to > from) {
      throw InvalidArgument("move_left: target lies to the right");
    }
    for (std::size_t j = from; j > to; --j) {
      slide_left(j - 1);
    }
    return *this;
  }

  Derivation DerivationBuilder::finish() const {
    Derivation d = _derivation;
    d.end        = _current;
    return d;
  }

}  // namespace exotica
