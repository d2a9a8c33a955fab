#include "exotica/word_parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace exotica {

  ParseError::ParseError(std::string const& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column "
              + std::to_string(column) + ": " + what),
        _line(line),
        _column(column) {}

  namespace {

    class WordLexer {
     public:
      WordLexer(std::string_view text, int line, int column)
          : _text(text), _line(line), _column0(column) {}

      TwistWord parse_all() {
        skip_space();
        if (peek() == '1' && is_standalone_one()) {
          ++_pos;
          skip_space();
          if (!at_end()) {
            fail("the identity '1' must stand alone");
          }
          return {};
        }
        TwistWord w = parse_sequence(/*closing=*/'\0');
        if (!at_end()) {
          fail("unexpected '" + std::string(1, peek()) + "'");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, _line, _column0 + static_cast<int>(_pos));
      }

      bool at_end() const {
        return _pos >= _text.size();
      }

      char peek() const {
        return at_end() ? '\0' : _text[_pos];
      }

      void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
      }

      bool is_standalone_one() const {
        std::size_t j = _pos + 1;
        return j >= _text.size()
               || std::isspace(static_cast<unsigned char>(_text[j]))
               || _text[j] == '}' || _text[j] == ')';
      }

      TwistWord parse_sequence(char closing) {
        TwistWord w;
        while (true) {
          skip_space();
          if (at_end() || peek() == closing) {
            return w;
          }
          if (peek() == '1' && is_standalone_one()) {
            ++_pos;  // identity inside a longer word contributes nothing
            continue;
          }
          TwistWord t = parse_term();
          w.letters.insert(w.letters.end(), t.letters.begin(), t.letters.end());
        }
      }

      int parse_int() {
        std::size_t const begin = _pos;
        if (peek() == '-' || peek() == '+') {
          ++_pos;
        }
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
        int  value = 0;
        auto s     = _text.substr(begin, _pos - begin);
        if (!s.empty() && s.front() == '+') {
          s.remove_prefix(1);
        }
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
          _pos = begin;
          fail("expected an integer exponent");
        }
        return value;
      }

      // Optional "^k" suffix.
      int parse_power() {
        if (peek() == '^') {
          std::size_t const save = _pos;
          ++_pos;
          if (peek() == '{') {
            _pos = save;
            fail("conjugation must come before the power");
          }
          return parse_int();
        }
        return 1;
      }

      TwistWord parse_term() {
        if (peek() == '(') {
          ++_pos;
          TwistWord inner = parse_sequence(')');
          if (peek() != ')') {
            fail("missing ')'");
          }
          ++_pos;
          return power(inner, parse_power());
        }
        bool inverted = false;
        if (peek() == '~') {
          inverted = true;
          ++_pos;
        }
        std::size_t const begin = _pos;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
        std::string_view const name = _text.substr(begin, _pos - begin);
        Generator              g;
        if (name == "a") {
          g = Generator::a;
        } else if (name == "b") {
          g = Generator::b;
        } else if (name == "A1") {
          g = Generator::alpha1;
        } else if (name == "A2") {
          g = Generator::alpha2;
        } else if (name == "B") {
          g = Generator::beta;
        } else if (name == "D1") {
          g = Generator::delta1;
        } else if (name == "D2") {
          g = Generator::delta2;
        } else {
          _pos = begin;
          fail(name.empty() ? "unexpected '" + std::string(1, peek()) + "'"
                            : "unknown token '" + std::string(name) + "'");
        }
        TwistWord conj;
        if (peek() == '^' && _pos + 1 < _text.size() && _text[_pos + 1] == '{') {
          _pos += 2;
          conj = parse_sequence('}');
          if (peek() != '}') {
            fail("missing '}'");
          }
          ++_pos;
        }
        int k = parse_power();
        if (inverted) {
          k = -k;
        }
        return exotica::power(g, k, conj);
      }

      std::string_view _text;
      std::size_t      _pos = 0;
      int              _line;
      int              _column0;
    };

    // Splits off the first whitespace-delimited field, returning its column.
    std::string_view next_field(std::string_view& rest, std::size_t& offset) {
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) {
        rest.remove_prefix(1);
        ++offset;
      }
      std::size_t n = 0;
      while (n < rest.size() && !std::isspace(static_cast<unsigned char>(rest[n]))) {
        ++n;
      }
      auto field = rest.substr(0, n);
      rest.remove_prefix(n);
      offset += n;
      return field;
    }

    std::int64_t to_int(std::string_view s, int line, int column) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("expected an integer, got '" + std::string(s) + "'",
                         line,
                         column);
      }
      return v;
    }

  }  // namespace

  TwistWord parse_word(std::string_view text, int line, int column) {
    return WordLexer(text, line, column).parse_all();
  }

  Derivation parse_proof(std::string_view text) {
    Derivation d;
    int        stage = 0;  // 0 alphabet, 1 start, 2 end, 3 steps
    int        line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      std::string_view line = text.substr(pos, eol - pos);
      pos                   = eol + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      std::string_view rest   = line;
      std::size_t      offset = 0;
      auto             head   = next_field(rest, offset);
      if (head.empty() || head.front() == '#') {
        if (eol == text.size()) {
          break;
        }
        continue;
      }
      int const head_col = static_cast<int>(offset - head.size()) + 1;
      int const rest_col = static_cast<int>(offset) + 1;

      if (stage == 0) {
        if (head != "alphabet") {
          throw ParseError("expected 'alphabet'", line_no, head_col);
        }
        auto value = next_field(rest, offset);
        if (value == "torus") {
          d.alphabet = Alphabet::torus;
        } else if (value == "twoholed") {
          d.alphabet = Alphabet::twoholed;
        } else {
          throw ParseError("unknown alphabet '" + std::string(value) + "'",
                           line_no,
                           static_cast<int>(offset - value.size()) + 1);
        }
        stage = 1;
      } else if (stage == 1 || stage == 2) {
        char const* expected = stage == 1 ? "start" : "end";
        if (head != expected) {
          throw ParseError("expected '" + std::string(expected) + "'",
                           line_no,
                           head_col);
        }
        TwistWord w = parse_word(rest, line_no, rest_col);
        if (!in_alphabet(w, d.alphabet)) {
          throw ParseError("word uses letters outside the "
                               + std::string(to_string(d.alphabet))
                               + " alphabet",
                           line_no,
                           rest_col);
        }
        (stage == 1 ? d.start : d.end) = std::move(w);
        ++stage;
      } else {
        auto move = parse_move(head);
        if (!move) {
          throw ParseError("unknown move '" + std::string(head) + "'",
                           line_no,
                           head_col);
        }
        Step step{*move};
        step.line      = line_no;
        auto pos_field = next_field(rest, offset);
        step.position  = to_int(
            pos_field, line_no, static_cast<int>(offset - pos_field.size()) + 1);
        auto numbers = [&](std::size_t min_count, std::size_t max_count) {
          while (true) {
            auto f = next_field(rest, offset);
            if (f.empty()) {
              break;
            }
            step.numbers.push_back(
                to_int(f, line_no, static_cast<int>(offset - f.size()) + 1));
          }
          if (step.numbers.size() < min_count
              || step.numbers.size() > max_count) {
            throw ParseError("wrong number of arguments for '"
                                 + std::string(head) + "'",
                             line_no,
                             head_col);
          }
        };
        switch (*move) {
          case Move::cancel:
          case Move::braid:
          case Move::commute:
          case Move::cyclic:
            numbers(0, 0);
            break;
          case Move::conj_expand:
            numbers(0, 1);
            break;
          case Move::conj_collapse:
            numbers(1, 1);
            break;
          case Move::regroup:
            numbers(2, 2);
            break;
          case Move::insert: {
            int const col = static_cast<int>(offset) + 1;
            step.word     = parse_word(rest, line_no, col);
            if (step.word.empty()) {
              throw ParseError("insert needs a nonempty word", line_no, col);
            }
            if (!in_alphabet(step.word, d.alphabet)) {
              throw ParseError("inserted word is outside the alphabet",
                               line_no,
                               col);
            }
            break;
          }
          case Move::subst: {
            auto name = next_field(rest, offset);
            if (name.empty()) {
              throw ParseError("subst needs an identity name", line_no, head_col);
            }
            step.name = std::string(name);
            auto dir  = next_field(rest, offset);
            if (dir == "rev") {
              step.reverse = true;
            } else if (!dir.empty() && dir != "fwd") {
              throw ParseError("expected 'fwd' or 'rev', got '"
                                   + std::string(dir) + "'",
                               line_no,
                               static_cast<int>(offset - dir.size()) + 1);
            }
            if (!next_field(rest, offset).empty()) {
              throw ParseError("trailing arguments", line_no, head_col);
            }
            break;
          }
        }
        d.steps.push_back(std::move(step));
      }
      if (eol == text.size()) {
        break;
      }
    }
    if (stage < 3) {
      char const* missing = stage == 0 ? "alphabet" : stage == 1 ? "start" : "end";
      throw ParseError("missing '" + std::string(missing) + "' line", line_no, 1);
    }
    return d;
  }

  std::string format_step(Step const& step) {
    std::ostringstream out;
    out << to_string(step.move) << ' ' << step.position;
    switch (step.move) {
      case Move::insert:
        out << ' ' << to_string(step.word);
        break;
      case Move::subst:
        out << ' ' << step.name << (step.reverse ? " rev" : "");
        break;
      default:
        for (auto n : step.numbers) {
          out << ' ' << n;
        }
    }
    return out.str();
  }

  std::string format_proof(Derivation const& d) {
    std::ostringstream out;
    out << "alphabet " << to_string(d.alphabet) << '\n';
    out << "start " << to_string(d.start) << '\n';
    out << "end " << to_string(d.end) << '\n';
    for (auto const& s : d.steps) {
      out << format_step(s) << '\n';
    }
    return out.str();
  }

}  // namespace exotica
