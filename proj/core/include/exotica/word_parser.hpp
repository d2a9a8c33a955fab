#pragma once

#include "exotica/derivation.hpp"

#include <string>
#include <string_view>

namespace exotica {

  // Raised for malformed words or proof files; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, int line, int column);

    int line() const noexcept {
      return _line;
    }

    int column() const noexcept {
      return _column;
    }

   private:
    int _line;
    int _column;
  };

  // Word syntax (whitespace separated):
  //   letters     a b A1 A2 B D1 D2
  //   ~x          inverse
  //   x^{w}       conjugation, w^-1 x w
  //   x^k         integer power (negative powers invert)
  //   ( w )^k     power of a group
  //   1           the empty word
  // `line` and `column` locate the text inside a larger file for errors.
  TwistWord parse_word(std::string_view text, int line = 1, int column = 1);

  // Line-oriented proof file:
  //   alphabet torus|twoholed
  //   start <word>
  //   end <word>
  //   <move> <position> [<args>]     (one step per line)
  // Blank lines and lines starting with '#' are ignored.
  Derivation parse_proof(std::string_view text);

  std::string format_step(Step const& step);
  std::string format_proof(Derivation const& d);

}  // namespace exotica
