#pragma once

#include "exotica/common.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace exotica {

  // Alphabets of right-handed Dehn twists:
  //   torus     a, b               (generators of the torus mapping class group)
  //   twoholed  A1, A2, B, D1, D2  (alpha_1, alpha_2, beta and the boundary
  //                                 twists delta_1, delta_2 of the torus with
  //                                 two discs removed)
  enum class Alphabet { torus, twoholed };
  enum class Generator { a, b, alpha1, alpha2, beta, delta1, delta2 };

  Alphabet         alphabet_of(Generator g) noexcept;
  std::string_view token(Generator g) noexcept;
  std::string_view to_string(Alphabet a) noexcept;
  bool             is_boundary_twist(Generator g) noexcept;

  struct TwistLetter;

  // A word in twist letters; letter i acts after letter i-1 is written to its
  // left, i.e. the word is the product letters[0] * letters[1] * ...
  struct TwistWord {
    std::vector<TwistLetter> letters;

    std::size_t size() const noexcept {
      return letters.size();
    }

    bool empty() const noexcept {
      return letters.empty();
    }

    TwistLetter const& operator[](std::size_t i) const {
      return letters[i];
    }

    bool operator==(TwistWord const& other) const;
  };

  // generator^exponent conjugated by `conjugator`, with the convention
  // x^w = w^-1 x w.
  struct TwistLetter {
    Generator generator;
    int       exponent = 1;  // +1 or -1
    TwistWord conjugator;

    bool operator==(TwistLetter const& other) const;
  };

  TwistLetter inverse(TwistLetter const& x);
  TwistWord   inverse(TwistWord const& w);

  TwistWord operator*(TwistWord const& x, TwistWord const& y);

  // g^k (k may be negative) conjugated by `conjugator`.
  TwistWord power(Generator g, int k, TwistWord const& conjugator = {});
  TwistWord power(TwistWord const& w, int k);
  TwistWord word(TwistLetter const& x);

  // x^w for every letter: conjugates each letter of `w` by `by`, appending
  // to the existing conjugators.
  TwistLetter conjugated(TwistLetter const& x, TwistWord const& by);

  // True if every generator (recursively, including conjugators) belongs to
  // the alphabet.
  bool in_alphabet(TwistWord const& w, Alphabet a);

  // Only boundary twists (the empty word counts).
  bool is_central_word(TwistWord const& w);

  // Number of letters with exponent +1 (right-handed twists), top level only.
  std::size_t right_handed_count(TwistWord const& w);

  // Canonical text form accepted by parse_word: runs of equal letters are
  // printed as powers, the empty word as "1".
  std::string to_string(TwistWord const& w);
  std::string to_string(TwistLetter const& x);

  // Integer 2x2 matrices for the torus mapping class group SL(2, Z).
  struct Matrix2 {
    std::array<Integer, 4> m{1, 0, 0, 1};  // row-major

    static Matrix2 identity() {
      return {};
    }

    Integer const& operator()(int i, int j) const {
      return m[2 * i + j];
    }

    Matrix2 inverse() const;  // determinant must be 1

    friend Matrix2 operator*(Matrix2 const& x, Matrix2 const& y);
    bool           operator==(Matrix2 const&) const = default;

    std::string to_string() const;
  };

  // A = [[1,1],[0,1]] for a, B = [[1,0],[-1,1]] for b; words multiply left
  // to right and x^w maps to M(w)^-1 M(x) M(w). Throws InvalidArgument for
  // letters outside the torus alphabet.
  Matrix2 torus_matrix(TwistWord const& w);

  // The representation is faithful on the torus mapping class group, so
  // equal matrices means equal mapping classes.
  bool verify_torus_identity(TwistWord const& lhs, TwistWord const& rhs);

  // Caps both boundary components: A1, A2 -> a, B -> b, D1, D2 -> 1.
  // Throws InvalidArgument on torus letters.
  TwistWord cap(TwistWord const& w);

}  // namespace exotica
