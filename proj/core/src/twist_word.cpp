#include "exotica/twist_word.hpp"

#include <sstream>

namespace exotica {

  Alphabet alphabet_of(Generator g) noexcept {
    return (g == Generator::a || g == Generator::b) ? Alphabet::torus
                                                    : Alphabet::twoholed;
  }

  std::string_view token(Generator g) noexcept {
    switch (g) {
      case Generator::a:
        return "a";
      case Generator::b:
        return "b";
      case Generator::alpha1:
        return "A1";
      case Generator::alpha2:
        return "A2";
      case Generator::beta:
        return "B";
      case Generator::delta1:
        return "D1";
      case Generator::delta2:
        return "D2";
    }
    return "?";
  }

  std::string_view to_string(Alphabet a) noexcept {
    return a == Alphabet::torus ? "torus" : "twoholed";
  }

  bool is_boundary_twist(Generator g) noexcept {
    return g == Generator::delta1 || g == Generator::delta2;
  }

  bool TwistWord::operator==(TwistWord const& other) const {
    return letters == other.letters;
  }

  bool TwistLetter::operator==(TwistLetter const& other) const {
    return generator == other.generator && exponent == other.exponent
           && conjugator == other.conjugator;
  }

  TwistLetter inverse(TwistLetter const& x) {
    return TwistLetter{x.generator, -x.exponent, x.conjugator};
  }

  TwistWord inverse(TwistWord const& w) {
    TwistWord out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      out.letters.push_back(inverse(*it));
    }
    return out;
  }

  TwistWord operator*(TwistWord const& x, TwistWord const& y) {
    TwistWord out = x;
    out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
    return out;
  }

  TwistWord power(Generator g, int k, TwistWord const& conjugator) {
    TwistWord out;
    int const e = k < 0 ? -1 : 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      out.letters.push_back(TwistLetter{g, e, conjugator});
    }
    return out;
  }

  TwistWord power(TwistWord const& w, int k) {
    TwistWord const base = k < 0 ? inverse(w) : w;
    TwistWord       out;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      out = out * base;
    }
    return out;
  }

  TwistWord word(TwistLetter const& x) {
    return TwistWord{{x}};
  }

  TwistLetter conjugated(TwistLetter const& x, TwistWord const& by) {
    return TwistLetter{x.generator, x.exponent, x.conjugator * by};
  }

  bool in_alphabet(TwistWord const& w, Alphabet a) {
    for (auto const& x : w.letters) {
      if (alphabet_of(x.generator) != a || !in_alphabet(x.conjugator, a)) {
        return false;
      }
    }
    return true;
  }

  bool is_central_word(TwistWord const& w) {
    for (auto const& x : w.letters) {
      if (!is_boundary_twist(x.generator)) {
        return false;
      }
    }
    return true;
  }

  std::size_t right_handed_count(TwistWord const& w) {
    std::size_t n = 0;
    for (auto const& x : w.letters) {
      n += x.exponent == 1 ? 1 : 0;
    }
    return n;
  }

  namespace {

    // Letter without its power: "~A2^{~B A1^5}".
    std::string atom(TwistLetter const& x) {
      std::string s(token(x.generator));
      if (!x.conjugator.empty()) {
        s += "^{" + to_string(x.conjugator) + "}";
      }
      return s;
    }

  }  // namespace

  std::string to_string(TwistLetter const& x) {
    return (x.exponent < 0 ? "~" : "") + atom(x);
  }

  std::string to_string(TwistWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::ostringstream out;
    std::size_t        i = 0;
    bool               first = true;
    while (i < w.size()) {
      std::size_t j = i + 1;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      if (!first) {
        out << ' ';
      }
      first            = false;
      std::size_t const run = j - i;
      if (run == 1) {
        out << to_string(w[i]);
      } else {
        // x^{..}^k with the inverse expressed by a negative power.
        out << atom(w[i]) << '^' << (w[i].exponent < 0 ? "-" : "") << run;
      }
      i = j;
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices
  ////////////////////////////////////////////////////////////////////////

  Matrix2 operator*(Matrix2 const& x, Matrix2 const& y) {
    Matrix2 r;
    r.m[0] = x.m[0] * y.m[0] + x.m[1] * y.m[2];
    r.m[1] = x.m[0] * y.m[1] + x.m[1] * y.m[3];
    r.m[2] = x.m[2] * y.m[0] + x.m[3] * y.m[2];
    r.m[3] = x.m[2] * y.m[1] + x.m[3] * y.m[3];
    return r;
  }

  Matrix2 Matrix2::inverse() const {
    if (m[0] * m[3] - m[1] * m[2] != 1) {
      throw InvalidArgument("matrix is not in SL(2,Z)");
    }
    Matrix2 r;
    r.m = {m[3], -m[1], -m[2], m[0]};
    return r;
  }

  std::string Matrix2::to_string() const {
    return "[[" + m[0].str() + "," + m[1].str() + "],[" + m[2].str() + ","
           + m[3].str() + "]]";
  }

  namespace {

    Matrix2 const& generator_matrix(Generator g) {
      static Matrix2 const A{{1, 1, 0, 1}};
      static Matrix2 const B{{1, 0, -1, 1}};
      if (g == Generator::a) {
        return A;
      }
      if (g == Generator::b) {
        return B;
      }
      throw InvalidArgument("torus_matrix: letter '" + std::string(token(g))
                            + "' is not in the torus alphabet");
    }

  }  // namespace

  Matrix2 torus_matrix(TwistWord const& w) {
    Matrix2 result;
    for (auto const& x : w.letters) {
      Matrix2 M = generator_matrix(x.generator);
      if (x.exponent < 0) {
        M = M.inverse();
      }
      if (!x.conjugator.empty()) {
        Matrix2 const C = torus_matrix(x.conjugator);
        M               = C.inverse() * M * C;
      }
      result = result * M;
    }
    return result;
  }

  bool verify_torus_identity(TwistWord const& lhs, TwistWord const& rhs) {
    return torus_matrix(lhs) == torus_matrix(rhs);
  }

  TwistWord cap(TwistWord const& w) {
    TwistWord out;
    for (auto const& x : w.letters) {
      Generator g;
      switch (x.generator) {
        case Generator::alpha1:
        case Generator::alpha2:
          g = Generator::a;
          break;
        case Generator::beta:
          g = Generator::b;
          break;
        case Generator::delta1:
        case Generator::delta2:
          continue;
        default:
          throw InvalidArgument("cap: letter '" + std::string(token(x.generator))
                                + "' is not in the two-holed alphabet");
      }
      out.letters.push_back(TwistLetter{g, x.exponent, cap(x.conjugator)});
    }
    return out;
  }

}  // namespace exotica
