#pragma once

#include "exotica/derivation.hpp"

#include <cstddef>

namespace exotica {

  // Right sides of the two positive factorizations of delta1 delta2:
  //   A: A1^8 A2^{~B A1^5} B^{A1^4} A2^{~B A1} B
  //   B: A1^6 A2^3 B^{A1^4 A2^2} B^{A1^2 A2} B
  TwistWord decomposition_a_word();
  TwistWord decomposition_b_word();

  // The intermediate form (A1^3 A2^{~B} A1 B)^2 on the way to A.
  TwistWord decomposition_a_intermediate();

  // Derivations D1 D2 -> decomposition word, from the chain axiom.
  Derivation decomposition_a_derivation();
  Derivation decomposition_b_derivation();

  // Lemma names used by generated derivations and proof files.
  inline constexpr char const* decomposition_a_name = "decompA";
  inline constexpr char const* decomposition_b_name = "decompB";

  // A registry with both decompositions registered as checked lemmas.
  LemmaRegistry const& bundled_lemmas();

  // Derivation from D1^n D2^n to A1^{8n-2} A2^3 followed by 4n-1 conjugated
  // twists: n-1 copies of A, one copy of B, then the plain A1 and A2 letters
  // are slid to the front.
  Derivation generate_factor_derivation(int n);

  struct FactorShape {
    std::size_t alpha1_prefix  = 0;  // leading plain A1 letters
    std::size_t alpha2_block   = 0;  // plain A2 letters right after them
    std::size_t remainder      = 0;
    std::size_t total          = 0;
    bool        right_handed   = true;  // every letter has exponent +1
  };

  FactorShape analyze_factor_word(TwistWord const& w);

  // Torus words around the E(1) monodromy: (ab)^6, (a^3 b)^3 and the
  // regrouped form a^4 a^4 a b^{a^6} b^{a^3} b.
  TwistWord torus_relator_word();
  TwistWord torus_cube_word();
  TwistWord torus_nine_word();

}  // namespace exotica
