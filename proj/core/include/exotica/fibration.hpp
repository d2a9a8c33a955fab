#pragma once

#include "exotica/twist_word.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace exotica {

  // Singular fibers of an elliptic (or genus-one Lefschetz) fibration over
  // the sphere, listed by monodromy, plus the section framings: the i-th
  // section has self-intersection -section_framings[i].
  struct FibrationDescription {
    Alphabet               alphabet = Alphabet::torus;
    std::vector<TwistWord> fibers;
    std::vector<int>       section_framings;

    // Product of all fiber words (capped first for two-holed words).
    TwistWord total_monodromy() const;

    // The capped total monodromy is the identity.
    bool monodromy_closes() const;
  };

  // If w is t^k for a single letter t and k >= 1, returns k.
  std::optional<std::size_t> pure_power(TwistWord const& w);

  // Replaces the fiber t^{n m} at `index` by m consecutive fibers t^n, e.g.
  // an I_8 by two I_4. Throws InvalidArgument if the fiber is not a pure
  // power of exponent n*m or the index is out of range.
  FibrationDescription split_fiber(FibrationDescription const& fd,
                                   std::size_t                 index,
                                   int                         n,
                                   int                         m);

  // One fiber per maximal run of identical letters.
  FibrationDescription fibration_from_word(TwistWord const& w,
                                           Alphabet         alphabet,
                                           std::vector<int> section_framings);

  // E(1) with fibers a^4, a^4, a, b^{a^6}, b^{a^3}, b: two I_4 fibers and
  // four nodal ones.
  FibrationDescription eq_nine_fibration();

  // Number of fibers of monodromy t^4 (I_4 fibers).
  std::size_t count_i4(FibrationDescription const& fd);

  struct BudgetCheck {
    bool ok;
    int  k_max;  // floor(n/2 - 3/4); negative when no k is admissible
  };

  // The chain of length 2n+7+8k needs 8n-2 >= 2n+7+12k once the 4k fibers
  // spent on the k extra surgeries are accounted for.
  BudgetCheck budget_check(int n, int k);

}  // namespace exotica
