#include "exotica/fibration.hpp"

#include "exotica/word_parser.hpp"

#include <optional>

namespace exotica {

  TwistWord FibrationDescription::total_monodromy() const {
    TwistWord w;
    for (auto const& f : fibers) {
      w = w * f;
    }
    return alphabet == Alphabet::twoholed ? cap(w) : w;
  }

  bool FibrationDescription::monodromy_closes() const {
    return torus_matrix(total_monodromy()) == Matrix2::identity();
  }

  std::optional<std::size_t> pure_power(TwistWord const& w) {
    if (w.empty()) {
      return std::nullopt;
    }
    for (auto const& x : w.letters) {
      if (!(x == w[0])) {
        return std::nullopt;
      }
    }
    return w.size();
  }

  FibrationDescription split_fiber(FibrationDescription const& fd,
                                   std::size_t                 index,
                                   int                         n,
                                   int                         m) {
    if (index >= fd.fibers.size()) {
      throw InvalidArgument("split_fiber: no fiber at index "
                            + std::to_string(index));
    }
    if (n < 1 || m < 1) {
      throw InvalidArgument("split_fiber: parts must be positive");
    }
    TwistWord const& fiber = fd.fibers[index];
    auto const       k     = pure_power(fiber);
    if (!k) {
      throw InvalidArgument("split_fiber: fiber " + to_string(fiber)
                            + " is not a power of one twist");
    }
    if (*k != static_cast<std::size_t>(n) * static_cast<std::size_t>(m)) {
      throw InvalidArgument("split_fiber: fiber " + to_string(fiber)
                            + " is not t^" + std::to_string(n * m));
    }
    FibrationDescription out = fd;
    TwistWord            piece;
    piece.letters.assign(static_cast<std::size_t>(n), fiber[0]);
    out.fibers.erase(out.fibers.begin() + static_cast<std::ptrdiff_t>(index));
    out.fibers.insert(out.fibers.begin() + static_cast<std::ptrdiff_t>(index),
                      static_cast<std::size_t>(m),
                      piece);
    return out;
  }

  FibrationDescription fibration_from_word(TwistWord const& w,
                                           Alphabet         alphabet,
                                           std::vector<int> section_framings) {
    if (!in_alphabet(w, alphabet)) {
      throw InvalidArgument("fibration_from_word: word outside the alphabet");
    }
    FibrationDescription fd{alphabet, {}, std::move(section_framings)};
    for (auto const& x : w.letters) {
      if (!fd.fibers.empty() && fd.fibers.back()[0] == x) {
        fd.fibers.back().letters.push_back(x);
      } else {
        fd.fibers.push_back(word(x));
      }
    }
    return fd;
  }

  FibrationDescription eq_nine_fibration() {
    FibrationDescription fd;
    fd.alphabet = Alphabet::torus;
    for (auto const* text : {"a^4", "a^4", "a", "b^{a^6}", "b^{a^3}", "b"}) {
      fd.fibers.push_back(parse_word(text));
    }
    fd.section_framings = {1};
    return fd;
  }

  std::size_t count_i4(FibrationDescription const& fd) {
    std::size_t count = 0;
    for (auto const& f : fd.fibers) {
      if (pure_power(f) == std::optional<std::size_t>(4)) {
        ++count;
      }
    }
    return count;
  }

  BudgetCheck budget_check(int n, int k) {
    if (n < 1 || k < 0) {
      throw InvalidArgument("budget_check: need n >= 1 and k >= 0");
    }
    // floor((2n - 3) / 4) with floor division for negative numerators
    int const num   = 2 * n - 3;
    int const k_max = num >= 0 ? num / 4 : -((-num + 3) / 4);
    return {2 * n + 7 + 12 * k <= 8 * n - 2, k_max};
  }

}  // namespace exotica
