#include "exotica/classify.hpp"

#include "exotica/fibration.hpp"

#include <set>

namespace exotica {

  std::string_view to_string(Pi1 v) noexcept {
    return v == Pi1::trivial ? "trivial" : "Z/2";
  }

  std::string_view to_string(SpinStatus v) noexcept {
    switch (v) {
      case SpinStatus::spin:
        return "spin";
      case SpinStatus::nonspin:
        return "nonspin";
      case SpinStatus::unknown:
        break;
    }
    return "unknown";
  }

  std::string_view to_string(W2Type v) noexcept {
    switch (v) {
      case W2Type::I:
        return "I";
      case W2Type::II:
        return "II";
      case W2Type::III:
        return "III";
      case W2Type::undetermined:
        break;
    }
    return "undetermined";
  }

  std::string_view to_string(Rohlin v) noexcept {
    return v == Rohlin::certified_nonspin ? "certified-nonspin" : "inconclusive";
  }

  Rohlin rohlin_nonspin(std::int64_t sigma) noexcept {
    return sigma % 16 != 0 ? Rohlin::certified_nonspin : Rohlin::inconclusive;
  }

  SpinStatus spin_status(Rohlin r) noexcept {
    return r == Rohlin::certified_nonspin ? SpinStatus::nonspin
                                          : SpinStatus::unknown;
  }

  W2Type w2_type(SpinStatus cover, SpinStatus total) {
    if (total == SpinStatus::spin && cover == SpinStatus::nonspin) {
      throw InvalidArgument("w2_type: a spin manifold cannot have a non-spin cover");
    }
    if (cover == SpinStatus::nonspin) {
      return W2Type::I;
    }
    if (cover == SpinStatus::unknown || total == SpinStatus::unknown) {
      return W2Type::undetermined;
    }
    return total == SpinStatus::spin ? W2Type::II : W2Type::III;
  }

  TopInvariants simply_connected_invariants(std::int64_t chi, std::int64_t sigma) {
    SpinStatus const spin = spin_status(rohlin_nonspin(sigma));
    return {chi, sigma, Pi1::trivial, spin, w2_type(spin, spin)};
  }

  bool homeo_equivalent(TopInvariants const& a, TopInvariants const& b) {
    for (auto const* x : {&a, &b}) {
      if (x->pi1 != Pi1::z2) {
        throw PreconditionFailed("homeo_equivalent: needs pi_1 = Z/2");
      }
      if (!x->closed_smooth_oriented) {
        throw PreconditionFailed(
            "homeo_equivalent: needs closed smooth oriented manifolds");
      }
      if (x->w2type == W2Type::undetermined) {
        throw PreconditionFailed("homeo_equivalent: w2-type undetermined");
      }
    }
    return a.chi == b.chi && a.sigma == b.sigma && a.w2type == b.w2type;
  }

  TopInvariants quotient_invariants(TopInvariants const& cover) {
    if (cover.pi1 != Pi1::trivial) {
      throw InvalidArgument("quotient_invariants: cover must be simply connected");
    }
    if (cover.chi % 2 != 0 || cover.sigma % 2 != 0) {
      throw InvalidArgument("quotient_invariants: chi = " + std::to_string(cover.chi)
                            + ", sigma = " + std::to_string(cover.sigma)
                            + " cannot be halved");
    }
    // A spin quotient would have a spin cover.
    SpinStatus const total =
        cover.spin == SpinStatus::nonspin ? SpinStatus::nonspin : SpinStatus::unknown;
    return {cover.chi / 2,
            cover.sigma / 2,
            Pi1::z2,
            total,
            w2_type(cover.spin, total),
            cover.closed_smooth_oriented};
  }

  TopInvariants model_invariants(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) {
      throw InvalidArgument("model_invariants: negative summand count");
    }
    if (a + b == 0) {
      // Z_1 itself: covered by S^2 x S^2.
      return {2, 0, Pi1::z2, SpinStatus::unknown,
              w2_type(SpinStatus::spin, SpinStatus::unknown)};
    }
    return {2 + a + b, a - b, Pi1::z2, SpinStatus::nonspin, W2Type::I};
  }

  bool irreducibility_certificate(
      std::int64_t                                             chi,
      std::int64_t                                             sigma,
      std::vector<std::pair<CohomologyClass, Integer>> const& survivors) {
    if (survivors.empty()) {
      throw PreconditionFailed("irreducibility_certificate: no basic classes");
    }
    return 3 * sigma + 2 * chi > 0;
  }

  bool sw_magnitudes_distinct(std::vector<int> const& ms) {
    std::set<std::int64_t> squares;
    for (int m : ms) {
      if (m < 1) {
        throw InvalidArgument("sw_magnitudes_distinct: m must be positive");
      }
      if (!squares.insert(std::int64_t(m) * m).second) {
        return false;
      }
    }
    return true;
  }

  FamilyTable family_enumerator(int n) {
    if (n < 1) {
      throw InvalidArgument("family_enumerator: n must be >= 1");
    }
    FamilyTable t{n, budget_check(n, 0).k_max, {}, {}};
    std::int64_t const low  = n % 2 == 0 ? 5 * n + 6 : 5 * n + 9;
    std::int64_t const high = 8 * std::int64_t(n);
    for (int k = 0; k <= t.k_max; ++k) {
      std::int64_t const l     = 8 * std::int64_t(n) - 6 * k;
      bool const         valid = (n - k) % 4 != 0;
      t.rows.push_back({k,
                        l,
                        valid,
                        valid ? "4 does not divide n-k"
                              : "4 | n-k: Rohlin inconclusive, w2-type undetermined"});
      bool const in_range = l >= low && l <= high && (high - l) % 6 == 0;
      if (!valid && in_range) {
        t.notes.push_back("l = " + std::to_string(l) + " lies in {"
                          + std::to_string(low) + ", ..., " + std::to_string(high)
                          + "} but k = " + std::to_string(k)
                          + " is excluded since 4 | n-k");
      }
    }
    return t;
  }

}  // namespace exotica
