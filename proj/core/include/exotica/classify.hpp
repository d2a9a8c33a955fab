#pragma once

#include "exotica/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exotica {

  enum class Pi1 { trivial, z2 };
  enum class SpinStatus { spin, nonspin, unknown };
  enum class W2Type { I, II, III, undetermined };
  enum class Rohlin { certified_nonspin, inconclusive };

  std::string_view to_string(Pi1 v) noexcept;
  std::string_view to_string(SpinStatus v) noexcept;
  std::string_view to_string(W2Type v) noexcept;
  std::string_view to_string(Rohlin v) noexcept;

  struct TopInvariants {
    std::int64_t chi;
    std::int64_t sigma;
    Pi1          pi1;
    SpinStatus   spin;
    W2Type       w2type;
    bool         closed_smooth_oriented = true;

    bool operator==(TopInvariants const&) const = default;
  };

  // A spin 4-manifold has signature divisible by 16, so any other signature
  // certifies non-spin. Never concludes "spin".
  Rohlin rohlin_nonspin(std::int64_t sigma) noexcept;

  SpinStatus spin_status(Rohlin r) noexcept;

  // I: cover not spin; II: both spin; III: only the cover spin. Throws
  // InvalidArgument for a spin manifold with non-spin cover.
  W2Type w2_type(SpinStatus cover, SpinStatus total);

  // Invariants of a simply connected manifold with the given chi and sigma,
  // spin status from Rohlin.
  TopInvariants simply_connected_invariants(std::int64_t chi, std::int64_t sigma);

  // Hambleton-Kreck for pi_1 = Z/2: homeomorphic iff chi, sigma and w2-type
  // agree. Throws PreconditionFailed if either side is not a closed smooth
  // oriented manifold with pi_1 = Z/2 or has undetermined w2-type.
  bool homeo_equivalent(TopInvariants const& a, TopInvariants const& b);

  // Free Z/2 quotient of a simply connected cover: halves chi and sigma.
  // Throws InvalidArgument if the cover is not simply connected or chi or
  // sigma is odd.
  TopInvariants quotient_invariants(TopInvariants const& cover);

  // Z_1 # a CP^2 # b CP^2-bar, Z_1 = (S^2 x S^2) / (antipodal, antipodal).
  TopInvariants model_invariants(std::int64_t a, std::int64_t b);

  // True iff 3 sigma + 2 chi > 0: the two surviving classes +-alpha then
  // differ by a class of square 4(3 sigma + 2 chi) != -4. Throws
  // PreconditionFailed on an empty survivor list.
  bool irreducibility_certificate(
      std::int64_t                                             chi,
      std::int64_t                                             sigma,
      std::vector<std::pair<CohomologyClass, Integer>> const& survivors);

  // |SW(alpha)| = m^2 tells the members apart iff m -> m^2 is injective on
  // the given m's (true for positive m).
  bool sw_magnitudes_distinct(std::vector<int> const& ms);

  struct FamilyRow {
    int          k;
    std::int64_t l;  // number of CP^2-bar summands, 8n - 6k
    bool         valid;
    std::string  reason;
  };

  struct FamilyTable {
    int                      n;
    int                      k_max;
    std::vector<FamilyRow>   rows;
    std::vector<std::string> notes;
  };

  // Rows k = 0..k_max(n), valid iff 4 does not divide n - k. A note is added
  // for each l that lies in the range {5n+6 or 5n+9, ..., 8n} (step 6) but
  // whose pair is excluded.
  FamilyTable family_enumerator(int n);

}  // namespace exotica
