#pragma once

#include "exotica/factored_series.hpp"
#include "exotica/knots.hpp"
#include "exotica/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace exotica {

  using Rational = boost::multiprecision::cpp_rational;

  // Constants of the surgery arithmetic. The defaults are the true values;
  // the other settings exist so the verification harness can show that a
  // perturbed constant is caught.
  struct Bookkeeping {
    std::int64_t blowup_chi      = 1;   // chi change per blow-up
    std::int64_t blowup_sigma    = -1;  // sigma change per blow-up
    std::int64_t section_drop    = -4;  // section square change per blow-up
    std::int64_t blowdown_offset = 0;   // added to p-1 in a rational blow-down

    bool operator==(Bookkeeping const&) const = default;
  };

  // The two sections s and iota(s) exchanged by the involution.
  enum class Side { primary, image };

  std::string_view to_string(Side side) noexcept;

  // Where the I_4 fibers traded for double points come from: the middle E(1)
  // or the two outer E(n) copies.
  enum class Region { middle, outer };

  std::string_view to_string(Region region) noexcept;

  struct SectionRecord {
    std::string     name;  // basis name of the original section
    CohomologyClass cls;
    int             genus         = 0;
    int             tradable      = 0;  // genus from double-node eligible knots
    int             double_points = 0;
    std::int64_t    self_intersection = 0;  // tracked independently of cls
    std::vector<std::string> exceptional;   // E's created on this section
  };

  struct FiberBudget {
    int middle_I4 = 0;
    int outer_I4  = 0;
  };

  struct StepRecord {
    std::string  op;
    std::int64_t chi;
    std::int64_t sigma;
    std::int64_t b2plus;
    std::int64_t b2minus;
    Integer      sw_term_count;
    bool         simple_type;
  };

  // C_p: vertices[0] is the (-(p+2))-sphere, followed by p-2 spheres of
  // square -2, consecutive vertices meeting once.
  struct PlumbingConfig {
    int                          p = 0;
    std::vector<CohomologyClass> vertices;
    std::optional<Side>          side;  // set when built on a section

    // Throws InvalidArgument unless the shape is a linear C_p plumbing.
    void validate() const;

    std::vector<std::int64_t> squares() const;

    // Boundary lens space L(p^2, p-1).
    std::pair<std::int64_t, std::int64_t> lens_space() const;

    // v^T Q^-1 v for the intersection matrix Q of the vertices, where v lists
    // the pairings of a class with the vertices.
    Rational inverse_form(std::vector<std::int64_t> const& v) const;
  };

  // A stand-alone C_p on its own lattice (no ambient manifold).
  PlumbingConfig linear_plumbing(int p);

  struct ManifoldState {
    int                          n = 0;
    std::vector<StepRecord>      history;
    std::int64_t                 chi     = 0;
    std::int64_t                 sigma   = 0;
    std::int64_t                 b2plus  = 0;
    std::int64_t                 b2minus = 0;
    LatticePtr                   lattice;
    FactoredSeries               sw;
    std::array<SectionRecord, 2> sections;
    FiberBudget                  budget;
    bool                         simply_connected = true;
    // The complement of each configuration is assumed simply connected; this
    // is not verified and must be set explicitly before a blow-down.
    bool                         complement_simply_connected = false;
    bool                         simple_type                 = true;
    std::vector<PlumbingConfig>  blown_down;
    Bookkeeping                  bookkeeping;
    int                          next_exceptional = 1;

    SectionRecord const& section(Side side) const;
    SectionRecord&       section(Side side);
  };

  // alpha^2 == 3 sigma + 2 chi for every basic class, where the square of a
  // class that survived rational blow-downs is taken in the blown-down
  // manifold (alpha^2 - v^T Q^-1 v for each removed configuration).
  bool state_simple_type(ManifoldState const& X);

  // E(2n+1) with SW = (e^f - e^-f)^(2n-1) and two disjoint sections of square
  // -(2n+1).
  ManifoldState elliptic_surface_odd(int n, Bookkeeping const& bk = {});

  // Multiplies SW by Delta_K(e^{2f}); both sections gain genus(K).
  ManifoldState knot_surgery(ManifoldState X, KnotRecord const& K);

  // Uses one I_4 of `region` to turn one genus of each section into a
  // positive double point.
  ManifoldState trade_genus(ManifoldState X, Region region);

  // Blows up a double point of one section with a new exceptional class E;
  // the section class drops by 2E.
  ManifoldState blow_up_double_point(ManifoldState X, Side which);

  struct ConfiguredState {
    ManifoldState  state;
    PlumbingConfig config;
  };

  // Adds the chain of `chain_length` (-2)-spheres in a fiber next to the
  // section and returns the C_p they form with it, p = chain_length + 2.
  // Throws PreconditionFailed unless the section has square -(p+2).
  ConfiguredState build_Cp(ManifoldState X, Side which, int chain_length);

  struct TautReport {
    int          p                 = 0;
    std::int64_t max_abs_u1        = 0;  // over basic classes, first vertex
    bool         all_interior_zero = true;
    bool         taut              = true;
  };

  TautReport taut_check(ManifoldState const& X, PlumbingConfig const& C);

  // Replaces C by the rational ball: keeps the basic classes with
  // |alpha(u1)| = p. Throws PreconditionFailed if C is not taut or the
  // complement assumption is not set.
  ManifoldState rational_blow_down(ManifoldState X, PlumbingConfig const& C);

  struct ChainFeasibility {
    int  required;   // p - 2 chain spheres plus two more fiber spheres
    int  available;  // components of an I_{8n+1} fiber
    bool fits;
  };

  struct ConstructionOutcome {
    int                                              n, k, m;
    int                                              p;
    ManifoldState                                    state;
    std::array<TautReport, 2>                        taut;
    std::array<ChainFeasibility, 2>                  chain_feasibility;
    CohomologyClass                                  alpha;
    std::vector<std::pair<CohomologyClass, Integer>> survivors;
    Integer                                          leading_coefficient;  // |SW(alpha)|
  };

  // The surviving class (2n+3+4k)f + E1 + ... + E_{4k+4} on `lattice`.
  CohomologyClass expected_survivor(LatticePtr const& lattice, int n, int k);

  enum class BudgetPolicy {
    enforce,          // reject k > k_max(n)
    arithmetic_only,  // run the arithmetic even when the fibers do not fit
  };

  // The whole pipeline. Throws InvalidArgument for parameters out of range
  // and InvariantViolation when the bookkeeping disagrees with itself.
  ConstructionOutcome full_construction(int                n,
                                        int                k,
                                        int                m,
                                        Bookkeeping const& bk     = {},
                                        BudgetPolicy       policy = BudgetPolicy::enforce);

}  // namespace exotica
