#include "exotica/surgery.hpp"

#include "exotica/fibration.hpp"

#include <algorithm>

namespace exotica {

  namespace {

    SWSeries sw_of_elliptic_surface(LatticePtr const& L, int n) {
      LaurentPolynomial const t_minus =
          LaurentPolynomial::monomial(1, 1) - LaurentPolynomial::monomial(-1, 1);
      return embed_laurent(t_minus.pow(static_cast<unsigned>(2 * n - 1)), CohomologyClass::basis(L, "f"));
    }

    void move_to_lattice(ManifoldState& X, LatticePtr const& L) {
      X.sw = X.sw.lifted(L);
      for (auto& s : X.sections) {
        s.cls = s.cls.lifted(L);
      }
      for (auto& bd : X.blown_down) {
        for (auto& v : bd.vertices) {
          v = v.lifted(L);
        }
      }
      X.lattice = L;
    }

    // Checks the invariants every operation must leave intact and appends the
    // step to the history.
    void finish_step(ManifoldState& X, std::string op) {
      if (X.sigma != X.b2plus - X.b2minus) {
        throw InvariantViolation(op + ": sigma " + std::to_string(X.sigma)
                                 + " != b2+ - b2- = "
                                 + std::to_string(X.b2plus - X.b2minus));
      }
      if (X.simply_connected && X.chi != 2 + X.b2plus + X.b2minus) {
        throw InvariantViolation(op + ": chi " + std::to_string(X.chi)
                                 + " != 2 + b2+ + b2- = "
                                 + std::to_string(2 + X.b2plus + X.b2minus));
      }
      if (X.b2minus < 0 || X.b2plus < 0) {
        throw InvariantViolation(op + ": negative Betti number");
      }
      for (auto const& s : X.sections) {
        if (square(s.cls) != s.self_intersection) {
          throw InvariantViolation(
              op + ": section " + s.name + " has self-intersection "
              + std::to_string(s.self_intersection) + " but its class "
              + s.cls.to_string() + " squares to "
              + std::to_string(square(s.cls)));
        }
      }
      if (X.budget.middle_I4 < 0 || X.budget.outer_I4 < 0) {
        throw InvariantViolation(op + ": fiber budget went negative");
      }
      X.simple_type = state_simple_type(X);
      if (!X.simple_type) {
        throw InvariantViolation(op + ": a basic class violates alpha^2 = "
                                 "3 sigma + 2 chi");
      }
      X.history.push_back({std::move(op),
                           X.chi,
                           X.sigma,
                           X.b2plus,
                           X.b2minus,
                           X.sw.term_count(),
                           X.simple_type});
    }

    std::vector<std::vector<std::int64_t>>
    vertex_functionals(PlumbingConfig const& C, LatticePtr const& L) {
      std::vector<std::vector<std::int64_t>> out;
      for (auto const& v : C.vertices) {
        out.push_back(pairing_functional(v.lifted(L)));
      }
      return out;
    }

    constexpr std::size_t simple_type_expand_limit = std::size_t(1) << 18;

  }  // namespace

  std::string_view to_string(Side side) noexcept {
    return side == Side::primary ? "s" : "iota_s";
  }

  std::string_view to_string(Region region) noexcept {
    return region == Region::middle ? "middle" : "outer";
  }

  SectionRecord const& ManifoldState::section(Side side) const {
    return sections[side == Side::primary ? 0 : 1];
  }

  SectionRecord& ManifoldState::section(Side side) {
    return sections[side == Side::primary ? 0 : 1];
  }

  ////////////////////////////////////////////////////////////////////////
  // PlumbingConfig
  ////////////////////////////////////////////////////////////////////////

  void PlumbingConfig::validate() const {
    if (p < 2) {
      throw InvalidArgument("C_p needs p >= 2, got " + std::to_string(p));
    }
    if (vertices.size() != static_cast<std::size_t>(p - 1)) {
      throw InvalidArgument("C_" + std::to_string(p) + " needs "
                            + std::to_string(p - 1) + " vertices, got "
                            + std::to_string(vertices.size()));
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      std::int64_t const want = i == 0 ? -(p + 2) : -2;
      if (square(vertices[i]) != want) {
        throw InvalidArgument("vertex " + std::to_string(i + 1) + " of C_"
                              + std::to_string(p) + " has square "
                              + std::to_string(square(vertices[i]))
                              + ", expected " + std::to_string(want));
      }
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        std::int64_t const want_pair = j == i + 1 ? 1 : 0;
        if (pair(vertices[i], vertices[j]) != want_pair) {
          throw InvalidArgument("vertices " + std::to_string(i + 1) + " and "
                                + std::to_string(j + 1) + " pair to "
                                + std::to_string(pair(vertices[i], vertices[j]))
                                + ", expected " + std::to_string(want_pair));
        }
      }
    }
  }

  std::vector<std::int64_t> PlumbingConfig::squares() const {
    std::vector<std::int64_t> out;
    for (auto const& v : vertices) {
      out.push_back(square(v));
    }
    return out;
  }

  std::pair<std::int64_t, std::int64_t> PlumbingConfig::lens_space() const {
    return {std::int64_t(p) * p, p - 1};
  }

  Rational PlumbingConfig::inverse_form(std::vector<std::int64_t> const& v) const {
    std::size_t const d = vertices.size();
    if (v.size() != d) {
      throw InvalidArgument("inverse_form: expected " + std::to_string(d)
                            + " pairings, got " + std::to_string(v.size()));
    }
    // Q is tridiagonal: forward elimination, then back substitution.
    std::vector<Rational> diag(d), rhs(d), x(d);
    std::vector<Rational> off(d == 0 ? 0 : d - 1);
    for (std::size_t i = 0; i < d; ++i) {
      diag[i] = square(vertices[i]);
      rhs[i]  = v[i];
      if (i + 1 < d) {
        off[i] = pair(vertices[i], vertices[i + 1]);
      }
    }
    for (std::size_t i = 1; i < d; ++i) {
      if (diag[i - 1] == 0) {
        throw InvalidArgument("inverse_form: singular configuration");
      }
      Rational const factor = off[i - 1] / diag[i - 1];
      diag[i] -= factor * off[i - 1];
      rhs[i] -= factor * rhs[i - 1];
    }
    Rational form = 0;
    for (std::size_t i = d; i-- > 0;) {
      if (diag[i] == 0) {
        throw InvalidArgument("inverse_form: singular configuration");
      }
      Rational acc = rhs[i];
      if (i + 1 < d) {
        acc -= off[i] * x[i + 1];
      }
      x[i] = acc / diag[i];
      form += Rational(v[i]) * x[i];
    }
    return form;
  }

  PlumbingConfig linear_plumbing(int p) {
    if (p < 2) {
      throw InvalidArgument("linear_plumbing: p must be >= 2");
    }
    std::size_t const                      d = static_cast<std::size_t>(p - 1);
    std::vector<BasisClass>                basis;
    std::vector<std::vector<std::int64_t>> gram(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      basis.push_back({"u" + std::to_string(i + 1), BasisRole::fiber_component});
      gram[i][i] = i == 0 ? -(p + 2) : -2;
      if (i > 0) {
        gram[i][i - 1] = gram[i - 1][i] = 1;
      }
    }
    LatticePtr     L = IntersectionLattice::make(std::move(basis), std::move(gram));
    PlumbingConfig C{p, {}, std::nullopt};
    for (std::size_t i = 0; i < d; ++i) {
      C.vertices.push_back(CohomologyClass::basis(L, "u" + std::to_string(i + 1)));
    }
    C.validate();
    return C;
  }

  ////////////////////////////////////////////////////////////////////////
  // Simple type
  ////////////////////////////////////////////////////////////////////////

  bool state_simple_type(ManifoldState const& X) {
    Rational const target = 3 * X.sigma + 2 * X.chi;

    std::vector<std::vector<std::vector<std::int64_t>>> functionals;
    for (auto const& bd : X.blown_down) {
      functionals.push_back(vertex_functionals(bd, X.lattice));
    }

    for (auto const& prod : X.sw.summands()) {
      if (prod.empty()) {
        continue;
      }
      // Fast path: every removed configuration pairs the same way with all
      // terms, and squares are constant.
      bool     uniform = true;
      Rational corr    = 0;
      for (std::size_t c = 0; c < functionals.size() && uniform; ++c) {
        std::vector<std::int64_t> v;
        for (auto const& w : functionals[c]) {
          auto value = prod.constant_value(w);
          if (!value) {
            uniform = false;
            break;
          }
          v.push_back(*value);
        }
        if (uniform) {
          corr += X.blown_down[c].inverse_form(v);
        }
      }
      auto const sq = prod.constant_square();
      if (uniform && sq) {
        if (Rational(*sq) - corr != target) {
          return false;
        }
        continue;
      }
      if (prod.term_count() > simple_type_expand_limit) {
        return false;
      }
      SWSeries const expanded = prod.expand();
      for (auto const& [key, coeff] : expanded.terms()) {
        Rational value = square(CohomologyClass(X.lattice, key));
        for (std::size_t c = 0; c < functionals.size(); ++c) {
          std::vector<std::int64_t> v;
          for (auto const& w : functionals[c]) {
            v.push_back(dot(key, w));
          }
          value -= X.blown_down[c].inverse_form(v);
        }
        if (value != target) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  ManifoldState elliptic_surface_odd(int n, Bookkeeping const& bk) {
    if (n < 1) {
      throw InvalidArgument("elliptic_surface_odd: n must be >= 1");
    }
    LatticePtr const   L   = make_surgery_lattice(n, 0, 0);
    std::int64_t const n64 = n;
    auto make_section = [&](std::string const& name) {
      return SectionRecord{name,
                           CohomologyClass::basis(L, name),
                           0,
                           0,
                           0,
                           -(2 * n64 + 1),
                           {}};
    };
    int const k_max = budget_check(n, 0).k_max;
    ManifoldState X{
        .n        = n,
        .history  = {},
        .chi      = 24 * n64 + 12,
        .sigma    = -16 * n64 - 8,
        .b2plus   = 4 * n64 + 1,
        .b2minus  = 20 * n64 + 9,
        .lattice  = L,
        .sw       = FactoredSeries(sw_of_elliptic_surface(L, n)),
        .sections = {make_section("s"), make_section("iota_s")},
        .budget   = {static_cast<int>(count_i4(eq_nine_fibration())),
                     2 * std::max(k_max, 0)},
        .simply_connected            = true,
        .complement_simply_connected = false,
        .simple_type                 = true,
        .blown_down                  = {},
        .bookkeeping                 = bk,
        .next_exceptional            = 1,
    };
    finish_step(X, "elliptic_surface E(" + std::to_string(2 * n + 1) + ")");
    return X;
  }

  ManifoldState knot_surgery(ManifoldState X, KnotRecord const& K) {
    K.validate();
    if (X.b2plus <= 1) {
      throw PreconditionFailed("knot_surgery needs b2+ > 1");
    }
    X.sw.multiply(embed_laurent(K.alexander,
                                2 * CohomologyClass::basis(X.lattice, "f")));
    for (auto& s : X.sections) {
      s.genus += K.genus;
      if (K.double_node_eligible) {
        s.tradable += K.genus;
      }
    }
    finish_step(X, "knot_surgery " + K.name);
    return X;
  }

  ManifoldState trade_genus(ManifoldState X, Region region) {
    for (auto const& s : X.sections) {
      if (s.genus < 1) {
        throw PreconditionFailed("trade_genus: section " + s.name
                                 + " has genus 0");
      }
      if (s.tradable < 1) {
        throw PreconditionFailed("trade_genus: section " + s.name
                                 + " has no genus from a double-node "
                                   "eligible knot");
      }
    }
    int& pool = region == Region::middle ? X.budget.middle_I4 : X.budget.outer_I4;
    if (pool < 1) {
      throw PreconditionFailed("trade_genus: no I4 fiber left in the "
                               + std::string(to_string(region)) + " region");
    }
    --pool;
    for (auto& s : X.sections) {
      --s.genus;
      --s.tradable;
      ++s.double_points;
    }
    finish_step(X, "trade_genus " + std::string(to_string(region)));
    return X;
  }

  ManifoldState blow_up_double_point(ManifoldState X, Side which) {
    if (X.section(which).double_points < 1) {
      throw PreconditionFailed("blow_up_double_point: section "
                               + X.section(which).name
                               + " has no double point");
    }
    std::string const name = "E" + std::to_string(X.next_exceptional++);
    LatticePtr const  L    = X.lattice->extended(
        {{name, BasisRole::exceptional}},
        {std::vector<std::int64_t>(X.lattice->rank(), 0)},
        {-1});
    move_to_lattice(X, L);

    CohomologyClass const E = CohomologyClass::basis(L, name);
    SWSeries              factor(L);
    factor.add_term(E, 1);
    factor.add_term(-E, 1);
    X.sw.multiply(factor);

    X.chi += X.bookkeeping.blowup_chi;
    X.sigma += X.bookkeeping.blowup_sigma;
    X.b2minus += 1;

    SectionRecord& s = X.section(which);
    s.cls            = s.cls - 2 * E;
    s.self_intersection += X.bookkeeping.section_drop;
    --s.double_points;
    s.exceptional.push_back(name);
    finish_step(X, "blow_up " + s.name + " " + name);
    return X;
  }

  ConfiguredState build_Cp(ManifoldState X, Side which, int chain_length) {
    if (chain_length < 0) {
      throw InvalidArgument("build_Cp: negative chain length");
    }
    int const            p = chain_length + 2;
    SectionRecord const& s = X.section(which);
    if (s.self_intersection != -(p + 2) || square(s.cls) != -(p + 2)) {
      throw PreconditionFailed("build_Cp: section " + s.name
                               + " has square " + std::to_string(square(s.cls))
                               + ", C_" + std::to_string(p) + " needs "
                               + std::to_string(-(p + 2)));
    }
    std::string const prefix = which == Side::primary ? "u" : "iota_u";
    std::size_t const base   = X.lattice->rank();
    std::size_t const anchor = X.lattice->require_index(s.name);

    std::vector<BasisClass>                classes;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t>              squares;
    for (int i = 0; i < chain_length; ++i) {
      classes.push_back(
          {prefix + std::to_string(i + 1), BasisRole::fiber_component});
      std::vector<std::int64_t> row(base + static_cast<std::size_t>(i), 0);
      if (i == 0) {
        row[anchor] = 1;
      } else {
        row.back() = 1;
      }
      rows.push_back(std::move(row));
      squares.push_back(-2);
    }
    move_to_lattice(X, X.lattice->extended(classes, rows, squares));

    PlumbingConfig C{p, {X.section(which).cls}, which};
    for (auto const& c : classes) {
      C.vertices.push_back(CohomologyClass::basis(X.lattice, c.name));
    }
    C.validate();
    finish_step(X, "build_C" + std::to_string(p) + " " + s.name);
    return {std::move(X), std::move(C)};
  }

  TautReport taut_check(ManifoldState const& X, PlumbingConfig const& C) {
    TautReport r;
    r.p                = C.p;
    auto const weights = vertex_functionals(C, X.lattice);
    if (auto range = X.sw.functional_range(weights.front())) {
      r.max_abs_u1 = std::max(std::abs(range->first), std::abs(range->second));
    }
    for (std::size_t i = 1; i < weights.size(); ++i) {
      if (!X.sw.functional_is_constant(weights[i], 0)) {
        r.all_interior_zero = false;
      }
    }
    r.taut = r.max_abs_u1 <= C.p && r.all_interior_zero;
    return r;
  }

  ManifoldState rational_blow_down(ManifoldState X, PlumbingConfig const& C) {
    C.validate();
    if (!X.complement_simply_connected) {
      throw PreconditionFailed("rational_blow_down: the simply connected "
                               "complement assumption is not set");
    }
    TautReport const taut = taut_check(X, C);
    if (!taut.taut) {
      throw PreconditionFailed(
          "rational_blow_down: C_" + std::to_string(C.p)
          + " is not taut (max |alpha(u1)| = " + std::to_string(taut.max_abs_u1)
          + (taut.all_interior_zero ? "" : ", nonzero interior pairing") + ")");
    }
    PlumbingConfig lifted = C;
    for (auto& v : lifted.vertices) {
      v = v.lifted(X.lattice);
    }
    auto const     weights = vertex_functionals(lifted, X.lattice);
    FactoredSeries kept    = X.sw.select(weights.front(), C.p);
    kept.add(X.sw.select(weights.front(), -C.p));
    X.sw = std::move(kept);

    std::int64_t const removed = C.p - 1 + X.bookkeeping.blowdown_offset;
    X.chi -= removed;
    X.sigma += removed;
    X.b2minus -= removed;
    X.blown_down.push_back(lifted);
    std::string label = "rational_blow_down C" + std::to_string(C.p);
    if (C.side) {
      label += " " + std::string(to_string(*C.side));
    }
    finish_step(X, std::move(label));
    return X;
  }

  CohomologyClass expected_survivor(LatticePtr const& lattice, int n, int k) {
    CohomologyClass alpha = std::int64_t(2 * n + 3 + 4 * k)
                            * CohomologyClass::basis(lattice, "f");
    for (int i = 1; i <= 4 * k + 4; ++i) {
      alpha = alpha + CohomologyClass::basis(lattice, "E" + std::to_string(i));
    }
    return alpha;
  }

  ConstructionOutcome full_construction(int                n,
                                        int                k,
                                        int                m,
                                        Bookkeeping const& bk,
                                        BudgetPolicy       policy) {
    if (n < 1) {
      throw InvalidArgument("full_construction: n must be >= 1");
    }
    if (m < 1) {
      throw InvalidArgument("full_construction: m must be >= 1");
    }
    if (k < 0) {
      throw InvalidArgument("full_construction: k must be >= 0");
    }
    BudgetCheck const budget = budget_check(n, k);
    if (!budget.ok && policy == BudgetPolicy::enforce) {
      throw InvalidArgument("full_construction: k = " + std::to_string(k)
                            + " exceeds k_max = " + std::to_string(budget.k_max)
                            + " for n = " + std::to_string(n));
    }

    ManifoldState X = elliptic_surface_odd(n, bk);
    KnotRecord const K_m = twist_knot(m);
    X = knot_surgery(std::move(X), K_m);
    X = knot_surgery(std::move(X), K_m);
    X = trade_genus(std::move(X), Region::middle);
    X = trade_genus(std::move(X), Region::middle);
    KnotRecord const K_1 = left_handed_trefoil();
    for (int i = 0; i < k; ++i) {
      X = knot_surgery(std::move(X), K_1);
      X = knot_surgery(std::move(X), K_1);
      X = trade_genus(std::move(X), Region::outer);
      X = trade_genus(std::move(X), Region::outer);
    }
    for (Side side : {Side::primary, Side::image}) {
      while (X.section(side).double_points > 0) {
        X = blow_up_double_point(std::move(X), side);
      }
    }

    int const p = 2 * n + 7 + 8 * k;
    auto      first  = build_Cp(std::move(X), Side::primary, p - 2);
    auto      second = build_Cp(std::move(first.state), Side::image, p - 2);
    X                = std::move(second.state);
    PlumbingConfig const C1 = first.config;
    PlumbingConfig const C2 = second.config;

    std::array<TautReport, 2> const taut{taut_check(X, C1), taut_check(X, C2)};

    X.complement_simply_connected = true;
    X = rational_blow_down(std::move(X), C1);
    X = rational_blow_down(std::move(X), C2);

    int const              fiber_components = 8 * n + 1;
    ChainFeasibility const feasibility{p, fiber_components, p <= fiber_components};

    CohomologyClass alpha = expected_survivor(X.lattice, n, k);
    auto            survivors = X.sw.expand().basic_classes();
    Integer         lead      = abs(X.sw.expand().coefficient(alpha));
    return ConstructionOutcome{n,
                               k,
                               m,
                               p,
                               std::move(X),
                               taut,
                               {feasibility, feasibility},
                               std::move(alpha),
                               std::move(survivors),
                               std::move(lead)};
  }

}  // namespace exotica
