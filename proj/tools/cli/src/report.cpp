#include "exotica/cli/report.hpp"

#include "exotica/classify.hpp"
#include "exotica/fibration.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace exotica::cli {

  using nlohmann::json;

  namespace {

    json invariants_json(TopInvariants const& t) {
      return {{"chi", t.chi},
              {"sigma", t.sigma},
              {"pi1", to_string(t.pi1)},
              {"spin", to_string(t.spin)},
              {"w2type", to_string(t.w2type)}};
    }

    json taut_json(TautReport const& r) {
      return {{"p", r.p},
              {"max_abs_u1", r.max_abs_u1},
              {"all_interior_zero", r.all_interior_zero},
              {"taut", r.taut}};
    }

  }  // namespace

  json to_json(Integer const& v) {
    if (v >= std::numeric_limits<std::int64_t>::min()
        && v <= std::numeric_limits<std::int64_t>::max()) {
      return v.convert_to<std::int64_t>();
    }
    return v.str();
  }

  ConstructionReport build_report(ConstructionOutcome const& o) {
    ConstructionReport   r;
    ManifoldState const& X = o.state;
    auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };

    json steps = json::array();
    bool simple_type_everywhere = true;
    for (auto const& s : X.history) {
      steps.push_back({{"op", s.op},
                       {"chi", s.chi},
                       {"sigma", s.sigma},
                       {"b2plus", s.b2plus},
                       {"b2minus", s.b2minus},
                       {"sw_term_count", to_json(s.sw_term_count)},
                       {"simple_type", s.simple_type}});
      simple_type_everywhere = simple_type_everywhere && s.simple_type;
    }

    std::int64_t const n = o.n, k = o.k, m = o.m;

    // closed forms
    bool const closed_forms = X.chi == 20 * n - 12 * k + 4 && X.sigma == -12 * n + 12 * k;
    if (!closed_forms) {
      fail("chi/sigma disagree with 20n-12k+4 / -12n+12k");
    }
    if (!simple_type_everywhere) {
      fail("simple type failed at some step");
    }

    // survivors
    bool survivors_ok = o.survivors.size() == 2;
    if (survivors_ok) {
      bool has_plus = false, has_minus = false;
      for (auto const& [c, coeff] : o.survivors) {
        has_plus  = has_plus || c == o.alpha;
        has_minus = has_minus || c == -o.alpha;
      }
      survivors_ok = has_plus && has_minus;
    }
    if (!survivors_ok) {
      fail("surviving classes are not exactly +-" + o.alpha.to_string());
    }
    json survivors = json::array();
    for (auto const& [c, coeff] : o.survivors) {
      survivors.push_back({{"class", c.to_string()}, {"sw_abs", to_json(abs(coeff))}});
    }
    bool const leading_ok = o.leading_coefficient == Integer(m * m);
    if (!leading_ok) {
      fail("|SW(alpha)| = " + o.leading_coefficient.str() + ", expected m^2 = "
           + std::to_string(m * m));
    }

    // tautness
    bool taut_ok = true;
    for (auto const& t : o.taut) {
      taut_ok = taut_ok && t.taut && t.max_abs_u1 == o.p;
    }
    if (!taut_ok) {
      fail("configurations are not taut with max |alpha(u1)| = p");
    }

    // topology
    std::int64_t const  three_sigma_two_chi = 3 * X.sigma + 2 * X.chi;
    TopInvariants const cover    = simply_connected_invariants(X.chi, X.sigma);
    Rohlin const        rohlin   = rohlin_nonspin(X.sigma);
    TopInvariants const quotient = quotient_invariants(cover);
    TopInvariants const model    = model_invariants(2 * n, 8 * n - 6 * k);
    bool const          chi_sigma_match =
        quotient.chi == model.chi && quotient.sigma == model.sigma;
    if (!chi_sigma_match) {
      fail("quotient (chi, sigma) differs from the model");
    }
    json homeo = {{"quotient", invariants_json(quotient)},
                  {"model", invariants_json(model)},
                  {"model_summands", {{"CP2", 2 * n}, {"CP2bar", 8 * n - 6 * k}}},
                  {"chi_sigma_match", chi_sigma_match}};
    if (quotient.w2type == W2Type::undetermined) {
      homeo["equivalent"] = nullptr;
      r.warnings.push_back("4 | n-k: w2-type undetermined");
    } else {
      bool const eq       = homeo_equivalent(quotient, model);
      homeo["equivalent"] = eq;
      if (!eq) {
        fail("quotient is not homeomorphic to the model");
      }
    }

    bool const irreducible =
        !o.survivors.empty()
        && irreducibility_certificate(X.chi, X.sigma, o.survivors);
    if (!irreducible) {
      fail("irreducibility certificate failed");
    }
    if (three_sigma_two_chi != 4 * n + 12 * k + 8) {
      fail("3 sigma + 2 chi != 4n+12k+8");
    }

    // Members of one family differ only in m and carry |SW| = m^2.
    std::vector<int> members;
    for (int j = 1; j <= o.m; ++j) {
      members.push_back(j);
    }
    bool const distinct = leading_ok && sw_magnitudes_distinct(members);

    auto const [lens_p2, lens_q] = PlumbingConfig{o.p, {}, {}}.lens_space();
    json chains                  = json::array();
    for (auto const& c : o.chain_feasibility) {
      chains.push_back(
          {{"required", c.required}, {"available", c.available}, {"fits", c.fits}});
    }

    r.json["params"] = {{"n", n}, {"k", k}, {"m", m}};
    r.json["steps"]  = std::move(steps);
    r.json["final"]  = {{"chi", X.chi},
                        {"sigma", X.sigma},
                        {"b2plus", X.b2plus},
                        {"b2minus", X.b2minus},
                        {"p", o.p},
                        {"lens_space", {lens_p2, lens_q}},
                        {"alpha", o.alpha.to_string()},
                        {"sw_abs", to_json(o.leading_coefficient)},
                        {"survivors", std::move(survivors)},
                        {"three_sigma_plus_two_chi", three_sigma_two_chi},
                        {"cover", invariants_json(cover)},
                        {"quotient", invariants_json(quotient)},
                        {"chain_feasibility", std::move(chains)}};
    r.json["certificates"] = {
        {"taut", {{"pass", taut_ok}, {"s", taut_json(o.taut[0])}, {"iota_s", taut_json(o.taut[1])}}},
        {"homeomorphism_triple", std::move(homeo)},
        {"rohlin", to_string(rohlin)},
        {"w2type", to_string(quotient.w2type)},
        {"irreducibility", irreducible},
        {"distinctness_within_family", distinct},
        {"closed_forms", closed_forms},
        {"surviving_classes", survivors_ok},
        {"leading_coefficient", leading_ok},
        {"simple_type", simple_type_everywhere},
    };
    r.json["assumptions"] = {{"simply_connected_complement", X.complement_simply_connected}};
    r.json["warnings"]    = r.warnings;
    return r;
  }

  std::vector<SurveyPoint> run_survey(int                     n_max,
                                      std::vector<int> const& ms,
                                      int                     jobs,
                                      Bookkeeping const&      bk) {
    std::vector<SurveyPoint> points;
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 0; k <= budget_check(n, 0).k_max; ++k) {
        for (int m : ms) {
          points.push_back({n, k, m});
        }
      }
    }

    std::atomic<std::size_t> next{0};
    auto                     worker = [&] {
      for (std::size_t i = next++; i < points.size(); i = next++) {
        SurveyPoint& pt = points[i];
        try {
          ConstructionReport const r =
              build_report(full_construction(pt.n, pt.k, pt.m, bk));
          pt.passed   = r.passed();
          pt.failures = r.failures;
          auto const& f = r.json["final"];
          std::ostringstream s;
          s << "chi=" << f["chi"] << " sigma=" << f["sigma"] << " |SW|=" << f["sw_abs"]
            << " rohlin=" << r.json["certificates"]["rohlin"].get<std::string>()
            << " w2=" << r.json["certificates"]["w2type"].get<std::string>();
          pt.summary = s.str();
        } catch (std::exception const& e) {
          pt.passed = false;
          pt.failures.push_back(e.what());
        }
      }
    };
    std::size_t const threads =
        std::max<std::size_t>(1, std::min<std::size_t>(jobs, points.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    return points;
  }

}  // namespace exotica::cli
