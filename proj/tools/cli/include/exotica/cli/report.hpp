#pragma once

#include "exotica/surgery.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace exotica::cli {

  // Process exit codes.
  inline constexpr int exit_verified = 0;
  inline constexpr int exit_failure  = 1;
  inline constexpr int exit_usage    = 2;

  struct ConstructionReport {
    nlohmann::json           json;  // params, steps, final, certificates, ...
    std::vector<std::string> failures;
    std::vector<std::string> warnings;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  // Evaluates every certificate on a finished construction.
  ConstructionReport build_report(ConstructionOutcome const& o);

  // Integers that fit in 64 bits become JSON numbers, others strings.
  nlohmann::json to_json(Integer const& v);

  struct SurveyPoint {
    int                      n, k, m;
    bool                     passed = false;
    std::string              summary;
    std::vector<std::string> failures;
  };

  // Every admissible (n, k) with n <= n_max, for each m, in (n, k, m) order
  // whatever the number of worker threads.
  std::vector<SurveyPoint> run_survey(int                     n_max,
                                      std::vector<int> const& ms,
                                      int                     jobs,
                                      Bookkeeping const&      bk = {});

}  // namespace exotica::cli
