#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "bsw/cli/session.hpp"
#include "bsw/resolution/strata.hpp"
#include "json.hpp"

namespace bsw::cli {

inline constexpr const char* kToolName = "bsw";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kBudgetEnv = "BSW_BUDGET";

struct RunOptions {
  std::size_t budget = groebner::Budget{}.max_steps;
  std::uint64_t seed = 0;
  std::string session_name;
  /// Filled into the report as is; the only field allowed to differ between runs.
  std::string timestamp;
};

/// Executes commands in order against one session, reusing resolutions and
/// strata of earlier commands.  Errors raised by a command become failure
/// blocks; the runner never throws for them.
class Runner {
 public:
  Runner(const Session& session, RunOptions options);

  nlohmann::ordered_json run(const Command& command);

 private:
  const Session& session_;
  RunOptions options_;
  std::map<std::string, std::shared_ptr<resolution::FreeComplex>> complexes_;
  std::map<std::string, std::shared_ptr<resolution::StrataReport>> strata_;

  const groebner::Ideal& ideal(const std::string& name) const;
  const resolution::FreeComplex& complex_of(const std::string& name);
  const resolution::StrataReport& strata_of(const std::string& name);
  nlohmann::ordered_json dispatch(const Command& c, nlohmann::ordered_json& inputs);
  nlohmann::ordered_json loja(const Command& c, nlohmann::ordered_json& inputs);
};

nlohmann::ordered_json run_session(const Session& session, const RunOptions& options);

/// One line per block, built only from the JSON block.
std::string block_summary(const nlohmann::ordered_json& block);
std::string human_summary(const nlohmann::ordered_json& report);

/// 0 when every block succeeded, 3 if any block ran out of budget, else 2.
int exit_code(const nlohmann::ordered_json& report);

/// Budget from BSW_BUDGET, or the library default.  ValidationError when the
/// variable is set but not a positive integer.
std::size_t default_budget();

}  // namespace bsw::cli
