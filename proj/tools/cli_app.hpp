#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "raboter/oeis_client.hpp"
#include "raboter/oracle.hpp"

namespace rabot {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitEngineDisagreement = 3,
  kExitFitFailure = 4,
};

/// Everything the commands take from the outside world.
struct CliEnvironment {
  std::uint64_t enumeration_cap = raboter::kDefaultEnumerationCap;
  unsigned partitions = 1;
  raboter::oeis::Transport oeis_transport;
  /// The recurrence-side engine used by `sum` and `check`; replaceable so
  /// tests can exercise the disagreement path.
  std::function<raboter::Natural(const raboter::MomentQuery&)> recurrence_engine;

  /// Cap from RABOT_ENUM_CAP when set, the live OEIS endpoint, one partition
  /// per hardware thread.
  static CliEnvironment from_process();
};

/// Moment lookup through a freshly built recurrence table.
raboter::Natural recurrence_moment(const raboter::MomentQuery& query);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, CliEnvironment env);

}  // namespace rabot
