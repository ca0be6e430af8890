#pragma once

#include <string>
#include <vector>

namespace adelic::cli {

// Exit codes: 0 ok, 2 contract violation (incl. parse/usage errors),
// 3 instability / precision refusal.
struct CommandResult {
  int exit_code = 0;
  std::string status;  // "ok" | "contract-violation" | "instability"
  std::string payload_json;
  std::string text;  // human-readable summary
  long ms = 0;
};

CommandResult run(const std::vector<std::string>& args);

}  // namespace adelic::cli
