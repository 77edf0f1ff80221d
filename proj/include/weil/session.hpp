#pragma once

#include <cstdint>
#include <string>

#include "weil/lie.hpp"

namespace weil {

enum class Context { Classical, Quantum };

/// One (algebra, representation, context) selection plus output options.
struct SessionConfig {
  std::string builtin;  // builtin name, or empty when `file` is used
  std::string file;
  std::string rep = "adjoint";
  Context context = Context::Classical;
  unsigned max_degree = 2;
  bool json = false;
  std::uint64_t seed = 1;
};

/// Exit statuses shared by the library and the CLI.
enum Status : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct CommandResult {
  int status = kOk;
  std::string output;
};

/// Builtin or file, per cfg. Throws ValidationFailure for invalid structure
/// constants and Error for anything else.
AlgebraBundle open_bundle(const SessionConfig& cfg);

CommandResult cmd_validate(const AlgebraBundle& b, const SessionConfig& cfg);
CommandResult cmd_check(const AlgebraBundle& b, const SessionConfig& cfg);
CommandResult cmd_eval(const AlgebraBundle& b, const SessionConfig& cfg,
                       const std::string& expression);
CommandResult cmd_flat(const AlgebraBundle& b, const SessionConfig& cfg);
/// check + flat over every builtin, representation and available context.
CommandResult cmd_report(const SessionConfig& cfg);

}  // namespace weil
