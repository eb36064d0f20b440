#pragma once

#include "json_io.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cmvar::cli {

enum class Status { Ok, InputError, DomainError, SolverIncomplete };

int exit_code(Status s);

struct CommandResult {
  Status status = Status::Ok;
  Json payload;
  std::vector<std::string> diagnostics;
  // Set when --help was requested; payload is null then.
  std::string help;
};

/// args excludes the program name. stdin_text is consulted only when a
/// subcommand needs input and --in was not given.
CommandResult run(const std::vector<std::string>& args,
                  const std::optional<std::string>& stdin_text);

/// Same, but stdin is read lazily through the callback.
using InputSource = std::function<std::optional<std::string>()>;
CommandResult run(const std::vector<std::string>& args, const InputSource& read_stdin);

}  // namespace cmvar::cli
