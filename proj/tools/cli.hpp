#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace nplab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUnknown = 2,  ///< a budget ran out before a verdict was reached
  kExitIo = 3,       ///< unreadable input or a parse error
};

/// A validated invocation: subcommand path, positional arguments and the
/// options that were given explicitly.
struct Command {
  std::vector<std::string> path;  ///< e.g. {"family", "gp"}
  std::vector<std::string> positionals;
  std::map<std::string, std::string> options;  ///< long name -> value
  std::set<std::string> flags;

  bool has(const std::string& name) const { return options.count(name) > 0; }
  bool flag(const std::string& name) const { return flags.count(name) > 0; }

  /// Argument string that parses back to an equal Command. Options and flags
  /// appear in name order; values with spaces or quotes are single-quoted.
  std::string canonical() const;

  friend bool operator==(const Command&, const Command&) = default;
};

/// Thrown for invalid command lines; `what()` holds the message and
/// `help()` any usage text that was requested or should be shown.
class UsageError : public std::exception {
 public:
  UsageError(std::string message, std::string help, int code)
      : message_(std::move(message)), help_(std::move(help)), code_(code) {}
  const char* what() const noexcept override { return message_.c_str(); }
  const std::string& help() const noexcept { return help_; }
  /// 0 when help was requested explicitly.
  int code() const noexcept { return code_; }

 private:
  std::string message_;
  std::string help_;
  int code_;
};

/// Parses arguments (without the program name).
Command parse_command(std::span<const std::string> args);

/// Splits a canonical string back into arguments.
std::vector<std::string> split_arguments(const std::string& text);

/// Executes a parsed command.
int execute(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_command + execute, mapping errors to exit codes.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nplab::cli
