#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace asym::cli
{

enum class OutputFormat
{
  text,
  json // one JSON object per line
};

/// One parsed invocation. Exactly one input source: expression text(s) or a
/// truth-table file.
struct CommandRequest
{
  std::string subcommand;
  std::vector<std::string> expressions;
  std::optional<std::string> table_file;
  std::optional<std::vector<std::string>> vars;
  OutputFormat format = OutputFormat::text;
  std::string form;   // canon, minimize
  std::string to;     // convert
  std::string target; // compile, simulate
  std::string inputs; // simulate: one bit per input, binding order
  bool cover = false; // minimize: print the cube cover
};

struct CommandResult
{
  int exit_code = 0; // 0 ok, 1 refuted/inequivalent/unsupported, 2 usage or input error, 3 internal
  std::string out;
  std::string err;
};

/// Either a request or the finished result of --help / a usage error.
std::variant<CommandRequest, CommandResult> parse_command_line( const std::vector<std::string>& args );

CommandResult run( const CommandRequest& request );

/// Parses and runs; `args` excludes the program name.
CommandResult main_entry( const std::vector<std::string>& args );

} // namespace asym::cli
