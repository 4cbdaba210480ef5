#pragma once

// Command-line front end. Parsing produces a CommandConfig with every flag
// validated; running it performs the computation and writes the output.
//
// Exit codes: 0 success, 1 law failure or invalid algebra, 2 usage or
// expression error, 3 unreadable or malformed file.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "symtan/algebra.hpp"
#include "symtan/lawcheck.hpp"

namespace symtan {

enum class Subcommand { check, diff, lambda, tangent, weil, algebra_validate };
enum class OutputFormat { text, json };

struct CommandConfig {
  Subcommand subcommand = Subcommand::check;
  std::string semiring = "nat";
  std::vector<std::string> vars;
  GeneratorConfig generator;  // check only; carries max-degree and seed
  std::string suite = "*";
  bool list = false;
  OutputFormat format = OutputFormat::text;
  std::string input;
  std::string output;
  WeilKind weil_kind = WeilKind::T;
  std::string expression;                // diff, lambda
  std::vector<std::string> assignments;  // tangent: name=expr
  std::string point;
  std::string tangent;
};

/// `code` is the exit status to use.
struct CommandError {
  int code;
  std::string message;
};

/// Parses argv without the program name. A help request yields the help text;
/// usage errors throw CommandError.
std::variant<CommandConfig, std::string> parse_command(const std::vector<std::string>& args);

int run_command(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// parse_command followed by run_command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symtan
