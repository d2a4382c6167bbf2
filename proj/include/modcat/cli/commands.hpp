#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace modcat::cli {

enum class ExitCode : int { ok = 0, failure = 1, usage = 2 };

struct RunConfig {
  std::string command;
  std::string algebra = "sl3";
  int level = 0;
  bool json = false;
  std::optional<std::filesystem::path> output;
  int verbosity = 0;
  // wzw sections; none selected means dims and twists.
  bool dims = false, twists = false, fusion = false, s_matrix = false;
  // condense
  bool check = false;
  // verify-paper
  std::optional<std::filesystem::path> data_dir;
};

/// Parses argv and runs the selected subcommand. Normal output goes to
/// `out` (or the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace modcat::cli
