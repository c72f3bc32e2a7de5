#pragma once

#include <string>
#include <vector>

namespace tlg {

struct CliResult {
  int code = 0;     // 0 ran, 2 input error, 3 consistency failure
  std::string out;  // report text (empty when written to --output)
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConsistency = 3;

/// Runs `tlg <command> ...`; args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

struct CommandOptions {
  std::string alpha_prime;  // comma separated, as for --alpha-prime
  std::string section;      // generic, angular or a path
  bool numeric = false;
  long bound = -1;
};

/// One command applied to model-file text. Returns compact report JSON (SVG
/// for plot) and throws the library errors instead of mapping them to codes.
std::string run_command(const std::string& command, const std::string& model_text,
                        const CommandOptions& options = {});

}  // namespace tlg
