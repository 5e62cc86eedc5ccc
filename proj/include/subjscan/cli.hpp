#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subjscan {

// Exit codes of the subjscan tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMissingInput = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitConfig = 4;

// Environment variable naming the default corpus root.
inline constexpr const char* kCorpusEnv = "SUBJSCAN_CORPUS";

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subjscan
