#pragma once

#include <string>
#include <vector>

namespace henonseq::cli {

enum ExitCode : int {
    kSuccess = 0,
    kBatteryFail = 1,
    kUsage = 2,
    kRuntime = 3,
};

/// Entry point of the henonseq tool. args[0] is the program name.
int run(const std::vector<std::string>& args);

}  // namespace henonseq::cli
