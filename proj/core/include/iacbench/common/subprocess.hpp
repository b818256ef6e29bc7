#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

namespace iacbench::proc {

struct RunResult {
    int exit_code = -1;
    bool timed_out = false;
    std::string output; // stdout and stderr combined
};

// Runs argv[0] with the given arguments, capturing combined output.
// A non-positive timeout means no limit. The child is killed on timeout.
RunResult run_command(const std::vector<std::string>& argv,
                      const std::filesystem::path& working_dir,
                      std::chrono::milliseconds timeout = std::chrono::milliseconds(0));

bool command_exists(const std::string& binary);

} // namespace iacbench::proc
