#ifndef THEATERPERM_TESTS_CLI_RUNNER_HPP
#define THEATERPERM_TESTS_CLI_RUNNER_HPP

// Spawns the CLI binary and captures stdout + exit code. Used by the
// transcript tests and the acceptance suite; test-only code.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

struct CliResult {
    std::string out;
    int exit_code = -1;
};

inline CliResult run_cli(const std::string& cli_path, const std::string& args,
                         bool merge_stderr = false) {
    const std::string cmd =
        "'" + cli_path + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult result;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

#endif  // THEATERPERM_TESTS_CLI_RUNNER_HPP
