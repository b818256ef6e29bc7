#include "iacbench/common/subprocess.hpp"

#include <csignal>
#include <cstdlib>
#include <cstring>
#include <thread>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include "iacbench/common/errors.hpp"

namespace iacbench::proc {

RunResult run_command(const std::vector<std::string>& argv,
                      const std::filesystem::path& working_dir,
                      std::chrono::milliseconds timeout) {
    if (argv.empty()) throw IoError("run_command: empty argv");

    int pipefd[2];
    if (pipe(pipefd) != 0) throw IoError("run_command: pipe() failed");

    pid_t pid = fork();
    if (pid < 0) {
        close(pipefd[0]);
        close(pipefd[1]);
        throw IoError("run_command: fork() failed");
    }

    if (pid == 0) {
        // child
        close(pipefd[0]);
        dup2(pipefd[1], STDOUT_FILENO);
        dup2(pipefd[1], STDERR_FILENO);
        close(pipefd[1]);
        if (!working_dir.empty()) {
            if (chdir(working_dir.c_str()) != 0) _exit(127);
        }
        std::vector<char*> cargv;
        cargv.reserve(argv.size() + 1);
        for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
        cargv.push_back(nullptr);
        execvp(cargv[0], cargv.data());
        _exit(127);
    }

    // parent
    close(pipefd[1]);
    int flags = fcntl(pipefd[0], F_GETFL, 0);
    fcntl(pipefd[0], F_SETFL, flags | O_NONBLOCK);

    RunResult result;
    auto deadline = std::chrono::steady_clock::now() + timeout;
    bool use_timeout = timeout.count() > 0;
    bool child_done = false;
    int status = 0;

    char buf[4096];
    while (true) {
        ssize_t n;
        while ((n = read(pipefd[0], buf, sizeof(buf))) > 0) {
            result.output.append(buf, static_cast<std::size_t>(n));
        }
        if (n == 0) {
            // writer closed; reap and stop
            waitpid(pid, &status, 0);
            child_done = true;
            break;
        }
        pid_t w = waitpid(pid, &status, WNOHANG);
        if (w == pid) {
            child_done = true;
            // drain what is left
            while ((n = read(pipefd[0], buf, sizeof(buf))) > 0) {
                result.output.append(buf, static_cast<std::size_t>(n));
            }
            break;
        }
        if (use_timeout && std::chrono::steady_clock::now() >= deadline) {
            kill(pid, SIGKILL);
            waitpid(pid, &status, 0);
            result.timed_out = true;
            child_done = true;
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    close(pipefd[0]);

    if (child_done && !result.timed_out) {
        if (WIFEXITED(status)) {
            result.exit_code = WEXITSTATUS(status);
        } else if (WIFSIGNALED(status)) {
            result.exit_code = 128 + WTERMSIG(status);
        }
    }
    return result;
}

bool command_exists(const std::string& binary) {
    if (binary.empty()) return false;
    if (binary.find('/') != std::string::npos) {
        return access(binary.c_str(), X_OK) == 0;
    }
    const char* path_env = std::getenv("PATH");
    if (!path_env) return false;
    std::string paths(path_env);
    std::size_t pos = 0;
    while (pos <= paths.size()) {
        std::size_t next = paths.find(':', pos);
        std::string dir = paths.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (!dir.empty()) {
            std::string candidate = dir + "/" + binary;
            if (access(candidate.c_str(), X_OK) == 0) return true;
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return false;
}

} // namespace iacbench::proc
