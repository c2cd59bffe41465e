#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "robin/detect.hpp"
#include "robin/errors.hpp"
#include "robin/graph_io.hpp"

namespace robin {

namespace {

struct Pipe {
    int read_fd = -1;
    int write_fd = -1;

    Pipe() {
        int fds[2];
        if (pipe(fds) != 0) throw Error("pipe() failed");
        read_fd = fds[0];
        write_fd = fds[1];
    }

    ~Pipe() {
        close_read();
        close_write();
    }

    void close_read() {
        if (read_fd >= 0) {
            ::close(read_fd);
            read_fd = -1;
        }
    }
    void close_write() {
        if (write_fd >= 0) {
            ::close(write_fd);
            write_fd = -1;
        }
    }
};

void ignore_sigpipe_once() {
    static const bool installed = [] {
        ::signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)installed;
}

// Writes everything, tolerating EPIPE: a child may close stdin early (e.g. it
// only needs the header) and still produce valid output.
void write_all(int fd, const std::string& data) {
    std::size_t off = 0;
    while (off < data.size()) {
        const ssize_t rc = ::write(fd, data.data() + off, data.size() - off);
        if (rc < 0) {
            if (errno == EINTR) continue;
            return;  // EPIPE or similar: stop writing, let the exit code decide
        }
        off += static_cast<std::size_t>(rc);
    }
}

[[noreturn]] void child_exec(const std::vector<std::string>& argv_strings, Pipe& in,
                             Pipe& out, Pipe& err) {
    ::dup2(in.read_fd, STDIN_FILENO);
    ::dup2(out.write_fd, STDOUT_FILENO);
    ::dup2(err.write_fd, STDERR_FILENO);
    in.close_read();
    in.close_write();
    out.close_read();
    out.close_write();
    err.close_read();
    err.close_write();

    std::vector<char*> argv;
    argv.reserve(argv_strings.size() + 1);
    for (const std::string& s : argv_strings) argv.push_back(const_cast<char*>(s.c_str()));
    argv.push_back(nullptr);
    ::execvp(argv[0], argv.data());
    const std::string msg = "exec failed: " + std::string(strerror(errno)) + "\n";
    (void)!::write(STDERR_FILENO, msg.data(), msg.size());
    ::_exit(127);
}

struct ChildResult {
    std::string out;
    std::string err;
    int exit_code = -1;
    bool timed_out = false;
};

ChildResult run_child(const std::vector<std::string>& argv, const std::string& input,
                      double timeout_seconds) {
    ignore_sigpipe_once();
    Pipe in, out, err;

    const pid_t pid = ::fork();
    if (pid < 0) throw Error("fork() failed");
    if (pid == 0) child_exec(argv, in, out, err);

    in.close_read();
    out.close_write();
    err.close_write();

    std::thread writer([&in, &input] {
        write_all(in.write_fd, input);
        in.close_write();
    });

    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000.0));

    ChildResult result;
    char buffer[4096];
    bool out_open = true, err_open = true;
    while (out_open || err_open) {
        struct pollfd fds[2];
        nfds_t nfds = 0;
        if (out_open) fds[nfds++] = {out.read_fd, POLLIN, 0};
        if (err_open) fds[nfds++] = {err.read_fd, POLLIN, 0};

        const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - std::chrono::steady_clock::now());
        if (remaining.count() <= 0) {
            result.timed_out = true;
            break;
        }
        const int rc = ::poll(fds, nfds, static_cast<int>(remaining.count()) + 1);
        if (rc < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (rc == 0) {
            result.timed_out = true;
            break;
        }
        for (nfds_t i = 0; i < nfds; ++i) {
            if (!(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
            const bool is_out = fds[i].fd == out.read_fd;
            const ssize_t n = ::read(fds[i].fd, buffer, sizeof buffer);
            if (n > 0) {
                (is_out ? result.out : result.err).append(buffer, static_cast<std::size_t>(n));
            } else if (n == 0 || (n < 0 && errno != EINTR)) {
                if (is_out) {
                    out_open = false;
                } else {
                    err_open = false;
                }
            }
        }
    }

    if (result.timed_out) {
        ::kill(pid, SIGKILL);
    }

    // Streams closed (or timeout): reap with the remaining deadline as a guard.
    int status = 0;
    while (true) {
        const pid_t done = ::waitpid(pid, &status, WNOHANG);
        if (done == pid) break;
        if (done < 0 && errno != EINTR) break;
        if (std::chrono::steady_clock::now() > deadline + std::chrono::seconds(5)) {
            ::kill(pid, SIGKILL);
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    writer.join();

    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.exit_code = 128 + WTERMSIG(status);
    }
    return result;
}

}  // namespace

Membership run_external_detector(const Graph& g, const std::vector<std::string>& command,
                                 RngSeed seed, double timeout_seconds) {
    if (command.empty()) {
        throw std::invalid_argument("external detector requires a command");
    }
    std::vector<std::string> argv = command;
    argv.push_back(std::to_string(seed.value));

    const ChildResult child = run_child(argv, write_edgelist(g), timeout_seconds);
    const std::string detector = command.front();
    if (child.timed_out) {
        throw DetectorError("external detector '" + detector + "' timed out", child.err);
    }
    if (child.exit_code != 0) {
        throw DetectorError("external detector '" + detector + "' exited with code " +
                                std::to_string(child.exit_code),
                            child.err);
    }

    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(g.node_count()));
    const char* p = child.out.data();
    const char* end = p + child.out.size();
    while (p < end) {
        while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
        if (p >= end) break;
        int value = 0;
        const auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc()) {
            throw DetectorError("external detector '" + detector +
                                    "' produced a non-integer token",
                                child.err);
        }
        labels.push_back(value);
        p = next;
    }
    if (static_cast<int>(labels.size()) != g.node_count()) {
        throw DetectorError("external detector '" + detector + "' produced " +
                                std::to_string(labels.size()) + " labels for " +
                                std::to_string(g.node_count()) + " nodes",
                            child.err);
    }
    return Membership(labels);
}

}  // namespace robin
