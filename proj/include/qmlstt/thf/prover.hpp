#pragma once

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstring>
#include <sstream>
#include <string>

#include "qmlstt/errors.hpp"

namespace qmlstt::thf {

// Runs an external THF prover as a shell command and classifies its verdict
// from the SZS status line it prints.

enum class SzsStatus {
  Theorem,            // prover established the conjecture
  CounterSatisfiable, // prover found the conjecture refutable
  Unknown,            // prover ran but gave no verdict (gave up, resource out)
  Timeout,            // killed after exceeding the wall-clock budget
  ProcessFailure,     // command failed to run or exited nonzero without a verdict
  UnparsableOutput,   // command exited cleanly but printed no SZS status line
};

inline std::string to_string(SzsStatus s) {
  switch (s) {
    case SzsStatus::Theorem: return "Theorem";
    case SzsStatus::CounterSatisfiable: return "CounterSatisfiable";
    case SzsStatus::Unknown: return "Unknown";
    case SzsStatus::Timeout: return "Timeout";
    case SzsStatus::ProcessFailure: return "ProcessFailure";
    case SzsStatus::UnparsableOutput: return "UnparsableOutput";
  }
  return "?";
}

struct ProverResult {
  SzsStatus status = SzsStatus::ProcessFailure;
  std::string szs_line;  // the matched "SZS status ..." line, if any
  int exit_code = -1;    // -1 when the process was killed or never ran
  std::string output;    // combined stdout+stderr, capped
};

namespace detail {

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  out += "'";
  return out;
}

inline std::string substitute_file(const std::string& command,
                                   const std::string& path) {
  std::string out;
  std::size_t i = 0;
  bool replaced = false;
  while (i < command.size()) {
    if (command.compare(i, 6, "{file}") == 0) {
      out += shell_quote(path);
      i += 6;
      replaced = true;
    } else {
      out += command[i++];
    }
  }
  if (!replaced) out += " " + shell_quote(path);
  return out;
}

// Scans captured output for "SZS status <word>" and maps the word onto the
// coarse verdict classes used by callers.
inline bool classify_szs(const std::string& output, SzsStatus& status,
                         std::string& line_out) {
  std::istringstream in(output);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find("SZS status ");
    if (pos == std::string::npos) continue;
    std::size_t start = pos + std::strlen("SZS status ");
    std::size_t end = start;
    while (end < line.size() &&
           std::isalnum(static_cast<unsigned char>(line[end])))
      ++end;
    std::string word = line.substr(start, end - start);
    line_out = line;
    if (word == "Theorem" || word == "ContradictoryAxioms")
      status = SzsStatus::Theorem;
    else if (word == "CounterSatisfiable" || word == "Satisfiable")
      status = SzsStatus::CounterSatisfiable;
    else
      status = SzsStatus::Unknown;
    return true;
  }
  return false;
}

}  // namespace detail

// Substitutes {file} in `command` with the shell-quoted problem path (or
// appends the path when no placeholder is present), runs it under /bin/sh in
// its own process group, and captures combined stdout+stderr.  The process
// group is killed once `timeout_seconds` of wall time elapse.
inline ProverResult run_external_prover(const std::string& command,
                                        const std::string& problem_path,
                                        double timeout_seconds,
                                        std::size_t output_cap = 1 << 20) {
  ProverResult res;
  std::string cmd = detail::substitute_file(command, problem_path);

  int fds[2];
  if (pipe(fds) != 0) {
    res.output = std::string("pipe: ") + std::strerror(errno);
    return res;
  }
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    res.output = std::string("fork: ") + std::strerror(errno);
    return res;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);  // mirror the child's call; one of the two wins the race
  close(fds[1]);

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(timeout_seconds);
  bool timed_out = false;
  char buf[4096];
  for (;;) {
    auto now = std::chrono::steady_clock::now();
    int wait_ms = 50;  // post-kill: wait out the EOF without spinning
    if (now < deadline) {
      auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
      wait_ms = static_cast<int>(std::min<long long>(left.count(), 200));
    } else if (!timed_out) {
      kill(-pid, SIGKILL);
      timed_out = true;
      wait_ms = 0;
    }
    struct pollfd pfd = {fds[0], POLLIN, 0};
    int pr = poll(&pfd, 1, wait_ms);
    if (pr > 0) {
      ssize_t n = read(fds[0], buf, sizeof buf);
      if (n <= 0) break;  // EOF: every write end is closed
      if (res.output.size() < output_cap)
        res.output.append(buf,
                          static_cast<std::size_t>(std::min<ssize_t>(
                              n, static_cast<ssize_t>(output_cap - res.output.size()))));
    } else if (pr < 0 && errno != EINTR) {
      break;
    }
  }
  close(fds[0]);

  int wstatus = 0;
  waitpid(pid, &wstatus, 0);
  if (timed_out) {
    res.status = SzsStatus::Timeout;
    return res;
  }
  res.exit_code = WIFEXITED(wstatus) ? WEXITSTATUS(wstatus) : -1;

  if (detail::classify_szs(res.output, res.status, res.szs_line)) return res;
  res.status =
      res.exit_code == 0 ? SzsStatus::UnparsableOutput : SzsStatus::ProcessFailure;
  return res;
}

}  // namespace qmlstt::thf
