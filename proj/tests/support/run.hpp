#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace tempora::testing {

struct RunResult {
  int code = -1;
  std::string out;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with `args`; stderr is discarded, `prefix` goes before the
// command (environment assignments, a pipe from echo, ...).
inline RunResult run_cli(const std::vector<std::string>& args, const std::string& prefix = "") {
  std::string cmd = prefix + shell_quote(TEMPORA_CLI);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline const std::vector<std::string>& fig1_args() {
  static const std::vector<std::string> a{"generate", "--initial", "(0,1) (x) (0,1/2)", "--gen",
                                          "braid ; (1,1) (x) (1/2,1)", "--steps", "6", "--variance", "cov",
                                          "--out", "json"};
  return a;
}

inline const std::vector<std::string>& fig5_args() {
  static const std::vector<std::string> a{"generate", "--initial", "(0,1/2) (x) (1/2,1/4) ; box", "--gen",
                                          "(3/4,2)", "--steps", "3", "--variance", "cov", "--out", "json"};
  return a;
}

}  // namespace tempora::testing
