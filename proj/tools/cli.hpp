#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hilbert/report.hpp"

namespace hilbert::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBoundViolation = 2,
  kNonConvergence = 3,
};

struct RunConfig {
  std::string command;
  int m = 0;
  std::vector<int> orders;           // bench grid
  std::vector<std::size_t> dims;
  double tol = 1e-10;
  int max_iter = 10'000;
  std::size_t truncation = 100'000;
  int trials = 200;
  std::uint64_t seed = 1;
  report::Format format = report::Format::json;
  std::string out_path;
  // command-specific
  bool eigvec = false;
  bool search = false;
  bool timing = true;
  std::string op = "both";
  double p = 0.0;  // 0 = canonical exponent per operator
  std::string x_spec = "e1";
  std::size_t support = 8;
  int climb_steps = 200;
};

// "a..b", "a,b,c" or "a"; throws std::invalid_argument.
std::vector<std::size_t> parse_dims(const std::string& text);

// Entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbert::cli
