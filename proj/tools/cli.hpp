#pragma once

// Command implementations behind the soft7 executable. Every command
// returns its exit code and fully buffered output instead of printing.

#include <cstdint>
#include <string>
#include <vector>

namespace soft7::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct Outcome {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

Outcome cmd_torsion(const std::string& point, const std::string& sign, const std::string& route,
                    const std::string& model, const std::string& format);

Outcome cmd_verify(std::uint64_t seed, const std::string& model, long long points, const std::string& format);

Outcome cmd_generators(const std::string& family, const std::string& model, const std::string& sign,
                       const std::string& format);

/// lambda defaults to point when empty.
Outcome cmd_soft(const std::string& point, const std::string& lambda, const std::string& sign_pair,
                 const std::string& model, const std::string& format);

/// Parses argv (without the program name) and dispatches.
Outcome run(const std::vector<std::string>& args);

}  // namespace soft7::cli
