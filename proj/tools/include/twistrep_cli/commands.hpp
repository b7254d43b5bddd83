#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "twistrep/reconstruct.hpp"
#include "twistrep/sampler.hpp"

namespace twistrep::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct RunConfig {
  int k = 1;
  Tolerances tol;
  SampleStrategy strategy = SampleStrategy::Random;
  int n = 50;
  std::uint64_t seed = 1;
  std::string out;  // empty: stdout
  bool allow_empty = false;
  bool check_only = false;
  unsigned threads = 0;

  /// Empty when valid, otherwise the first problem found.
  [[nodiscard]] std::string validate() const;
};

/// JSON goes to `out` (or the --out file); reports and errors go to `log`.
int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_rep(const RunConfig& cfg, Complex lambda1, Complex lambda2, bool off_curve, std::ostream& out,
            std::ostream& log);
/// Accepts a single representation object or a sample-run array.
int cmd_verify(const RunConfig& cfg, const std::string& path, std::ostream& out, std::ostream& log);

/// Parses "re,im" or "re". Throws DomainError.
Complex parse_complex(const std::string& text);

}  // namespace twistrep::cli
