#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistrep/reconstruct.hpp"

namespace twistrep {

enum class SampleStrategy { Grid, Random };

/// Parses "grid" / "random". Throws DomainError otherwise.
SampleStrategy sample_strategy_from_name(std::string_view name);
std::string_view to_string(SampleStrategy s);

struct SampleOptions {
  int k = 1;
  SampleStrategy strategy = SampleStrategy::Random;
  int n = 50;  // number of λ1 slices
  std::uint64_t seed = 1;
  double r_min = 0.5;
  double r_max = 2.0;
  unsigned threads = 0;  // 0: hardware concurrency
  ReconstructOptions recon;
};

/// A representation tagged with its branch and sheet index at the point.
struct TaggedRepresentation {
  Representation rep;
  int branch = 0;
  int sheet = 0;
};

/// One curve point found on a λ1-slice.
struct SamplePoint {
  int slice = 0;
  LambdaTriple lambda{};
  std::vector<TaggedRepresentation> representations;  // accepted only
  ResidualMap residuals;  // worst value over the accepted sheets, plus point diagnostics
  bool accepted = false;
  std::optional<std::string> reject_reason;
};

struct SampleRun {
  SampleOptions options;
  std::vector<SamplePoint> points;

  [[nodiscard]] std::size_t accepted_count() const;
};

/// λ1 values drawn for the run (annulus r_min ≤ |λ1| ≤ r_max).
std::vector<Complex> slice_values(const SampleOptions& opts);

/// Samples the curve slice by slice and reconstructs at every root.
/// Throws DomainError if n < 1 or k < 1. Output depends only on the options,
/// not on the thread count.
SampleRun sample_curve(const SampleOptions& opts);

/// Thread count from TWISTREP_THREADS, or `fallback` when unset or invalid.
unsigned threads_from_env(unsigned fallback = 0);

}  // namespace twistrep
