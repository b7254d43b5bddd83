#include "twistrep/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "twistrep/errors.hpp"
#include "twistrep/univariate.hpp"

namespace twistrep {

SampleStrategy sample_strategy_from_name(std::string_view name) {
  if (name == "grid") return SampleStrategy::Grid;
  if (name == "random") return SampleStrategy::Random;
  throw DomainError("unknown sample strategy: " + std::string(name));
}

std::string_view to_string(SampleStrategy s) { return s == SampleStrategy::Grid ? "grid" : "random"; }

std::size_t SampleRun::accepted_count() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const SamplePoint& p) { return p.accepted; }));
}

std::vector<Complex> slice_values(const SampleOptions& opts) {
  if (opts.n < 1) throw DomainError("sample: n must be >= 1");
  if (!(opts.r_min > 0.0 && opts.r_min <= opts.r_max)) throw DomainError("sample: need 0 < r_min <= r_max");
  const double lo = std::log(opts.r_min), hi = std::log(opts.r_max);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(opts.n));
  if (opts.strategy == SampleStrategy::Random) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> radius(lo, hi);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < opts.n; ++i) {
      const double r = std::exp(radius(rng));
      out.push_back(std::polar(r, angle(rng)));
    }
  } else {
    // Golden-angle spiral across the annulus, offset so no slice sits on the real axis.
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < opts.n; ++i) {
      const double f = (i + 0.5) / opts.n;
      out.push_back(std::polar(std::exp(lo + f * (hi - lo)), 0.1 + golden * i));
    }
  }
  return out;
}

unsigned threads_from_env(unsigned fallback) {
  const char* env = std::getenv("TWISTREP_THREADS");
  if (env == nullptr) return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return fallback;
  return static_cast<unsigned>(v);
}

namespace {

std::vector<SamplePoint> sample_slice(const Reconstructor& recon, const CurveSpec& spec, int slice, Complex l1,
                                      const SampleOptions& opts) {
  std::vector<SamplePoint> out;
  UniPoly p;
  try {
    p = restrict_curve(spec, l1);
  } catch (const DegenerateSlice&) {
    return out;
  }
  if (p.degree() < 1) return out;

  for (const Complex l2 : roots(p)) {
    SamplePoint pt;
    pt.slice = slice;
    pt.lambda = {l1, l2, Complex(0.0)};
    if (std::abs(l2) <= 1e-12) {
      pt.reject_reason = "zero eigenvalue";
      out.push_back(std::move(pt));
      continue;
    }
    const EigenTriple e = EigenTriple::from_pair(l1, l2, opts.k);
    pt.lambda = e.lambda;
    pt.residuals["curve"] = curve_residual(spec, l1, l2);
    if (is_excluded(e.lambda, opts.k, opts.recon.tol.exclusion)) {
      pt.reject_reason = "excluded";
      out.push_back(std::move(pt));
      continue;
    }
    const ReconstructionResult r = recon(e, opts.recon);
    for (const auto& [name, v] : r.diagnostics) pt.residuals[name] = v;
    pt.accepted = r.accepted;
    pt.reject_reason = r.reject_reason;
    for (std::size_t b = 0; b < r.branches.size(); ++b) {
      const Branch& br = r.branches[b];
      if (!br.accepted) continue;
      for (std::size_t s = 0; s < br.sheets.size(); ++s) {
        pt.representations.push_back({br.sheets[s].rep, static_cast<int>(b), static_cast<int>(s)});
        for (const auto& [name, v] : br.sheets[s].state.residuals) {
          auto [it, inserted] = pt.residuals.emplace(name, v);
          if (!inserted) it->second = std::max(it->second, v);
        }
      }
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace

SampleRun sample_curve(const SampleOptions& opts) {
  if (opts.k < 1) throw DomainError("sample: k must be >= 1");
  const std::vector<Complex> l1s = slice_values(opts);
  const Reconstructor recon(opts.k);
  const CurveSpec spec = curve_polynomial(recon.system());

  std::vector<std::vector<SamplePoint>> per_slice(l1s.size());
  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(l1s.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(l1s.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < l1s.size(); i = next++) {
      try {
        per_slice[i] = sample_slice(recon, spec, static_cast<int>(i), l1s[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SampleRun run;
  run.options = opts;
  for (auto& v : per_slice)
    for (auto& p : v) run.points.push_back(std::move(p));
  return run;
}

}  // namespace twistrep
