#include <doctest.h>

#include <cstdlib>

#include "twistrep/errors.hpp"
#include "twistrep/json_io.hpp"
#include "twistrep/sampler.hpp"

using namespace twistrep;

TEST_CASE("strategy names") {
  CHECK(sample_strategy_from_name("grid") == SampleStrategy::Grid);
  CHECK(sample_strategy_from_name("random") == SampleStrategy::Random);
  CHECK(to_string(SampleStrategy::Grid) == "grid");
  CHECK_THROWS_AS((void)sample_strategy_from_name("sobol"), DomainError);
}

TEST_CASE("slice values stay in the annulus") {
  for (SampleStrategy s : {SampleStrategy::Grid, SampleStrategy::Random}) {
    SampleOptions o;
    o.strategy = s;
    o.n = 200;
    const auto v = slice_values(o);
    CHECK(v.size() == 200);
    for (Complex z : v) {
      CHECK(std::abs(z) >= 0.5 - 1e-12);
      CHECK(std::abs(z) <= 2.0 + 1e-12);
    }
  }
}

TEST_CASE("preconditions") {
  SampleOptions o;
  o.n = 0;
  CHECK_THROWS_AS((void)sample_curve(o), DomainError);
  o.n = 1;
  o.k = 0;
  CHECK_THROWS_AS((void)sample_curve(o), DomainError);
}

TEST_CASE("output is independent of the thread count and seeded") {
  SampleOptions o;
  o.n = 6;
  o.seed = 99;
  o.threads = 1;
  const std::string a = json::sample_run_to_json(sample_curve(o)).dump();
  o.threads = 4;
  const std::string b = json::sample_run_to_json(sample_curve(o)).dump();
  CHECK(a == b);
  o.seed = 100;
  CHECK(json::sample_run_to_json(sample_curve(o)).dump() != a);
}

TEST_CASE("accepted points carry tagged sheets and curve residuals") {
  SampleOptions o;
  o.n = 4;
  o.strategy = SampleStrategy::Grid;
  const SampleRun run = sample_curve(o);
  CHECK(run.accepted_count() >= 1);
  int last_slice = 0;
  for (const SamplePoint& p : run.points) {
    CHECK(p.slice >= last_slice);
    last_slice = p.slice;
    if (!p.accepted) {
      CHECK(p.representations.empty());
      CHECK(p.reject_reason.has_value());
      continue;
    }
    CHECK(!p.reject_reason.has_value());
    CHECK(p.representations.size() % 3 == 0);
    CHECK(p.residuals.at("curve") <= 1e-8);
    for (const auto& t : p.representations) {
      CHECK(t.sheet >= 0);
      CHECK(t.sheet < 3);
    }
  }
}

TEST_CASE("TWISTREP_THREADS") {
  ::setenv("TWISTREP_THREADS", "3", 1);
  CHECK(threads_from_env(7) == 3);
  ::setenv("TWISTREP_THREADS", "zero", 1);
  CHECK(threads_from_env(7) == 7);
  ::unsetenv("TWISTREP_THREADS");
  CHECK(threads_from_env(5) == 5);
}
