#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twistrep/errors.hpp"
#include "twistrep_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace twistrep;
  CLI::App app{"twistrep: SL(3, C) representations of twist knot groups"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  cfg.threads = threads_from_env(0);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-k", cfg.k, "Twist parameter (knot T_2k)")->default_val(1);
    sub->add_option("--tol-relation", cfg.tol.relation, "Relation residual tolerance");
    sub->add_option("--tol-trace", cfg.tol.trace, "Trace condition tolerance");
    sub->add_option("--tol-exclusion", cfg.tol.exclusion, "Exclusion-set epsilon");
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  };

  auto* curve = app.add_subcommand("curve", "Emit the curve polynomial and check the symbolic identities");
  add_common(curve);
  curve->add_flag("--check-only", cfg.check_only, "Only run the identity checks");

  auto* sample = app.add_subcommand("sample", "Sample curve points and reconstruct representations");
  add_common(sample);
  std::string strategy = "random";
  sample->add_option("--n", cfg.n, "Number of lambda1 slices")->default_val(50);
  sample->add_option("--seed", cfg.seed, "Random seed")->default_val(1);
  sample->add_option("--strategy", strategy, "grid or random")->check(CLI::IsMember({"grid", "random"}));
  sample->add_flag("--allow-empty", cfg.allow_empty, "Exit 0 even when no point is accepted");

  auto* rep = app.add_subcommand("rep", "Reconstruct at a given (lambda1, lambda2)");
  add_common(rep);
  std::string l1_text, l2_text;
  bool off_curve = false;
  rep->add_option("--l1", l1_text, "lambda1 as re,im")->required();
  rep->add_option("--l2", l2_text, "lambda2 as re,im")->required();
  rep->add_flag("--off-curve", off_curve, "Skip the on-curve precondition");

  auto* verify = app.add_subcommand("verify", "Check a representation or sample-run file");
  add_common(verify);
  std::string file;
  verify->add_option("file", file, "JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  try {
    if (*curve) return cli::cmd_curve(cfg, std::cout, std::cerr);
    if (*sample) {
      cfg.strategy = sample_strategy_from_name(strategy);
      return cli::cmd_sample(cfg, std::cout, std::cerr);
    }
    if (*rep) return cli::cmd_rep(cfg, cli::parse_complex(l1_text), cli::parse_complex(l2_text), off_curve, std::cout,
                                  std::cerr);
    if (*verify) return cli::cmd_verify(cfg, file, std::cout, std::cerr);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kVerifyFailed;
  }
  return cli::kUsage;
}
