#include "twistrep_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "twistrep/errors.hpp"
#include "twistrep/json_io.hpp"
#include "twistrep/knot_system.hpp"

namespace twistrep::cli {

using Json = nlohmann::json;
namespace jio = twistrep::json;

std::string RunConfig::validate() const {
  if (k < 1) return "k must be >= 1";
  if (!(tol.relation > 0.0) || !(tol.trace > 0.0) || !(tol.exclusion > 0.0) || !(tol.det > 0.0))
    return "tolerances must be positive";
  if (n < 1) return "n must be >= 1";
  return {};
}

Complex parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  if (!(is >> re)) throw DomainError("cannot parse complex number: " + text);
  char comma = 0;
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw DomainError("cannot parse complex number: " + text);
  }
  if (!is.eof() && (is >> std::ws, !is.eof())) throw DomainError("cannot parse complex number: " + text);
  return {re, im};
}

namespace {

// Writes JSON to the configured file or to `out`. Returns false on I/O failure.
bool emit(const RunConfig& cfg, const Json& j, std::ostream& out, std::ostream& log) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) {
    log << "error: cannot open " << cfg.out << " for writing\n";
    return false;
  }
  f << text;
  f.close();
  if (!f) {
    log << "error: failed writing " << cfg.out << "\n";
    return false;
  }
  return true;
}

ReconstructOptions recon_options(const RunConfig& cfg) {
  ReconstructOptions o;
  o.tol = cfg.tol;
  return o;
}

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Report for one representation; returns true when the relation holds within tolerance.
bool report(const jio::RepresentationRecord& r, const Tolerances& tol, std::ostream& out) {
  const double rel = check_relation(r.rep, r.k);
  out << std::setprecision(6);
  out << "k: " << r.k << "\n";
  out << "relation residual: " << rel << (rel <= tol.relation ? " (ok)" : " (FAIL)") << "\n";
  try {
    out << "trace residual: " << check_trace_condition(r.rep, r.k) << "\n";
  } catch (const NumericError& e) {
    out << "trace residual: n/a (" << e.what() << ")\n";
  }
  out << "det X residual: " << std::abs(r.rep.X.determinant() - 1.0) << "\n";
  out << "det Y residual: " << std::abs(r.rep.Y.determinant() - 1.0) << "\n";
  out << "irreducible: " << (is_irreducible(r.rep) ? "true" : "false") << "\n";

  std::string excl = "n/a";
  try {
    LambdaTriple l{};
    if (r.lambda) {
      l = *r.lambda;
    } else {
      Eigen::ComplexEigenSolver<Mat3> es(r.rep.Z(), false);
      for (int i = 0; i < 3; ++i) l[i] = es.eigenvalues()(i);
    }
    excl = is_excluded(l, r.k, tol.exclusion) ? "true" : "false";
  } catch (const std::exception& e) {
    excl = std::string("n/a (") + e.what() + ")";
  }
  out << "excluded: " << excl << "\n";

  try {
    const CharacterRecord c = character(r.rep);
    out << "character:\n";
    for (std::size_t i = 0; i < c.traces.size(); ++i)
      out << "  tr(" << CharacterRecord::kWords[i] << ") = " << fmt_complex(c.traces[i]) << "\n";
  } catch (const NumericError& e) {
    out << "character: n/a (" << e.what() << ")\n";
  }
  return rel <= tol.relation;
}

}  // namespace

int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (auto err = cfg.validate(); !err.empty()) {
    log << "error: " << err << "\n";
    return kUsage;
  }
  const SymbolicSystem sys = build_system(cfg.k);
  const bool a_ok = verify_A_inverse_identity(sys);
  const bool b_ok = verify_B_intertwine_identity(sys);
  log << "A-inverse identity: " << (a_ok ? "true" : "false") << "\n";
  log << "B-intertwining identity: " << (b_ok ? "true" : "false") << "\n";
  if (!cfg.check_only) {
    const CurveSpec spec = curve_polynomial(sys);
    log << "curve: " << spec.poly.terms().size() << " terms, degree (" << spec.degree[0] << ", " << spec.degree[1]
        << ")\n";
    if (!emit(cfg, jio::curve_to_json(spec), out, log)) return kIo;
  }
  return a_ok && b_ok ? kOk : kVerifyFailed;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (auto err = cfg.validate(); !err.empty()) {
    log << "error: " << err << "\n";
    return kUsage;
  }
  SampleOptions opts;
  opts.k = cfg.k;
  opts.strategy = cfg.strategy;
  opts.n = cfg.n;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  opts.recon = recon_options(cfg);
  const SampleRun run = sample_curve(opts);
  const std::size_t accepted = run.accepted_count();
  log << "points: " << run.points.size() << ", accepted: " << accepted << "\n";
  if (!emit(cfg, jio::sample_run_to_json(run), out, log)) return kIo;
  return accepted > 0 || cfg.allow_empty ? kOk : kVerifyFailed;
}

int cmd_rep(const RunConfig& cfg, Complex lambda1, Complex lambda2, bool off_curve, std::ostream& out,
            std::ostream& log) {
  if (auto err = cfg.validate(); !err.empty()) {
    log << "error: " << err << "\n";
    return kUsage;
  }
  ReconstructOptions opts = recon_options(cfg);
  opts.require_on_curve = !off_curve;
  ReconstructionResult r;
  try {
    r = reconstruct(EigenTriple::from_pair(lambda1, lambda2, cfg.k), opts);
  } catch (const DomainError& e) {
    log << "error: " << e.what() << "\n";
    return kUsage;
  }

  Json branches = Json::array();
  for (std::size_t b = 0; b < r.branches.size(); ++b) {
    const Branch& br = r.branches[b];
    Json reps = Json::array();
    Json residuals = Json::array();
    for (std::size_t s = 0; s < br.sheets.size(); ++s) {
      reps.push_back(jio::representation_to_json(
          {cfg.k, br.sheets[s].rep, r.point.lambda, static_cast<int>(b), static_cast<int>(s)}));
      residuals.push_back(jio::residuals_to_json(br.sheets[s].state.residuals));
    }
    branches.push_back({{"accepted", br.accepted},
                        {"reject_reason", br.reject_reason ? Json(*br.reject_reason) : Json(nullptr)},
                        {"representations", std::move(reps)},
                        {"residuals", std::move(residuals)}});
  }
  Json j = {{"k", cfg.k},
            {"lambda", Json::array({jio::complex_to_json(r.point.lambda[0]), jio::complex_to_json(r.point.lambda[1]),
                                    jio::complex_to_json(r.point.lambda[2])})},
            {"accepted", r.accepted},
            {"reject_reason", r.reject_reason ? Json(*r.reject_reason) : Json(nullptr)},
            {"diagnostics", jio::residuals_to_json(r.diagnostics)},
            {"branches", std::move(branches)}};
  if (!r.accepted) log << "rejected: " << r.reject_reason.value_or("unknown") << "\n";
  if (!emit(cfg, j, out, log)) return kIo;
  return r.accepted ? kOk : kVerifyFailed;
}

int cmd_verify(const RunConfig& cfg, const std::string& path, std::ostream& out, std::ostream& log) {
  if (auto err = cfg.validate(); !err.empty()) {
    log << "error: " << err << "\n";
    return kUsage;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    log << "error: cannot open " << path << "\n";
    return kIo;
  }
  std::vector<jio::RepresentationRecord> records;
  try {
    const Json j = Json::parse(f);
    if (j.is_array()) {
      records = jio::sample_run_representations(j);
    } else {
      records.push_back(jio::representation_from_json(j));
    }
  } catch (const Json::exception& e) {
    log << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    log << "error: " << e.what() << "\n";
    return kUsage;
  }

  bool ok = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records.size() > 1) out << "[" << i << "]\n";
    ok = report(records[i], cfg.tol, out) && ok;
  }
  if (records.empty()) out << "no representations in file\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace twistrep::cli
