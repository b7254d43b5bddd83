#include "twistrep/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "twistrep/errors.hpp"

namespace twistrep {

EigenTriple EigenTriple::from_pair(Complex lambda1, Complex lambda2, int k) {
  if (k < 1) throw DomainError("EigenTriple: k must be >= 1");
  if (lambda1 == Complex(0.0) || lambda2 == Complex(0.0))
    throw DomainError("EigenTriple: λ1 and λ2 must be nonzero");
  return {{lambda1, lambda2, 1.0 / (lambda1 * lambda2)}, k};
}

Vec3 nullspace_vector(const Mat3& M) {
  Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(1) <= 1e-6 * sv(0)) throw NumericError("degenerate point: rank <= 1");
  if (sv(2) > 1e-6 * sv(0)) throw NumericError("not on curve: matrix has full rank");

  // Columns of adj(M) span the nullspace of a rank-2 matrix.
  Mat3 adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const int c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      const Complex minor = M(r0, c0) * M(r1, c1) - M(r0, c1) * M(r1, c0);
      adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j < 3; ++j)
    if (adj.col(j).norm() > adj.col(best).norm()) best = j;
  Vec3 w = adj.col(best);
  if (w.norm() <= 1e-12 * sv(0) * sv(0)) {
    w = svd.matrixV().col(2);
  }
  w.normalize();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(w(i)) > 1e-14) {
      w *= std::conj(w(i)) / std::abs(w(i));
      w(i) = std::abs(w(i));
      break;
    }
  }
  return w;
}

Vec3 alpha_from_diagonal(const LambdaTriple& l, int k, const Vec3& s) {
  Vec3 a;
  for (int h = 0; h < 3; ++h) {
    const int p = next_index(h), m = prev_index(h);
    const Complex num = (ipow(l[p], k + 1) - ipow(l[m], k)) * s(p) + (ipow(l[m], k + 1) - ipow(l[p], k)) * s(m);
    const Complex den = ipow(l[h], -2 * k) - ipow(l[h], k + 1);
    a(h) = num / den;
  }
  return a;
}

Representation assemble_representation(const LambdaTriple& l, const Vec3& s, const Vec3& a) {
  Representation rho;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rho.Y(i, j) = i == j ? s(i) : a(j);
  for (int i = 0; i < 3; ++i) rho.X.row(i) = l[i] * rho.Y.row(i);
  return rho;
}

std::vector<Representation> ReconstructionResult::representations() const {
  std::vector<Representation> out;
  for (const auto& b : branches) {
    if (!b.accepted) continue;
    for (const auto& sh : b.sheets) out.push_back(sh.rep);
  }
  return out;
}

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

// u_i = α_{i+} α_{i-}
Vec3 alpha_products(const Vec3& a) {
  Vec3 u;
  for (int i = 0; i < 3; ++i) u(i) = a(next_index(i)) * a(prev_index(i));
  return u;
}

// Diagonal equations (λ_i - 1) s_i² - (H · (λ^k ∘ u(s)))_i with u from α(s).
Vec3 diagonal_equations(const LambdaTriple& l, int k, const Mat3& H, const Vec3& s) {
  const Vec3 u = alpha_products(alpha_from_diagonal(l, k, s));
  Vec3 w;
  for (int i = 0; i < 3; ++i) w(i) = ipow(l[i], k) * u(i);
  const Vec3 hw = H * w;
  Vec3 e;
  for (int i = 0; i < 3; ++i) e(i) = (l[i] - 1.0) * s(i) * s(i) - hw(i);
  return e;
}

// Roots of q0 t² + q1 t + q2 (q0 ≠ 0), avoiding cancellation.
std::array<Complex, 2> quadratic_roots(Complex q0, Complex q1, Complex q2) {
  const Complex disc = std::sqrt(q1 * q1 - 4.0 * q0 * q2);
  const Complex den = (std::real(std::conj(q1) * disc) >= 0.0) ? -(q1 + disc) / 2.0 : -(q1 - disc) / 2.0;
  if (den == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
  return {den / q0, q2 / den};
}

// Coefficient on y_{ih} y_{hj} in entry (i, j) of Y Z^{k+1} Y - Z^k Y Z^{-k} Y Z^k, Z = D(λ).
Complex entry_weight(const LambdaTriple& l, int k, int i, int j, int q) {
  return ipow(l[q], k + 1) - ipow(l[i], k) * ipow(l[j], k) * ipow(l[q], -k);
}

ResidualMap sheet_residuals(const LambdaTriple& l, int k, const Mat3& H, const ReconstructionState& st,
                            const Representation& rho) {
  ResidualMap r;
  const Mat3& Y = rho.Y;
  const Vec3& s = st.s;
  const Vec3& a = st.alpha;

  double eq3 = 0.0;
  {
    Vec3 w;
    for (int i = 0; i < 3; ++i) w(i) = ipow(l[i], k) * Y(next_index(i), prev_index(i)) * Y(prev_index(i), next_index(i));
    const Vec3 hw = H * w;
    for (int i = 0; i < 3; ++i) eq3 = std::max(eq3, rel((l[i] - 1.0) * s(i) * s(i), hw(i)));
  }
  r["eq3"] = eq3;

  double eq4 = 0.0;
  Mat3 alpha_entry = Mat3::Zero();  // α_h as implied by entry (i, j)
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int h = third_index(i, j);
      alpha_entry(i, j) = -(Y(i, i) * entry_weight(l, k, i, j, i) + Y(j, j) * entry_weight(l, k, i, j, j)) /
                          entry_weight(l, k, i, j, h);
      eq4 = std::max(eq4, rel(Y(i, h) * Y(h, j), alpha_entry(i, j) * Y(i, j)));
    }
  }
  r["eq4"] = eq4;

  const Complex a123 = a(0) * a(1) * a(2);
  r["eq6"] = std::max({rel(Y(0, 1) * Y(1, 2) * Y(2, 0), a123), rel(Y(0, 2) * Y(2, 1) * Y(1, 0), a123),
                       rel(alpha_entry(1, 2) * alpha_entry(2, 0) * alpha_entry(0, 1), a123)});

  const Vec3 aa = alpha_products(a);
  double eq7 = 0.0;
  for (int i = 0; i < 3; ++i) eq7 = std::max(eq7, rel(st.u(i), aa(i)));
  r["eq7"] = eq7;

  Complex lhs8 = 1.0 - s(0) * s(1) * s(2);
  for (int i = 0; i < 3; ++i) lhs8 += s(i) * aa(i);
  r["eq8"] = rel(lhs8, 2.0 * a123);

  Complex tr9(0.0);
  double mag9 = 0.0;
  for (int i = 0; i < 3; ++i) {
    tr9 += (l[i] - 1.0) * s(i);
    mag9 += std::abs((l[i] - 1.0) * s(i));
  }
  r["eq9"] = std::abs(tr9) / std::max(1.0, mag9);

  r["relation"] = check_relation(rho, k);
  r["trace"] = check_trace_condition(rho, k);
  r["det_y"] = std::abs(rho.Y.determinant() - 1.0);
  r["det_x"] = std::abs(rho.X.determinant() - 1.0);
  return r;
}

std::optional<std::string> gate_failure(const ResidualMap& r, const ReconstructOptions& o) {
  auto fmt = [](const std::string& what, const std::string& name, double v) {
    std::ostringstream os;
    os << what << ": " << name << " residual " << v;
    return os.str();
  };
  if (!(r.at("eq7") <= o.gate)) return fmt("reconstruction inconsistency", "eq7", r.at("eq7"));
  for (const char* name : {"eq3", "eq4", "eq6", "eq8", "eq9"})
    if (!(r.at(name) <= o.gate)) return fmt("reconstruction inconsistency", name, r.at(name));
  if (!(r.at("relation") <= o.tol.relation)) return fmt("final gate", "relation", r.at("relation"));
  if (!(r.at("det_y") <= o.tol.det)) return fmt("final gate", "det_y", r.at("det_y"));
  if (!(r.at("det_x") <= o.tol.det)) return fmt("final gate", "det_x", r.at("det_x"));
  if (!(r.at("trace") <= o.tol.trace)) return fmt("final gate", "trace", r.at("trace"));
  return std::nullopt;
}

}  // namespace

Reconstructor::Reconstructor(int k) : sys_(build_system(k)), curve_(curve_matrix(sys_)) {}

Mat3 Reconstructor::curve_matrix_at(const LambdaTriple& lambda) const { return mat_eval(curve_, lambda); }

ReconstructionResult Reconstructor::operator()(const EigenTriple& point, const ReconstructOptions& opts) const {
  const int k = sys_.k;
  const LambdaTriple& l = point.lambda;
  if (point.k != k) throw DomainError("Reconstructor: point belongs to a different k");
  if (is_excluded(l, k, opts.tol.exclusion))
    throw DomainError("reconstruct: λ lies in the exclusion set (coincident eigenvalues or λ^(3k+1) = 1)");

  ReconstructionResult result;
  result.point = point;

  // Curve gate: D(1-λ)C + δH must drop rank.
  const Eigen::Vector3d curve_sv = Eigen::JacobiSVD<Mat3>(curve_matrix_at(l)).singularValues();
  const double curve_ratio = curve_sv(0) > 0.0 ? curve_sv(2) / curve_sv(0) : 0.0;
  result.diagnostics["curve_rank_ratio"] = curve_ratio;
  if (opts.require_on_curve && curve_ratio > opts.curve_rank_tol) {
    result.reject_reason = "not on curve";
    return result;
  }

  const Mat3 H = mat_eval(sys_.H, l);
  Eigen::FullPivLU<Mat3> h_lu(H);
  if (!h_lu.isInvertible()) {
    result.reject_reason = "degenerate point: H is singular";
    return result;
  }

  // Restrict s to the plane Σ (λ_i - 1) s_i = 0, spanned by e and f.
  int m = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(l[i] - 1.0) > std::abs(l[m] - 1.0)) m = i;
  const int p = next_index(m), q = prev_index(m);
  Vec3 e = Vec3::Zero(), f = Vec3::Zero();
  e(p) = 1.0;
  e(m) = -(l[p] - 1.0) / (l[m] - 1.0);
  f(q) = 1.0;
  f(m) = -(l[q] - 1.0) / (l[m] - 1.0);

  // On the plane the diagonal equations are binary quadratics in (a, b) for
  // s = a e + b f; columns hold the a², ab, b² coefficients.
  const Vec3 Ee = diagonal_equations(l, k, H, e);
  const Vec3 Ef = diagonal_equations(l, k, H, f);
  const Vec3 Eef = diagonal_equations(l, k, H, e + f);
  Mat3 Q;
  Q.col(0) = Ee;
  Q.col(1) = Eef - Ee - Ef;
  Q.col(2) = Ef;
  const Eigen::Vector3d q_sv = Eigen::JacobiSVD<Mat3>(Q).singularValues();
  result.diagnostics["diagonal_rank_ratio"] = q_sv(0) > 0.0 ? q_sv(1) / q_sv(0) : 0.0;
  if (q_sv(0) == 0.0) {
    result.reject_reason = "degenerate point: diagonal equations vanish identically";
    return result;
  }
  Eigen::Index row = 0;
  for (Eigen::Index i = 1; i < 3; ++i)
    if (Q.row(i).norm() > Q.row(row).norm()) row = i;
  const Complex q0 = Q(row, 0), q1 = Q(row, 1), q2 = Q(row, 2);

  std::vector<Vec3> lines;
  if (std::abs(q0) >= std::abs(q2)) {
    for (const Complex t : quadratic_roots(q0, q1, q2)) lines.push_back(t * e + f);
  } else {
    for (const Complex t : quadratic_roots(q2, q1, q0)) lines.push_back(e + t * f);
  }
  for (auto& s : lines) s.normalize();
  if (lines.size() == 2) {
    const Vec3& s0 = lines[0];
    const Vec3& s1 = lines[1];
    double wedge = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) wedge = std::max(wedge, std::abs(s0(i) * s1(j) - s0(j) * s1(i)));
    if (wedge <= 1e-10) lines.pop_back();
  }
  result.diagnostics["branches"] = static_cast<double>(lines.size());

  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  for (const Vec3& s_raw : lines) {
    Branch branch;
    const Vec3 a_raw = alpha_from_diagonal(l, k, s_raw);
    const Vec3 aa_raw = alpha_products(a_raw);
    // det Y = 1 reads 1 + τ³ c = 0 once s, α scale by τ.
    Complex c = -s_raw(0) * s_raw(1) * s_raw(2) - 2.0 * a_raw(0) * a_raw(1) * a_raw(2);
    double c_mag = std::abs(s_raw(0) * s_raw(1) * s_raw(2)) + 2.0 * std::abs(a_raw(0) * a_raw(1) * a_raw(2));
    for (int i = 0; i < 3; ++i) {
      c += s_raw(i) * aa_raw(i);
      c_mag += std::abs(s_raw(i) * aa_raw(i));
    }
    if (std::abs(c) <= 1e-12 * c_mag) {
      branch.reject_reason = "degenerate scale: determinant balance coefficient vanishes";
      result.branches.push_back(std::move(branch));
      continue;
    }
    const Complex tau0 = std::pow(-1.0 / c, 1.0 / 3.0);

    for (int j = 0; j < 3; ++j) {
      const Complex tau = tau0 * std::pow(omega, j);
      Sheet sheet;
      ReconstructionState& st = sheet.state;
      st.t = tau * tau;
      st.s = tau * s_raw;
      st.alpha = tau * a_raw;
      Vec3 rhs;
      for (int i = 0; i < 3; ++i) rhs(i) = (l[i] - 1.0) * st.s(i) * st.s(i);
      st.w = h_lu.solve(rhs);
      for (int i = 0; i < 3; ++i) {
        st.u(i) = ipow(l[i], -k) * st.w(i);
        st.v(i) = st.s(next_index(i)) * st.s(prev_index(i));
      }
      sheet.rep = assemble_representation(l, st.s, st.alpha);
      st.residuals = sheet_residuals(l, k, H, st, sheet.rep);
      sheet.irreducible = is_irreducible(sheet.rep);
      branch.sheets.push_back(std::move(sheet));
    }
    std::sort(branch.sheets.begin(), branch.sheets.end(), [](const Sheet& x, const Sheet& y) {
      const Complex tx = x.rep.Y.trace(), ty = y.rep.Y.trace();
      return tx.real() != ty.real() ? tx.real() > ty.real() : tx.imag() > ty.imag();
    });
    branch.accepted = true;
    for (const auto& sh : branch.sheets) {
      if (auto why = gate_failure(sh.state.residuals, opts)) {
        branch.accepted = false;
        branch.reject_reason = std::move(why);
        break;
      }
    }
    result.branches.push_back(std::move(branch));
  }

  for (const auto& b : result.branches) result.accepted = result.accepted || b.accepted;
  if (!result.accepted) {
    result.reject_reason = "spurious curve point: no branch passes the gates";
    for (const auto& b : result.branches) {
      if (b.reject_reason) {
        result.reject_reason = *b.reject_reason;
        break;
      }
    }
  }
  return result;
}

ReconstructionResult reconstruct(const EigenTriple& point, const ReconstructOptions& opts) {
  return Reconstructor(point.k)(point, opts);
}

}  // namespace twistrep
