#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistrep/knot_system.hpp"
#include "twistrep/representation.hpp"
#include "twistrep/types.hpp"

namespace twistrep {

/// Candidate eigenvalue point (λ1, λ2, λ3) of z with λ1λ2λ3 = 1.
struct EigenTriple {
  LambdaTriple lambda{};
  int k = 1;

  /// Sets λ3 = 1/(λ1λ2). Throws DomainError if λ1 or λ2 is zero or k < 1.
  static EigenTriple from_pair(Complex lambda1, Complex lambda2, int k);
};

/// Named residuals, ordered by name so serialized output is stable.
using ResidualMap = std::map<std::string, double>;

/// Unit vector spanning the nullspace of a rank-2 matrix: the largest adjugate
/// column, falling back to the last right singular vector, with the first
/// nonzero component rotated to be real positive.
/// Throws NumericError "not on curve" for rank 3 and "degenerate point" for
/// rank ≤ 1 (threshold 1e-6 relative to the largest singular value).
Vec3 nullspace_vector(const Mat3& M);

/// Numeric data of one reconstructed sheet.
struct ReconstructionState {
  Vec3 w;      // λ^k ∘ u
  Vec3 u;      // u_i = y_{i+,i-} y_{i-,i+}, recovered from the diagonal equations
  Vec3 v;      // v_i = s_{i+} s_{i-}
  Vec3 s;      // diagonal of Y
  Vec3 alpha;  // off-diagonal column values of Y
  Complex t;   // scale applied to the projective solution: s = t^{1/2} s_raw
  ResidualMap residuals;
};

struct Sheet {
  ReconstructionState state;
  Representation rep;
  bool irreducible = false;
};

/// One projective solution s of the diagonal equations and its three sheets
/// (Y, ωY, ω²Y for ω = e^{2πi/3}); sheets[0] is the canonical one
/// (largest Re tr Y, ties by Im tr Y).
struct Branch {
  std::vector<Sheet> sheets;
  bool accepted = false;
  std::optional<std::string> reject_reason;
};

struct ReconstructOptions {
  Tolerances tol;
  /// Residual-family gate for the entrywise equations.
  double gate = 1e-8;
  /// Reject points where D(1-λ)C + δH is numerically of full rank.
  bool require_on_curve = true;
  double curve_rank_tol = 1e-6;
};

struct ReconstructionResult {
  EigenTriple point;
  std::vector<Branch> branches;
  bool accepted = false;
  std::optional<std::string> reject_reason;
  ResidualMap diagnostics;  // point-level: curve rank ratio, branch count, ...

  /// Sheets of all accepted branches, in branch/sheet order.
  [[nodiscard]] std::vector<Representation> representations() const;
};

/// Reconstructs the explicit representations over an eigenvalue point.
/// Caches the symbolic curve matrix for one k.
class Reconstructor {
 public:
  explicit Reconstructor(int k);

  [[nodiscard]] int k() const noexcept { return sys_.k; }
  [[nodiscard]] const SymbolicSystem& system() const noexcept { return sys_; }

  /// Throws DomainError when the point is excluded (coincident eigenvalues or a
  /// (3k+1)-th root of unity) or belongs to a different k.
  [[nodiscard]] ReconstructionResult operator()(const EigenTriple& point, const ReconstructOptions& opts = {}) const;

  /// Numeric D(1-λ)C + δH.
  [[nodiscard]] Mat3 curve_matrix_at(const LambdaTriple& lambda) const;

 private:
  SymbolicSystem sys_;
  PolyMatrix3 curve_;
};

ReconstructionResult reconstruct(const EigenTriple& point, const ReconstructOptions& opts = {});

/// α_h from the diagonal values s (closed form derived from the off-diagonal entries).
Vec3 alpha_from_diagonal(const LambdaTriple& lambda, int k, const Vec3& s);

/// Y = [[s1, α2, α3], [α1, s2, α3], [α1, α2, s3]], X = D(λ)·Y.
Representation assemble_representation(const LambdaTriple& lambda, const Vec3& s, const Vec3& alpha);

}  // namespace twistrep
