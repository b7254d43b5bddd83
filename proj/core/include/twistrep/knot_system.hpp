#pragma once

#include <array>
#include <string_view>

#include "twistrep/laurent_poly.hpp"
#include "twistrep/poly_matrix.hpp"

namespace twistrep {

/// The closed set of one-variable functions f for which D(f(λ)) appears in the
/// twist-knot derivation.
enum class DiagTemplate {
  One,                  // 1
  Lambda,               // λ
  InvLambda,            // λ^{-1}
  OneMinusLambda,       // 1 - λ
  OneMinusInvLambda,    // 1 - λ^{-1}
  NegTwoKMinusKPlusOne, // λ^{-2k} - λ^{k+1}
  NegKMinusOneMinusTwoK,// λ^{-k-1} - λ^{2k}
  OneMinusPow3KPlusOne, // 1 - λ^{3k+1}
};

/// Parses the names used on the command line and in tests
/// ("1", "l", "l^-1", "1-l", "1-l^-1", "l^-2k-l^k+1", "l^-k-1-l^2k", "1-l^3k+1").
/// Throws DomainError for anything else.
DiagTemplate diag_template_from_name(std::string_view name);

/// The one-variable polynomial f(λ_var) for the given template.
LaurentPoly diag_entry(DiagTemplate f, int k, int var);

/// diag(f(λ1), f(λ2), f(λ3)).
PolyMatrix3 build_diag(DiagTemplate f, int k);
PolyMatrix3 build_diag(std::string_view name, int k);

/// Every symbolic object of the twist-knot T_{2k} derivation for one k.
struct SymbolicSystem {
  int k = 0;
  LaurentPoly theta;  // ∏ (1 - λ_j^{3k+1})
  LaurentPoly delta;  // ∏ (λ_j - 1)
  PolyMatrix3 A;
  PolyMatrix3 B;
  PolyMatrix3 C;
  PolyMatrix3 H;
  PolyMatrix3 O;  // off-diagonal (λ_h - 1) matrix of the trace condition
};

/// Throws DomainError for k < 1.
SymbolicSystem build_system(int k);

/// A · D(1-λ^{-1}) · B · D(λ^{-k-1} - λ^{2k}) == θδ·I, exactly, modulo λ1λ2λ3 = 1.
bool verify_A_inverse_identity(int k);
bool verify_A_inverse_identity(const SymbolicSystem& sys);

/// O · B == D(1-λ) · C · D(λ), exactly, modulo λ1λ2λ3 = 1.
bool verify_B_intertwine_identity(int k);
bool verify_B_intertwine_identity(const SymbolicSystem& sys);

/// D(1-λ)·C + δ·H, the matrix whose determinant cuts out the curve.
PolyMatrix3 curve_matrix(const SymbolicSystem& sys);

/// Normalized defining polynomial of the curve in λ1, λ2 (λ3 eliminated).
struct CurveSpec {
  int k = 0;
  LaurentPoly poly;
  std::array<int, 2> degree{0, 0};  // (max e1, max e2)
};

/// det(curve_matrix), λ3 → (λ1λ2)^{-1}, normalized. Throws InternalError if the
/// determinant vanishes identically.
CurveSpec curve_polynomial(int k);
CurveSpec curve_polynomial(const SymbolicSystem& sys);

}  // namespace twistrep
