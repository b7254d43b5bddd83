#include "twistrep/knot_system.hpp"

#include <string>

#include "twistrep/errors.hpp"
#include "twistrep/types.hpp"

namespace twistrep {

namespace {

void require_k(int k) {
  if (k < 1) throw DomainError("twist knot parameter k must be >= 1 (got " + std::to_string(k) + ")");
}

// λ_{var+1}^e
LaurentPoly lam(int var, int e) { return LaurentPoly::variable(var, e); }

bool is_zero_mod_product(const PolyMatrix3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!substitute_lambda3(m(i, j)).is_zero()) return false;
  return true;
}

}  // namespace

DiagTemplate diag_template_from_name(std::string_view name) {
  if (name == "1") return DiagTemplate::One;
  if (name == "l") return DiagTemplate::Lambda;
  if (name == "l^-1") return DiagTemplate::InvLambda;
  if (name == "1-l") return DiagTemplate::OneMinusLambda;
  if (name == "1-l^-1") return DiagTemplate::OneMinusInvLambda;
  if (name == "l^-2k-l^k+1") return DiagTemplate::NegTwoKMinusKPlusOne;
  if (name == "l^-k-1-l^2k") return DiagTemplate::NegKMinusOneMinusTwoK;
  if (name == "1-l^3k+1") return DiagTemplate::OneMinusPow3KPlusOne;
  throw DomainError("unsupported diagonal template '" + std::string(name) + "'");
}

LaurentPoly diag_entry(DiagTemplate f, int k, int var) {
  switch (f) {
    case DiagTemplate::One: return 1;
    case DiagTemplate::Lambda: return lam(var, 1);
    case DiagTemplate::InvLambda: return lam(var, -1);
    case DiagTemplate::OneMinusLambda: return 1 - lam(var, 1);
    case DiagTemplate::OneMinusInvLambda: return 1 - lam(var, -1);
    case DiagTemplate::NegTwoKMinusKPlusOne: return lam(var, -2 * k) - lam(var, k + 1);
    case DiagTemplate::NegKMinusOneMinusTwoK: return lam(var, -k - 1) - lam(var, 2 * k);
    case DiagTemplate::OneMinusPow3KPlusOne: return 1 - lam(var, 3 * k + 1);
  }
  throw DomainError("unsupported diagonal template");
}

PolyMatrix3 build_diag(DiagTemplate f, int k) {
  return PolyMatrix3::diagonal(diag_entry(f, k, 0), diag_entry(f, k, 1), diag_entry(f, k, 2));
}

PolyMatrix3 build_diag(std::string_view name, int k) { return build_diag(diag_template_from_name(name), k); }

SymbolicSystem build_system(int k) {
  require_k(k);
  SymbolicSystem s;
  s.k = k;
  s.theta = 1;
  s.delta = 1;
  for (int j = 0; j < 3; ++j) {
    s.theta *= 1 - lam(j, 3 * k + 1);
    s.delta *= lam(j, 1) - 1;
  }

  // Every entry is written in terms of the row index i, the column index j and
  // the cyclic neighbours i+, i- (diagonal) or the third index h (off-diagonal).
  s.A = PolyMatrix3::from_function([k](int i, int j) -> LaurentPoly {
    if (i == j) {
      const int p = next_index(i), m = prev_index(i);
      return lam(i, 1) * (lam(m, k + 1) - lam(i, k)) * (lam(i, k) - lam(p, k + 1));
    }
    const int h = third_index(i, j);
    return (lam(h, k) - lam(i, k)) * (lam(i, k + 1) - lam(j, k));
  });
  s.B = PolyMatrix3::from_function([k](int i, int j) -> LaurentPoly {
    if (i == j) {
      const int p = next_index(i), m = prev_index(i);
      return lam(i, 1) * (lam(p, k + 1) - lam(m, k)) * (lam(p, k) - lam(m, k + 1));
    }
    const int h = third_index(i, j);
    return (lam(i, k) - lam(h, k)) * (lam(i, k + 1) - lam(h, k));
  });
  s.C = PolyMatrix3::from_function([k](int i, int j) -> LaurentPoly {
    if (i == j) {
      const int p = next_index(i), m = prev_index(i);
      return lam(i, -2) * (lam(p, k) - lam(m, k)).pow(2);
    }
    const int h = third_index(i, j);
    return (lam(i, k) - lam(h, k + 1)).pow(2);
  });
  s.H = PolyMatrix3::from_function([k](int i, int j) -> LaurentPoly {
    if (i == j) return {};
    return lam(i, 2 * k) - lam(third_index(i, j), 2 * k + 1);
  });
  s.O = PolyMatrix3::from_function([](int i, int j) -> LaurentPoly {
    if (i == j) return {};
    return lam(third_index(i, j), 1) - 1;
  });
  return s;
}

bool verify_A_inverse_identity(const SymbolicSystem& sys) {
  const PolyMatrix3 product = sys.A * build_diag(DiagTemplate::OneMinusInvLambda, sys.k) * sys.B *
                              build_diag(DiagTemplate::NegKMinusOneMinusTwoK, sys.k);
  const LaurentPoly td = sys.theta * sys.delta;
  return is_zero_mod_product(product - PolyMatrix3::diagonal(td, td, td));
}

bool verify_A_inverse_identity(int k) { return verify_A_inverse_identity(build_system(k)); }

bool verify_B_intertwine_identity(const SymbolicSystem& sys) {
  const PolyMatrix3 lhs = sys.O * sys.B;
  const PolyMatrix3 rhs = build_diag(DiagTemplate::OneMinusLambda, sys.k) * sys.C * build_diag(DiagTemplate::Lambda, sys.k);
  return is_zero_mod_product(lhs - rhs);
}

bool verify_B_intertwine_identity(int k) { return verify_B_intertwine_identity(build_system(k)); }

PolyMatrix3 curve_matrix(const SymbolicSystem& sys) {
  return build_diag(DiagTemplate::OneMinusLambda, sys.k) * sys.C + sys.delta * sys.H;
}

CurveSpec curve_polynomial(const SymbolicSystem& sys) {
  const LaurentPoly det = substitute_lambda3(mat_det(curve_matrix(sys)));
  if (det.is_zero())
    throw InternalError("curve determinant vanishes identically for k = " + std::to_string(sys.k));
  CurveSpec spec;
  spec.k = sys.k;
  spec.poly = normalize_to_polynomial(det);
  const Exponent hi = spec.poly.max_exponents();
  spec.degree = {hi[0], hi[1]};
  return spec;
}

CurveSpec curve_polynomial(int k) { return curve_polynomial(build_system(k)); }

}  // namespace twistrep
