#pragma once

#include <stdexcept>
#include <vector>

#include "twistrep/errors.hpp"
#include "twistrep/knot_system.hpp"
#include "twistrep/types.hpp"

namespace twistrep {

/// Dense univariate polynomial with complex coefficients, ascending powers.
struct UniPoly {
  std::vector<Complex> coeffs;

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  [[nodiscard]] Complex operator()(Complex z) const;
  [[nodiscard]] Complex derivative(Complex z) const;
  /// Σ |c_j| |z|^j, the natural magnitude for judging |p(z)|.
  [[nodiscard]] double abs_scale(Complex z) const;
  /// max_j |c_j z^j|.
  [[nodiscard]] double max_term(Complex z) const;
};

/// The curve slice vanishes identically at this λ1; pick another λ1.
class DegenerateSlice : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Substitutes λ1 into the curve polynomial, giving a polynomial in λ2.
/// High-order coefficients that cancel to rounding level are trimmed;
/// low-order zeros are kept so λ2 = 0 roots remain visible.
UniPoly restrict_curve(const CurveSpec& spec, Complex lambda1);

/// |p(λ1, λ2)| relative to the largest term of the λ1-slice at λ2.
double curve_residual(const CurveSpec& spec, Complex lambda1, Complex lambda2);

/// All complex roots: companion-matrix eigenvalues, each polished by Newton
/// until |p(z)| ≤ 1e-12·abs_scale(z) or 50 iterations. Sorted by (re, im).
/// Throws DomainError when the degree is 0.
std::vector<Complex> roots(const UniPoly& p, int max_newton = 50);

}  // namespace twistrep
