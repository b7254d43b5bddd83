#include "twistrep/univariate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace twistrep {

Complex UniPoly::operator()(Complex z) const {
  Complex acc(0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex UniPoly::derivative(Complex z) const {
  Complex acc(0.0);
  for (std::size_t j = coeffs.size(); j-- > 1;) acc = acc * z + static_cast<double>(j) * coeffs[j];
  return acc;
}

double UniPoly::abs_scale(Complex z) const {
  const double r = std::abs(z);
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double UniPoly::max_term(Complex z) const {
  const double r = std::abs(z);
  double m = 0.0, rj = 1.0;
  for (const auto& c : coeffs) {
    m = std::max(m, std::abs(c) * rj);
    rj *= r;
  }
  return m;
}

namespace {

struct SliceCoefficients {
  std::vector<Complex> value;
  std::vector<double> magnitude;  // Σ |coeff · λ1^e1| per power, for cancellation checks
  int shift = 0;
};

SliceCoefficients slice_coefficients(const CurveSpec& spec, Complex lambda1) {
  if (lambda1 == Complex(0.0)) throw DomainError("restrict_curve: λ1 must be nonzero");
  // Only negative powers are cleared, so roots at λ2 = 0 stay visible.
  const int lo2 = std::min(spec.poly.min_exponents()[1], 0);
  const Exponent hi = spec.poly.max_exponents();
  SliceCoefficients s;
  s.shift = lo2;
  const auto n = static_cast<std::size_t>(hi[1] - lo2 + 1);
  s.value.assign(n, Complex(0.0));
  s.magnitude.assign(n, 0.0);
  for (const auto& t : spec.poly.terms()) {
    if (t.exp[2] != 0) throw DomainError("restrict_curve: curve polynomial must not involve λ3");
    const Complex term = t.coeff.get_d() * ipow(lambda1, t.exp[0]);
    const auto j = static_cast<std::size_t>(t.exp[1] - lo2);
    s.value[j] += term;
    s.magnitude[j] += std::abs(term);
  }
  return s;
}

}  // namespace

UniPoly restrict_curve(const CurveSpec& spec, Complex lambda1) {
  SliceCoefficients s = slice_coefficients(spec, lambda1);
  constexpr double kCancel = 1e-13;
  while (!s.value.empty() && std::abs(s.value.back()) <= kCancel * s.magnitude.back()) {
    s.value.pop_back();
    s.magnitude.pop_back();
  }
  const bool all_zero = std::all_of(s.value.begin(), s.value.end(), [&](const Complex& c) {
    return std::abs(c) == 0.0;
  });
  if (s.value.empty() || all_zero) throw DegenerateSlice("curve polynomial vanishes identically on this λ1 slice");
  return UniPoly{std::move(s.value)};
}

double curve_residual(const CurveSpec& spec, Complex lambda1, Complex lambda2) {
  const SliceCoefficients s = slice_coefficients(spec, lambda1);
  const UniPoly p{s.value};
  // The λ2^shift factor is common to value and scale, so it cancels.
  const double scale = p.max_term(lambda2);
  return scale == 0.0 ? 0.0 : std::abs(p(lambda2)) / scale;
}

std::vector<Complex> roots(const UniPoly& p, int max_newton) {
  std::vector<Complex> c = p.coeffs;
  while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
  if (c.size() < 2) throw DomainError("roots: polynomial degree must be >= 1");
  const auto n = static_cast<Eigen::Index>(c.size() - 1);

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericError("roots: eigenvalue iteration failed");

  const UniPoly trimmed{c};
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex z = solver.eigenvalues()(i);
    Complex fz = trimmed(z);
    for (int it = 0; it < max_newton; ++it) {
      if (std::abs(fz) <= 1e-12 * trimmed.abs_scale(z)) break;
      const Complex d = trimmed.derivative(z);
      if (d == Complex(0.0)) break;
      const Complex next = z - fz / d;
      const Complex fnext = trimmed(next);
      // Only accept steps that reduce the residual; near multiple roots plain
      // Newton can wander off.
      if (!(std::abs(fnext) < std::abs(fz))) break;
      z = next;
      fz = fnext;
    }
    out.push_back(z);
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace twistrep
