#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace twistrep {

using Complex = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

/// Numeric point (λ1, λ2, λ3) for the eigenvalues of z = x·y⁻¹.
using LambdaTriple = std::array<Complex, 3>;

/// Cyclic successor on {0, 1, 2}: the "i+" index.
constexpr int next_index(int i) noexcept { return (i + 1) % 3; }
/// Cyclic predecessor on {0, 1, 2}: the "i−" index.
constexpr int prev_index(int i) noexcept { return (i + 2) % 3; }
/// The index in {0, 1, 2} distinct from both i and j (i ≠ j).
constexpr int third_index(int i, int j) noexcept { return 3 - i - j; }

/// Integer power by repeated squaring; negative exponents invert.
Complex ipow(Complex z, long long e);

}  // namespace twistrep
