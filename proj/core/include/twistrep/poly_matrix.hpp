#pragma once

#include <array>
#include <functional>

#include "twistrep/laurent_poly.hpp"
#include "twistrep/types.hpp"

namespace twistrep {

/// 3×3 matrix over LaurentPoly. Row-major, zero-based indices.
class PolyMatrix3 {
 public:
  PolyMatrix3() = default;

  static PolyMatrix3 identity();
  static PolyMatrix3 diagonal(const LaurentPoly& d0, const LaurentPoly& d1, const LaurentPoly& d2);
  /// Builds entry (i, j) from f(i, j).
  static PolyMatrix3 from_function(const std::function<LaurentPoly(int, int)>& f);

  [[nodiscard]] const LaurentPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }
  LaurentPoly& operator()(int i, int j) { return entries_[index(i, j)]; }

  [[nodiscard]] bool is_zero() const;

  friend PolyMatrix3 operator+(const PolyMatrix3& a, const PolyMatrix3& b);
  friend PolyMatrix3 operator-(const PolyMatrix3& a, const PolyMatrix3& b);
  friend PolyMatrix3 operator*(const PolyMatrix3& a, const PolyMatrix3& b);
  friend PolyMatrix3 operator*(const LaurentPoly& s, const PolyMatrix3& m);
  friend bool operator==(const PolyMatrix3& a, const PolyMatrix3& b) = default;

  /// Applies f to every entry.
  [[nodiscard]] PolyMatrix3 map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;

 private:
  static std::size_t index(int i, int j) { return static_cast<std::size_t>(3 * i + j); }
  std::array<LaurentPoly, 9> entries_{};
};

/// Cofactor expansion along the first row.
LaurentPoly mat_det(const PolyMatrix3& m);
/// Transpose of the cofactor matrix; m · adj(m) = det(m) · I exactly.
PolyMatrix3 mat_adj(const PolyMatrix3& m);
PolyMatrix3 mat_mul(const PolyMatrix3& a, const PolyMatrix3& b);

/// Entrywise numeric evaluation.
Mat3 mat_eval(const PolyMatrix3& m, const LambdaTriple& lambda);

}  // namespace twistrep
