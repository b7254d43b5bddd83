#include "twistrep/poly_matrix.hpp"

#include <algorithm>

namespace twistrep {

PolyMatrix3 PolyMatrix3::identity() { return diagonal(1, 1, 1); }

PolyMatrix3 PolyMatrix3::diagonal(const LaurentPoly& d0, const LaurentPoly& d1, const LaurentPoly& d2) {
  PolyMatrix3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

PolyMatrix3 PolyMatrix3::from_function(const std::function<LaurentPoly(int, int)>& f) {
  PolyMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = f(i, j);
  return m;
}

bool PolyMatrix3::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
}

PolyMatrix3 PolyMatrix3::map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
  PolyMatrix3 out;
  for (std::size_t i = 0; i < 9; ++i) out.entries_[i] = f(entries_[i]);
  return out;
}

PolyMatrix3 operator+(const PolyMatrix3& a, const PolyMatrix3& b) {
  PolyMatrix3 out;
  for (std::size_t i = 0; i < 9; ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

PolyMatrix3 operator-(const PolyMatrix3& a, const PolyMatrix3& b) {
  PolyMatrix3 out;
  for (std::size_t i = 0; i < 9; ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

PolyMatrix3 operator*(const PolyMatrix3& a, const PolyMatrix3& b) {
  PolyMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      LaurentPoly acc;
      for (int h = 0; h < 3; ++h) {
        if (a(i, h).is_zero() || b(h, j).is_zero()) continue;
        acc += a(i, h) * b(h, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix3 operator*(const LaurentPoly& s, const PolyMatrix3& m) {
  PolyMatrix3 out;
  for (std::size_t i = 0; i < 9; ++i) out.entries_[i] = s * m.entries_[i];
  return out;
}

namespace {

// Cofactor C(i, j) = (-1)^{i+j} · minor(i, j).
LaurentPoly cofactor(const PolyMatrix3& m, int i, int j) {
  const int r0 = i == 0 ? 1 : 0;
  const int r1 = i == 2 ? 1 : 2;
  const int c0 = j == 0 ? 1 : 0;
  const int c1 = j == 2 ? 1 : 2;
  LaurentPoly minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  return ((i + j) % 2 == 0) ? minor : -minor;
}

}  // namespace

LaurentPoly mat_det(const PolyMatrix3& m) {
  LaurentPoly det;
  for (int j = 0; j < 3; ++j) {
    if (m(0, j).is_zero()) continue;
    det += m(0, j) * cofactor(m, 0, j);
  }
  return det;
}

PolyMatrix3 mat_adj(const PolyMatrix3& m) {
  return PolyMatrix3::from_function([&](int i, int j) { return cofactor(m, j, i); });
}

PolyMatrix3 mat_mul(const PolyMatrix3& a, const PolyMatrix3& b) { return a * b; }

Mat3 mat_eval(const PolyMatrix3& m, const LambdaTriple& lambda) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = poly_eval(m(i, j), lambda);
  return out;
}

}  // namespace twistrep
