#pragma once

#include <array>
#include <string>
#include <utility>

#include "twistrep/group_word.hpp"
#include "twistrep/types.hpp"

namespace twistrep {

/// Images X = ρ(x), Y = ρ(y) in SL(3, C).
struct Representation {
  Mat3 X = Mat3::Identity();
  Mat3 Y = Mat3::Identity();

  /// Throws DomainError unless |det X - 1| ≤ tol and |det Y - 1| ≤ tol.
  void validate(double tol = 1e-9) const;
  /// z = x·y^{-1}.
  [[nodiscard]] Mat3 Z() const;
};

/// Tolerances shared by the verification routines. All overridable.
struct Tolerances {
  double relation = 1e-8;
  double trace = 1e-9;
  double exclusion = 1e-6;
  double det = 1e-9;
};

/// Inverse via adjugate / det. Throws NumericError when |det| < 1e-14.
Mat3 inverse3(const Mat3& m);

/// Left-to-right product of the letters' images.
Mat3 evaluate_word(const GroupWord& w, const Representation& rho);

/// ‖Y Z^{k+1} Y - Z^k Y Z^{-k} Y Z^k‖_F / max(1, ‖Y Z^{k+1} Y‖_F).
double check_relation(const Representation& rho, int k);

/// |tr(Z Y) - tr(Y)|.
double check_trace_condition(const Representation& rho, int k);

/// Dimension of the span of all words of length ≤ max_length in X, Y
/// (singular values above 1e-9 relative to the largest).
int word_span_dimension(const Representation& rho, int max_length);

/// Burnside criterion: the words of length ≤ 4 (≤ 6 on a retry) span all of M_3(C).
bool is_irreducible(const Representation& rho);

/// Traces of a fixed list of words, in this order.
struct CharacterRecord {
  static constexpr std::array<const char*, 9> kWords = {
      "x", "x^-1", "y", "y^-1", "xy", "(xy)^-1", "xy^-1", "x^-1y", "xyx^-1y^-1"};
  std::array<Complex, 9> traces{};

  [[nodiscard]] Complex at(std::string_view word) const;
};

CharacterRecord character(const Representation& rho);

/// Eigenvalue-collision / root-of-unity exclusion test.
bool is_excluded(const LambdaTriple& lambda, int k, double eps = 1e-6);

}  // namespace twistrep
