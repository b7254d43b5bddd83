#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "twistrep/types.hpp"

namespace twistrep {

/// Exponent vector (e1, e2, e3) of λ1^e1 λ2^e2 λ3^e3.
using Exponent = std::array<int, 3>;

/// Exact Laurent polynomial in λ1, λ2, λ3 with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept sorted in canonical order (lexicographic on the exponent
/// vector, descending) with no zero coefficients, so two polynomials are equal
/// iff their term vectors are equal. Values are immutable once built.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    mpz_class coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally in formulas
  explicit LaurentPoly(const mpz_class& c);

  static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1);
  /// λ_{var+1}^power, var in {0, 1, 2}.
  static LaurentPoly variable(int var, int power = 1);
  /// Builds from arbitrary (possibly unsorted, duplicated, zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  /// Componentwise minimum / maximum exponent over all terms. Zero polynomial → {0,0,0}.
  [[nodiscard]] Exponent min_exponents() const;
  [[nodiscard]] Exponent max_exponents() const;

  [[nodiscard]] LaurentPoly pow(unsigned n) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  /// Human-readable form, in canonical term order, e.g. "l2 - 3 + 2*l1^-1".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Canonical order: true iff a precedes b (a is lexicographically larger).
bool canonical_before(const Exponent& a, const Exponent& b) noexcept;

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Direct sum of monomial values, accumulated in canonical term order.
/// Throws DomainError if any λ component is zero.
Complex poly_eval(const LaurentPoly& p, const LambdaTriple& lambda);

/// Replaces λ3 by λ1⁻¹λ2⁻¹; every term of the result has e3 = 0.
LaurentPoly substitute_lambda3(const LaurentPoly& p);

/// Shifts by the monomial clearing negative exponents minimally, divides by the
/// integer content and makes the canonically-first coefficient positive.
/// Throws DomainError for the zero polynomial.
LaurentPoly normalize_to_polynomial(const LaurentPoly& p);

/// gcd of all coefficients (positive); 0 for the zero polynomial.
mpz_class content(const LaurentPoly& p);

}  // namespace twistrep
