#include "twistrep/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "twistrep/errors.hpp"

namespace twistrep {

Complex ipow(Complex z, long long e) {
  if (e < 0) return Complex(1.0) / ipow(z, -e);
  Complex result(1.0);
  Complex base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

namespace {

int checked_add(int a, int b) {
  int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("LaurentPoly: exponent overflow");
  return out;
}

int checked_mul(int a, int b) {
  int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("LaurentPoly: exponent overflow");
  return out;
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2])};
}

// Sorts canonically and merges equal exponents, dropping zeros.
std::vector<LaurentPoly::Term> canonicalize(std::vector<LaurentPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return canonical_before(a.exp, b.exp); });
  std::vector<LaurentPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

}  // namespace

bool canonical_before(const Exponent& a, const Exponent& b) noexcept { return a > b; }

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({{0, 0, 0}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({{0, 0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::variable(int var, int power) {
  if (var < 0 || var > 2) throw DomainError("LaurentPoly::variable: index must be 0, 1 or 2");
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(var)] = power;
  return monomial(e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0, 0};
  Exponent m = terms_.front().exp;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < 3; ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {0, 0, 0};
  Exponent m = terms_.front().exp;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < 3; ++i) m[i] = std::max(m[i], t.exp[i]);
  return m;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  // Both inputs are canonical, so a linear merge suffices.
  LaurentPoly out;
  auto& dst = out.terms_;
  dst.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->exp == ib->exp) {
      mpz_class c = ia->coeff + ib->coeff;
      if (c != 0) dst.push_back({ia->exp, std::move(c)});
      ++ia;
      ++ib;
    } else if (canonical_before(ia->exp, ib->exp)) {
      dst.push_back(*ia++);
    } else {
      dst.push_back(*ib++);
    }
  }
  dst.insert(dst.end(), ia, a.terms_.end());
  dst.insert(dst.end(), ib, b.terms_.end());
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prod.push_back({add_exponents(ta.exp, tb.exp), ta.coeff * tb.coeff});
  return LaurentPoly::from_terms(std::move(prod));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = t.exp == Exponent{0, 0, 0};
    bool wrote = false;
    if (c != 1 || constant) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.exp[i] == 0) continue;
      if (wrote) os << "*";
      os << "l" << (i + 1);
      if (t.exp[i] != 1) os << "^" << t.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

Complex poly_eval(const LaurentPoly& p, const LambdaTriple& lambda) {
  for (const auto& l : lambda)
    if (l == Complex(0.0)) throw DomainError("poly_eval: λ components must be nonzero");
  Complex sum(0.0);
  for (const auto& t : p.terms()) {
    Complex m = t.coeff.get_d();
    for (std::size_t i = 0; i < 3; ++i)
      if (t.exp[i] != 0) m *= ipow(lambda[i], t.exp[i]);
    sum += m;
  }
  return sum;
}

LaurentPoly substitute_lambda3(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const int e3 = t.exp[2];
    out.push_back({{checked_add(t.exp[0], -e3), checked_add(t.exp[1], -e3), 0}, t.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

mpz_class content(const LaurentPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly normalize_to_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("normalize_to_polynomial: zero polynomial");
  const Exponent shift = p.min_exponents();
  const mpz_class g = content(p);
  // Shifting every exponent by the same vector preserves canonical order,
  // so the first term stays first.
  const bool flip = p.terms().front().coeff < 0;
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class c = t.coeff / g;
    if (flip) c = -c;
    out.push_back({{checked_add(t.exp[0], checked_mul(-1, shift[0])),
                    checked_add(t.exp[1], checked_mul(-1, shift[1])),
                    checked_add(t.exp[2], checked_mul(-1, shift[2]))},
                   std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace twistrep
