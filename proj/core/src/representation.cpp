#include "twistrep/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "twistrep/errors.hpp"

namespace twistrep {

void Representation::validate(double tol) const {
  const double dx = std::abs(X.determinant() - 1.0);
  const double dy = std::abs(Y.determinant() - 1.0);
  if (dx > tol || dy > tol)
    throw DomainError("representation is not in SL(3,C): |det X - 1| = " + std::to_string(dx) +
                      ", |det Y - 1| = " + std::to_string(dy));
}

Mat3 Representation::Z() const { return X * inverse3(Y); }

Mat3 inverse3(const Mat3& m) {
  const Complex det = m.determinant();
  if (std::abs(det) < 1e-14) throw NumericError("matrix is numerically singular");
  Mat3 adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const int c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      const Complex minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return adj / det;
}

namespace {

Mat3 matrix_power(const Mat3& m, int n) {
  Mat3 out = Mat3::Identity();
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

}  // namespace

Mat3 evaluate_word(const GroupWord& w, const Representation& rho) {
  Mat3 out = Mat3::Identity();
  Mat3 x_inv, y_inv;
  bool have_x_inv = false, have_y_inv = false;
  for (const auto& l : w.letters()) {
    const bool is_x = l.gen == Generator::X;
    const Mat3* m = is_x ? &rho.X : &rho.Y;
    if (l.exp < 0) {
      if (is_x && !have_x_inv) { x_inv = inverse3(rho.X); have_x_inv = true; }
      if (!is_x && !have_y_inv) { y_inv = inverse3(rho.Y); have_y_inv = true; }
      m = is_x ? &x_inv : &y_inv;
    }
    out = out * matrix_power(*m, std::abs(l.exp));
  }
  return out;
}

double check_relation(const Representation& rho, int k) {
  if (k < 1) throw DomainError("check_relation: k must be >= 1");
  const Mat3 Z = rho.Z();
  const Mat3 Zk = matrix_power(Z, k);
  const Mat3 Zmk = matrix_power(inverse3(Z), k);
  const Mat3 lhs = rho.Y * (Zk * Z) * rho.Y;
  const Mat3 rhs = Zk * rho.Y * Zmk * rho.Y * Zk;
  return (lhs - rhs).norm() / std::max(1.0, lhs.norm());
}

double check_trace_condition(const Representation& rho, int /*k*/) {
  return std::abs((rho.Z() * rho.Y).trace() - rho.Y.trace());
}

int word_span_dimension(const Representation& rho, int max_length) {
  std::vector<Mat3> words{Mat3::Identity()};
  std::vector<Mat3> frontier{Mat3::Identity()};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Mat3> grown;
    grown.reserve(frontier.size() * 2);
    for (const auto& w : frontier) {
      grown.push_back(w * rho.X);
      grown.push_back(w * rho.Y);
    }
    words.insert(words.end(), grown.begin(), grown.end());
    frontier = std::move(grown);
  }
  Eigen::MatrixXcd span(9, static_cast<Eigen::Index>(words.size()));
  for (std::size_t c = 0; c < words.size(); ++c) {
    // Normalize each word so long products do not swamp the rank threshold.
    const double n = words[c].norm();
    const Mat3 w = n > 0 ? Mat3(words[c] / n) : words[c];
    for (int i = 0; i < 9; ++i) span(i, static_cast<Eigen::Index>(c)) = w(i / 3, i % 3);
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(span).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++rank;
  return rank;
}

bool is_irreducible(const Representation& rho) {
  if (word_span_dimension(rho, 4) == 9) return true;
  return word_span_dimension(rho, 6) == 9;
}

Complex CharacterRecord::at(std::string_view word) const {
  for (std::size_t i = 0; i < kWords.size(); ++i)
    if (word == kWords[i]) return traces[i];
  throw DomainError("CharacterRecord: unknown word '" + std::string(word) + "'");
}

CharacterRecord character(const Representation& rho) {
  const Mat3& X = rho.X;
  const Mat3& Y = rho.Y;
  const Mat3 Xi = inverse3(X);
  const Mat3 Yi = inverse3(Y);
  CharacterRecord r;
  r.traces = {X.trace(),      Xi.trace(),           Y.trace(),
              Yi.trace(),     (X * Y).trace(),      (Yi * Xi).trace(),
              (X * Yi).trace(), (Xi * Y).trace(),   (X * Y * Xi * Yi).trace()};
  return r;
}

bool is_excluded(const LambdaTriple& lambda, int k, double eps) {
  if (std::abs(lambda[0] * lambda[1] * lambda[2] - 1.0) > 1e-10)
    throw DomainError("is_excluded: λ1λ2λ3 must equal 1");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(lambda[i] - lambda[j]) < eps) return true;
    if (std::abs(ipow(lambda[i], 3 * k + 1) - 1.0) < eps) return true;
  }
  return false;
}

}  // namespace twistrep
