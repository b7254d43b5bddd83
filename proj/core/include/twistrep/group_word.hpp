#pragma once

#include <string>
#include <utility>
#include <vector>

namespace twistrep {

enum class Generator { X, Y };

/// Word in the free group on x, y, freely reduced: adjacent letters with the
/// same generator are merged and zero exponents dropped.
class GroupWord {
 public:
  struct Letter {
    Generator gen;
    int exp;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);

  static GroupWord x(int e = 1) { return GroupWord({{Generator::X, e}}); }
  static GroupWord y(int e = 1) { return GroupWord({{Generator::Y, e}}); }

  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  /// Sum of |exponent| over letters, i.e. length as a product of x^{±1}, y^{±1}.
  [[nodiscard]] int syllable_length() const noexcept;

  [[nodiscard]] GroupWord inverse() const;
  [[nodiscard]] GroupWord pow(int n) const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// "xy^-1x^2", the empty word prints as "1".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Left and right sides of the T_{2k} relation
/// y z^k x z^{-k} y^{-1} = z^k y z^{-k} with z = x y^{-1}, expanded in x, y.
std::pair<GroupWord, GroupWord> relation_word(int k);

}  // namespace twistrep
