#include "twistrep/group_word.hpp"

#include <cstdlib>
#include <string>

#include "twistrep/errors.hpp"

namespace twistrep {

GroupWord::GroupWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exp == 0) continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

int GroupWord::syllable_length() const noexcept {
  int n = 0;
  for (const auto& l : letters_) n += std::abs(l.exp);
  return n;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::pow(int n) const {
  const GroupWord base = n < 0 ? inverse() : *this;
  GroupWord out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<GroupWord::Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(std::move(all));
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    s += l.gen == Generator::X ? 'x' : 'y';
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

std::pair<GroupWord, GroupWord> relation_word(int k) {
  if (k < 1) throw DomainError("relation_word: k must be >= 1");
  const GroupWord z = GroupWord::x() * GroupWord::y(-1);
  const GroupWord zk = z.pow(k);
  const GroupWord zmk = z.pow(-k);
  GroupWord left = GroupWord::y() * zk * GroupWord::x() * zmk * GroupWord::y(-1);
  GroupWord right = zk * GroupWord::y() * zmk;
  return {std::move(left), std::move(right)};
}

}  // namespace twistrep
