#include "wtree/group_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace wtree {

GroupWord GroupWord::generator(int index) {
  if (index == 0 || std::abs(index) > 26) {
    throw std::invalid_argument("generator index out of range");
  }
  return GroupWord({index});
}

GroupWord GroupWord::from_letters(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int letter : letters) {
    if (letter == 0) throw std::invalid_argument("zero is not a group letter");
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return GroupWord(std::move(out));
}

bool GroupWord::is_reduced(const std::vector<int>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == -letters[i - 1]) return false;
  }
  return std::find(letters.begin(), letters.end(), 0) == letters.end();
}

int GroupWord::max_generator() const {
  int best = 0;
  for (int letter : letters_) best = std::max(best, std::abs(letter));
  return best;
}

GroupWord GroupWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& letter : out) letter = -letter;
  return GroupWord(std::move(out));
}

GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs) {
  std::vector<int> out = lhs.letters_;
  for (int letter : rhs.letters_) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return GroupWord(std::move(out));
}

std::string GroupWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (int letter : letters_) {
    out.push_back(letter > 0 ? static_cast<char>('a' + letter - 1)
                             : static_cast<char>('A' - letter - 1));
  }
  return out;
}

}  // namespace wtree
