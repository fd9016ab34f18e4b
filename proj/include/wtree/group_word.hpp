#pragma once

#include <compare>
#include <string>
#include <vector>

namespace wtree {

/// Element of a finitely generated free group, stored as a freely reduced
/// word. Letter +k is generator k (1-based), -k its inverse. The empty word
/// is the identity; the trivial group uses an empty alphabet and only ever
/// sees the empty word.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord generator(int index);
  /// Builds a word from raw letters, freely reducing as it goes.
  static GroupWord from_letters(const std::vector<int>& letters);
  /// True when no adjacent pair is a letter followed by its inverse.
  static bool is_reduced(const std::vector<int>& letters);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  int max_generator() const;

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs);

  /// Letters a..z for generators 1..26, uppercase for inverses.
  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  explicit GroupWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

/// Free-group alphabet size plus label range; fixed per computation.
struct Context {
  int labels = 1;
  int generators = 0;
  friend bool operator==(const Context&, const Context&) = default;
};

}  // namespace wtree
