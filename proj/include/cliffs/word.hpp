#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cliffs {

using Letter = std::uint32_t;

// A word over the naturals. The size of a word is its length plus one; the
// empty word has size 1. Indexing via operator[] is 0-based.
class CliffWord {
 public:
  CliffWord() = default;
  CliffWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit CliffWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t length() const noexcept { return letters_.size(); }
  std::size_t size() const noexcept { return letters_.size() + 1; }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter& operator[](std::size_t i) { return letters_[i]; }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::vector<Letter>& letters() noexcept { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend auto operator<=>(const CliffWord&, const CliffWord&) = default;
  friend bool operator==(const CliffWord&, const CliffWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct CliffWordHash {
  std::size_t operator()(const CliffWord& w) const noexcept;
};

// "0,0,1,0,2"; the empty word is "".
std::string to_string(const CliffWord& w);
// Compact digit form used in human-facing output, e.g. "00102"; falls back to
// the comma form when a letter exceeds 9.
std::string to_compact(const CliffWord& w);

// Accepts the comma form, "" or "eps" for the empty word.
CliffWord parse_word(std::string_view text);

}  // namespace cliffs

template <>
struct std::hash<cliffs::CliffWord> : cliffs::CliffWordHash {};
