#include "cliffs/word.hpp"

#include <charconv>

#include "cliffs/error.hpp"

namespace cliffs {

std::size_t CliffWordHash::operator()(const CliffWord& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ w.length();
  for (Letter a : w) {
    h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const CliffWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_compact(const CliffWord& w) {
  for (Letter a : w)
    if (a > 9) return to_string(w);
  std::string out;
  for (Letter a : w) out += static_cast<char>('0' + a);
  return out;
}

CliffWord parse_word(std::string_view text) {
  if (text.empty() || text == "eps") return {};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (part.empty()) throw Error(Errc::parse_error, "empty letter in word '" + std::string(text) + "'");
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw Error(Errc::parse_error, "bad letter '" + std::string(part) + "'");
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return CliffWord(std::move(letters));
}

}  // namespace cliffs
