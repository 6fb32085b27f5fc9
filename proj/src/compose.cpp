#include "cliffs/compose.hpp"

#include <vector>

#include "cliffs/cliffs.hpp"
#include "cliffs/error.hpp"

namespace cliffs {

void Slot::check(const CliffWord& u) const {
  if (index_ < 1 || index_ > u.size())
    throw Error(Errc::slot_out_of_range,
                "slot " + std::to_string(index_) + " outside [1, " + std::to_string(u.size()) + "] for '" +
                    to_string(u) + "'");
}

CliffWord white_square(const CliffWord& u, Slot i, const CliffWord& v) {
  i.check(u);
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i.index() - 1));
  out.insert(out.end(), v.begin(), v.end());
  out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(i.index() - 1), u.end());
  return CliffWord(std::move(out));
}

bool chi(const RangeMap& delta, const CliffWord& w) { return is_cliff(delta, w); }

CliffWord saturate(const RangeMap& delta, const CliffWord& w, std::span<const std::size_t> targets) {
  if (targets.size() != w.length()) throw Error(Errc::length_mismatch, "reindexing map has the wrong length");
  CliffWord out = w;
  for (std::size_t j = 1; j <= w.length(); ++j)
    if (w[j - 1] == delta(j)) out[j - 1] = delta(targets[j - 1]);
  return out;
}

CliffWord black_square(const RangeMap& delta, const CliffWord& u, Slot i, const CliffWord& v) {
  i.check(u);
  std::size_t lv = v.length();
  std::vector<std::size_t> f(u.length()), g(lv);
  for (std::size_t j = 1; j <= u.length(); ++j) f[j - 1] = j <= i.index() - 1 ? j : j + lv;
  for (std::size_t j = 1; j <= lv; ++j) g[j - 1] = j + i.index() - 1;
  return white_square(saturate(delta, u, f), i, saturate(delta, v, g));
}

bool interval_membership_check(const RangeMap& delta, const CliffWord& u, Slot i, const CliffWord& v,
                               const CliffWord& w) {
  i.check(u);
  std::size_t lu = u.length(), lv = v.length();
  if (w.length() != lu + lv) return false;
  std::size_t k = i.index();
  auto zone = [&](Letter x, std::size_t source_index, std::size_t j) {
    Letter y = w[j - 1];
    if (x == delta(source_index)) return x <= y && y <= delta(j);
    return y == x;
  };
  for (std::size_t j = 1; j < k; ++j)
    if (!zone(u[j - 1], j, j)) return false;
  for (std::size_t j = k; j < k + lv; ++j)
    if (!zone(v[j - k], j - k + 1, j)) return false;
  for (std::size_t j = k + lv; j <= lu + lv; ++j)
    if (!zone(u[j - lv - 1], j - lv, j)) return false;
  return true;
}

}  // namespace cliffs
