#pragma once

#include <cstddef>
#include <span>

#include "cliffs/range_map.hpp"
#include "cliffs/word.hpp"

namespace cliffs {

// A 1-based insertion slot; valid for a word u when 1 <= index <= size(u).
class Slot {
 public:
  explicit Slot(std::size_t index) : index_(index) {}
  std::size_t index() const noexcept { return index_; }
  void check(const CliffWord& u) const;

 private:
  std::size_t index_;
};

// u(1..i-1) v u(i..)
CliffWord white_square(const CliffWord& u, Slot i, const CliffWord& v);

bool chi(const RangeMap& delta, const CliffWord& w);

// m^f(w)(j) = delta(f(j)) when w(j) = delta(j), w(j) otherwise. f is given by
// targets[j - 1] = f(j).
CliffWord saturate(const RangeMap& delta, const CliffWord& w, std::span<const std::size_t> targets);

// m^f(u) white_square_i m^g(v); the result is not checked to be a cliff.
CliffWord black_square(const RangeMap& delta, const CliffWord& u, Slot i, const CliffWord& v);

// Three-zone characterisation of the box [u white_i v, u black_i v].
bool interval_membership_check(const RangeMap& delta, const CliffWord& u, Slot i, const CliffWord& v,
                               const CliffWord& w);

}  // namespace cliffs
