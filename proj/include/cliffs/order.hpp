#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "cliffs/range_map.hpp"
#include "cliffs/word.hpp"

namespace cliffs {

// Componentwise order. Words of different lengths raise LengthMismatch.
bool leq(const CliffWord& u, const CliffWord& v);
CliffWord meet(const CliffWord& u, const CliffWord& v);
CliffWord join(const CliffWord& u, const CliffWord& v);

// Moebius function of the componentwise order; NotComparable unless u <= v.
int moebius(const CliffWord& u, const CliffWord& v);

// The box [low, high] of the componentwise order.
class Interval {
 public:
  Interval(CliffWord low, CliffWord high);

  const CliffWord& low() const noexcept { return low_; }
  const CliffWord& high() const noexcept { return high_; }
  bool contains(const CliffWord& w) const;
  mpz_class cardinality() const;

  // Visits the box in lexicographic order; stop early by returning false.
  void for_each(const std::function<bool(const CliffWord&)>& visit) const;

 private:
  CliffWord low_, high_;
};

// Elements of the box, optionally restricted to delta-hills.
std::vector<CliffWord> interval_enumerate(const Interval& box, const RangeMap* hills_of = nullptr);

CliffWord running_max(const CliffWord& w);
CliffWord suffix_min(const CliffWord& w);

using Membership = std::function<bool(const CliffWord&)>;

// Unique minimal element of {w' in S : w <= w' <= top}; nullopt if empty,
// NotASublattice if not unique.
std::optional<CliffWord> minimal_above(const CliffWord& w, const CliffWord& top, const Membership& in_s);
// Unique maximal element of {w' in S : w' <= w}.
std::optional<CliffWord> maximal_below(const CliffWord& w, const Membership& in_s);

}  // namespace cliffs
