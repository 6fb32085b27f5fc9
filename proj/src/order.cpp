#include "cliffs/order.hpp"

#include <algorithm>

#include "cliffs/error.hpp"

namespace cliffs {

namespace {

void same_length(const CliffWord& u, const CliffWord& v) {
  if (u.length() != v.length())
    throw Error(Errc::length_mismatch, "'" + to_string(u) + "' and '" + to_string(v) + "' differ in length");
}

}  // namespace

bool leq(const CliffWord& u, const CliffWord& v) {
  same_length(u, v);
  for (std::size_t i = 0; i < u.length(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

CliffWord meet(const CliffWord& u, const CliffWord& v) {
  same_length(u, v);
  CliffWord out = u;
  for (std::size_t i = 0; i < u.length(); ++i) out[i] = std::min(u[i], v[i]);
  return out;
}

CliffWord join(const CliffWord& u, const CliffWord& v) {
  same_length(u, v);
  CliffWord out = u;
  for (std::size_t i = 0; i < u.length(); ++i) out[i] = std::max(u[i], v[i]);
  return out;
}

int moebius(const CliffWord& u, const CliffWord& v) {
  if (!leq(u, v)) throw Error(Errc::not_comparable, "'" + to_string(u) + "' is not below '" + to_string(v) + "'");
  int sign = 1;
  for (std::size_t i = 0; i < u.length(); ++i) {
    Letter gap = v[i] - u[i];
    if (gap == 1) sign = -sign;
    else if (gap > 1) return 0;
  }
  return sign;
}

Interval::Interval(CliffWord low, CliffWord high) : low_(std::move(low)), high_(std::move(high)) {
  if (!leq(low_, high_))
    throw Error(Errc::not_comparable, "empty interval [" + to_string(low_) + ", " + to_string(high_) + "]");
}

bool Interval::contains(const CliffWord& w) const {
  if (w.length() != low_.length()) return false;
  return leq(low_, w) && leq(w, high_);
}

mpz_class Interval::cardinality() const {
  mpz_class r = 1;
  for (std::size_t i = 0; i < low_.length(); ++i) r *= static_cast<unsigned long>(high_[i] - low_[i] + 1);
  return r;
}

void Interval::for_each(const std::function<bool(const CliffWord&)>& visit) const {
  CliffWord w = low_;
  while (true) {
    if (!visit(w)) return;
    std::size_t i = w.length();
    while (i > 0 && w[i - 1] == high_[i - 1]) {
      w[i - 1] = low_[i - 1];
      --i;
    }
    if (i == 0) return;
    ++w[i - 1];
  }
}

std::vector<CliffWord> interval_enumerate(const Interval& box, const RangeMap* hills_of) {
  std::vector<CliffWord> out;
  box.for_each([&](const CliffWord& w) {
    if (hills_of) {
      hills_of->check_length(w.length());
      bool ok = std::is_sorted(w.begin(), w.end());
      for (std::size_t i = 0; ok && i < w.length(); ++i) ok = w[i] <= (*hills_of)(i + 1);
      if (!ok) return true;
    }
    out.push_back(w);
    return true;
  });
  return out;
}

CliffWord running_max(const CliffWord& w) {
  CliffWord out = w;
  for (std::size_t i = 1; i < out.length(); ++i) out[i] = std::max(out[i], out[i - 1]);
  return out;
}

CliffWord suffix_min(const CliffWord& w) {
  CliffWord out = w;
  for (std::size_t i = out.length(); i-- > 1;) out[i - 1] = std::min(out[i - 1], out[i]);
  return out;
}

std::optional<CliffWord> minimal_above(const CliffWord& w, const CliffWord& top, const Membership& in_s) {
  if (!leq(w, top)) return std::nullopt;
  std::vector<CliffWord> found;
  Interval(w, top).for_each([&](const CliffWord& x) {
    if (!in_s(x)) return true;
    for (const auto& y : found)
      if (leq(y, x)) return true;
    found.erase(std::remove_if(found.begin(), found.end(), [&](const CliffWord& y) { return leq(x, y); }),
                found.end());
    found.push_back(x);
    return true;
  });
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw Error(Errc::not_a_sublattice, "no unique minimum above " + to_string(w));
  return found.front();
}

std::optional<CliffWord> maximal_below(const CliffWord& w, const Membership& in_s) {
  std::vector<CliffWord> found;
  Interval(CliffWord(std::vector<Letter>(w.length(), 0)), w).for_each([&](const CliffWord& x) {
    if (!in_s(x)) return true;
    found.erase(std::remove_if(found.begin(), found.end(), [&](const CliffWord& y) { return leq(y, x); }),
                found.end());
    for (const auto& y : found)
      if (leq(x, y)) return true;
    found.push_back(x);
    return true;
  });
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw Error(Errc::not_a_sublattice, "no unique maximum below " + to_string(w));
  return found.front();
}

}  // namespace cliffs
