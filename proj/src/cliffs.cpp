#include "cliffs/cliffs.hpp"

#include <algorithm>

#include "cliffs/error.hpp"

namespace cliffs {

bool is_cliff(const RangeMap& delta, const CliffWord& w) {
  delta.check_length(w.length());
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w[i] > delta(i + 1)) return false;
  return true;
}

bool is_hill(const RangeMap& delta, const CliffWord& w) {
  if (!is_cliff(delta, w)) return false;
  return std::is_sorted(w.begin(), w.end());
}

void require_cliff(const RangeMap& delta, const CliffWord& w, bool hills) {
  if (!is_cliff(delta, w))
    throw Error(Errc::not_a_cliff, to_string(w) + " is not a cliff of " + to_string(delta));
  if (hills && !std::is_sorted(w.begin(), w.end()))
    throw Error(Errc::not_a_hill, to_string(w) + " is not a hill of " + to_string(delta));
}

CliffWord reduce(const RangeMap& delta, const CliffWord& w) {
  delta.check_length(w.length());
  CliffWord out = w;
  for (std::size_t i = 0; i < w.length(); ++i) out[i] = std::min(w[i], delta(i + 1));
  return out;
}

namespace {

void extend(const std::vector<Letter>& bounds, bool hills, std::vector<Letter>& current,
            std::vector<CliffWord>& out) {
  std::size_t i = current.size();
  if (i == bounds.size()) {
    out.emplace_back(current);
    return;
  }
  Letter start = (hills && i > 0) ? current.back() : 0;
  for (Letter a = start; a <= bounds[i]; ++a) {
    current.push_back(a);
    extend(bounds, hills, current, out);
    current.pop_back();
  }
}

std::vector<Letter> bounds_for(const RangeMap& delta, std::size_t size) {
  if (size == 0) throw Error(Errc::invalid_argument, "sizes start at 1");
  delta.check_length(size - 1);
  std::vector<Letter> bounds(size - 1);
  for (std::size_t i = 0; i + 1 < size; ++i) bounds[i] = delta(i + 1);
  return bounds;
}

}  // namespace

std::vector<CliffWord> enumerate(const RangeMap& delta, std::size_t size, bool hills) {
  auto bounds = bounds_for(delta, size);
  std::vector<CliffWord> out;
  std::vector<Letter> current;
  current.reserve(bounds.size());
  extend(bounds, hills, current, out);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class fuss_catalan(unsigned long m, unsigned long n) {
  mpz_class r = binomial(m * n + n, n);
  r /= static_cast<unsigned long>(m * n + 1);
  return r;
}

mpz_class count(const RangeMap& delta, std::size_t size, bool hills) {
  auto bounds = bounds_for(delta, size);
  std::size_t n = size;
  if (delta.is_constant()) {
    Letter c = delta.tail();
    if (hills) return binomial(n + c - 1, c);
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), c + 1, n - 1);
    return r;
  }
  if (delta.arithmetic_step()) {
    unsigned long m = *delta.arithmetic_step();
    if (hills) return fuss_catalan(m, n - 1);
    mpz_class r = 1;
    for (std::size_t i = 1; i + 1 <= n; ++i) r *= static_cast<unsigned long>(1 + (i - 1) * m);
    return r;
  }
  if (!hills) {
    mpz_class r = 1;
    for (Letter b : bounds) r *= static_cast<unsigned long>(b) + 1;
    return r;
  }
  // ways[a] = number of hill prefixes ending in letter a
  Letter top = bounds.empty() ? 0 : *std::max_element(bounds.begin(), bounds.end());
  std::vector<mpz_class> ways(top + 1, 0);
  ways[0] = 1;
  for (Letter b : bounds) {
    std::vector<mpz_class> next(top + 1, 0);
    mpz_class running = 0;
    for (Letter a = 0; a <= top; ++a) {
      running += ways[a];
      if (a <= b) next[a] = running;
    }
    ways = std::move(next);
  }
  mpz_class total = 0;
  for (auto& x : ways) total += x;
  return total;
}

}  // namespace cliffs
