#pragma once

#include <gmpxx.h>

#include <vector>

#include "cliffs/range_map.hpp"
#include "cliffs/word.hpp"

namespace cliffs {

bool is_cliff(const RangeMap& delta, const CliffWord& w);
bool is_hill(const RangeMap& delta, const CliffWord& w);

// Letterwise minimum with delta.
CliffWord reduce(const RangeMap& delta, const CliffWord& w);

// All delta-cliffs (or delta-hills) of the given size, in lexicographic order.
std::vector<CliffWord> enumerate(const RangeMap& delta, std::size_t size, bool hills = false);

// Closed forms for constant and truncated arithmetic maps, direct product or
// dynamic programming otherwise.
mpz_class count(const RangeMap& delta, std::size_t size, bool hills = false);

mpz_class binomial(unsigned long n, unsigned long k);
// cat_m(n) = binom(mn + n, n) / (mn + 1)
mpz_class fuss_catalan(unsigned long m, unsigned long n);

// Throws NotACliff unless w is a delta-cliff (and weakly increasing if hills).
void require_cliff(const RangeMap& delta, const CliffWord& w, bool hills = false);

}  // namespace cliffs
