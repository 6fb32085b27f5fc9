#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cliffs/free_operad.hpp"
#include "cliffs/series.hpp"
#include "cliffs/word.hpp"

namespace cliffs {

// outer o_slot inner, slot in {1, 2}, over binary generators.
struct ArityThreeTerm {
  std::size_t outer = 0;
  std::size_t slot = 1;
  std::size_t inner = 0;
  friend auto operator<=>(const ArityThreeTerm&, const ArityThreeTerm&) = default;
};

using QuadraticRelation = std::map<ArityThreeTerm, mpq_class>;

struct BinaryPresentation {
  std::vector<std::string> labels;  // one per binary generator
  std::vector<QuadraticRelation> relations;
  std::size_t generators() const noexcept { return labels.size(); }
};

// Generators E_0..E_c and the quadratic relations of the hill operad of const:c.
BinaryPresentation hi_c_presentation(Letter c);
// Its Koszul dual on E*_0..E*_c.
BinaryPresentation dual_presentation(Letter c);
// The relations of the dual rewritten on K*_b = sum_{a <= b} E*_a, expanded on E*.
BinaryPresentation kstar_presentation(Letter c);
// Orthogonal of the relations for the pairing <x o_1 y, x* o_1 y*> = 1,
// <x o_2 y, x* o_2 y*> = -1.
BinaryPresentation annihilator_presentation(const BinaryPresentation& p);

// Coordinates in the 2g^2-dimensional space of arity-3 trees.
std::size_t coordinate(const ArityThreeTerm& t, std::size_t generators);
FreeTerm to_free_term(const ArityThreeTerm& t);

std::size_t relation_rank(const BinaryPresentation& p);
bool span_equal(const BinaryPresentation& a, const BinaryPresentation& b);

// dim of the quotient of the free operad by the ideal of the relations, for
// arities 1..max_arity.
std::vector<std::size_t> quotient_dimensions(const BinaryPresentation& p, std::size_t max_arity,
                                             double budget_seconds = 0);

// G(t) = sum binom(n+c-1, c) t^n and F(t) = sum cat_c(n) t^n, truncated.
TruncatedSeries hill_series(Letter c, std::size_t order);
TruncatedSeries dual_series(Letter c, std::size_t order);
// F(-G(-t)) truncated at the given order.
TruncatedSeries inversion_check(Letter c, std::size_t order);

std::string to_string(const BinaryPresentation& p);
std::string to_json(const BinaryPresentation& p);

}  // namespace cliffs
