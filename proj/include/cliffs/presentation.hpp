#pragma once

#include <string>
#include <vector>

#include "cliffs/free_operad.hpp"
#include "cliffs/hills.hpp"
#include "cliffs/operad.hpp"

namespace cliffs {

// Either Cl_delta or one of its quotients, seen through its E basis where
// compositions are monomials. Does not own the context.
class Target {
 public:
  Target(const OperadContext& ctx) : ctx_(&ctx) {}        // NOLINT
  Target(const QuotientContext& q) : ctx_(&q.base()), q_(&q) {}  // NOLINT

  const RangeMap& delta() const noexcept { return ctx_->delta(); }
  bool is_quotient() const noexcept { return q_ != nullptr; }
  std::string describe() const;

  std::vector<CliffWord> basis_words(std::size_t size) const;
  bool contains(const CliffWord& w) const;
  std::optional<CliffWord> compose(const CliffWord& u, std::size_t i, const CliffWord& v) const;

 private:
  const OperadContext* ctx_;
  const QuotientContext* q_ = nullptr;
};

// No factorisation w = u white_i v with u, v nonempty delta-cliffs.
bool is_prime(const OperadContext& ctx, const CliffWord& w);
// Recursive test on the last letter for truncated arithmetic maps with m >= 1.
bool is_prime_arithmetic_fast(Letter m, const CliffWord& w);

// words[n] lists the generators of arity n; words[0] and words[1] are empty.
using GradedWords = std::vector<std::vector<CliffWord>>;

// The words of the target not obtained as a composition of two smaller
// nontrivial words; for Cl_delta these are the delta-prime cliffs.
GradedWords generating_set(const Target& target, std::size_t max_arity);
// counts[n - 1] = number of generators of arity n, for n = 1..max_arity.
std::vector<std::size_t> generator_counts(const Target& target, std::size_t max_arity);

struct Generators {
  std::vector<CliffWord> words;
  Alphabet alphabet;
  std::vector<std::string> labels;
};
Generators flatten(const GradedWords& graded);

// Value of a tree in the E basis; nullopt when it vanishes.
std::optional<CliffWord> evaluate_word(const Target& target, const Generators& gens, const FreeTerm& t);
OperadElement evaluate(const Target& target, const Generators& gens, const FreeTerm& t);

struct RelationProfileRow {
  std::size_t arity = 0;
  std::size_t dim_free = 0;
  std::size_t dim_target = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_ideal = 0;
  std::size_t dim_minimal = 0;
};

struct RelationProfileOptions {
  double budget_seconds = 0;  // 0: unlimited
  bool reverse_order = false;
  unsigned jobs = 1;
};

struct RelationProfile {
  std::vector<std::size_t> generator_counts;
  std::vector<RelationProfileRow> rows;
  // False when the budget ran out; rows then holds the arities finished.
  bool complete = true;
  std::string stopped_reason;
};

// Per arity n: the kernel K(n) of the evaluation map from trees over the
// generators, the part I(n) of it generated by K at lower arities through
// compositions with trees, and dim K(n) - dim I(n), the number of relations of
// arity n in a minimal presentation.
RelationProfile relation_profile(const Target& target, std::size_t max_arity,
                                 const RelationProfileOptions& options = {});

}  // namespace cliffs
