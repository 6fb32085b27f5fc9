#include <doctest.h>

#include <set>

#include "cliffs/cliffs.hpp"
#include "cliffs/error.hpp"
#include "cliffs/free_operad.hpp"
#include "cliffs/hills.hpp"
#include "cliffs/presentation.hpp"
#include "helpers.hpp"

using namespace cliffs;
using test::D;
using test::W;

namespace {

std::vector<std::size_t> minimal_dims(const RelationProfile& p) {
  std::vector<std::size_t> out;
  for (const auto& r : p.rows) out.push_back(r.dim_minimal);
  return out;
}

std::int32_t index_of(const Generators& g, const CliffWord& w) {
  for (std::size_t k = 0; k < g.words.size(); ++k)
    if (g.words[k] == w) return static_cast<std::int32_t>(k);
  FAIL("missing generator " << to_string(w));
  return -1;
}

}  // namespace

TEST_CASE("prime cliffs") {
  OperadContext c(D("1223321"));
  CHECK(is_prime(c, W("10033")));
  CHECK(is_prime(c, W("121332")));
  CHECK_FALSE(is_prime(c, W("11222")));
  OperadContext dec(D("21"));
  for (const auto& w : enumerate(dec.delta(), 2)) CHECK(is_prime(dec, w));
  CHECK(generating_set(Target(dec), 5)[2] == std::vector<CliffWord>{W("0"), W("1"), W("2")});
  CHECK(is_prime(c, W("1")));
}

TEST_CASE("fast prime test agrees with the definition") {
  CHECK(is_prime_arithmetic_fast(1, W("012")));
  CHECK_FALSE(is_prime_arithmetic_fast(1, W("010")));
  CHECK(is_prime_arithmetic_fast(1, W("002")));
  CHECK_THROWS_AS(is_prime_arithmetic_fast(0, W("0")), Error);
  for (Letter m : {1u, 2u}) {
    OperadContext c(RangeMap::arithmetic(m, 7));
    for (std::size_t n = 2; n <= 7; ++n)
      for (const auto& w : enumerate(c.delta(), n)) {
        CAPTURE(to_string(w));
        CHECK(is_prime(c, w) == is_prime_arithmetic_fast(m, w));
      }
  }
}

TEST_CASE("generating sets") {
  OperadContext c(D("1221"));
  GradedWords g = generating_set(Target(c), 7);
  std::vector<CliffWord> all;
  for (const auto& level : g) all.insert(all.end(), level.begin(), level.end());
  CHECK(all == std::vector<CliffWord>{W("0"), W("1"), W("02"), W("12"), W("022"), W("122")});

  auto hi = QuotientContext::hills(OperadContext(RangeMap::arithmetic(1, 6)));
  GradedWords gh = generating_set(Target(hi), 6);
  std::vector<std::size_t> counts;
  for (std::size_t n = 2; n <= 6; ++n) {
    counts.push_back(gh[n].size());
    for (const auto& w : gh[n]) CHECK(w[w.length() - 1] == w.length() - 1);
  }
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 5, 14});

  OperadContext k(RangeMap::constant(3));
  GradedWords gk = generating_set(Target(k), 6);
  CHECK(gk[2] == std::vector<CliffWord>{W("0"), W("1"), W("2"), W("3")});
  for (std::size_t n = 3; n <= 6; ++n) CHECK(gk[n].empty());
}

TEST_CASE("generator counts") {
  CHECK(generator_counts(Target(OperadContext(RangeMap::arithmetic(1, 8))), 7) ==
        std::vector<std::size_t>{0, 1, 1, 3, 12, 60, 360});
  CHECK(generator_counts(Target(OperadContext(RangeMap::arithmetic(2, 7))), 6) ==
        std::vector<std::size_t>{0, 1, 2, 10, 70, 630});
  auto hi2 = QuotientContext::hills(OperadContext(RangeMap::arithmetic(2, 7)));
  CHECK(generator_counts(Target(hi2), 6) == std::vector<std::size_t>{0, 1, 2, 7, 29, 133});
  for (Letter m : {1u, 2u}) {
    OperadContext c(RangeMap::arithmetic(m, 8));
    auto counts = generator_counts(Target(c), 7);
    for (std::size_t n = 3; n <= 7; ++n) CHECK(mpz_class(counts[n - 1]) * (m + 1) == count(c.delta(), n) * m);
  }
  auto hi1 = QuotientContext::hills(OperadContext(RangeMap::arithmetic(1, 8)));
  auto h = generator_counts(Target(hi1), 7);
  for (std::size_t n = 2; n <= 7; ++n) CHECK(h[n - 1] == fuss_catalan(1, n - 2));
}

TEST_CASE("non-finitely generated operads") {
  OperadContext c(D("112"));
  Target t(c);
  auto counts = generator_counts(t, 7);
  // Every length-2 cliff of 112 splits into letters, so arity 3 has no generator.
  CHECK(counts[2] == 0);
  for (std::size_t n = 4; n <= 7; ++n) CHECK(counts[n - 1] > 0);
  for (std::size_t k = 1; k <= 5; ++k) {
    std::vector<Letter> prefix;
    for (std::size_t j = 1; j <= k; ++j) prefix.push_back(c.delta()(j));
    CliffWord top(prefix);
    CHECK(t.compose(top, 1, W("0")) == t.compose(W("0"), 2, top));
  }
}

TEST_CASE("free terms") {
  Alphabet binary{{2}};
  CHECK(free_terms(binary, 1).size() == 1);
  CHECK(free_terms(binary, 3).size() == 2);
  CHECK(free_terms(binary, 4).size() == 5);
  Alphabet m1{{2, 3, 4, 4, 4}};
  CHECK(free_terms(m1, 4).size() == 13);
  FreeTermTable table(m1);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto& terms = table.terms(n);
    std::set<FreeTerm> distinct(terms.begin(), terms.end());
    CHECK(distinct.size() == terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
      CHECK(terms[k].arity() == n);
      CHECK(table.index_of(terms[k]) == k);
    }
  }
  CHECK(graft(FreeTerm{{0, -1, -1}}, 2, FreeTerm{{0, -1, -1}}) == FreeTerm{{0, -1, 0, -1, -1}});
  CHECK(to_string(FreeTerm{{0, -1, 0, -1, -1}}, binary, {"a"}) == "a(_,a(_,_))");
}

TEST_CASE("evaluation") {
  OperadContext c(RangeMap::arithmetic(1, 6));
  Target t(c);
  Generators g = flatten(generating_set(t, 4));
  std::int32_t zero = index_of(g, W("0")), g002 = index_of(g, W("002")), g01 = index_of(g, W("01")),
               g012 = index_of(g, W("012"));
  FreeTerm lhs{{g002, -1, -1, g01, -1, -1, -1, -1}};
  FreeTerm rhs{{zero, -1, zero, -1, g012, -1, -1, -1, -1}};
  CHECK(evaluate_word(t, g, lhs) == W("00012"));
  CHECK(evaluate(t, g, lhs) - evaluate(t, g, rhs) == OperadElement(Basis::E, 6));
  CHECK(evaluate_word(t, g, FreeTerm{{zero, -1, -1}}) == W("0"));
  CHECK(evaluate_word(t, g, FreeTerm{{zero, zero, -1, -1, -1}}) == W("00"));
  CHECK(evaluate(t, g, FreeTerm::leaf()) == OperadElement::monomial(Basis::E, W("")));
}

TEST_CASE("nonquadratic relation") {
  for (Letter m : {1u, 2u}) {
    OperadContext c(RangeMap::arithmetic(m, 6));
    Target t(c);
    auto lhs = t.compose(W("002"), 3, W("01"));
    auto inner = t.compose(W("0"), 2, W("0"));
    REQUIRE(inner);
    auto rhs = t.compose(*inner, 3, W("012"));
    REQUIRE(lhs);
    CHECK(lhs == W("00012"));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generators span every cliff") {
  for (const RangeMap& d : {RangeMap::arithmetic(1, 5), D("1221"), D("1232")}) {
    OperadContext c(d);
    Target t(c);
    Generators g = flatten(generating_set(t, 5));
    FreeTermTable table(g.alphabet);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::set<CliffWord> reached;
      for (const auto& term : table.terms(n))
        if (auto w = evaluate_word(t, g, term)) reached.insert(*w);
      auto words = enumerate(d, n);
      CHECK(reached == std::set<CliffWord>(words.begin(), words.end()));
    }
  }
}

TEST_CASE("relation dimensions") {
  OperadContext m0(RangeMap::constant(0));
  CHECK(minimal_dims(relation_profile(Target(m0), 7)) == std::vector<std::size_t>{0, 0, 1, 0, 0, 0, 0});
  OperadContext m1(RangeMap::arithmetic(1, 6));
  RelationProfile p = relation_profile(Target(m1), 6);
  CHECK(p.complete);
  CHECK(minimal_dims(p) == std::vector<std::size_t>{0, 0, 1, 3, 13, 65});
  for (const auto& r : p.rows) {
    CHECK(r.dim_kernel == r.dim_free - r.dim_target);
    CHECK(r.dim_ideal <= r.dim_kernel);
  }
  RelationProfileOptions reversed;
  reversed.reverse_order = true;
  CHECK(minimal_dims(relation_profile(Target(m1), 6, reversed)) == minimal_dims(p));
  auto hi = QuotientContext::hills(OperadContext(RangeMap::arithmetic(1, 6)));
  CHECK(minimal_dims(relation_profile(Target(hi), 6)) == std::vector<std::size_t>{0, 0, 1, 3, 10, 35});
  OperadContext m2(RangeMap::arithmetic(2, 5));
  CHECK(minimal_dims(relation_profile(Target(m2), 5)) == std::vector<std::size_t>{0, 0, 1, 6, 44});
  auto hi2 = QuotientContext::hills(OperadContext(RangeMap::arithmetic(2, 5)));
  CHECK(minimal_dims(relation_profile(Target(hi2), 5, reversed)) == std::vector<std::size_t>{0, 0, 1, 6, 35});
}

TEST_CASE("relation profile honours the budget") {
  OperadContext m1(RangeMap::arithmetic(1, 7));
  RelationProfileOptions tiny;
  tiny.budget_seconds = 1e-9;
  RelationProfile p = relation_profile(Target(m1), 7, tiny);
  CHECK_FALSE(p.complete);
  CHECK(p.rows.size() < 7);
  CHECK_FALSE(p.stopped_reason.empty());
}
