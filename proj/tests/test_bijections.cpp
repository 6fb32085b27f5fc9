#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cliffs/bijections.hpp"
#include "cliffs/cliffs.hpp"
#include "cliffs/error.hpp"
#include "cliffs/order.hpp"
#include "helpers.hpp"

using namespace cliffs;
using test::W;

namespace {

using Seq = std::vector<std::size_t>;

// Ordinate of each east step.
std::vector<std::size_t> east_heights(const std::string& path) {
  std::vector<std::size_t> out;
  std::size_t y = 0;
  for (char s : path) {
    if (s == 'N') ++y;
    else out.push_back(y);
  }
  return out;
}

bool weakly_above(const std::string& upper, const std::string& lower) {
  auto a = east_heights(upper), b = east_heights(lower);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("compositions") {
  CHECK(to_composition(W("1100010")) == Seq{1, 1, 4, 2});
  CHECK(to_composition(W("")) == Seq{1});
  CHECK(to_composition(W("000")) == Seq{4});
  CHECK(from_composition({1, 1, 4, 2}) == W("1100010"));
  CHECK_THROWS_AS(to_composition(W("012")), Error);
  CHECK_THROWS_AS(from_composition({2, 0, 1}), Error);
  CHECK_THROWS_AS(from_composition({}), Error);
}

TEST_CASE("permutations") {
  CHECK(to_permutation(W("002323")) == Seq{4, 3, 6, 5, 1, 2});
  CHECK(from_permutation({4, 3, 6, 5, 1, 2}) == W("002323"));
  CHECK(to_permutation(W("0000")) == Seq{1, 2, 3, 4});
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<Letter> code(k);
    std::iota(code.begin(), code.end(), 0);
    Seq reverse(k);
    std::iota(reverse.rbegin(), reverse.rend(), 1);
    CHECK(to_permutation(CliffWord(code)) == reverse);
  }
  CHECK_THROWS_AS(to_permutation(W("02")), Error);
  CHECK_THROWS_AS(from_permutation({1, 1, 3}), Error);
  CHECK_THROWS_AS(from_permutation({0, 1}), Error);
}

TEST_CASE("increasing trees") {
  CHECK(to_string(to_tree(1, W("0"))) == "(1 . .)");
  CHECK(to_string(to_tree(1, W("00"))) == "(1 (2 . .) .)");
  CHECK(to_string(to_tree(1, W("01"))) == "(1 . (2 . .))");
  CHECK(to_string(to_tree(1, W(""))) == ".");
  CHECK(from_tree(2, to_tree(2, W("0230228"))) == W("0230228"));
  CHECK(from_tree(1, parse_tree(1, "(1 (2 . .) .)")) == W("00"));
  CHECK_THROWS_AS(from_tree(1, parse_tree(1, "(2 (1 . .) .)")), Error);
  CHECK_THROWS_AS(from_tree(1, parse_tree(1, "(1 (3 . .) .)")), Error);
  CHECK_THROWS_AS(parse_tree(1, "(1 . . .)"), Error);
  CHECK_THROWS_AS(parse_tree(1, "(1 . "), Error);
  CHECK_THROWS_AS(to_tree(1, W("02")), Error);
}

TEST_CASE("rectangular paths") {
  CHECK(to_rect_path(4, W("1111244")) == "NEEEENENNEE");
  CHECK(from_rect_path(4, "NEEEENENNEE") == W("1111244"));
  CHECK(to_rect_path(3, W("")) == "NNN");
  CHECK(to_rect_path(0, W("000")) == "EEE");
  CHECK_THROWS_AS(to_rect_path(2, W("10")), Error);
  CHECK_THROWS_AS(from_rect_path(2, "NEE"), Error);
  CHECK_THROWS_AS(from_rect_path(2, "NXN"), Error);
}

TEST_CASE("dyck paths") {
  CHECK(from_dyck_path(2, to_dyck_path(2, W("02366"))) == W("02366"));
  CHECK(to_dyck_path(2, W("000")) == "UUUDDDDDD");
  CHECK(to_dyck_path(1, W("01")) == "UDUD");
  CHECK_THROWS_AS(from_dyck_path(1, "DU"), Error);
  CHECK_THROWS_AS(from_dyck_path(1, "UUD"), Error);
  CHECK_THROWS_AS(to_dyck_path(1, W("10")), Error);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::string> paths;
    for (const auto& w : enumerate(RangeMap::arithmetic(1, 7), n, true)) paths.insert(to_dyck_path(1, w));
    CHECK(paths.size() == fuss_catalan(1, n - 1));
  }
}

TEST_CASE("roundtrips") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& w : enumerate(RangeMap::constant(1), n)) CHECK(from_composition(to_composition(w)) == w);
    std::set<Seq> seen;
    for (const auto& w : enumerate(RangeMap::arithmetic(1, 7), n)) {
      Seq p = to_permutation(w);
      CHECK(from_permutation(p) == w);
      CHECK(std::is_permutation(p.begin(), p.end(), [&] {
        Seq id(n - 1);
        std::iota(id.begin(), id.end(), 1);
        return id;
      }().begin()));
      seen.insert(p);
    }
    CHECK(mpz_class(seen.size()) == count(RangeMap::arithmetic(1, 7), n));
    for (Letter c = 0; c <= 3; ++c)
      for (const auto& w : enumerate(RangeMap::constant(c), n, true)) CHECK(from_rect_path(c, to_rect_path(c, w)) == w);
    for (Letter m = 1; m <= 2; ++m)
      for (const auto& w : enumerate(RangeMap::arithmetic(m, 7), n, true)) CHECK(from_dyck_path(m, to_dyck_path(m, w)) == w);
  }
  for (std::size_t n = 1; n <= 6; ++n)
    for (Letter m = 1; m <= 2; ++m)
      for (const auto& w : enumerate(RangeMap::arithmetic(m, 6), n)) {
        IncreasingTree t = to_tree(m, w);
        CHECK(from_tree(m, t) == w);
        CHECK(from_tree(m, parse_tree(m, to_string(t))) == w);
      }
}

TEST_CASE("rectangular paths transport the order") {
  for (Letter c = 0; c <= 3; ++c)
    for (std::size_t n = 1; n <= 6; ++n) {
      auto hills = enumerate(RangeMap::constant(c), n, true);
      for (const auto& u : hills)
        for (const auto& v : hills) CHECK(leq(u, v) == weakly_above(to_rect_path(c, v), to_rect_path(c, u)));
    }
}

TEST_CASE("sequence text") {
  CHECK(format_sequence({4, 3, 6}) == "436");
  CHECK(format_sequence({10, 2}) == "10,2");
  CHECK(parse_sequence("436") == Seq{4, 3, 6});
  CHECK(parse_sequence("10,2") == Seq{10, 2});
}
