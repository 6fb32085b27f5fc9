#include <doctest.h>

#include "cliffs/bijections.hpp"
#include "cliffs/cliffs.hpp"
#include "cliffs/error.hpp"
#include "cliffs/operad.hpp"
#include "helpers.hpp"

using namespace cliffs;
using test::D;
using test::sum;
using test::W;

namespace {

OperadElement mono(Basis b, const char* w) { return OperadElement::monomial(b, W(w)); }

std::vector<CliffWord> perms(std::initializer_list<const char*> texts) {
  std::vector<CliffWord> out;
  for (const char* t : texts) {
    std::vector<std::size_t> sigma;
    for (const char* c = t; *c; ++c) sigma.push_back(static_cast<std::size_t>(*c - '0'));
    out.push_back(from_permutation(sigma));
  }
  return out;
}

}  // namespace

TEST_CASE("elementary composition goldens") {
  OperadContext c(D("1232"));
  CHECK(compose_E(c, W("002"), Slot(3), W("10")) == W("00102"));
  CHECK_FALSE(compose_E(c, W("002"), Slot(3), W("1311")).has_value());
  CHECK(compose(c, unit(Basis::E), Slot(1), mono(Basis::E, "0102")) == mono(Basis::E, "0102"));
  CHECK_THROWS_AS(compose_E(c, W("002"), Slot(5), W("10")), Error);
}

TEST_CASE("fundamental composition goldens") {
  OperadContext c(D("123454"));
  CHECK(compose_F(c, W("10"), Slot(2), W("021")) == sum(Basis::F, 6, {"10210", "10310"}));
  CHECK(compose_F(c, W("013"), Slot(2), W("103")) ==
        sum(Basis::F, 7, {"010313", "010314", "010413", "010414", "020313", "020314", "020413", "020414"}));
  CHECK(compose_F(c, W("0123"), Slot(3), W("")) == mono(Basis::F, "0123"));
  auto box = compose_F_interval(c, W("10"), Slot(2), W("021"));
  REQUIRE(box);
  CHECK(box->low() == W("10210"));
  CHECK(box->high() == W("10310"));
}

TEST_CASE("fundamental composition expansion limit") {
  OperadContext c(RangeMap::arithmetic(1, 13), 0, 100);
  CHECK_THROWS_AS(compose_F(c, W("0123456"), Slot(1), W("000000")), Error);
  auto box = compose_F_interval(c, W("0123456"), Slot(1), W("000000"));
  REQUIRE(box);
  CHECK(box->cardinality() == 823543);
}

TEST_CASE("homogeneous composition goldens") {
  OperadContext c(D("22342"));
  CHECK(compose_H(c, W("01"), Slot(3), W("221")) == W("01341"));
  CHECK(compose_H(c, W("2033"), Slot(3), W("12")) == W("201422"));
  CHECK(compose(c, unit(Basis::H), Slot(1), mono(Basis::H, "0134")) == mono(Basis::H, "0134"));
}

TEST_CASE("conversion goldens") {
  OperadContext c(D("224"));
  CHECK(convert(c, mono(Basis::F, "1221"), Basis::E) ==
        sum(Basis::E, 5, {"1221", "-1222", "-1231", "-2221", "1232", "2222", "2231", "-2232"}));
  // The defining sum over all cliffs below 2101 has twelve terms.
  OperadContext c2(D("3221"));
  CHECK(convert(c2, mono(Basis::H, "2101"), Basis::F) ==
        sum(Basis::F, 5, {"0000", "0001", "0100", "0101", "1000", "1001", "1100", "1101", "2000", "2001", "2100", "2101"}));
}

TEST_CASE("bilinearity") {
  OperadContext c(D("21"));
  CHECK(compose(c, sum(Basis::E, 2, {"0", "1"}), Slot(1), mono(Basis::E, "0")) == sum(Basis::E, 3, {"00", "01"}));
  CHECK(compose(c, mono(Basis::E, "1"), Slot(1), OperadElement(Basis::E, 2)).is_zero());
  CHECK_THROWS_AS(compose(c, mono(Basis::E, "1"), Slot(1), mono(Basis::F, "0")), Error);
}

TEST_CASE("conversions roundtrip") {
  for (const RangeMap& d : {D("1232"), D("3221"), RangeMap::arithmetic(2, 6)}) {
    OperadContext c(d);
    for (std::size_t n = 1; n <= 5; ++n)
      for (const auto& w : enumerate(d, n))
        for (Basis from : {Basis::E, Basis::F, Basis::H})
          for (Basis to : {Basis::E, Basis::F, Basis::H}) {
            OperadElement x = OperadElement::monomial(from, w, 3);
            CHECK(convert(c, convert(c, x, to), from) == x);
          }
  }
}

TEST_CASE("basis conjugation") {
  for (const RangeMap& d : {D("1232"), D("22342"), D("123454"), RangeMap::arithmetic(1, 6), RangeMap::constant(2)}) {
    OperadContext c(d);
    for (std::size_t total = 1; total <= 5; ++total)
      for (std::size_t su = 1; su <= total; ++su)
        for (const auto& u : enumerate(d, su))
          for (const auto& v : enumerate(d, total + 1 - su))
            for (std::size_t i = 1; i <= su; ++i) {
              CAPTURE(to_string(d));
              CAPTURE(to_string(u));
              CAPTURE(to_string(v));
              CAPTURE(i);
              OperadElement via_f = compose_F(c, u, Slot(i), v);
              CHECK(convert(c, via_f, Basis::E) == compose(c, convert(c, OperadElement::monomial(Basis::F, u), Basis::E),
                                                           Slot(i), convert(c, OperadElement::monomial(Basis::F, v), Basis::E)));
              OperadElement via_h = OperadElement::monomial(Basis::H, compose_H(c, u, Slot(i), v));
              CHECK(convert(c, via_h, Basis::E) == compose(c, convert(c, OperadElement::monomial(Basis::H, u), Basis::E),
                                                           Slot(i), convert(c, OperadElement::monomial(Basis::H, v), Basis::E)));
            }
  }
}

TEST_CASE("weakly increasing range maps give a suboperad") {
  for (const RangeMap& d : {D("1334"), RangeMap::arithmetic(1, 6), RangeMap::constant(1)})
    for (std::size_t su = 1; su <= 4; ++su)
      for (std::size_t sv = 1; su + sv <= 6; ++sv)
        for (const auto& u : enumerate(d, su))
          for (const auto& v : enumerate(d, sv))
            for (std::size_t i = 1; i <= su; ++i) CHECK(compose_E(OperadContext(d), u, Slot(i), v).has_value());
}

TEST_CASE("operad axioms") {
  for (const RangeMap& d : {RangeMap::arithmetic(1, 6), RangeMap::constant(2), D("1232"), D("22342")}) {
    OperadContext c(d);
    for (Basis b : {Basis::E, Basis::F, Basis::H}) {
      AxiomReport r = check_axioms(c, b, 4);
      CAPTURE(to_string(d));
      CAPTURE(basis_letter(b));
      CHECK(r.ok());
      CHECK(r.checked > 0);
    }
  }
  AxiomReport sampled = check_axioms(OperadContext(D("1232")), Basis::F, 5, 500);
  CHECK(sampled.ok());
}

TEST_CASE("non-unimodal range maps are rejected") {
  try {
    OperadContext c(D("100322422"));
    FAIL("expected NotUnimodal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_unimodal);
    auto w = unimodality_counterexample(D("100322422"));
    REQUIRE(w);
    CHECK(std::string(e.what()).find(to_string(*w)) != std::string::npos);
  }
  CHECK_NOTHROW(OperadContext(D("0110")));
  auto direct = direct_quotient_violation(D("0110"), W("11"), Slot(1), W("0"));
  REQUIRE(direct);
  CHECK(direct->w == W("011"));
  CHECK(to_string(*direct) == "E_{11} o_1 E_{0} = E_{011}");
}

TEST_CASE("operad on permutations") {
  OperadContext c(RangeMap::arithmetic(1, 9));
  auto uv = perms({"25143", "3142"});
  CHECK(compose_E(c, uv[0], Slot(3), uv[1]) == perms({"215369487"})[0]);
  OperadElement expected(Basis::F, 10);
  for (const auto& w : perms({"215369487", "251369487", "521369487", "235169487", "253169487", "523169487", "325169487",
                              "352169487", "532169487"}))
    expected.add(w, 1);
  CHECK(compose_F(c, uv[0], Slot(3), uv[1]) == expected);
  CHECK(compose_H(c, uv[0], Slot(3), uv[1]) == perms({"532169487"})[0]);
}

TEST_CASE("operad on compositions is the same in every basis") {
  OperadContext c(RangeMap::constant(1));
  CliffWord u = from_composition({1, 2, 1, 2, 2});
  CliffWord v = from_composition({2, 3, 1, 1});
  CliffWord w = from_composition({1, 2, 1, 2, 3, 1, 2, 2});
  CHECK(compose_E(c, u, Slot(5), v) == w);
  CHECK(compose_F(c, u, Slot(5), v) == OperadElement::monomial(Basis::F, w));
  CHECK(compose_H(c, u, Slot(5), v) == w);
}

TEST_CASE("formatting and serialization") {
  CHECK_THROWS_AS(sum(Basis::E, 6, {"00102", "011"}), Error);
  OperadElement y = sum(Basis::E, 6, {"00102", "01102"});
  y.add(W("01102"), 1);
  CHECK(to_string(y) == "E_00102 + 2*E_01102");
  CHECK(to_string(OperadElement(Basis::F, 3)) == "0");
  CHECK(to_string(unit(Basis::H)) == "H_eps");
  y.add(W("00102"), mpq_class(-3, 2));
  CHECK(element_from_json(to_json(y)) == y);
  CHECK(to_json(y) == to_json(element_from_json(to_json(y))));
  CHECK(to_json(mono(Basis::F, "01")) == R"({"basis":"F","arity":3,"terms":[{"word":"0,1","num":1,"den":1}]})");
  OperadContext c(D("1232"));
  CHECK_THROWS_AS(validate(c, mono(Basis::E, "0302")), Error);
}

TEST_CASE("the span of non-cliffs is an ideal exactly for weakly decreasing maps") {
  for (const RangeMap& d : {D("21"), D("3221"), RangeMap::constant(2), D("10")}) {
    CAPTURE(to_string(d));
    CHECK_FALSE(find_direct_quotient_violation(d, 5).has_value());
  }
  for (const RangeMap& d : {RangeMap::arithmetic(1, 6), D("0110"), D("1232"), D("1334")}) {
    CAPTURE(to_string(d));
    CHECK(find_direct_quotient_violation(d, 5).has_value());
  }
  auto w = direct_quotient_violation(RangeMap::arithmetic(1, 6), W("1"), Slot(1), W("0"));
  REQUIRE(w);
  CHECK(w->w == W("01"));
}
