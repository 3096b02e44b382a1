#include <doctest.h>

#include "support.hpp"
#include "ultra/error.hpp"
#include "ultra/fields.hpp"

using namespace ultra;

namespace {

const FieldDescriptor Q2 = FieldDescriptor::padic(2);
const FieldDescriptor L3 = FieldDescriptor::genlaurent(3);
const FieldDescriptor L3u = FieldDescriptor::genlaurent(3, true);

FieldElement el(const FieldDescriptor& F, const char* text) { return FieldElement::parse(F, text); }

}  // namespace

TEST_SUITE("fields") {
  TEST_CASE("descriptors") {
    CHECK(FieldDescriptor::parse("padic:2") == Q2);
    CHECK(FieldDescriptor::parse("genlaurent:3:u") == L3u);
    CHECK(L3u.to_string() == "genlaurent:3:u");
    CHECK(L3.dense());
    CHECK_FALSE(Q2.dense());
    CHECK(L3u.residue_field_infinite());
    CHECK_THROWS_AS(FieldDescriptor::parse("padic:4"), Error);
    CHECK_THROWS_AS(FieldDescriptor::parse("padic:2:u"), Error);
    CHECK_THROWS_AS(FieldDescriptor::parse("laurent:3"), Error);
  }

  TEST_CASE("valuation examples") {
    CHECK(valuation(el(Q2, "24")) == LogValue(3));
    CHECK(valuation(el(Q2, "3/8")) == LogValue(-3));
    CHECK(valuation(el(L3, "z^(1/3) + z")) == LogValue(make_rational(1, 3)));
    CHECK(valuation(FieldElement::zero(L3)).is_infinite());
  }

  TEST_CASE("arithmetic examples") {
    CHECK(field_arith(el(L3, "z + z^2"), el(L3, "z"), FieldOp::Mul) == el(L3, "z^2 + z^3"));
    CHECK(field_arith(el(L3, "z^(1/3)"), FieldElement::zero(L3), FieldOp::Invert) == el(L3, "z^(-1/3)"));
    CHECK(field_arith(el(Q2, "3/4"), FieldElement::zero(Q2), FieldOp::Invert) == el(Q2, "4/3"));
    CHECK(field_arith(el(L3, "z"), el(L3, "2*z"), FieldOp::Add).is_zero());
    CHECK_THROWS_AS(el(L3, "1 + z").inverse(), Error);
    CHECK_THROWS_AS(FieldElement::zero(Q2).inverse(), Error);
    CHECK_THROWS_AS(el(L3, "z") + el(L3u, "z"), Error);
  }

  TEST_CASE("residue examples") {
    CHECK(residue(el(L3u, "u^2 + z")) == FpRatio::u_power(3, 2));
    CHECK(residue(el(L3, "2 + z^(1/9)")) == FpRatio::constant(3, 2));
    CHECK_THROWS_AS(residue(el(L3, "z")), Error);
    CHECK(residue(el(Q2, "3/5")) == FpRatio::constant(2, 1));
  }

  TEST_CASE("monomial_with_valuation examples") {
    CHECK(monomial_with_valuation(L3, LogValue(make_rational(5, 9))) == el(L3, "z^(5/9)"));
    CHECK(monomial_with_valuation(Q2, LogValue(3)) == el(Q2, "8"));
    CHECK_THROWS_AS(monomial_with_valuation(Q2, LogValue(make_rational(1, 2))), Error);
    CHECK_THROWS_AS(monomial_with_valuation(L3, LogValue::sqrt2()), Error);
    auto x = monomial_with_valuation(L3u, LogValue(2), FpRatio::u_power(3, 1));
    CHECK(x == el(L3u, "u*z^2"));
    CHECK(x.leading_coefficient() == FpRatio::u_power(3, 1));
  }

  TEST_CASE("text round trip") {
    testing::Gen g(21);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 100; ++i) {
        auto x = g.element(F);
        REQUIRE(FieldElement::parse(F, x.to_string()) == x);
      }
  }

  TEST_CASE("valuation is multiplicative on 500 random pairs per field") {
    testing::Gen g(22);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 500; ++i) {
        auto x = g.element(F), y = g.element(F);
        REQUIRE(valuation(x * y) == valuation(x) + valuation(y));
      }
  }

  TEST_CASE("ultrametric inequality, with equality when valuations differ") {
    testing::Gen g(23);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 500; ++i) {
        auto x = g.element(F), y = g.element(F);
        LogValue m = min(valuation(x), valuation(y));
        REQUIRE(valuation(x + y) >= m);
        if (valuation(x) != valuation(y)) REQUIRE(valuation(x + y) == m);
      }
  }

  TEST_CASE("residue is multiplicative on units") {
    testing::Gen g(24);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 300; ++i) {
        auto x = g.element(F), y = g.element(F);
        auto ux = x * monomial_with_valuation(F, -valuation(x));
        auto uy = y * monomial_with_valuation(F, -valuation(y));
        REQUIRE(valuation(ux) == LogValue(0));
        REQUIRE(residue(ux * uy) == residue(ux) * residue(uy));
      }
  }

  TEST_CASE("ring axioms on random triples") {
    testing::Gen g(25);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 200; ++i) {
        auto x = g.element(F), y = g.element(F), w = g.element(F);
        REQUIRE((x + y) * w == x * w + y * w);
        REQUIRE((x * y) * w == x * (y * w));
        REQUIRE(x - x == FieldElement::zero(F));
      }
  }
}
