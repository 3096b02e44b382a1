#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "ultra/error.hpp"
#include "ultra/ratfun.hpp"

using namespace ultra;

namespace {

const FieldDescriptor Q2 = FieldDescriptor::padic(2);
const FieldDescriptor L3 = FieldDescriptor::genlaurent(3);

Poly poly(const FieldDescriptor& F, const char* text) {
  RatFun f = RatFun::parse(F, text);
  REQUIRE(f.den().degree() == 0);
  return f.num().scaled(f.den().leading().inverse());
}

std::vector<LogValue> slope_multiset(const NewtonPolygon& np) {
  std::vector<LogValue> out;
  for (const auto& s : np.slopes)
    for (long i = 0; i < s.multiplicity; ++i) out.push_back(s.slope);
  return out;
}

}  // namespace

TEST_SUITE("ratfun") {
  TEST_CASE("combine examples") {
    auto lam = FieldElement::parse(L3, "z^(1/3)");
    RatFun x(Poly::linear(lam));
    CHECK(ratfun_combine(x, x, RatFunOp::Invert) == RatFun(Poly::constant(FieldElement::one(L3)), Poly::linear(lam)));
    RatFun t = RatFun::variable(L3);
    CHECK(ratfun_combine(t, RatFun::constant(lam), RatFunOp::Add) == RatFun::parse(L3, "t + z^(1/3)"));
    RatFun pq = RatFun::parse(L3, "(t - z)/(t^2 + z^(1/3))");
    CHECK(ratfun_combine(pq, pq.inverse(), RatFunOp::Mul) == RatFun::constant(FieldElement::one(L3)));
    CHECK(ratfun_combine(pq, pq, RatFunOp::Neg) == -pq);
    CHECK_THROWS_AS(RatFun(Poly(L3)).inverse(), Error);
  }

  TEST_CASE("recenter examples") {
    auto z = FieldElement::parse(L3, "z");
    CHECK(recenter(Poly::variable(L3), z) == poly(L3, "t + z"));
    CHECK(recenter(poly(L3, "t^2"), z) == poly(L3, "t^2 + 2*z*t + z^2"));
  }

  TEST_CASE("newton polygon examples") {
    // slopes {1, 2}, vertices (0,3), (1,1), (2,0); brute-force hull in tests/oracle/derive.py
    auto np = newton_polygon(poly(Q2, "t^2 + 2*t + 8"));
    REQUIRE(np.slopes.size() == 2);
    CHECK(np.slopes[0] == NewtonSlope{LogValue(1), 1});
    CHECK(np.slopes[1] == NewtonSlope{LogValue(2), 1});
    REQUIRE(np.vertices.size() == 3);
    CHECK(np.vertices[0] == std::pair<long, LogValue>{0, LogValue(3)});
    CHECK(np.vertices[1] == std::pair<long, LogValue>{1, LogValue(1)});
    CHECK(np.vertices[2] == std::pair<long, LogValue>{2, LogValue(0)});

    auto lam = FieldElement::parse(L3, "2*z^(5/9)");
    auto lin = newton_polygon(Poly::linear(lam));
    REQUIRE(lin.slopes.size() == 1);
    CHECK(lin.slopes[0].slope == LogValue(make_rational(5, 9)));

    CHECK(newton_polygon(poly(L3, "t^3")).slopes.empty());
    CHECK_THROWS_AS(newton_polygon(Poly(L3)), Error);
  }

  TEST_CASE("parse and print round trip") {
    testing::Gen g(31);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 60; ++i) {
        auto f = g.ratfun(F);
        if (f.den().is_zero()) continue;
        REQUIRE(RatFun::parse(F, f.to_string()) == f);
      }
  }

  TEST_CASE("recenter inverse shift, degree and leading coefficient") {
    testing::Gen g(32);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 100; ++i) {
        auto p = g.poly(F, 5);
        auto lam = g.element(F);
        auto q = recenter(p, lam);
        REQUIRE(recenter(q, -lam) == p);
        REQUIRE(q.degree() == p.degree());
        if (!p.is_zero()) REQUIRE(q.leading() == p.leading());
      }
  }

  TEST_CASE("newton slopes of a product are the union, 200 products") {
    testing::Gen g(33);
    int done = 0;
    while (done < 200) {
      const auto& F = testing::all_fields()[static_cast<std::size_t>(done % 4)];
      auto p = g.poly(F, 4), q = g.poly(F, 4);
      if (p.is_zero() || q.is_zero()) continue;
      auto a = slope_multiset(newton_polygon(p)), b = slope_multiset(newton_polygon(q));
      a.insert(a.end(), b.begin(), b.end());
      std::sort(a.begin(), a.end());
      REQUIRE(slope_multiset(newton_polygon(p * q)) == a);
      ++done;
    }
  }

  TEST_CASE("polynomial ring identities") {
    testing::Gen g(34);
    for (const auto& F : testing::all_fields())
      for (int i = 0; i < 50; ++i) {
        auto p = g.poly(F), q = g.poly(F), r = g.poly(F);
        REQUIRE((p + q) * r == p * r + q * r);
        REQUIRE(p.pow(2) == p * p);
        REQUIRE(p.slice(0, 2) + p.slice(2, p.degree() + 1) == p);
      }
  }
}
