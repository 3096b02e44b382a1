#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "ultra/annulus.hpp"
#include "ultra/cauchy.hpp"
#include "ultra/error.hpp"
#include "ultra/multivar.hpp"
#include "ultra/qseries.hpp"

using namespace ultra;

namespace {

const FieldDescriptor Q2 = FieldDescriptor::padic(2);
const FieldDescriptor L3 = FieldDescriptor::genlaurent(3);

QSeriesElement random_qseries(testing::Gen& g) {
  std::map<long, Rational> terms;
  long k = g.integer(1, 4);
  for (long i = 0; i < k; ++i) {
    long num = 0;
    while (num == 0) num = g.integer(-30, 30);
    // 2-power denominators keep the norm interesting
    terms[g.integer(-3, 6)] = make_rational(num, 1L << g.integer(0, 12)) * make_rational(1, g.integer(1, 3) * 2 - 1);
  }
  return QSeriesElement(terms);
}

AnnulusElement random_annulus(testing::Gen& g, const LogValue& s) {
  std::map<long, FieldElement> terms;
  long k = g.integer(1, 4);
  for (long i = 0; i < k; ++i) terms.insert_or_assign(g.integer(-4, 4), g.element(Q2));
  return AnnulusElement(Q2, s, terms);
}

FieldElement qq(long a, long b = 1) { return FieldElement::from_rational(Q2, make_rational(a, b)); }

LaurentPoly T(long k) { return LaurentPoly::variable(Q2, k); }

LaurentPoly random_laurent(testing::Gen& g, long max_depth = 4) {
  std::map<Monomial, FieldElement> terms;
  long k = g.integer(1, 5);
  for (long i = 0; i < k; ++i) {
    Monomial m(static_cast<std::size_t>(g.integer(0, max_depth)));
    for (auto& e : m) e = g.integer(-2, 2);
    while (!m.empty() && m.back() == 0) m.pop_back();
    terms.insert_or_assign(m, g.element(Q2));
  }
  return LaurentPoly(Q2, terms);
}

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("norm examples") {
    // membership scans in tests/oracle/derive.py
    CHECK(qseries_norm(QSeriesElement::monomial(1, 1)) == 1);
    CHECK(qseries_norm(QSeriesElement::constant(make_rational(1, 2))) == -2);
    CHECK(qseries_norm(QSeriesElement::monomial(make_rational(1, 4), 2)) == 0);
    CHECK(qseries_norm(QSeriesElement::constant(1)) == 0);
    CHECK_THROWS_AS(qseries_norm(QSeriesElement()), Error);
  }

  TEST_CASE("unit lattice and spectral ball") {
    CHECK(in_unit_lattice(QSeriesElement::monomial(make_rational(1, 4), 2)));
    CHECK_FALSE(in_unit_lattice(QSeriesElement::monomial(make_rational(1, 4), 1)));
    CHECK_FALSE(qseries_spectral_ball(QSeriesElement::monomial(1, -1)));
    CHECK(qseries_spectral_ball(QSeriesElement()));
    CHECK(qseries_spectral_ball(QSeriesElement::constant(make_rational(1, 1024))));
  }

  TEST_CASE("digit sums and factorial powers") {
    CHECK(binary_digit_sum(0) == 0);
    CHECK(binary_digit_sum(11) == 3);
    CHECK(factorial_power_valuation(2) == 2);
    CHECK(factorial_power_valuation(4) == 12);
    CHECK(factorial_power_valuation(12) == 120);
    for (long j = 1; j <= 20; ++j) {
      long v = 0;
      for (long i = 2; i <= j; ++i)
        for (long n = i; n % 2 == 0; n /= 2) ++v;
      REQUIRE(factorial_power_valuation(j) == j * v);
    }
  }

  TEST_CASE("witness table") {
    auto rows = qseries_unbounded_witness(10000);
    REQUIRE(rows.size() == 10000);
    CHECK(rows[0].j == 2);
    CHECK(rows[9].j == 4);
    CHECK(rows[99].j == 12);
    CHECK(rows[9999].j == 103);
    for (const auto& r : rows) REQUIRE(static_cast<double>(r.j) <= 2.0 + 2.0 * std::sqrt(static_cast<double>(r.k)));
    for (std::size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i].j >= rows[i - 1].j);
    // 2^-k lies in 2^(-j) A_0 exactly from j(k) on
    for (long k : {1L, 10L, 100L, 1000L}) {
      auto x = QSeriesElement::constant(make_rational(1, 1) / Rational(mpz_class(1) << static_cast<unsigned>(k)));
      CHECK(qseries_norm(x) == -rows[static_cast<std::size_t>(k - 1)].j);
    }
  }

  TEST_CASE("submultiplicative on 300 random pairs") {
    testing::Gen g(51);
    for (int i = 0; i < 300; ++i) {
      auto x = random_qseries(g), y = random_qseries(g);
      if ((x * y).is_zero()) continue;
      REQUIRE(qseries_norm(x * y) >= qseries_norm(x) + qseries_norm(y));
    }
  }
}

TEST_SUITE("annulus") {
  TEST_CASE("construction") {
    CHECK_THROWS_AS(AnnulusElement(Q2, LogValue(make_rational(1, 2))), Error);
    CHECK_NOTHROW(AnnulusElement(Q2, LogValue::sqrt2()));
  }

  TEST_CASE("inversion examples") {
    const LogValue s = LogValue::sqrt2();
    auto t = AnnulusElement::monomial(Q2, s, qq(1), 1);
    auto inv = annulus_invert(t, LogValue(5));
    CHECK(inv.inverse == AnnulusElement::monomial(Q2, s, qq(1), -1));
    CHECK(inv.residual.is_infinite());

    auto one = AnnulusElement::monomial(Q2, s, qq(1), 0);
    CHECK(annulus_invert(one, LogValue(5)).inverse == one);

    // x = T - 2: 13 geometric terms reach residual 13(sqrt2 - 1) > 5 (tests/oracle/derive.py)
    auto x = AnnulusElement(Q2, s, {{1, qq(1)}, {0, qq(-2)}});
    auto r = annulus_invert(x, LogValue(5));
    CHECK(r.series_terms == 13);
    CHECK(r.residual == LogValue(make_rational(-13), make_rational(13)));
    CHECK(r.residual > LogValue(5));
    CHECK(r.inverse.valuation() == LogValue(-1));

    CHECK_THROWS_AS(annulus_invert(AnnulusElement(Q2, s), LogValue(5)), Error);
  }

  TEST_CASE("multiplicative on 300 random pairs, dominance unique") {
    testing::Gen g(52);
    const LogValue s = LogValue::sqrt2();
    for (int i = 0; i < 300; ++i) {
      auto x = random_annulus(g, s), y = random_annulus(g, s);
      REQUIRE((x * y).valuation() == x.valuation() + y.valuation());
      long k = x.dominant_index();
      for (const auto& [n, c] : x.terms())
        if (n != k) REQUIRE(x.term_valuation(n, c) > x.valuation());
    }
  }

  TEST_CASE("random inversions beat the requested precision") {
    testing::Gen g(53);
    for (int i = 0; i < 100; ++i) {
      const LogValue s = g.coin() ? LogValue::sqrt2() : LogValue(make_rational(g.integer(-3, 3)), make_rational(1, 2));
      auto x = random_annulus(g, s);
      LogValue prec(g.integer(1, 12));
      auto r = annulus_invert(x, prec);
      REQUIRE(r.residual > prec);
      REQUIRE(r.inverse.valuation() == -x.valuation());
    }
  }
}

TEST_SUITE("multivar") {
  TEST_CASE("norm data examples") {
    auto a = multivar_norm_data(T(1) + LaurentPoly::constant(qq(2)) * T(2));
    CHECK(a.alpha == LogValue(0));
    CHECK(a.depth == 2);
    auto b = multivar_norm_data(MultiVarElement(T(3), T(1)));
    CHECK(b.alpha == LogValue(0));
    CHECK(b.depth == 3);
    auto c = multivar_norm_data(LaurentPoly::constant(qq(3, 8)));
    CHECK(c.alpha == LogValue(-3));
    CHECK(c.depth == 0);
    CHECK_THROWS_AS(multivar_norm_data(LaurentPoly(Q2)), Error);
  }

  TEST_CASE("projection examples") {
    auto x = T(1) + T(2) + T(1) * T(2) * T(2);
    auto p = project(1, x);
    CHECK(p.value == T(1));
    CHECK(p.error.is_infinite());
    auto y = T(1) * T(1) + LaurentPoly::constant(qq(5));
    CHECK(project(1, y).value == y);
    CHECK_THROWS_AS(project(1, MultiVarElement(LaurentPoly::constant(qq(1)), T(1) + T(2))), Error);

    // 1/(1 + 2 T_1): dominant denominator term 1, geometric series to precision 20
    MultiVarElement r(LaurentPoly::constant(qq(1)), LaurentPoly::constant(qq(1)) + LaurentPoly::constant(qq(2)) * T(1));
    auto pr = project(1, r, LogValue(20));
    CHECK(pr.error >= LogValue(20));
    auto defect = pr.value * r.den() - r.num();
    CHECK(defect.alpha() >= pr.error);
  }

  TEST_CASE("decomposition bound examples") {
    auto x = T(1) + T(2);
    CHECK(multivar_norm_upper(x, {T(1), T(2)}) == LogValue(-2));
    CHECK(multivar_norm_upper(x, {x}) == LogValue(-2));
    CHECK_THROWS_AS(multivar_norm_upper(x, {T(1)}), Error);
  }

  TEST_CASE("projection properties on 200 random Laurent polynomials") {
    testing::Gen g(54);
    for (int i = 0; i < 200; ++i) {
      auto x = random_laurent(g);
      if (x.is_zero()) continue;
      long depth = x.depth();
      LogValue prev = LogValue::infinity();
      for (long k = 0; k <= depth + 1; ++k) {
        auto pk = project(k, x).value;
        REQUIRE(pk.alpha() >= x.alpha());
        REQUIRE(pk.alpha() <= prev);
        prev = pk.alpha();
        for (long k2 = 0; k2 <= depth + 1; ++k2)
          REQUIRE(project(k, MultiVarElement(project(k2, x).value)).value == project(std::min(k, k2), x).value);
        if (k >= depth) REQUIRE(pk == x);
      }
    }
  }

  TEST_CASE("alpha is a lower bound for every decomposition bound") {
    testing::Gen g(55);
    for (int i = 0; i < 200; ++i) {
      auto a = random_laurent(g), b = random_laurent(g), c = random_laurent(g);
      auto x = a + b + c;
      if (x.is_zero() || a.is_zero() || b.is_zero() || c.is_zero()) continue;
      std::vector<MultiVarElement> parts{a, b, c};
      REQUIRE(multivar_norm_data(x).alpha >= multivar_norm_upper(x, parts));
    }
  }
}

TEST_SUITE("cauchy") {
  TEST_CASE("x_n = t + z^n has modulus n") {
    std::vector<RatFun> seq;
    for (long n = 1; n <= 51; ++n)
      seq.push_back(RatFun::variable(L3) + RatFun::constant(FieldElement::parse(L3, "z").pow(n)));
    auto inv = cauchy_invert(seq, GaussPoint(LogValue(0)), LogValue(0));
    REQUIRE(inv.modulus.size() == 50);
    for (const auto& row : inv.modulus) {
      CHECK(row.direct == LogValue(row.n));
      CHECK(row.identity == LogValue(row.n));
    }
    CHECK(inv.consistent());
    CHECK(inv.inverses[0] * seq[0] == RatFun::constant(FieldElement::one(L3)));
  }

  TEST_CASE("constant and degenerate sequences") {
    std::vector<RatFun> same(5, RatFun::variable(L3));
    auto inv = cauchy_invert(same, GaussPoint(LogValue(0)), LogValue(0));
    for (const auto& row : inv.modulus) CHECK(row.direct.is_infinite());
    std::vector<RatFun> shrinking;
    for (long n = 1; n <= 3; ++n) shrinking.push_back(RatFun::constant(FieldElement::parse(L3, "z").pow(n)));
    CHECK_THROWS_AS(cauchy_invert(shrinking, GaussPoint(LogValue(0)), LogValue(0)), Error);
    std::vector<RatFun> with_zero{RatFun::variable(L3), RatFun(Poly(L3))};
    CHECK_THROWS_AS(cauchy_invert(with_zero, GaussPoint(LogValue(0)), LogValue(0)), Error);
  }
}
