#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "ultra/error.hpp"
#include "ultra/forge.hpp"
#include "ultra/search.hpp"

using namespace ultra;

namespace {

const FieldDescriptor L3 = FieldDescriptor::genlaurent(3);
const FieldDescriptor L3u = FieldDescriptor::genlaurent(3, true);
const RadiusInterval I12(LogValue(1), LogValue(2));
const LogValue kQuarter(make_rational(1, 4));

LogValue q(long a, long b = 1) { return LogValue(make_rational(a, b)); }

bool has_message(const std::vector<std::string>& msgs, const std::string& needle) {
  return std::any_of(msgs.begin(), msgs.end(), [&](const std::string& m) { return m.find(needle) != std::string::npos; });
}

// Points covering every zone of a schedule: the endpoints, the levels, their
// windows, and the midpoints in between.
std::vector<LogValue> zone_points(const ForgeSchedule& sch, std::size_t want) {
  std::set<LogValue> marks{sch.interval.s_lo, sch.interval.s_hi};
  for (const auto& L : sch.levels) marks.insert({L.s, L.s_plus(), L.s_minus()});
  std::vector<LogValue> sorted(marks.begin(), marks.end());
  std::vector<LogValue> pts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) pts.push_back((sorted[i - 1] + sorted[i]).scaled(make_rational(1, 2)));
    pts.push_back(sorted[i]);
  }
  // refine until there are enough points
  while (pts.size() < want) {
    std::vector<LogValue> finer;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) finer.push_back((pts[i - 1] + pts[i]).scaled(make_rational(1, 2)));
      finer.push_back(pts[i]);
    }
    pts = std::move(finer);
  }
  std::vector<LogValue> out;
  for (std::size_t i = 0; i < want; ++i) out.push_back(pts[i * (pts.size() - 1) / (want - 1)]);
  return out;
}

}  // namespace

TEST_SUITE("forge") {
  TEST_CASE("theorem schedule for N = 3 passes the validator") {
    auto sch = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 3);
    CHECK(schedule_violations(sch).empty());
    CHECK(sch.depth() == 3);
    for (long n = 1; n < 3; ++n) CHECK(sch.level(n + 1).s < sch.level(n).s);
    for (const auto& L : sch.levels) CHECK(L.window.scaled(4 * L.m) <= q(1));
  }

  TEST_CASE("single level and degenerate intervals") {
    auto one = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 1);
    CHECK(schedule_violations(one).empty());
    CHECK(I12.s_lo < one.level(1).s_plus());
    CHECK(one.level(1).s_minus() <= I12.s_hi);
    CHECK_THROWS_AS(make_schedule(L3, RadiusInterval(q(1), q(1)), kQuarter, ForgeMode::Theorem, 1), Error);
    CHECK_THROWS_AS(make_schedule(FieldDescriptor::padic(2), I12, kQuarter, ForgeMode::Theorem, 2), Error);
    CHECK_THROWS_AS(make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 0), Error);
    CHECK_THROWS_AS(make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 5, 1), Error);
    CHECK_NOTHROW(make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 40));
  }

  TEST_CASE("validator rejects broken schedules") {
    auto sch = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 3);
    auto swapped = sch;
    std::swap(swapped.levels[0].s, swapped.levels[1].s);
    CHECK_FALSE(schedule_violations(swapped).empty());
    auto wide = sch;
    wide.levels[1].window = q(1, 2);
    CHECK_FALSE(schedule_violations(wide).empty());
    auto off_group = sch;
    off_group.levels[2].s = off_group.levels[2].s + LogValue(make_rational(1, 5) * make_rational(1, 1000));
    CHECK(has_message(schedule_violations(off_group), "value group"));
    auto outside = sch;
    outside.levels[0].s = q(3);
    CHECK_FALSE(schedule_violations(outside).empty());
  }

  TEST_CASE("theorem centers with m = 2 have distinct subset sums inside the window") {
    auto sch = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 2, 2, true);
    auto cs = choose_centers(sch);
    for (long n = 1; n <= sch.depth(); ++n) {
      const auto& row = cs.centers[static_cast<std::size_t>(n - 1)];
      REQUIRE(row.size() == 3);
      std::set<LogValue> sums;
      for (unsigned mask = 0; mask < 8; ++mask) {
        LogValue s(0);
        for (unsigned i = 0; i < 3; ++i)
          if (mask & (1u << i)) s += row[i].valuation();
        sums.insert(s);
      }
      CHECK(sums.size() == 8);
      for (const auto& c : row) {
        CHECK(c.is_monomial());
        CHECK(sch.level(n).s_plus() <= c.valuation());
        CHECK(c.valuation() <= sch.level(n).s_minus());
      }
    }
  }

  TEST_CASE("example centers have distinct residues") {
    auto sch = make_schedule(L3u, I12, kQuarter, ForgeMode::Example, 2, 2, true);
    auto cs = choose_centers(sch);
    const auto& row = cs.centers.front();
    REQUIRE(row.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(row[i].valuation() == sch.level(1).s);
      CHECK(row[i].leading_coefficient() == FpRatio::u_power(3, i + 1));
    }
    auto small = make_schedule(L3, I12, kQuarter, ForgeMode::Example, 1, 5, true);
    CHECK_THROWS_AS(choose_centers(small), Error);
  }

  TEST_CASE("theorem certificate for N = 5 passes and is deterministic") {
    auto sch = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 5);
    auto cs = choose_centers(sch);
    auto a = verify_certificate(sch, cs, Execution::Parallel);
    auto b = verify_certificate(sch, cs, Execution::Serial);
    CHECK(a.passed());
    CHECK(a.records == b.records);
    CHECK_NOTHROW(verify_or_throw(a));
    for (const auto& r : a.records)
      if (r.rel == Relation::EQ) REQUIRE(r.cert.rfind("exact unique", 0) == 0);
    std::set<std::string> zones;
    for (const auto& r : a.records) zones.insert(r.zone);
    for (const char* z : {"below", "above", "middle", "delta", "chain_low", "chain_high", "gap", "tail"})
      CHECK(zones.count(z) == 1);
  }

  TEST_CASE("widening a window breaks the middle-zone bound first") {
    auto sch = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 5);
    auto cs = choose_centers(sch);
    auto& L = sch.levels[1];
    Rational h = L.window.rational_part();
    Rational target = make_rational(5, 4) / Rational(L.m);
    L.window = LogValue(Rational(ceil(Rational(target / h))) * h);
    cs = choose_centers(sch);
    auto cert = verify_certificate(sch, cs);
    REQUIRE_FALSE(cert.passed());
    const CertRecord* f = cert.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->zone == "middle");
    CHECK(f->n == 2);
    CHECK_THROWS_AS(verify_or_throw(cert), Error);
    CHECK_FALSE(schedule_violations(sch).empty());
  }

  TEST_CASE("example certificate passes over F_3(u)") {
    auto sch = make_schedule(L3u, I12, kQuarter, ForgeMode::Example, 5);
    auto cs = choose_centers(sch);
    auto cert = verify_certificate(sch, cs);
    CHECK(cert.passed());
    CHECK(std::any_of(cert.records.begin(), cert.records.end(), [](const CertRecord& r) { return r.zone == "centered"; }));
  }

  TEST_CASE("lazy values agree with full expansion on small schedules") {
    struct Case {
      FieldDescriptor F;
      ForgeMode mode;
      long depth;
      long m;
    };
    for (const auto& c : {Case{L3, ForgeMode::Theorem, 2, 1}, Case{L3, ForgeMode::Theorem, 2, 2},
                          Case{L3u, ForgeMode::Example, 3, 2}}) {
      auto sch = make_schedule(c.F, I12, kQuarter, c.mode, c.depth, c.m, true);
      auto cs = choose_centers(sch);
      ForgeFactors ff(sch, cs);
      auto ex = expand_factors(sch, cs);
      for (const auto& s : zone_points(sch, 32)) {
        GaussPoint pt(s);
        for (long n = 1; n <= sch.depth(); ++n) {
          auto fv = ff.eval_factor(n, s);
          auto idx = static_cast<std::size_t>(n - 1);
          LogValue tx = ratfun_gauss(ex.x[idx], pt), to = ratfun_gauss(ex.one_minus_x[idx], pt),
                   ty = ratfun_gauss(ex.y[idx], pt);
          auto y = ff.eval_y(n, s);
          for (const auto& [lazy, truth] : {std::pair{fv.x, tx}, std::pair{fv.one_minus_x, to}, std::pair{y, ty}}) {
            if (lazy.tag == Tag::Exact)
              REQUIRE(lazy.v == truth);
            else
              REQUIRE(lazy.v <= truth);
          }
        }
      }
    }
  }

  TEST_CASE("limit table stabilizes at the predicted index") {
    auto sch = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 5);
    auto cs = choose_centers(sch);
    auto samples = interior_samples(sch, 3);
    samples.push_back(sch.interval.s_hi);
    auto t = limit_table(sch, cs, samples);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(t.stabilized[i]);
      CHECK(t.predicted_index[i] == static_cast<long>(i) + 2);
      long first = 1;
      while (!(sch.level(first).s_minus() < samples[i])) ++first;
      CHECK(t.observed_index[i] == first);
    }
    CHECK(t.observed_index[3] == 1);
    for (const auto& v : t.v_y[3]) CHECK(v.v == q(0));
    CHECK(t.delta_ok);
    for (long n = 1; n <= 5; ++n) CHECK(t.delta_row[static_cast<std::size_t>(n - 1)].v >= q(n - 1));
  }

  TEST_CASE("tail records dominate later gaps") {
    auto sch = make_schedule(L3, I12, kQuarter, ForgeMode::Theorem, 5);
    auto cert = verify_certificate(sch, choose_centers(sch));
    std::vector<CertRecord> gaps, tails;
    for (const auto& r : cert.records) {
      if (r.zone == "gap") gaps.push_back(r);
      if (r.zone == "tail") tails.push_back(r);
    }
    REQUIRE(gaps.size() == 2);
    REQUIRE(tails.size() == 2);
    for (const auto& t : tails)
      for (const auto& gp : gaps)
        if (gp.n >= t.n) CHECK(t.lhs <= gp.lhs);
  }
}

TEST_SUITE("search") {
  TEST_CASE("interval model succeeds at once for c = 2") {
    auto oracle = IntervalModelOracle::from_ratfun(I12, RatFun::variable(L3));
    auto trace = interval_search(oracle, q(1), 20, L3);
    CHECK(trace.outcome == SearchOutcome::SuccessTriple);
    REQUIRE(trace.triple);
    CHECK(trace.triple->n == 0);
    CHECK(trace.triple->mu.is_zero());
    CHECK(trace.triple->g == q(2));
    CHECK(trace.triple->d == q(1));
    CHECK(trace_violations(trace, q(1)).empty());
  }

  TEST_CASE("constant t_0 is flat") {
    auto oracle = IntervalModelOracle::from_ratfun(I12, RatFun::constant(FieldElement::parse(L3, "z")));
    CHECK_THROWS_AS(interval_search(oracle, q(1), 5, L3), Error);
    CHECK_THROWS_AS(IntervalModelOracle::from_ratfun(I12, RatFun::parse(L3, "t^2")), Error);
  }

  TEST_CASE("forced failures descend by more than c per step") {
    const LogValue c_log(make_rational(1, 8));
    auto base = IntervalModelOracle::from_ratfun(I12, RatFun::variable(L3));
    ForcedFailureOracle oracle(base, L3);
    auto trace = interval_search(oracle, c_log, 20, L3);
    CHECK(trace.outcome == SearchOutcome::IterationCap);
    CHECK(trace.steps.size() == 21);
    CHECK(trace_violations(trace, c_log).empty());
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
      CHECK(trace.steps[i].g + c_log < trace.steps[i + 1].g);
      CHECK(trace.steps[i + 1].spectral == trace.steps[0].spectral);
    }
  }

  TEST_CASE("violations in the interval model are honest") {
    // v(b) = 13/9: outside [15/8, 2], inside [1, 2]
    auto oracle = IntervalModelOracle::from_ratfun(I12, RatFun::parse(L3, "t - z^(13/9)"));
    auto lam = oracle.violation(FieldElement::zero(L3), q(2), q(15, 8), q(1, 8));
    CHECK_FALSE(lam);
    auto wide = oracle.violation(FieldElement::zero(L3), q(2), q(1), q(1, 8));
    REQUIRE(wide);
    CHECK(wide->valuation() == q(13, 9));
  }
}
