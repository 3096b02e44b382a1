#include "ultra/error.hpp"
#include "ultra/forge.hpp"

namespace ultra {

std::vector<LogValue> interior_samples(const ForgeSchedule& sch, long count) {
  if (count < 1 || count >= sch.depth())
    throw Error(ErrorKind::InvalidArgument, "need 1 <= count < depth interior samples");
  std::vector<LogValue> out;
  for (long k = 1; k <= count; ++k)
    out.push_back((sch.level(k).s_plus() + sch.level(k + 1).s_minus()).scaled(Rational(1, 2)));
  return out;
}

LimitTable limit_table(const ForgeSchedule& sch, const CenterSet& centers, const std::vector<LogValue>& samples) {
  ForgeFactors ff(sch, centers);
  const long N = sch.depth();
  LimitTable t;
  t.samples = samples;
  for (const auto& s : samples) {
    if (!sch.interval.contains(s)) throw Error(ErrorKind::InvalidArgument, "sample outside the interval");
    std::vector<LazyValue> row;
    for (long n = 1; n <= N; ++n) row.push_back(ff.eval_y(n, s));

    long predicted = N + 1;
    for (long n = N; n >= 1; --n)
      if (sch.level(n).s_minus() < s) predicted = n;
    // Windows are ordered, so every n past the first one above s qualifies too.
    long observed = N + 1;
    for (long n = N; n >= 1; --n) {
      LogValue before = n == 1 ? LogValue(0) : row[static_cast<std::size_t>(n - 2)].v;
      if (row[static_cast<std::size_t>(n - 1)].v != before) break;
      observed = n;
    }
    bool exact = true;
    for (long n = std::max(1L, predicted - 1); n <= N; ++n)
      exact = exact && row[static_cast<std::size_t>(n - 1)].tag == Tag::Exact;

    t.v_y.push_back(std::move(row));
    t.predicted_index.push_back(predicted);
    t.observed_index.push_back(observed);
    t.stabilized.push_back(exact && predicted <= N && observed == predicted);
  }

  const auto& lo = sch.interval.s_lo;
  t.delta_ok = true;
  LogValue prev(0);
  for (long n = 1; n <= N; ++n) {
    LazyValue v = ff.eval_y(n, lo);
    t.delta_ok = t.delta_ok && v.tag == Tag::Exact && LogValue(n - 1) <= v.v && prev < v.v;
    prev = v.v;
    t.delta_row.push_back(std::move(v));
  }
  return t;
}

}  // namespace ultra
