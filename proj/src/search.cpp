#include "ultra/search.hpp"

#include "ultra/error.hpp"

namespace ultra {

std::string to_string(SearchOutcome outcome) {
  return outcome == SearchOutcome::SuccessTriple ? "success" : "iteration_cap";
}

IntervalModelOracle::IntervalModelOracle(RadiusInterval interval, FieldElement a, bool constant)
    : interval_(std::move(interval)), a_(std::move(a)), constant_(constant) {}

IntervalModelOracle IntervalModelOracle::from_ratfun(const RadiusInterval& interval, const RatFun& t0) {
  const auto& F = t0.field();
  if (t0.den().degree() != 0) throw Error(ErrorKind::UnsupportedModel, "t_0 must be a polynomial");
  FieldElement scale = t0.den().coeffs()[0].inverse();
  Poly num = t0.num().scaled(scale);
  if (num.is_zero()) throw Error(ErrorKind::ZeroElement, "t_0 = 0");
  if (num.degree() == 0) return IntervalModelOracle(interval, num.coeffs()[0], true);
  if (num.degree() != 1 || !(num.leading() == FieldElement::one(F)))
    throw Error(ErrorKind::UnsupportedModel, "t_0 must be t - a or a constant");
  return IntervalModelOracle(interval, -num.coeffs()[0]);
}

LogValue IntervalModelOracle::inverse_floor(const FieldElement& mu) const {
  if (constant_) return (a_ - mu).valuation();
  return min(interval_.s_hi, (a_ + mu).valuation());
}

LogValue IntervalModelOracle::spectral(const FieldElement& mu) const {
  if (constant_) return (a_ - mu).valuation();
  return min(interval_.s_lo, (a_ + mu).valuation());
}

std::optional<FieldElement> IntervalModelOracle::violation(const FieldElement& mu, const LogValue& g,
                                                           const LogValue& d, const LogValue& c_log) const {
  if (constant_) return std::nullopt;
  // sup over lambda of |lambda| / max(gamma_I, |b + lambda|): at most 1 unless
  // lambda = -b is admissible, where it is |b| / gamma_I.
  FieldElement b = a_ + mu;
  if (b.is_zero()) return std::nullopt;
  LogValue vb = b.valuation();
  if (vb < d || g < vb) return std::nullopt;
  if (interval_.s_hi - vb > c_log.scaled(2)) return -b;
  return std::nullopt;
}

ForcedFailureOracle::ForcedFailureOracle(const SearchOracle& base, FieldDescriptor field, LogValue excess)
    : base_(base), field_(field), excess_(std::move(excess)) {
  if (!(LogValue(0) < excess_)) throw Error(ErrorKind::InvalidArgument, "excess must be positive");
}

LogValue ForcedFailureOracle::inverse_floor(const FieldElement& mu) const {
  for (const auto& [m, g] : declared_)
    if (m == mu) return g;
  return base_.inverse_floor(mu);
}

LogValue ForcedFailureOracle::spectral(const FieldElement&) const {
  return base_.spectral(FieldElement::zero(field_));
}

std::optional<FieldElement> ForcedFailureOracle::violation(const FieldElement& mu, const LogValue& g,
                                                           const LogValue& d, const LogValue& c_log) const {
  if (!g.is_rational() || !d.is_rational()) throw Error(ErrorKind::UnsupportedModel, "irrational search bounds");
  const Rational width = g.rational_part() - d.rational_part();
  if (!field_.dense() && width < 1) throw Error(ErrorKind::ValueGroupTooSparse, "no value between gamma and delta");
  Rational h(1);
  if (field_.dense())
    while (h > width) h /= field_.p;
  Rational e = Rational(ultra::ceil(Rational(d.rational_part() / h))) * h;
  FieldElement lambda = monomial_with_valuation(field_, LogValue(e));
  declared_.emplace_back(mu + lambda, LogValue(e) + c_log.scaled(2) + excess_);
  return lambda;
}

SearchTrace interval_search(const SearchOracle& oracle, const LogValue& c_log, long max_iter,
                            const FieldDescriptor& field) {
  if (!(LogValue(0) < c_log) || c_log.is_infinite()) throw Error(ErrorKind::InvalidArgument, "c_log must be positive");
  if (max_iter < 0) throw Error(ErrorKind::InvalidArgument, "max_iter must be nonnegative");
  FieldElement mu = FieldElement::zero(field);
  LogValue g = oracle.inverse_floor(mu);
  LogValue spect = oracle.spectral(mu);
  if (g.is_infinite() || spect.is_infinite() || !(spect < g))
    throw Error(ErrorKind::PreconditionFlat, "|t_0|_spect |t_0^-1|_spect = 1");

  SearchTrace trace;
  for (long n = 0;; ++n) {
    SearchStep step{n, mu, g, g - c_log, oracle.spectral(mu), std::nullopt};
    if (n == max_iter) {
      trace.steps.push_back(step);
      trace.outcome = SearchOutcome::IterationCap;
      return trace;
    }
    step.lambda = oracle.violation(mu, step.g, step.d, c_log);
    trace.steps.push_back(step);
    if (!step.lambda) {
      trace.outcome = SearchOutcome::SuccessTriple;
      trace.triple = step;
      return trace;
    }
    mu = mu + *step.lambda;
    g = oracle.inverse_floor(mu);
  }
}

std::vector<std::string> trace_violations(const SearchTrace& trace, const LogValue& c_log) {
  std::vector<std::string> out;
  const auto& st = trace.steps;
  for (std::size_t i = 0; i < st.size(); ++i) {
    std::string at = "step " + std::to_string(st[i].n) + ": ";
    if (st[i].d != st[i].g - c_log) out.push_back(at + "delta_n != c gamma_n");
    if (st[i].spectral != st.front().spectral) out.push_back(at + "|t_n|_spect changed");
    if (i + 1 < st.size() && !(st[i].g + c_log < st[i + 1].g)) out.push_back(at + "gamma_{n+1} >= gamma_n / c");
    if (st[i].lambda) {
      LogValue v = st[i].lambda->valuation();
      if (v < st[i].d || st[i].g < v) out.push_back(at + "|lambda_n| outside [gamma_n, delta_n]");
    }
  }
  return out;
}

}  // namespace ultra
