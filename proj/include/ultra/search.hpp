#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ultra/fields.hpp"
#include "ultra/gauss.hpp"
#include "ultra/logval.hpp"
#include "ultra/ratfun.hpp"

namespace ultra {

// Norms here are kept in valuation scale: gamma = 2^(-g), delta = 2^(-d), so
// gamma <= delta means d <= g.

/// Spectral data of t_0 - mu in some model Banach algebra.
class SearchOracle {
 public:
  virtual ~SearchOracle() = default;
  /// v-scale of |(t_0 - mu)^-1|_spect^-1.
  virtual LogValue inverse_floor(const FieldElement& mu) const = 0;
  /// v-scale of |t_0 - mu|_spect.
  virtual LogValue spectral(const FieldElement& mu) const = 0;
  /// A lambda with v(lambda) in [d, g] and |lambda| |(t_0 - mu - lambda)^-1|_spect > c^2,
  /// or nothing if the per-lambda condition holds on [gamma, delta].
  virtual std::optional<FieldElement> violation(const FieldElement& mu, const LogValue& g, const LogValue& d,
                                                const LogValue& c_log) const = 0;
};

/// Completion of F(t) for the supremum of Gauss norms over s in [s_lo, s_hi],
/// with t_0 = t - a, or t_0 = a when `constant`. Spectral norms are computed
/// exactly from |t - b|_rho = max(rho, |b|).
class IntervalModelOracle : public SearchOracle {
 public:
  IntervalModelOracle(RadiusInterval interval, FieldElement a, bool constant = false);
  /// Accepts t_0 = t - a or a constant; throws UnsupportedModel otherwise.
  static IntervalModelOracle from_ratfun(const RadiusInterval& interval, const RatFun& t0);

  LogValue inverse_floor(const FieldElement& mu) const override;
  LogValue spectral(const FieldElement& mu) const override;
  std::optional<FieldElement> violation(const FieldElement& mu, const LogValue& g, const LogValue& d,
                                        const LogValue& c_log) const override;

 private:
  RadiusInterval interval_;
  FieldElement a_;
  bool constant_;
};

/// Stand-in for an algebra in which the per-lambda condition always fails:
/// each step returns a lambda of norm as close to delta_n as the value group
/// allows, and declares |(t_n - lambda)^-1|_spect = 2^excess c^2 / |lambda|.
class ForcedFailureOracle : public SearchOracle {
 public:
  ForcedFailureOracle(const SearchOracle& base, FieldDescriptor field, LogValue excess = LogValue(1));

  LogValue inverse_floor(const FieldElement& mu) const override;
  LogValue spectral(const FieldElement& mu) const override;
  std::optional<FieldElement> violation(const FieldElement& mu, const LogValue& g, const LogValue& d,
                                        const LogValue& c_log) const override;

 private:
  const SearchOracle& base_;
  FieldDescriptor field_;
  LogValue excess_;
  mutable std::vector<std::pair<FieldElement, LogValue>> declared_;  // mu -> inverse floor
};

struct SearchStep {
  long n;
  FieldElement mu;
  LogValue g;  // gamma_n = 2^-g
  LogValue d;  // delta_n = 2^-d = c gamma_n
  LogValue spectral;  // v of |t_n|_spect
  std::optional<FieldElement> lambda;
};

enum class SearchOutcome { SuccessTriple, IterationCap };

struct SearchTrace {
  std::vector<SearchStep> steps;
  SearchOutcome outcome = SearchOutcome::IterationCap;
  /// For SuccessTriple: t = t_0 - mu, gamma, delta of the last step.
  std::optional<SearchStep> triple;
};

/// Throws PreconditionFlat when |t_0|_spect |t_0^-1|_spect = 1.
SearchTrace interval_search(const SearchOracle& oracle, const LogValue& c_log, long max_iter,
                            const FieldDescriptor& field);

/// Messages for violated trace invariants: gamma_{n+1} < gamma_n / c,
/// delta_n = c gamma_n, |t_n|_spect constant.
std::vector<std::string> trace_violations(const SearchTrace& trace, const LogValue& c_log);

std::string to_string(SearchOutcome outcome);

}  // namespace ultra
