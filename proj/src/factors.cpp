#include <algorithm>
#include <numeric>

#include "ultra/error.hpp"
#include "ultra/forge.hpp"

namespace ultra {

std::string LazyValue::cert_string() const {
  std::string out = tag == Tag::Exact ? "exact" : "bound";
  if (!cert.indices.empty()) out += " " + cert.to_string();
  return out;
}

namespace {

/// e_0..e_g of the given residues.
std::vector<FpRatio> elementary_symmetric(const std::vector<FpRatio>& xs, std::uint32_t p) {
  std::vector<FpRatio> e(xs.size() + 1, FpRatio::constant(p, 0));
  e[0] = FpRatio::constant(p, 1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t r = i + 1; r >= 1; --r) e[r] = e[r] + e[r - 1] * xs[i];
  return e;
}

LazyValue min_over(const std::vector<LazyValue>& coeffs, long lo, long hi, const LogValue& s) {
  LazyValue out{LogValue::infinity(), Tag::Exact, {}};
  bool exact_winner = false;
  for (long j = lo; j <= hi; ++j) {
    const auto& c = coeffs[static_cast<std::size_t>(j)];
    if (c.v.is_infinite()) continue;
    LogValue v = c.v + s.scaled(j);
    if (v < out.v) {
      out.v = v;
      out.cert.indices = {j};
      exact_winner = c.tag == Tag::Exact;
    } else if (v == out.v) {
      out.cert.indices.push_back(j);
    }
  }
  out.cert.unique = out.cert.indices.size() == 1;
  out.tag = out.cert.unique && exact_winner ? Tag::Exact : Tag::Bound;
  return out;
}

LazyValue combine_sum(const LazyValue& a, const LazyValue& b) {
  return {a.v + b.v, a.tag == Tag::Exact && b.tag == Tag::Exact ? Tag::Exact : Tag::Bound, {}};
}

}  // namespace

ForgeFactors::ForgeFactors(const ForgeSchedule& sch, const CenterSet& centers) {
  if (static_cast<long>(centers.centers.size()) != sch.depth())
    throw Error(ErrorKind::InvalidArgument, "center set depth differs from schedule depth");
  const auto& F = sch.field;
  for (long n = 1; n <= sch.depth(); ++n) {
    const auto& row = centers.centers[static_cast<std::size_t>(n - 1)];
    Level L;
    L.m = sch.level(n).m;
    const long d = 2 * L.m - 1;
    if (static_cast<long>(row.size()) != d) throw Error(ErrorKind::InvalidArgument, "level needs 2 m_n - 1 centers");

    std::vector<std::size_t> order(row.size());
    std::iota(order.begin(), order.end(), 0);
    for (const auto& c : row) {
      if (c.is_zero()) throw Error(ErrorKind::ZeroElement, "centers must be nonzero");
      L.center_vals.push_back(c.valuation());
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return L.center_vals[a] < L.center_vals[b]; });

    // Groups of equal valuation in sorted order, with their symmetric functions.
    std::vector<std::size_t> group_start(row.size());
    std::vector<std::vector<FpRatio>> group_e(row.size());
    for (std::size_t a = 0; a < order.size();) {
      std::size_t b = a;
      std::vector<FpRatio> lcs;
      while (b < order.size() && L.center_vals[order[b]] == L.center_vals[order[a]]) {
        lcs.push_back(row[order[b]].leading_coefficient());
        ++b;
      }
      auto e = elementary_symmetric(lcs, F.p);
      for (std::size_t i = a; i < b; ++i) {
        group_start[i] = a;
        group_e[i] = e;
      }
      a = b;
    }

    // e_k: the k smallest valuations, with leading coefficient
    // (product of strictly smaller groups) * e_r(boundary group).
    std::vector<LazyValue> ek(static_cast<std::size_t>(d + 1));
    std::vector<FpRatio> lead(static_cast<std::size_t>(d + 1), FpRatio::constant(F.p, 1));
    ek[0] = {LogValue(0), Tag::Exact, {}};
    LogValue partial(0);
    FpRatio below_product = FpRatio::constant(F.p, 1);
    for (long k = 1; k <= d; ++k) {
      std::size_t idx = static_cast<std::size_t>(k - 1);
      partial += L.center_vals[order[idx]];
      std::size_t a = group_start[idx];
      if (a == idx && idx > 0) {
        // entering a new group: fold the previous group into the product
        std::size_t pa = group_start[idx - 1];
        below_product = below_product * group_e[idx - 1][idx - pa];
      }
      FpRatio lc = below_product * group_e[idx][idx - a + 1];
      lead[static_cast<std::size_t>(k)] = lc;
      ek[static_cast<std::size_t>(k)] = {partial, lc.is_zero() ? Tag::Bound : Tag::Exact, {}};
    }

    const bool single_group = group_start.back() == 0;
    for (long j = 0; j <= d; ++j) {
      long k = d - j;
      L.coeffs.push_back(ek[static_cast<std::size_t>(k)]);
      if (single_group && F.flavor == FieldFlavor::GenLaurent) {
        FpRatio c = lead[static_cast<std::size_t>(k)];
        if (k % 2 == 1) c = -c;
        if (c.is_zero())
          L.exact.emplace_back(FieldElement::zero(F));
        else
          L.exact.emplace_back(monomial_with_valuation(F, ek[static_cast<std::size_t>(k)].v, c));
      } else {
        L.exact.emplace_back(std::nullopt);
      }
    }
    levels_.push_back(std::move(L));
  }
}

std::optional<FieldElement> ForgeFactors::exact_coefficient(long n, long j) const {
  return level(n).exact.at(static_cast<std::size_t>(j));
}

FactorValues ForgeFactors::eval_factor(long n, const LogValue& s) const {
  if (s.is_infinite()) throw Error(ErrorKind::InvalidArgument, "Gauss point needs finite s");
  const auto& L = level(n);
  const long d = 2 * L.m - 1;
  FactorValues fv;
  fv.p = LogValue(0);
  for (const auto& v : L.center_vals) fv.p += min(v, s);
  fv.n_lo = min_over(L.coeffs, 0, L.m - 1, s);
  fv.n_hi = min_over(L.coeffs, L.m, d, s);
  fv.x = fv.n_lo;
  fv.x.v = fv.n_lo.v - fv.p;
  fv.one_minus_x = fv.n_hi;
  fv.one_minus_x.v = fv.n_hi.v - fv.p;
  return fv;
}

LazyValue ForgeFactors::eval_y(long n, const LogValue& s) const {
  LazyValue acc{LogValue(0), Tag::Exact, {}};
  for (long k = 1; k <= n; ++k) acc = combine_sum(acc, eval_factor(k, s).x);
  return acc;
}

LazyValue ForgeFactors::eval_gap(long n, const LogValue& s) const {
  return combine_sum(eval_y(n - 1, s), eval_factor(n, s).one_minus_x);
}

ExpandedFactors expand_factors(const ForgeSchedule& sch, const CenterSet& centers) {
  ExpandedFactors out;
  const auto& F = sch.field;
  RatFun y = RatFun::constant(FieldElement::one(F));
  for (long n = 1; n <= sch.depth(); ++n) {
    Poly P = Poly::constant(FieldElement::one(F));
    for (const auto& lam : centers.centers[static_cast<std::size_t>(n - 1)]) P = P * Poly::linear(lam);
    Poly lo = P.slice(0, sch.level(n).m);
    out.x.emplace_back(lo, P);
    out.one_minus_x.emplace_back(P - lo, P);
    y = y * out.x.back();
    out.y.push_back(y);
  }
  return out;
}

}  // namespace ultra
