#include "ultra/cauchy.hpp"

#include <algorithm>

#include "ultra/error.hpp"

namespace ultra {

bool CauchyInverse::consistent() const {
  return std::all_of(modulus.begin(), modulus.end(), [](const CauchyRow& r) { return r.direct == r.identity; });
}

CauchyInverse cauchy_invert(const std::vector<RatFun>& seq, const GaussPoint& pt, const LogValue& lower) {
  CauchyInverse out;
  std::vector<LogValue> vals;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].is_zero()) throw Error(ErrorKind::ZeroTerm, "term " + std::to_string(i + 1) + " is zero");
    LogValue v = ratfun_gauss(seq[i], pt);
    if (lower < v)
      throw Error(ErrorKind::NotBoundedBelow, "term " + std::to_string(i + 1) + " has valuation " + v.to_string() +
                                                  " > " + lower.to_string());
    vals.push_back(v);
    out.inverses.push_back(seq[i].inverse());
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    LogValue direct = ratfun_gauss(out.inverses[i] - out.inverses[i + 1], pt);
    LogValue step = ratfun_gauss(seq[i + 1] - seq[i], pt);
    out.modulus.push_back({static_cast<long>(i + 1), direct, step - vals[i] - vals[i + 1]});
  }
  return out;
}

}  // namespace ultra
