#include "dtrs/risk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dtrs {

RiskTriple expected_risks(double p, const ScalarLosses& l) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("probability " + std::to_string(p) + " outside [0,1]");
  const double q = 1.0 - p;
  return {l.pp * p + l.pn * q, l.bp * p + l.bn * q, l.np * p + l.nn * q};
}

Region min_risk_region(double p, const ScalarLosses& l) {
  const RiskTriple r = expected_risks(p, l);
  // Risks are rounded, and p may itself be a rounded threshold; the tie band
  // scales with the largest loss.
  const double scale = std::max({1.0, l.pp, l.bp, l.np, l.nn, l.bn, l.pn});
  const double tol = kRiskTieTolerance * scale;
  auto not_worse = [tol](double a, double b) { return a <= b + tol; };

  if (not_worse(r.r_p, r.r_b) && not_worse(r.r_p, r.r_n)) return Region::Positive;
  if (not_worse(r.r_n, r.r_b) && not_worse(r.r_n, r.r_p)) return Region::Negative;
  return Region::Boundary;
}

}  // namespace dtrs
