#pragma once

#include "dtrs/loss_model.hpp"
#include "dtrs/rough_set.hpp"

namespace dtrs {

/// Expected loss of each action given P(X|[x]) = p.
struct RiskTriple {
  double r_p = 0.0;
  double r_b = 0.0;
  double r_n = 0.0;
};

/// R(a|[x]) = λ_aP·p + λ_aN·(1 − p). Throws Error when p is outside [0,1].
RiskTriple expected_risks(double p, const ScalarLosses& losses);

/// Relative tolerance under which two risks count as tied.
inline constexpr double kRiskTieTolerance = 1e-12;

/// Action of least expected risk, computed directly from the risks rather
/// than from alpha and beta. Ties go POS, then NEG, then BND.
Region min_risk_region(double p, const ScalarLosses& losses);

}  // namespace dtrs
