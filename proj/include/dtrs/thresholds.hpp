#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "dtrs/loss_model.hpp"

namespace dtrs {

/// Denominators with absolute value below this are treated as zero.
inline constexpr double kDenominatorTolerance = 1e-12;

/// A threshold formula whose denominator vanishes or turns negative.
class DegenerateMatrixError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

struct PointPair {
  double alpha = 0.0;
  double beta = 0.0;
};

struct BandPair {
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  double beta_lo = 0.0;
  double beta_hi = 0.0;

  bool contains(const PointPair& p, double slack = 0.0) const noexcept {
    return p.alpha >= alpha_lo - slack && p.alpha <= alpha_hi + slack && p.beta >= beta_lo - slack &&
           p.beta <= beta_hi + slack;
  }
};

using ThresholdResult = std::variant<PointPair, BandPair>;

/// alpha = (PN - BN) / ((PN - BN) + (BP - PP)),
/// beta  = (BN - NN) / ((BN - NN) + (NP - BP)).
/// Requires 0 ≤ PP ≤ BP ≤ NP and 0 ≤ NN ≤ BN ≤ PN (OrderingError otherwise)
/// and non-vanishing denominators (DegenerateMatrixError). Not clamped.
PointPair point_thresholds(const ScalarLosses& losses);

/// Midpoint of every support, then point_thresholds. Both endpoint chains
/// (all a, all b) must hold.
PointPair uniform_thresholds(const LossMatrix& matrix, double t);

/// The four cross-paired confidence-band quotients before clamping.
/// Every denominator must be positive (DegenerateMatrixError otherwise).
BandPair normal_band_quotients(const LossMatrix& matrix, double t);

/// normal_band_quotients clamped to [0,1].
BandPair normal_band_thresholds(const LossMatrix& matrix, double t);

enum class NormalCase { Lower = 1, Upper = 2 };

/// point_thresholds on the all (mu - n sigma) or all (mu + n sigma) matrix.
PointPair normal_special_thresholds(const LossMatrix& matrix, double t, NormalCase which);

enum class Attitude { Optimistic, Pessimistic };

/// point_thresholds on all lower bounds (optimistic) or all upper bounds (pessimistic).
PointPair interval_thresholds(const LossMatrix& matrix, double t, Attitude mode);

/// Range of alpha and beta over every selection inside the intervals.
/// Requires the interleaved ordering chains.
BandPair interval_threshold_bounds(const LossMatrix& matrix, double t);

/// Each fuzzy entry reduced to its cut hull, then as for intervals.
PointPair fuzzy_thresholds(const LossMatrix& matrix, double t, Attitude mode);
BandPair fuzzy_threshold_bounds(const LossMatrix& matrix, double t);

// Building blocks on already evaluated bands.
PointPair bound_thresholds(const BandLosses& bands, Attitude mode);
BandPair band_threshold_bounds(const BandLosses& bands, double t);

/// How a matrix is reduced to thresholds.
enum class ThresholdMode {
  Point,        ///< point and uniform families
  Central,      ///< normal: thresholds of the mu matrix
  LowerCase,    ///< normal: mu - n sigma matrix
  UpperCase,    ///< normal: mu + n sigma matrix
  Optimistic,   ///< interval / fuzzy lower bounds
  Pessimistic,  ///< interval / fuzzy upper bounds
  Band,         ///< normal, interval, fuzzy threshold bands
};

std::string_view to_string(ThresholdMode mode);
std::optional<ThresholdMode> parse_threshold_mode(std::string_view name);

bool mode_supported(LossFamily family, ThresholdMode mode) noexcept;

/// Ordering chain a (family, mode) pair depends on.
OrderingMode required_ordering(LossFamily family, ThresholdMode mode);

struct ThresholdComputation {
  ThresholdResult result;
  /// The scalar matrix behind a PointPair; empty for bands.
  std::optional<ScalarLosses> scalar_losses;
};

/// Dispatches to the family/mode specific routine. Throws Error for an
/// unsupported combination and DegenerateError subclasses per time point.
ThresholdComputation compute_thresholds(const LossMatrix& matrix, double t, ThresholdMode mode);

}  // namespace dtrs
