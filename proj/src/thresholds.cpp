#include "dtrs/thresholds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace dtrs {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require_family(const LossMatrix& matrix, LossFamily family, const char* routine) {
  if (matrix.family() != family) {
    throw Error(std::string(routine) + " needs a " + std::string(to_string(family)) + " matrix, got " +
                std::string(to_string(matrix.family())));
  }
}

void require_ordering(const BandLosses& bands, double t, OrderingMode mode) {
  if (auto bad = validate_ordering(bands, t, mode)) throw OrderingError(*bad);
}

double quotient(double numerator, double denominator, const char* name) {
  if (std::abs(denominator) < kDenominatorTolerance) {
    throw DegenerateMatrixError(std::string(name) + " denominator vanishes");
  }
  return numerator / denominator;
}

ScalarLosses pick(const BandLosses& bands, Attitude mode) {
  return mode == Attitude::Optimistic ? bands.map([](BandLoss b) { return b.lo; })
                                      : bands.map([](BandLoss b) { return b.hi; });
}

// Extreme quotients over all selections inside the bands: the lower one takes
// the narrowest numerator over the widest denominator, the upper one the reverse.
struct RawBand {
  double alpha_min_num, alpha_min_den;
  double alpha_max_num, alpha_max_den;
  double beta_min_num, beta_min_den;
  double beta_max_num, beta_max_den;
};

RawBand raw_band(const BandLosses& b) {
  return {
      b.pn.lo - b.bn.hi, (b.pn.hi - b.bn.lo) + (b.bp.hi - b.pp.lo),
      b.pn.hi - b.bn.lo, (b.pn.lo - b.bn.hi) + (b.bp.lo - b.pp.hi),
      b.bn.lo - b.nn.hi, (b.bn.hi - b.nn.lo) + (b.np.hi - b.bp.lo),
      b.bn.hi - b.nn.lo, (b.bn.lo - b.nn.hi) + (b.np.lo - b.bp.hi),
  };
}

BandPair checked_band(BandPair band) {
  const std::array<double, 4> v{band.alpha_lo, band.alpha_hi, band.beta_lo, band.beta_hi};
  for (double x : v) {
    if (!(x >= 0.0 && x <= 1.0)) throw DegenerateMatrixError("threshold band leaves [0,1]: " + num(x));
  }
  if (band.alpha_lo > band.alpha_hi || band.beta_lo > band.beta_hi) {
    throw DegenerateMatrixError("threshold band is inverted");
  }
  return band;
}

}  // namespace

PointPair point_thresholds(const ScalarLosses& l) {
  const BandLosses as_bands = l.map([](double v) { return BandLoss{v, v}; });
  if (auto bad = validate_ordering(as_bands, 0.0, OrderingMode::Central)) {
    bad->t = std::nan("");
    throw OrderingError(*bad);
  }
  const double alpha_num = l.pn - l.bn;
  const double beta_num = l.bn - l.nn;
  return {quotient(alpha_num, alpha_num + (l.bp - l.pp), "alpha"),
          quotient(beta_num, beta_num + (l.np - l.bp), "beta")};
}

PointPair uniform_thresholds(const LossMatrix& matrix, double t) {
  require_family(matrix, LossFamily::Uniform, "uniform_thresholds");
  for (OrderingMode mode : {OrderingMode::LowerBounds, OrderingMode::UpperBounds}) {
    if (auto bad = validate_ordering(matrix, t, mode)) throw OrderingError(*bad);
  }
  const ScalarLosses means = evaluate_bands(matrix, t).map([](BandLoss b) { return b.lo; });
  return point_thresholds(means);
}

BandPair normal_band_quotients(const LossMatrix& matrix, double t) {
  require_family(matrix, LossFamily::Normal, "normal_band_quotients");
  const RawBand r = raw_band(evaluate_bands(matrix, t));
  auto positive = [&](double den, const char* name) {
    if (den < kDenominatorTolerance) {
      throw DegenerateMatrixError(std::string(name) + " denominator " + num(den) + " is not positive at t=" + num(t));
    }
    return den;
  };
  return {r.alpha_min_num / positive(r.alpha_min_den, "alpha^min"),
          r.alpha_max_num / positive(r.alpha_max_den, "alpha^max"),
          r.beta_min_num / positive(r.beta_min_den, "beta^min"),
          r.beta_max_num / positive(r.beta_max_den, "beta^max")};
}

BandPair normal_band_thresholds(const LossMatrix& matrix, double t) {
  const BandPair raw = normal_band_quotients(matrix, t);
  auto clamp01 = [](double x) { return std::clamp(x, 0.0, 1.0); };
  return checked_band({clamp01(raw.alpha_lo), clamp01(raw.alpha_hi), clamp01(raw.beta_lo), clamp01(raw.beta_hi)});
}

PointPair normal_special_thresholds(const LossMatrix& matrix, double t, NormalCase which) {
  require_family(matrix, LossFamily::Normal, "normal_special_thresholds");
  const BandLosses bands = evaluate_bands(matrix, t);
  return point_thresholds(pick(bands, which == NormalCase::Lower ? Attitude::Optimistic : Attitude::Pessimistic));
}

PointPair bound_thresholds(const BandLosses& bands, Attitude mode) { return point_thresholds(pick(bands, mode)); }

BandPair band_threshold_bounds(const BandLosses& bands, double t) {
  require_ordering(bands, t, OrderingMode::Interleaved);
  const RawBand r = raw_band(bands);
  // The interleaved chains make every numerator and the upper-quotient
  // denominators non-negative; a zero upper denominator means an unbounded
  // quotient, which the min{., 1} caps.
  auto upper = [](double numerator, double denominator) {
    if (denominator < kDenominatorTolerance) return 1.0;
    return std::min(numerator / denominator, 1.0);
  };
  return checked_band({quotient(r.alpha_min_num, r.alpha_min_den, "alpha lower bound"),
                       upper(r.alpha_max_num, r.alpha_max_den),
                       quotient(r.beta_min_num, r.beta_min_den, "beta lower bound"),
                       upper(r.beta_max_num, r.beta_max_den)});
}

PointPair interval_thresholds(const LossMatrix& matrix, double t, Attitude mode) {
  require_family(matrix, LossFamily::Interval, "interval_thresholds");
  const BandLosses bands = evaluate_bands(matrix, t);
  require_ordering(bands, t, mode == Attitude::Optimistic ? OrderingMode::LowerBounds : OrderingMode::UpperBounds);
  return bound_thresholds(bands, mode);
}

BandPair interval_threshold_bounds(const LossMatrix& matrix, double t) {
  require_family(matrix, LossFamily::Interval, "interval_threshold_bounds");
  return band_threshold_bounds(evaluate_bands(matrix, t), t);
}

PointPair fuzzy_thresholds(const LossMatrix& matrix, double t, Attitude mode) {
  require_family(matrix, LossFamily::Fuzzy, "fuzzy_thresholds");
  const BandLosses bands = evaluate_bands(matrix, t);
  require_ordering(bands, t, mode == Attitude::Optimistic ? OrderingMode::LowerBounds : OrderingMode::UpperBounds);
  return bound_thresholds(bands, mode);
}

BandPair fuzzy_threshold_bounds(const LossMatrix& matrix, double t) {
  require_family(matrix, LossFamily::Fuzzy, "fuzzy_threshold_bounds");
  return band_threshold_bounds(evaluate_bands(matrix, t), t);
}

std::string_view to_string(ThresholdMode mode) {
  switch (mode) {
    case ThresholdMode::Point: return "point";
    case ThresholdMode::Central: return "central";
    case ThresholdMode::LowerCase: return "lower";
    case ThresholdMode::UpperCase: return "upper";
    case ThresholdMode::Optimistic: return "optimistic";
    case ThresholdMode::Pessimistic: return "pessimistic";
    case ThresholdMode::Band: return "band";
  }
  return "?";
}

std::optional<ThresholdMode> parse_threshold_mode(std::string_view name) {
  for (auto m : {ThresholdMode::Point, ThresholdMode::Central, ThresholdMode::LowerCase, ThresholdMode::UpperCase,
                 ThresholdMode::Optimistic, ThresholdMode::Pessimistic, ThresholdMode::Band}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool mode_supported(LossFamily family, ThresholdMode mode) noexcept {
  switch (family) {
    case LossFamily::Point:
    case LossFamily::Uniform: return mode == ThresholdMode::Point;
    case LossFamily::Normal:
      return mode == ThresholdMode::Central || mode == ThresholdMode::LowerCase ||
             mode == ThresholdMode::UpperCase || mode == ThresholdMode::Band;
    case LossFamily::Interval:
    case LossFamily::Fuzzy:
      return mode == ThresholdMode::Optimistic || mode == ThresholdMode::Pessimistic || mode == ThresholdMode::Band;
  }
  return false;
}

OrderingMode required_ordering(LossFamily family, ThresholdMode mode) {
  switch (mode) {
    case ThresholdMode::Point:
    case ThresholdMode::Central: return OrderingMode::Central;
    case ThresholdMode::LowerCase:
    case ThresholdMode::Optimistic: return OrderingMode::LowerBounds;
    case ThresholdMode::UpperCase:
    case ThresholdMode::Pessimistic: return OrderingMode::UpperBounds;
    case ThresholdMode::Band:
      return family == LossFamily::Normal ? OrderingMode::Central : OrderingMode::Interleaved;
  }
  return OrderingMode::Central;
}

ThresholdComputation compute_thresholds(const LossMatrix& matrix, double t, ThresholdMode mode) {
  if (!mode_supported(matrix.family(), mode)) {
    throw Error("mode '" + std::string(to_string(mode)) + "' is not available for the " +
                std::string(to_string(matrix.family())) + " family");
  }
  auto from_scalars = [](const ScalarLosses& losses) {
    return ThresholdComputation{point_thresholds(losses), losses};
  };
  switch (matrix.family()) {
    case LossFamily::Point:
    case LossFamily::Uniform: {
      if (matrix.family() == LossFamily::Uniform) {
        for (OrderingMode m : {OrderingMode::LowerBounds, OrderingMode::UpperBounds}) {
          if (auto bad = validate_ordering(matrix, t, m)) throw OrderingError(*bad);
        }
      }
      return from_scalars(evaluate_bands(matrix, t).map([](BandLoss b) { return b.lo; }));
    }
    case LossFamily::Normal: {
      if (mode == ThresholdMode::Band) return {normal_band_thresholds(matrix, t), std::nullopt};
      const BandLosses bands = evaluate_bands(matrix, t);
      if (mode == ThresholdMode::Central) {
        auto mu = [&](Entry e) { return std::get<NormalBandLoss>(matrix[e]).mu(t); };
        const ScalarLosses mus{mu(Entry::PP), mu(Entry::BP), mu(Entry::NP),
                               mu(Entry::NN), mu(Entry::BN), mu(Entry::PN)};
        return from_scalars(mus);
      }
      return from_scalars(pick(bands, mode == ThresholdMode::LowerCase ? Attitude::Optimistic : Attitude::Pessimistic));
    }
    case LossFamily::Interval:
    case LossFamily::Fuzzy: {
      const BandLosses bands = evaluate_bands(matrix, t);
      if (mode == ThresholdMode::Band) return {band_threshold_bounds(bands, t), std::nullopt};
      const Attitude attitude = mode == ThresholdMode::Optimistic ? Attitude::Optimistic : Attitude::Pessimistic;
      require_ordering(bands, t, attitude == Attitude::Optimistic ? OrderingMode::LowerBounds : OrderingMode::UpperBounds);
      return from_scalars(pick(bands, attitude));
    }
  }
  throw Error("unreachable loss family");
}

}  // namespace dtrs
