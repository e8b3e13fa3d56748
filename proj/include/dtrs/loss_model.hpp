#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dtrs/error.hpp"
#include "dtrs/time_expr.hpp"

namespace dtrs {

/// A loss entry whose invariants fail at the evaluated time: a(t) > b(t),
/// negative loss, memberships outside [0,1], an empty cut and so on.
class LossModelError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

struct PointLoss {
  TimeExpr value;
};

/// U(a(t), b(t)); reduced to its mean.
struct UniformLoss {
  TimeExpr a;
  TimeExpr b;
};

/// N(mu(t), sigma(t)^2) summarized by [mu - n sigma, mu + n sigma]. `sigma` is
/// the standard deviation, not the variance.
struct NormalBandLoss {
  TimeExpr mu;
  TimeExpr sigma;
  int n = 1;
};

struct IntervalLoss {
  TimeExpr lo;
  TimeExpr hi;
};

struct FuzzyElement {
  TimeExpr value;
  TimeExpr membership;
};

/// Discrete fuzzy number reduced to the hull of its eta(t)-cut (strong: > eta).
struct FuzzyLoss {
  std::vector<FuzzyElement> elements;
  TimeExpr eta;
  bool strong = false;
};

using LossSpec = std::variant<PointLoss, UniformLoss, NormalBandLoss, IntervalLoss, FuzzyLoss>;

enum class LossFamily { Point, Uniform, Normal, Interval, Fuzzy };

LossFamily family_of(const LossSpec& spec) noexcept;
std::string_view to_string(LossFamily family);
std::optional<LossFamily> parse_loss_family(std::string_view name);

/// The six entries, in the order they are stored.
enum class Entry : std::size_t { PP, BP, NP, NN, BN, PN };

inline constexpr std::array<Entry, 6> kAllEntries{Entry::PP, Entry::BP, Entry::NP, Entry::NN, Entry::BN, Entry::PN};

std::string_view to_string(Entry entry);

/// Homogeneous six-entry loss matrix. Rows are actions (P, B, N); the second
/// letter is the state (P: object in X, N: object not in X).
class LossMatrix {
 public:
  /// Throws Error when the entries do not all share one family.
  LossMatrix(LossSpec pp, LossSpec bp, LossSpec np, LossSpec nn, LossSpec bn, LossSpec pn);

  LossFamily family() const noexcept { return family_; }
  const LossSpec& operator[](Entry entry) const noexcept { return entries_[static_cast<std::size_t>(entry)]; }

 private:
  std::array<LossSpec, 6> entries_;
  LossFamily family_;
};

struct ScalarLoss {
  double value = 0.0;
};

struct BandLoss {
  double lo = 0.0;
  double hi = 0.0;
};

using LossValue = std::variant<ScalarLoss, BandLoss>;

/// Lower and upper end of a loss value; a scalar is its own band.
BandLoss as_band(const LossValue& value) noexcept;

LossValue evaluate_loss(const LossSpec& spec, double t);

/// One distinct element value of a fuzzy number at a fixed t, carrying the
/// largest membership among the elements that evaluate to it.
struct FuzzyPoint {
  double value = 0.0;
  double membership = 0.0;
};

/// Pointwise evaluation, merged by value and sorted ascending. Throws
/// LossModelError for memberships outside [0,1].
std::vector<FuzzyPoint> evaluate_fuzzy(const std::vector<FuzzyElement>& elements, double t);

/// Element values with membership >= eta_value (> when strong), ascending and
/// distinct. May be empty.
std::vector<double> cut_set(const std::vector<FuzzyElement>& elements, double eta_value, bool strong, double t);

/// Six evaluated losses, same naming as LossMatrix.
template <typename T>
struct SixLosses {
  T pp{}, bp{}, np{}, nn{}, bn{}, pn{};

  template <typename F>
  auto map(F&& f) const -> SixLosses<decltype(f(pp))> {
    return {f(pp), f(bp), f(np), f(nn), f(bn), f(pn)};
  }
};

using ScalarLosses = SixLosses<double>;
using BandLosses = SixLosses<BandLoss>;

/// Evaluates every entry and widens it to a band.
BandLosses evaluate_bands(const LossMatrix& matrix, double t);

enum class OrderingMode {
  Central,      ///< means / midpoints / point values
  LowerBounds,  ///< lower ends of each band
  UpperBounds,  ///< upper ends of each band
  Interleaved,  ///< PP.lo <= PP.hi <= BP.lo <= ... and the N-column analogue
};

struct OrderingViolation {
  double t = 0.0;  ///< NaN when not tied to a time point
  std::string inequality;  ///< e.g. "λ^min_PP ≤ λ^min_BP"
  double lhs = 0.0;
  double rhs = 0.0;

  std::string message() const;
};

/// Checks 0 ≤ λ_PP ≤ λ_BP ≤ λ_NP and 0 ≤ λ_NN ≤ λ_BN ≤ λ_PN on the chosen
/// representatives. Returns the first violated inequality.
std::optional<OrderingViolation> validate_ordering(const LossMatrix& matrix, double t, OrderingMode mode);
std::optional<OrderingViolation> validate_ordering(const BandLosses& losses, double t, OrderingMode mode);

class OrderingError : public DegenerateError {
 public:
  explicit OrderingError(OrderingViolation violation);
  const OrderingViolation& violation() const noexcept { return violation_; }

 private:
  OrderingViolation violation_;
};

}  // namespace dtrs
