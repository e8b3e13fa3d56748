#include "dtrs/loss_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dtrs {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double require_non_negative(double v, const char* what, double t) {
  if (v < 0.0) throw LossModelError(std::string("negative loss (") + what + " = " + num(v) + ") at t=" + num(t));
  return v;
}

}  // namespace

LossFamily family_of(const LossSpec& spec) noexcept {
  return std::visit(Overloaded{
                        [](const PointLoss&) { return LossFamily::Point; },
                        [](const UniformLoss&) { return LossFamily::Uniform; },
                        [](const NormalBandLoss&) { return LossFamily::Normal; },
                        [](const IntervalLoss&) { return LossFamily::Interval; },
                        [](const FuzzyLoss&) { return LossFamily::Fuzzy; },
                    },
                    spec);
}

std::string_view to_string(LossFamily family) {
  switch (family) {
    case LossFamily::Point: return "point";
    case LossFamily::Uniform: return "uniform";
    case LossFamily::Normal: return "normal";
    case LossFamily::Interval: return "interval";
    case LossFamily::Fuzzy: return "fuzzy";
  }
  return "?";
}

std::optional<LossFamily> parse_loss_family(std::string_view name) {
  for (auto f : {LossFamily::Point, LossFamily::Uniform, LossFamily::Normal, LossFamily::Interval, LossFamily::Fuzzy}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Entry entry) {
  static constexpr std::array<std::string_view, 6> names{"PP", "BP", "NP", "NN", "BN", "PN"};
  return names[static_cast<std::size_t>(entry)];
}

LossMatrix::LossMatrix(LossSpec pp, LossSpec bp, LossSpec np, LossSpec nn, LossSpec bn, LossSpec pn)
    : entries_{std::move(pp), std::move(bp), std::move(np), std::move(nn), std::move(bn), std::move(pn)},
      family_(family_of(entries_[0])) {
  for (Entry e : kAllEntries) {
    if (family_of((*this)[e]) != family_) {
      throw Error("mixed loss families: PP is " + std::string(to_string(family_)) + " but " +
                  std::string(to_string(e)) + " is " + std::string(to_string(family_of((*this)[e]))));
    }
  }
}

BandLoss as_band(const LossValue& value) noexcept {
  if (const auto* s = std::get_if<ScalarLoss>(&value)) return {s->value, s->value};
  return std::get<BandLoss>(value);
}

std::vector<FuzzyPoint> evaluate_fuzzy(const std::vector<FuzzyElement>& elements, double t) {
  std::vector<FuzzyPoint> points;
  points.reserve(elements.size());
  for (const auto& e : elements) {
    const double m = e.membership(t);
    if (m < 0.0 || m > 1.0) {
      throw LossModelError("membership " + num(m) + " outside [0,1] for element " + e.value.to_string() +
                           " at t=" + num(t));
    }
    points.push_back({e.value(t), m});
  }
  std::sort(points.begin(), points.end(), [](const FuzzyPoint& a, const FuzzyPoint& b) {
    return a.value < b.value || (a.value == b.value && a.membership > b.membership);
  });
  // Sorted with the largest membership first within each value.
  auto last = std::unique(points.begin(), points.end(),
                          [](const FuzzyPoint& a, const FuzzyPoint& b) { return a.value == b.value; });
  points.erase(last, points.end());
  return points;
}

std::vector<double> cut_set(const std::vector<FuzzyElement>& elements, double eta_value, bool strong, double t) {
  std::vector<double> values;
  for (const auto& p : evaluate_fuzzy(elements, t)) {
    if (strong ? p.membership > eta_value : p.membership >= eta_value) values.push_back(p.value);
  }
  return values;
}

LossValue evaluate_loss(const LossSpec& spec, double t) {
  return std::visit(
      Overloaded{
          [t](const PointLoss& s) -> LossValue { return ScalarLoss{require_non_negative(s.value(t), "value", t)}; },
          [t](const UniformLoss& s) -> LossValue {
            const double a = s.a(t);
            const double b = s.b(t);
            if (a > b) throw LossModelError("uniform support a=" + num(a) + " > b=" + num(b) + " at t=" + num(t));
            return ScalarLoss{require_non_negative((a + b) / 2.0, "mean", t)};
          },
          [t](const NormalBandLoss& s) -> LossValue {
            if (s.n < 1 || s.n > 3) throw LossModelError("normal band width n must be 1, 2 or 3");
            const double mu = s.mu(t);
            const double sigma = s.sigma(t);
            if (sigma < 0.0) throw LossModelError("negative sigma " + num(sigma) + " at t=" + num(t));
            const double half = s.n * sigma;
            return BandLoss{require_non_negative(mu - half, "mu - n*sigma", t), mu + half};
          },
          [t](const IntervalLoss& s) -> LossValue {
            const double lo = s.lo(t);
            const double hi = s.hi(t);
            if (lo > hi) throw LossModelError("interval lo=" + num(lo) + " > hi=" + num(hi) + " at t=" + num(t));
            return BandLoss{require_non_negative(lo, "lo", t), hi};
          },
          [t](const FuzzyLoss& s) -> LossValue {
            if (s.elements.empty()) throw LossModelError("fuzzy number has no elements");
            const double eta = s.eta(t);
            if (eta < 0.0 || eta > 1.0) throw LossModelError("eta " + num(eta) + " outside [0,1] at t=" + num(t));
            const auto values = cut_set(s.elements, eta, s.strong, t);
            if (values.empty()) {
              throw LossModelError(std::string(s.strong ? "strong " : "") + "cut at eta=" + num(eta) +
                                   " is empty at t=" + num(t));
            }
            return BandLoss{require_non_negative(values.front(), "cut lower bound", t), values.back()};
          },
      },
      spec);
}

BandLosses evaluate_bands(const LossMatrix& m, double t) {
  auto band = [&](Entry e) { return as_band(evaluate_loss(m[e], t)); };
  return {band(Entry::PP), band(Entry::BP), band(Entry::NP), band(Entry::NN), band(Entry::BN), band(Entry::PN)};
}

std::string OrderingViolation::message() const {
  const std::string where = std::isnan(t) ? "" : " at t=" + num(t);
  return inequality + " fails" + where + " (" + num(lhs) + " > " + num(rhs) + ")";
}

OrderingError::OrderingError(OrderingViolation violation)
    : DegenerateError(violation.message()), violation_(std::move(violation)) {}

namespace {

struct Term {
  std::string name;
  double value;
};

std::optional<OrderingViolation> check_chain(const std::vector<Term>& chain, double t) {
  if (chain.front().value < 0.0) return OrderingViolation{t, "0 ≤ " + chain.front().name, 0.0, chain.front().value};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i - 1].value > chain[i].value) {
      return OrderingViolation{t, chain[i - 1].name + " ≤ " + chain[i].name, chain[i - 1].value, chain[i].value};
    }
  }
  return std::nullopt;
}

std::optional<OrderingViolation> check_scalar_chains(const ScalarLosses& v, std::string_view tag, double t) {
  const std::string prefix = "λ" + std::string(tag) + "_";
  if (auto bad = check_chain({{prefix + "PP", v.pp}, {prefix + "BP", v.bp}, {prefix + "NP", v.np}}, t)) return bad;
  return check_chain({{prefix + "NN", v.nn}, {prefix + "BN", v.bn}, {prefix + "PN", v.pn}}, t);
}

std::optional<OrderingViolation> check_interleaved(const BandLosses& b, double t) {
  auto lo = [](const char* e) { return std::string("λ^min_") + e; };
  auto hi = [](const char* e) { return std::string("λ^max_") + e; };
  if (auto bad = check_chain({{lo("PP"), b.pp.lo},
                              {hi("PP"), b.pp.hi},
                              {lo("BP"), b.bp.lo},
                              {hi("BP"), b.bp.hi},
                              {lo("NP"), b.np.lo},
                              {hi("NP"), b.np.hi}},
                             t)) {
    return bad;
  }
  return check_chain({{lo("NN"), b.nn.lo},
                      {hi("NN"), b.nn.hi},
                      {lo("BN"), b.bn.lo},
                      {hi("BN"), b.bn.hi},
                      {lo("PN"), b.pn.lo},
                      {hi("PN"), b.pn.hi}},
                     t);
}

}  // namespace

std::optional<OrderingViolation> validate_ordering(const BandLosses& losses, double t, OrderingMode mode) {
  switch (mode) {
    case OrderingMode::Central:
      return check_scalar_chains(losses.map([](BandLoss b) { return (b.lo + b.hi) / 2.0; }), "", t);
    case OrderingMode::LowerBounds: return check_scalar_chains(losses.map([](BandLoss b) { return b.lo; }), "^min", t);
    case OrderingMode::UpperBounds: return check_scalar_chains(losses.map([](BandLoss b) { return b.hi; }), "^max", t);
    case OrderingMode::Interleaved: return check_interleaved(losses, t);
  }
  return std::nullopt;
}

std::optional<OrderingViolation> validate_ordering(const LossMatrix& matrix, double t, OrderingMode mode) {
  auto each = [&](auto&& f) {
    return ScalarLosses{f(matrix[Entry::PP]), f(matrix[Entry::BP]), f(matrix[Entry::NP]),
                        f(matrix[Entry::NN]), f(matrix[Entry::BN]), f(matrix[Entry::PN])};
  };
  // Uniform entries carry their support endpoints; normal entries are centred on mu.
  if (matrix.family() == LossFamily::Uniform) {
    auto endpoints = [&](const LossSpec& s) {
      const auto& u = std::get<UniformLoss>(s);
      return BandLoss{u.a(t), u.b(t)};
    };
    const BandLosses bands = {endpoints(matrix[Entry::PP]), endpoints(matrix[Entry::BP]),
                              endpoints(matrix[Entry::NP]), endpoints(matrix[Entry::NN]),
                              endpoints(matrix[Entry::BN]), endpoints(matrix[Entry::PN])};
    return validate_ordering(bands, t, mode);
  }
  if (matrix.family() == LossFamily::Normal && mode == OrderingMode::Central) {
    return check_scalar_chains(each([&](const LossSpec& s) { return std::get<NormalBandLoss>(s).mu(t); }), "", t);
  }
  return validate_ordering(evaluate_bands(matrix, t), t, mode);
}

}  // namespace dtrs
