#pragma once
// Test-only reference implementations. They compute the same quantities as
// the library by a different route (pairwise scans, bisection on risk lines,
// sampling) so that agreement means something.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "dtrs/loss_model.hpp"
#include "dtrs/rough_set.hpp"
#include "dtrs/thresholds.hpp"
#include "dtrs/time_expr.hpp"

namespace oracle {

using dtrs::BandLoss;
using dtrs::BandLosses;
using dtrs::LossMatrix;
using dtrs::ScalarLosses;
using dtrs::TimeExpr;

inline TimeExpr c(double v) { return TimeExpr::constant(v); }
inline TimeExpr expr(const char* text) { return dtrs::parse_time_expr(text); }

// ---- rough sets ---------------------------------------------------------

// Objects i and j are indiscernible when every condition column matches.
inline bool indiscernible(const dtrs::InformationSystem& table, const std::vector<std::size_t>& cols, std::size_t i,
                          std::size_t j) {
  for (std::size_t c : cols) {
    if (table.value(i, c) != table.value(j, c)) return false;
  }
  return true;
}

// [x_i] by a full O(n^2) scan.
inline std::vector<std::size_t> class_of(const dtrs::InformationSystem& table, const std::vector<std::size_t>& cols,
                                         std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < table.size(); ++j) {
    if (indiscernible(table, cols, i, j)) out.push_back(j);
  }
  return out;
}

inline double probability_of(const dtrs::InformationSystem& table, const std::vector<std::size_t>& cls) {
  const std::size_t d = table.attribute_index(table.decision_attribute());
  std::size_t hits = 0;
  for (std::size_t j : cls) hits += table.value(j, d) == table.positive_value();
  return static_cast<double>(hits) / static_cast<double>(cls.size());
}

struct RandomTable {
  dtrs::InformationSystem table;
  std::vector<std::string> condition;
};

// Small table with a few low-cardinality attributes so that classes collide.
inline RandomTable random_table(std::mt19937_64& rng, std::size_t objects) {
  std::uniform_int_distribution<int> n_attrs(1, 3);
  std::uniform_int_distribution<int> card(1, 3);
  const int k = n_attrs(rng);
  std::vector<std::string> attrs;
  std::vector<int> cards;
  for (int a = 0; a < k; ++a) {
    attrs.push_back("a" + std::to_string(a));
    cards.push_back(card(rng));
  }
  attrs.push_back("d");
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> rows;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < objects; ++i) {
    ids.push_back("o" + std::to_string(i));
    std::vector<std::string> row;
    for (int a = 0; a < k; ++a) row.push_back(std::to_string(std::uniform_int_distribution<int>(0, cards[a] - 1)(rng)));
    row.push_back(coin(rng) ? "yes" : "no");
    rows.push_back(std::move(row));
  }
  std::vector<std::string> condition(attrs.begin(), attrs.end() - 1);
  // Sometimes condition on a subset only.
  if (condition.size() > 1 && coin(rng)) condition.pop_back();
  return {dtrs::InformationSystem(ids, attrs, rows, "d", "yes"), condition};
}

// ---- risks and thresholds -----------------------------------------------

struct Risks {
  double p, b, n;
};

inline Risks risks(const ScalarLosses& l, double p) {
  return {l.pp * p + l.pn * (1 - p), l.bp * p + l.bn * (1 - p), l.np * p + l.nn * (1 - p)};
}

// Root of f on [0,1] by bisection on a sign change; f is affine in p here.
template <typename F>
double bisect(F f) {
  double lo = 0.0, hi = 1.0;
  const bool rising = f(hi) > f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0) == rising) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// alpha: where R(P) and R(B) cross; beta: where R(B) and R(N) cross.
inline double crossing_alpha(const ScalarLosses& l) {
  return bisect([&](double p) { return risks(l, p).b - risks(l, p).p; });
}
inline double crossing_beta(const ScalarLosses& l) {
  return bisect([&](double p) { return risks(l, p).n - risks(l, p).b; });
}

// Non-decreasing values from random gaps; integer gaps make exact ties likely.
inline std::vector<double> ascending(std::mt19937_64& rng, int count, bool integers) {
  std::vector<double> v;
  double acc = 0.0;
  for (int i = 0; i < count; ++i) {
    double step = integers ? std::uniform_int_distribution<int>(0, 6)(rng)
                           : std::uniform_real_distribution<double>(0.0, 8.0)(rng);
    if (i == 0) step = integers ? std::uniform_int_distribution<int>(0, 3)(rng) : step / 4.0;
    acc += step;
    v.push_back(acc);
  }
  return v;
}

// Random matrix with 0 <= PP <= BP <= NP, 0 <= NN <= BN <= PN, non-vanishing
// denominators and beta <= alpha.
inline ScalarLosses random_scalar_losses(std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const bool ints = coin(rng);
    const auto p_col = ascending(rng, 3, ints);
    const auto n_col = ascending(rng, 3, ints);
    const ScalarLosses l{p_col[0], p_col[1], p_col[2], n_col[0], n_col[1], n_col[2]};
    const double da = (l.pn - l.bn) + (l.bp - l.pp);
    const double db = (l.bn - l.nn) + (l.np - l.bp);
    if (da < 1e-9 || db < 1e-9) continue;
    if ((l.bn - l.nn) / db > (l.pn - l.bn) / da) continue;
    return l;
  }
}

// Interleaved bands: PP.lo <= PP.hi <= BP.lo <= ... <= NP.hi and likewise
// NN, BN, PN, with non-vanishing denominators for every selection. Integer
// draws (exact ties) only when `allow_ties`.
inline BandLosses random_interleaved_bands(std::mt19937_64& rng, bool allow_ties = true) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const bool ints = allow_ties && coin(rng);
    const auto p = ascending(rng, 6, ints);
    const auto n = ascending(rng, 6, ints);
    BandLosses b{{p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]}, {n[0], n[1]}, {n[2], n[3]}, {n[4], n[5]}};
    const double alpha_den = (b.pn.hi - b.bn.lo) + (b.bp.hi - b.pp.lo);
    const double beta_den = (b.bn.hi - b.nn.lo) + (b.np.hi - b.bp.lo);
    if (alpha_den < 1e-9 || beta_den < 1e-9) continue;
    if ((b.pn.lo - b.bn.hi) + (b.bp.lo - b.pp.hi) < 1e-9) continue;
    if ((b.bn.lo - b.nn.hi) + (b.np.lo - b.bp.hi) < 1e-9) continue;
    return b;
  }
}

inline double uniform_in(std::mt19937_64& rng, BandLoss b) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) * (b.hi - b.lo) + b.lo;
}

inline ScalarLosses random_selection(std::mt19937_64& rng, const BandLosses& b) {
  return {uniform_in(rng, b.pp), uniform_in(rng, b.bp), uniform_in(rng, b.np),
          uniform_in(rng, b.nn), uniform_in(rng, b.bn), uniform_in(rng, b.pn)};
}

// ---- matrices -------------------------------------------------------------

inline LossMatrix point_matrix(const ScalarLosses& l) {
  return LossMatrix(dtrs::PointLoss{c(l.pp)}, dtrs::PointLoss{c(l.bp)}, dtrs::PointLoss{c(l.np)},
                    dtrs::PointLoss{c(l.nn)}, dtrs::PointLoss{c(l.bn)}, dtrs::PointLoss{c(l.pn)});
}

inline LossMatrix interval_matrix(const BandLosses& b) {
  auto iv = [](BandLoss x) { return dtrs::LossSpec{dtrs::IntervalLoss{c(x.lo), c(x.hi)}}; };
  return LossMatrix(iv(b.pp), iv(b.bp), iv(b.np), iv(b.nn), iv(b.bn), iv(b.pn));
}

// Fuzzy entry whose eta-cut hull is exactly `band`: the two ends carry
// membership 1, an interior value sits at the cut level, and two decoys fall
// below it (one of them outside the band). `eta` must be positive.
inline dtrs::LossSpec fuzzy_entry(std::mt19937_64& rng, BandLoss band, double eta) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<dtrs::FuzzyElement> e;
  e.push_back({c(band.lo), c(1.0)});
  e.push_back({c(band.hi), c(1.0)});
  e.push_back({c(band.lo + u(rng) * (band.hi - band.lo)), c(eta)});
  e.push_back({c(band.lo + u(rng) * (band.hi - band.lo)), c(eta * u(rng) * 0.99)});
  e.push_back({c(band.hi + 1.0 + 5.0 * u(rng)), c(eta * u(rng) * 0.99)});
  std::shuffle(e.begin(), e.end(), rng);
  return dtrs::FuzzyLoss{std::move(e), c(eta), false};
}

inline LossMatrix fuzzy_matrix(std::mt19937_64& rng, const BandLosses& b, double eta) {
  return LossMatrix(fuzzy_entry(rng, b.pp, eta), fuzzy_entry(rng, b.bp, eta), fuzzy_entry(rng, b.np, eta),
                    fuzzy_entry(rng, b.nn, eta), fuzzy_entry(rng, b.bn, eta), fuzzy_entry(rng, b.pn, eta));
}

// Normal matrix from band ends: mu the centre, n*sigma the half width.
inline LossMatrix normal_matrix(const BandLosses& b, int n) {
  auto nb = [n](BandLoss x) {
    return dtrs::LossSpec{dtrs::NormalBandLoss{c(0.5 * (x.lo + x.hi)), c(0.5 * (x.hi - x.lo) / n), n}};
  };
  return LossMatrix(nb(b.pp), nb(b.bp), nb(b.np), nb(b.nn), nb(b.bn), nb(b.pn));
}

// ---- worked example matrices ------------------------------------------------

inline LossMatrix uniform_example() {
  auto u = [](const char* a, const char* b) { return dtrs::LossSpec{dtrs::UniformLoss{expr(a), expr(b)}}; };
  return LossMatrix(u("0", "0"), u("2*t+2", "4*t+4"), u("3*t+6", "5*t+12"), u("0", "0"), u("t+2", "3*t+10"),
                    u("2*t+14", "4*t+20"));
}

inline LossMatrix interval_example() {
  auto iv = [](const char* lo, const char* hi) { return dtrs::LossSpec{dtrs::IntervalLoss{expr(lo), expr(hi)}}; };
  return LossMatrix(iv("t", "2*t+2"), iv("2*t+3", "2*t+5"), iv("3*t+6", "3*t+8"), iv("2*t", "2*t+2"),
                    iv("3*t+2", "3*t+6"), iv("4*t+8", "4*t+10"));
}

// Every entry shares n*sigma = (t+2)/2.
inline LossMatrix normal_example(int n = 1) {
  const std::string sigma = "(t+2)/(2*" + std::to_string(n) + ")";
  auto nb = [&](const char* mu) { return dtrs::LossSpec{dtrs::NormalBandLoss{expr(mu), expr(sigma.c_str()), n}}; };
  return LossMatrix(nb("(3*t+2)/2"), nb("(5*t+8)/2"), nb("(7*t+14)/2"), nb("(3*t+2)/2"), nb("(5*t+8)/2"),
                    nb("(7*t+18)/2"));
}

struct Elem {
  const char* value;
  const char* membership;
};

inline std::vector<dtrs::FuzzyElement> elements(const std::vector<Elem>& list) {
  std::vector<dtrs::FuzzyElement> out;
  for (const auto& e : list) out.push_back({expr(e.value), expr(e.membership)});
  return out;
}

// Nine-element fuzzy number used for the cut examples.
inline std::vector<dtrs::FuzzyElement> cut_example_number() {
  return elements({{"t+1", "1-1/t"},
                   {"2*t+1", "1-1/(2*t)"},
                   {"t+3", "1-1/t"},
                   {"4*t+1", "1-1/(2*t)"},
                   {"2*t-1", "1-1/(2*t+1)"},
                   {"4*t-1", "1-1/(2*t)"},
                   {"4*t^2+1", "1-1/t"},
                   {"2*t^2+1", "1-1/(2*t+1)"},
                   {"4*t^2+2*t-1", "1-1/t"}});
}

inline LossMatrix fuzzy_example(bool strong = false) {
  const char* m3 = "1-1/(3*t)";
  const char* m1 = "1-1/t";
  const char* m2 = "1-1/(2*t)";
  auto entry = [&](std::vector<const char*> values) {
    const char* mem[] = {m3, m3, m3, m1, m2, m2, m2, m1, m1};
    std::vector<Elem> list;
    for (std::size_t i = 0; i < values.size(); ++i) list.push_back({values[i], mem[i]});
    return dtrs::LossSpec{dtrs::FuzzyLoss{elements(list), expr(m3), strong}};
  };
  return LossMatrix(
      entry({"t", "t+1", "2*t+2", "3*t+3", "5*t+3", "4*t+6", "4*t+8", "4*t+9", "4*t+10"}),
      entry({"2*t+3", "2*t+4", "2*t+5", "3*t+6", "3*t+7", "4*t+6", "4*t+8", "4*t+9", "4*t+10"}),
      entry({"3*t+6", "3*t+7", "3*t+8", "4*t+9", "5*t+9", "4*t+10", "4*t+11", "4*t+12", "5*t+10"}),
      entry({"2*t", "2*t+1", "2*t+2", "3*t+3", "5*t+3", "4*t+6", "4*t+8", "4*t+9", "4*t+10"}),
      entry({"3*t+2", "3*t+4", "3*t+6", "4*t+6", "5*t+6", "4*t+7", "4*t+8", "4*t+9", "4*t+10"}),
      entry({"4*t+8", "4*t+9", "4*t+10", "4*t+11", "4*t+12", "4*t+13", "5*t+11", "4*t+15", "5*t+10"}));
}

// Closed forms, evaluated directly.
inline double uniform_alpha(double t) { return (t + 11) / (4 * t + 14); }
inline double uniform_beta(double t) { return (2 * t + 6) / (3 * t + 12); }
inline double optimistic_alpha(double t) { return (t + 6) / (2 * t + 9); }
inline double optimistic_beta(double t) { return (t + 2) / (2 * t + 5); }
inline double pessimistic_alpha(double t) { return (t + 4) / (t + 7); }
inline double pessimistic_beta(double t) { return (t + 4) / (2 * t + 7); }
inline double normal_alpha_min(double t) { return 3 / (4 * t + 12); }
inline double normal_beta_min(double t) { return 1 / (4 * t + 10); }
inline double normal_alpha_max(double t) { return (2 * t + 7) / 4; }
inline double normal_beta_max(double t) { return (2 * t + 5) / 2; }

}  // namespace oracle
