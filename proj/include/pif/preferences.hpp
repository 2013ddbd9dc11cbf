#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <variant>

#include "pif/types.hpp"

namespace pif {

/// p >= q iff <u,p> >= <u,q> for a per-outcome utility vector u.
struct ExpectedUtility {
  std::vector<double> u;
};

/// First-order stochastic dominance for a utility u : C -> [0, M].
/// p >= q iff Pr_{c~p}[u(c) >= x] >= Pr_{c~q}[u(c) >= x] at every threshold x.
/// A partial order: allocations whose survival functions cross are incomparable.
struct StochasticDominance {
  std::vector<double> u;
  double upper_bound = 1.0;  // M
};

/// Only p >= p holds; distinct allocations are incomparable.
struct TrivialReflexive {};

/// Two-outcome ranking: the favored outcome beats the other. Sugar for
/// expected utility with a one-hot u, kept distinct so parity reports read
/// naturally.
struct BinaryRanking {
  int favored = 0;
};

using PreferenceRelation =
    std::variant<ExpectedUtility, StochasticDominance, TrivialReflexive, BinaryRanking>;

enum class Comparison { WeaklyPreferred, NotWeaklyPreferred, Incomparable };

/// The utility vector representing the relation, when one exists.
/// BinaryRanking yields its one-hot form; TrivialReflexive has none.
inline std::optional<std::vector<double>> utility_vector(const PreferenceRelation& rel,
                                                         int n_outcomes) {
  if (const auto* eu = std::get_if<ExpectedUtility>(&rel)) return eu->u;
  if (const auto* sd = std::get_if<StochasticDominance>(&rel)) return sd->u;
  if (const auto* br = std::get_if<BinaryRanking>(&rel)) {
    std::vector<double> u(static_cast<std::size_t>(n_outcomes), 0.0);
    u.at(static_cast<std::size_t>(br->favored)) = 1.0;
    return u;
  }
  return std::nullopt;
}

struct OutcomeOrder {
  std::vector<int> order;       // outcome ids sorted by utility, descending
  std::vector<int> boundaries;  // prefix lengths at which utility strictly drops
};

/// Outcomes of a stochastic-dominance relation sorted by utility descending,
/// with tie groups merged. `boundaries` holds the prefix length after each
/// group; the last entry is always |C|.
inline OutcomeOrder sorted_outcome_order(const PreferenceRelation& rel) {
  const auto* sd = std::get_if<StochasticDominance>(&rel);
  require(sd != nullptr, Errc::WrongVariant,
          "sorted_outcome_order: relation is not stochastic dominance");
  const auto& u = sd->u;
  OutcomeOrder out;
  out.order.resize(u.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    return u[static_cast<std::size_t>(a)] > u[static_cast<std::size_t>(b)];
  });
  for (std::size_t k = 1; k < out.order.size(); ++k) {
    if (u[static_cast<std::size_t>(out.order[k - 1])] >
        u[static_cast<std::size_t>(out.order[k])] + 0.0)
      out.boundaries.push_back(static_cast<int>(k));
  }
  out.boundaries.push_back(static_cast<int>(out.order.size()));
  return out;
}

namespace detail {

// Survival probability Pr_{c~p}[u(c) >= x].
inline double survival(const std::vector<double>& u, const Allocation& p, double x) {
  double s = 0.0;
  for (std::size_t c = 0; c < u.size(); ++c)
    if (u[c] >= x) s += p[c];
  return s;
}

inline Comparison compare_dominance(const StochasticDominance& sd, const Allocation& p,
                                    const Allocation& q, double tol) {
  std::vector<double> thresholds = sd.u;
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  bool forward = true;   // p dominates q
  bool backward = true;  // q dominates p
  for (double x : thresholds) {
    const double sp = survival(sd.u, p, x);
    const double sq = survival(sd.u, q, x);
    if (sp < sq - tol) forward = false;
    if (sq < sp - tol) backward = false;
  }
  if (forward) return Comparison::WeaklyPreferred;
  if (backward) return Comparison::NotWeaklyPreferred;
  return Comparison::Incomparable;
}

}  // namespace detail

/// Does the relation weakly prefer p over q?
inline Comparison weakly_prefers(const PreferenceRelation& rel, const Allocation& p,
                                 const Allocation& q, double tol = kComparisonTol) {
  require(p.size() == q.size(), Errc::LengthMismatch, "weakly_prefers: dimension mismatch");
  if (const auto* eu = std::get_if<ExpectedUtility>(&rel)) {
    return dot(eu->u, p) >= dot(eu->u, q) - tol ? Comparison::WeaklyPreferred
                                                : Comparison::NotWeaklyPreferred;
  }
  if (const auto* sd = std::get_if<StochasticDominance>(&rel)) {
    return detail::compare_dominance(*sd, p, q, tol);
  }
  if (const auto* br = std::get_if<BinaryRanking>(&rel)) {
    const auto f = static_cast<std::size_t>(br->favored);
    return p[f] >= q[f] - tol ? Comparison::WeaklyPreferred : Comparison::NotWeaklyPreferred;
  }
  return approx_equal(p, q, tol) ? Comparison::WeaklyPreferred : Comparison::Incomparable;
}

inline void validate_preference(const PreferenceRelation& rel, int n_outcomes) {
  const auto n = static_cast<std::size_t>(n_outcomes);
  if (const auto* eu = std::get_if<ExpectedUtility>(&rel)) {
    require(eu->u.size() == n, Errc::ValidationFailed, "utility vector length != |C|");
    for (double v : eu->u)
      require(std::isfinite(v), Errc::ValidationFailed, "utility entries must be finite");
  } else if (const auto* sd = std::get_if<StochasticDominance>(&rel)) {
    require(sd->u.size() == n, Errc::ValidationFailed, "utility vector length != |C|");
    require(sd->upper_bound > 0.0, Errc::ValidationFailed,
            "stochastic dominance bound M must be positive");
    for (double v : sd->u)
      require(v >= 0.0 && v <= sd->upper_bound, Errc::ValidationFailed,
              "stochastic dominance utilities must lie in [0, M]");
  } else if (const auto* br = std::get_if<BinaryRanking>(&rel)) {
    require(n_outcomes == 2, Errc::ValidationFailed,
            "binary ranking requires exactly two outcomes");
    require(br->favored == 0 || br->favored == 1, Errc::ValidationFailed,
            "binary ranking favored outcome must be 0 or 1");
  }
}

}  // namespace pif
