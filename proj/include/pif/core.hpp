#pragma once

#include <sstream>

#include "pif/preferences.hpp"
#include "pif/types.hpp"

namespace pif {

/// A complete problem instance: outcomes, weighted individuals, one metric
/// (single-task) or one metric per outcome (multi-task), and a preference
/// relation per individual.
struct Instance {
  std::vector<Outcome> outcomes;
  std::vector<Individual> individuals;
  std::vector<Metric> metrics;
  std::map<int, PreferenceRelation> preferences;
  DivergenceKind divergence = DivergenceKind::TotalVariation;

  int num_outcomes() const { return static_cast<int>(outcomes.size()); }
  int num_individuals() const { return static_cast<int>(individuals.size()); }
  bool multi_task() const { return metrics.size() > 1; }

  const Metric& metric() const {
    require(!multi_task(), Errc::MultiTaskInstance,
            "single-task metric requested on a multi-task instance");
    return metrics.front();
  }
  const Metric& task_metric(int c) const { return metrics.at(static_cast<std::size_t>(c)); }

  const PreferenceRelation& preference(int individual) const {
    auto it = preferences.find(individual);
    require(it != preferences.end(), Errc::ValidationFailed,
            "no preference for individual " + std::to_string(individual));
    return it->second;
  }

  double total_weight() const {
    double w = 0.0;
    for (const auto& ind : individuals) w += ind.weight;
    return w;
  }

  bool unit_weights() const {
    for (const auto& ind : individuals)
      if (ind.weight != 1.0) return false;
    return true;
  }

  /// Hard invariants: dense unique ids, weights, metric shape/symmetry/diagonal
  /// and [0,1] range, metric count in {1, |C|}, preference shapes.
  void validate() const;

  /// Soft checks (currently: metric triangle inequality). Returns warnings
  /// instead of failing; approximate metrics from regulators are tolerated.
  std::vector<std::string> lint() const;
};

inline void Instance::validate() const {
  require(!outcomes.empty(), Errc::ValidationFailed, "instance has no outcomes");
  require(!individuals.empty(), Errc::ValidationFailed, "instance has no individuals");
  for (std::size_t c = 0; c < outcomes.size(); ++c)
    require(outcomes[c].id == static_cast<int>(c), Errc::ValidationFailed,
            "outcome ids must be dense 0..|C|-1");
  double total = 0.0;
  for (std::size_t i = 0; i < individuals.size(); ++i) {
    require(individuals[i].id == static_cast<int>(i), Errc::ValidationFailed,
            "individual ids must be dense 0..|X|-1");
    require(individuals[i].weight >= 0.0 && std::isfinite(individuals[i].weight),
            Errc::ValidationFailed, "individual weights must be nonnegative");
    total += individuals[i].weight;
  }
  require(total > 0.0, Errc::ValidationFailed, "total population weight must be positive");

  require(metrics.size() == 1 || metrics.size() == outcomes.size(), Errc::ValidationFailed,
          "metric count must be 1 (single-task) or |C| (multi-task)");
  const auto n = individuals.size();
  for (const auto& m : metrics) {
    require(m.dist.size() == n, Errc::ValidationFailed, "metric must be |X| x |X|");
    for (std::size_t i = 0; i < n; ++i) {
      require(m.dist[i].size() == n, Errc::ValidationFailed, "metric must be |X| x |X|");
      require(m.dist[i][i] == 0.0, Errc::ValidationFailed, "metric diagonal must be zero");
      for (std::size_t j = 0; j < n; ++j) {
        require(m.dist[i][j] >= 0.0 && m.dist[i][j] <= 1.0, Errc::ValidationFailed,
                "metric entries must lie in [0,1]");
        require(m.dist[i][j] == m.dist[j][i], Errc::ValidationFailed,
                "metric must be symmetric");
      }
    }
  }

  for (const auto& ind : individuals) {
    auto it = preferences.find(ind.id);
    require(it != preferences.end(), Errc::ValidationFailed,
            "missing preference for individual " + std::to_string(ind.id));
    validate_preference(it->second, num_outcomes());
  }
  require(preferences.size() == individuals.size(), Errc::ValidationFailed,
          "preferences keyed by unknown individual ids");
}

inline std::vector<std::string> Instance::lint() const {
  std::vector<std::string> warnings;
  for (std::size_t t = 0; t < metrics.size(); ++t) {
    const auto& m = metrics[t];
    const auto n = m.dist.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (m.dist[i][j] > m.dist[i][k] + m.dist[k][j] + kComparisonTol) {
            std::ostringstream os;
            os << "metric " << t << " violates triangle inequality at (" << i << "," << j
               << "," << k << ")";
            warnings.push_back(os.str());
          }
  }
  return warnings;
}

inline void validate_policy(const Instance& inst, const Policy& pi,
                            double sum_tol = kAllocationSumTol) {
  require(pi.alloc.size() == inst.individuals.size(), Errc::ValidationFailed,
          "policy must assign exactly one allocation per individual");
  for (const auto& ind : inst.individuals) {
    auto it = pi.alloc.find(ind.id);
    require(it != pi.alloc.end(), Errc::ValidationFailed,
            "policy missing individual " + std::to_string(ind.id));
    require(it->second.size() == static_cast<std::size_t>(inst.num_outcomes()),
            Errc::ValidationFailed, "allocation length != |C|");
    require(is_distribution(it->second, sum_tol), Errc::ValidationFailed,
            "allocation for individual " + std::to_string(ind.id) +
                " is not a probability distribution");
  }
}

/// Weighted sum of the individuals' expected utilities for their own
/// allocation. With unit weights this is the plain social welfare W(pi).
inline double social_welfare(const Instance& inst, const Policy& pi) {
  double w = 0.0;
  for (const auto& ind : inst.individuals) {
    auto u = utility_vector(inst.preference(ind.id), inst.num_outcomes());
    require(u.has_value(), Errc::NoUtility,
            "individual " + std::to_string(ind.id) + " has no utility representation");
    w += ind.weight * dot(*u, pi.at(ind.id));
  }
  return w;
}

/// Affinely rescales every utility vector to range exactly [0,1]
/// (constant vectors map to all-zeros). Preference verdicts are unchanged:
/// the rescale is positive affine. Stochastic-dominance bounds become 1.
inline Instance normalize_utilities(const Instance& inst) {
  Instance out = inst;
  for (auto& [id, rel] : out.preferences) {
    std::vector<double>* u = nullptr;
    if (auto* eu = std::get_if<ExpectedUtility>(&rel)) u = &eu->u;
    if (auto* sd = std::get_if<StochasticDominance>(&rel)) {
      u = &sd->u;
      sd->upper_bound = 1.0;
    }
    if (u == nullptr || u->empty()) continue;
    const auto [lo_it, hi_it] = std::minmax_element(u->begin(), u->end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) {
      std::fill(u->begin(), u->end(), 0.0);
    } else {
      for (double& v : *u) v = (v - lo) / (hi - lo);
    }
  }
  return out;
}

}  // namespace pif
