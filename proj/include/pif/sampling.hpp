#pragma once

#include <random>

#include "pif/core.hpp"
#include "pif/groupfair.hpp"

namespace pif {

/// Uniform-random test instances. Utility and metric values are drawn on a
/// coarse grid so that audit comparisons never land inside the 1e-7
/// tolerance band around a constraint boundary.
struct SampleOptions {
  int min_individuals = 2;
  int max_individuals = 5;
  int min_outcomes = 2;
  int max_outcomes = 4;
  bool multi_task = false;
  bool allow_stochastic_dominance = true;
  bool allow_trivial = true;
  bool random_weights = false;
  double metric_grid = 0.05;
  double utility_grid = 0.05;
  enum class MetricStyle { Mixed, Random, Zero, Block };
  MetricStyle metric_style = MetricStyle::Mixed;
};

enum class PolicyStyle { Random, Constant, Favorites, PerturbedConstant };

namespace detail {

inline double snap(double x, double grid) {
  return std::clamp(std::round(x / grid) * grid, 0.0, 1.0);
}

inline Metric sample_metric(std::mt19937& rng, int n, const SampleOptions& opt) {
  auto style = opt.metric_style;
  if (style == SampleOptions::MetricStyle::Mixed) {
    std::uniform_int_distribution<int> pick(0, 2);
    style = static_cast<SampleOptions::MetricStyle>(pick(rng) + 1);
  }
  Metric m;
  m.dist.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  if (style == SampleOptions::MetricStyle::Zero) return m;
  if (style == SampleOptions::MetricStyle::Block) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto& s : side) s = coin(rng);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (side[static_cast<std::size_t>(i)] != side[static_cast<std::size_t>(j)])
          m.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              m.dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1.0;
    return m;
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = snap(unif(rng), opt.metric_grid);
      m.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      m.dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  return m;
}

}  // namespace detail

inline Instance sample_instance(std::mt19937& rng, const SampleOptions& opt = {}) {
  std::uniform_int_distribution<int> n_ind(opt.min_individuals, opt.max_individuals);
  std::uniform_int_distribution<int> n_out(opt.min_outcomes, opt.max_outcomes);
  const int n = n_ind(rng);
  const int k = n_out(rng);

  Instance inst;
  for (int c = 0; c < k; ++c) inst.outcomes.push_back({c, "c" + std::to_string(c)});
  std::uniform_int_distribution<int> wpick(1, 4);
  for (int i = 0; i < n; ++i)
    inst.individuals.push_back(
        {i, "i" + std::to_string(i), opt.random_weights ? wpick(rng) * 0.5 : 1.0});

  const int n_metrics = opt.multi_task ? k : 1;
  for (int t = 0; t < n_metrics; ++t)
    inst.metrics.push_back(detail::sample_metric(rng, n, opt));

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> kind_pick(0, 9);
  for (int i = 0; i < n; ++i) {
    std::vector<double> u(static_cast<std::size_t>(k));
    for (double& v : u) v = detail::snap(unif(rng), opt.utility_grid);
    const int kind = kind_pick(rng);
    if (opt.allow_trivial && kind == 0) {
      inst.preferences[i] = TrivialReflexive{};
    } else if (opt.allow_stochastic_dominance && kind <= 3) {
      inst.preferences[i] = StochasticDominance{std::move(u), 1.0};
    } else {
      inst.preferences[i] = ExpectedUtility{std::move(u)};
    }
  }
  inst.validate();
  return inst;
}

/// Random allocation on the 1/units grid of the simplex.
inline Allocation sample_allocation(std::mt19937& rng, int k, int units = 20) {
  std::vector<int> bins(static_cast<std::size_t>(k), 0);
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int u = 0; u < units; ++u) ++bins[static_cast<std::size_t>(pick(rng))];
  Allocation a;
  a.probs.resize(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    a.probs[static_cast<std::size_t>(c)] = static_cast<double>(bins[static_cast<std::size_t>(c)]) / units;
  return a;
}

inline Policy sample_policy(std::mt19937& rng, const Instance& inst,
                            PolicyStyle style = PolicyStyle::Random) {
  const int k = inst.num_outcomes();
  Policy pi;
  switch (style) {
    case PolicyStyle::Random:
      for (const auto& ind : inst.individuals) pi.alloc[ind.id] = sample_allocation(rng, k);
      break;
    case PolicyStyle::Constant: {
      const Allocation a = sample_allocation(rng, k);
      for (const auto& ind : inst.individuals) pi.alloc[ind.id] = a;
      break;
    }
    case PolicyStyle::Favorites:
      for (const auto& ind : inst.individuals) {
        auto u = utility_vector(inst.preference(ind.id), k);
        int best = 0;
        if (u) {
          for (int c = 1; c < k; ++c)
            if ((*u)[static_cast<std::size_t>(c)] > (*u)[static_cast<std::size_t>(best)]) best = c;
        } else {
          std::uniform_int_distribution<int> pick(0, k - 1);
          best = pick(rng);
        }
        pi.alloc[ind.id] = Allocation::point_mass(best, k);
      }
      break;
    case PolicyStyle::PerturbedConstant: {
      const Allocation base = sample_allocation(rng, k);
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (const auto& ind : inst.individuals) {
        Allocation a = base;
        const int from = pick(rng), to = pick(rng);
        const double step = 0.05;
        if (a.probs[static_cast<std::size_t>(from)] >= step) {
          a.probs[static_cast<std::size_t>(from)] -= step;
          a.probs[static_cast<std::size_t>(to)] += step;
        }
        pi.alloc[ind.id] = a;
      }
      break;
    }
  }
  return pi;
}

inline PolicyStyle sample_policy_style(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  return static_cast<PolicyStyle>(pick(rng));
}

inline BinaryClassifier sample_classifier(std::mt19937& rng, const Instance& inst) {
  BinaryClassifier h;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& ind : inst.individuals) h.labels[ind.id] = coin(rng) ? 1 : -1;
  return h;
}

inline GroupSpec sample_group(std::mt19937& rng, const Instance& inst) {
  const int n = inst.num_individuals();
  GroupSpec g;
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    g.s.clear();
    for (const auto& ind : inst.individuals)
      if (coin(rng)) g.s.insert(ind.id);
    if (!g.s.empty() && static_cast<int>(g.s.size()) < n) return g;
  }
}

}  // namespace pif
