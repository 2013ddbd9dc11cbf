#pragma once

#include <cmath>

#include "pif/core.hpp"
#include "pif/optimizer.hpp"

namespace pif {

using NamedPolicies = std::map<std::string, Policy>;

namespace detail {

inline Instance instance_shell(std::vector<std::string> outcome_labels,
                               std::vector<std::string> individual_labels,
                               std::vector<double> weights = {}) {
  Instance inst;
  for (std::size_t c = 0; c < outcome_labels.size(); ++c)
    inst.outcomes.push_back({static_cast<int>(c), std::move(outcome_labels[c])});
  for (std::size_t i = 0; i < individual_labels.size(); ++i)
    inst.individuals.push_back({static_cast<int>(i), std::move(individual_labels[i]),
                                weights.empty() ? 1.0 : weights[i]});
  return inst;
}

inline Metric zero_metric(int n) {
  Metric m;
  m.dist.assign(static_cast<std::size_t>(n),
                std::vector<double>(static_cast<std::size_t>(n), 0.0));
  return m;
}

}  // namespace detail

struct CareerExpo {
  Instance instance;
  NamedPolicies policies;
};

/// Three similarly qualified candidates i, j, k with cyclic rankings over
/// employers X, Y, Z, plus a fourth candidate l (same ranking as i) who is
/// far from everyone under the metric. Ranking utilities use the levels
/// (1.0, 0.6, 0.2); any strictly decreasing levels give the same verdicts
/// for deterministic policies.
inline CareerExpo career_expo() {
  CareerExpo out;
  out.instance = detail::instance_shell({"X", "Y", "Z"}, {"i", "j", "k", "l"});
  Metric d = detail::zero_metric(4);
  for (int a = 0; a < 3; ++a) {
    d.dist[3][static_cast<std::size_t>(a)] = 1.0;
    d.dist[static_cast<std::size_t>(a)][3] = 1.0;
  }
  out.instance.metrics = {d};
  out.instance.preferences[0] = ExpectedUtility{{1.0, 0.6, 0.2}};  // X > Y > Z
  out.instance.preferences[1] = ExpectedUtility{{0.2, 1.0, 0.6}};  // Y > Z > X
  out.instance.preferences[2] = ExpectedUtility{{0.6, 0.2, 1.0}};  // Z > X > Y
  out.instance.preferences[3] = ExpectedUtility{{1.0, 0.6, 0.2}};  // X > Y > Z
  out.instance.validate();

  auto top = [](int l_choice) {
    Policy p;
    p.alloc[0] = Allocation::point_mass(0, 3);
    p.alloc[1] = Allocation::point_mass(1, 3);
    p.alloc[2] = Allocation::point_mass(2, 3);
    p.alloc[3] = Allocation::point_mass(l_choice, 3);
    return p;
  };
  out.policies["top_choice"] = top(0);
  out.policies["top_choice_l_to_Y"] = top(1);
  out.policies["top_choice_l_to_Z"] = top(2);
  Policy uniform;
  for (int i = 0; i < 4; ++i) uniform.alloc[i] = Allocation::uniform(3);
  out.policies["constant_uniform"] = uniform;
  return out;
}

/// n individuals, n outcomes, the all-zeros metric, and one-hot utilities:
/// everyone holds a distinct favorite. The IF optimum is stuck at welfare 1
/// while the unconstrained (and PIIF) optimum reaches n.
inline Instance distinct_favorites(int n) {
  require(n >= 2, Errc::InvalidArgument, "distinct_favorites needs n >= 2");
  std::vector<std::string> outs, inds;
  for (int k = 0; k < n; ++k) {
    outs.push_back("c" + std::to_string(k));
    inds.push_back("i" + std::to_string(k));
  }
  Instance inst = detail::instance_shell(std::move(outs), std::move(inds));
  inst.metrics = {detail::zero_metric(n)};
  for (int i = 0; i < n; ++i) {
    std::vector<double> u(static_cast<std::size_t>(n), 0.0);
    u[static_cast<std::size_t>(i)] = 1.0;
    inst.preferences[i] = ExpectedUtility{std::move(u)};
  }
  inst.validate();
  return inst;
}

/// Equal-sized blocks of individuals sharing each outcome as their one-hot
/// favorite, again under the all-zeros metric. The IF optimum is |X|/|C|.
inline Instance shared_favorites(int n_individuals, int n_outcomes) {
  require(n_individuals >= 1 && n_outcomes >= 1, Errc::InvalidArgument,
          "shared_favorites needs positive sizes");
  require(n_individuals % n_outcomes == 0, Errc::IndivisibleSplit,
          "the number of outcomes must divide the number of individuals");
  std::vector<std::string> outs, inds;
  for (int c = 0; c < n_outcomes; ++c) outs.push_back("c" + std::to_string(c));
  for (int i = 0; i < n_individuals; ++i) inds.push_back("i" + std::to_string(i));
  Instance inst = detail::instance_shell(std::move(outs), std::move(inds));
  inst.metrics = {detail::zero_metric(n_individuals)};
  const int block = n_individuals / n_outcomes;
  for (int i = 0; i < n_individuals; ++i) {
    std::vector<double> u(static_cast<std::size_t>(n_outcomes), 0.0);
    u[static_cast<std::size_t>(i / block)] = 1.0;
    inst.preferences[i] = ExpectedUtility{std::move(u)};
  }
  inst.validate();
  return inst;
}

struct MefGap {
  Instance instance;
  NamedPolicies policies;
};

/// Two individuals at distance 0.5 with mirrored utilities over outcomes
/// p, q. The swap policy (each gets their worse outcome) satisfies MEF but
/// none of IF, EF, PIIF.
inline MefGap mef_gap() {
  MefGap out;
  out.instance = detail::instance_shell({"p", "q"}, {"i", "j"});
  Metric d = detail::zero_metric(2);
  d.dist[0][1] = d.dist[1][0] = 0.5;
  out.instance.metrics = {d};
  out.instance.preferences[0] = ExpectedUtility{{1.0, 0.5}};
  out.instance.preferences[1] = ExpectedUtility{{0.5, 1.0}};
  out.instance.validate();

  Policy swap;
  swap.alloc[0] = Allocation::point_mass(1, 2);
  swap.alloc[1] = Allocation::point_mass(0, 2);
  Policy welfare_max;
  welfare_max.alloc[0] = Allocation::point_mass(0, 2);
  welfare_max.alloc[1] = Allocation::point_mass(1, 2);
  Policy constant_p;
  constant_p.alloc[0] = Allocation::point_mass(0, 2);
  constant_p.alloc[1] = Allocation::point_mass(0, 2);
  out.policies["swap"] = swap;
  out.policies["welfare_max"] = welfare_max;
  out.policies["constant_p"] = constant_p;
  return out;
}

struct DecisionMakerConflict {
  Instance instance;
  Objective objective;
};

/// Two equal-mass groups that only value outcome p, while the decision-maker's
/// objective f pulls group S to q and group T to r. Under IF the f-optimum
/// hands everyone p (welfare 1); under PIIF it hands out q and r (welfare 0).
/// The objective folds in the 1/2 population masses, so its value is
/// per-capita f.
inline DecisionMakerConflict decision_maker_conflict(double eps) {
  require(eps > 0.0 && eps < 0.5, Errc::InvalidArgument, "eps must lie in (0, 1/2)");
  DecisionMakerConflict out;
  out.instance = detail::instance_shell({"p", "q", "r"}, {"S", "T"}, {0.5, 0.5});
  out.instance.metrics = {detail::zero_metric(2)};
  out.instance.preferences[0] = ExpectedUtility{{1.0, 0.0, 0.0}};
  out.instance.preferences[1] = ExpectedUtility{{1.0, 0.0, 0.0}};
  out.instance.validate();
  out.objective = Objective::custom(
      {{0.5 * (0.5 + eps), 0.5 * 1.0, 0.0}, {0.5 * (0.5 + eps), 0.0, 0.5 * 1.0}},
      lp::Sense::Maximize);
  return out;
}

struct SeparationInstances {
  // Opposed preferences across two groups: with d(i,j) = 1, swapping the
  // favorites is IF but not EF.
  Instance preference_gap;
  NamedPolicies preference_gap_policies;
  // Block metric (0 within groups, 1 across) with indifferent individuals:
  // splitting outcomes inside a block is EF but not IF.
  Instance metric_gap;
  NamedPolicies metric_gap_policies;
};

/// The two constructions showing that EF cannot be captured by any metric
/// pair and that a metric cannot be captured by any preferences.
inline SeparationInstances if_ef_separation() {
  SeparationInstances out;

  out.preference_gap = detail::instance_shell({"p", "q"}, {"s0", "t0"});
  Metric far = detail::zero_metric(2);
  far.dist[0][1] = far.dist[1][0] = 1.0;
  out.preference_gap.metrics = {far};
  out.preference_gap.preferences[0] = ExpectedUtility{{1.0, 0.0}};  // p > q
  out.preference_gap.preferences[1] = ExpectedUtility{{0.0, 1.0}};  // q > p
  out.preference_gap.validate();
  Policy swapped;
  swapped.alloc[0] = Allocation::point_mass(1, 2);
  swapped.alloc[1] = Allocation::point_mass(0, 2);
  Policy favorites;
  favorites.alloc[0] = Allocation::point_mass(0, 2);
  favorites.alloc[1] = Allocation::point_mass(1, 2);
  out.preference_gap_policies["if_not_ef"] = swapped;
  out.preference_gap_policies["favorites"] = favorites;

  out.metric_gap = detail::instance_shell({"p", "q"}, {"s0", "s1", "t0"});
  Metric block = detail::zero_metric(3);
  block.dist[0][2] = block.dist[2][0] = 1.0;
  block.dist[1][2] = block.dist[2][1] = 1.0;
  out.metric_gap.metrics = {block};
  for (int i = 0; i < 3; ++i)
    out.metric_gap.preferences[i] = ExpectedUtility{{0.5, 0.5}};  // indifferent
  out.metric_gap.validate();
  Policy split;
  split.alloc[0] = Allocation::point_mass(0, 2);
  split.alloc[1] = Allocation::point_mass(1, 2);
  split.alloc[2] = Allocation::point_mass(0, 2);
  out.metric_gap_policies["ef_not_if"] = split;
  return out;
}

/// Cascading multi-task construction: one representative per subpopulation
/// S_m (weight = its population fraction), one task per level, utilities
/// u_m(c_l) = t^l for l <= m, and per-task {0,1} metrics aligned with the
/// utilities (the raw |u_i(c_l) - u_j(c_l)| rescaled by t^l, which keeps the
/// same binding structure inside the [0,1] range).
inline Instance multitask_cascade(int n, int t) {
  require(n >= 2, Errc::InvalidArgument, "multitask_cascade needs n >= 2");
  require(t >= 2, Errc::InvalidArgument, "multitask_cascade needs t >= 2");
  std::vector<std::string> outs, inds;
  std::vector<double> weights;
  double tail = 0.0;
  for (int m = 1; m < n; ++m) tail += std::pow(t, -m);
  for (int l = 0; l < n; ++l) outs.push_back("c" + std::to_string(l));
  for (int m = 0; m < n; ++m) {
    inds.push_back("S" + std::to_string(m));
    weights.push_back(m == 0 ? 1.0 - tail : std::pow(t, -m));
  }
  Instance inst = detail::instance_shell(std::move(outs), std::move(inds), std::move(weights));
  for (int l = 0; l < n; ++l) {
    Metric d = detail::zero_metric(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((a >= l) != (b >= l)) d.dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1.0;
    inst.metrics.push_back(std::move(d));
  }
  for (int m = 0; m < n; ++m) {
    std::vector<double> u(static_cast<std::size_t>(n), 0.0);
    for (int l = 0; l <= m; ++l) u[static_cast<std::size_t>(l)] = std::pow(t, l);
    inst.preferences[m] = ExpectedUtility{std::move(u)};
  }
  inst.validate();
  return inst;
}

/// Per-capita welfare of the welfare-maximizing (PIIF-feasible) cascade
/// policy: n - sum_{l=1}^{n-1} t^{-l}.
inline double cascade_piif_welfare(int n, int t) {
  double tail = 0.0;
  for (int l = 1; l < n; ++l) tail += std::pow(t, -l);
  return n - tail;
}

/// Upper bound on per-capita welfare of any multi-task IF cascade policy:
/// 1 + sum_{k=1}^{n-2} t^{-k}, attained by spending the whole allocation on
/// the level-1 task.
inline double cascade_if_welfare_bound(int n, int t) {
  double tail = 0.0;
  for (int k = 1; k <= n - 2; ++k) tail += std::pow(t, -k);
  return 1.0 + tail;
}

struct TechAndToys {
  Instance instance;
  Policy policy;
};

/// Two ad campaigns (tech job, children's toys) and two equally qualified
/// individuals. The tech metric sees them as identical, the toys metric as
/// far apart; the parent prefers toys. Serving each their preferred ad
/// violates multi-task IF on the tech task but satisfies multi-task PIIF.
inline TechAndToys tech_and_toys() {
  TechAndToys out;
  out.instance = detail::instance_shell({"tech", "toys"}, {"parent", "non_parent"});
  Metric tech = detail::zero_metric(2);
  Metric toys = detail::zero_metric(2);
  toys.dist[0][1] = toys.dist[1][0] = 1.0;
  out.instance.metrics = {tech, toys};
  out.instance.preferences[0] = ExpectedUtility{{0.0, 1.0}};
  out.instance.preferences[1] = ExpectedUtility{{1.0, 0.0}};
  out.instance.validate();
  out.policy.alloc[0] = Allocation::point_mass(1, 2);
  out.policy.alloc[1] = Allocation::point_mass(0, 2);
  return out;
}

}  // namespace pif
