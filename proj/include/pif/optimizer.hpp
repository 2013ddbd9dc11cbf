#pragma once

#include "pif/audit.hpp"
#include "pif/core.hpp"
#include "pif/polytope.hpp"

namespace pif {

/// A linear objective over policies: sum_i <weights[i], pi(i)>.
/// SocialWelfare derives weights[i][c] = weight_i * u_i(c) from the instance;
/// Custom uses the given matrix verbatim.
struct Objective {
  enum class Kind { SocialWelfare, Custom };
  Kind kind = Kind::SocialWelfare;
  lp::Sense sense = lp::Sense::Maximize;
  std::vector<std::vector<double>> weights;  // Custom only: [individual][outcome]

  static Objective social_welfare() { return {}; }
  static Objective custom(std::vector<std::vector<double>> w,
                          lp::Sense sense = lp::Sense::Maximize) {
    Objective o;
    o.kind = Kind::Custom;
    o.sense = sense;
    o.weights = std::move(w);
    return o;
  }
};

/// The objective's coefficient matrix resolved against an instance.
inline std::vector<std::vector<double>> objective_matrix(const Instance& inst,
                                                         const Objective& obj) {
  if (obj.kind == Objective::Kind::Custom) {
    require(obj.weights.size() == static_cast<std::size_t>(inst.num_individuals()),
            Errc::InvalidArgument, "objective weight matrix must be |X| x |C|");
    for (const auto& row : obj.weights)
      require(row.size() == static_cast<std::size_t>(inst.num_outcomes()),
              Errc::InvalidArgument, "objective weight matrix must be |X| x |C|");
    return obj.weights;
  }
  std::vector<std::vector<double>> w;
  w.reserve(static_cast<std::size_t>(inst.num_individuals()));
  for (const auto& ind : inst.individuals) {
    auto u = utility_vector(inst.preference(ind.id), inst.num_outcomes());
    require(u.has_value(), Errc::NoUtility,
            "social welfare objective needs a utility vector per individual");
    for (double& v : *u) v *= ind.weight;
    w.push_back(std::move(*u));
  }
  return w;
}

struct OptResult {
  Policy policy;
  double objective_value = 0.0;
  double welfare = 0.0;  // per unit total weight when weights are non-unit
  lp::Status status = lp::Status::Optimal;
  Family family = Family::Unconstrained;
};

/// Welfare as reported alongside optimization results: the plain sum for
/// unit-weight instances, per unit of total weight otherwise.
inline double reported_welfare(const Instance& inst, const Policy& pi) {
  const double w = social_welfare(inst, pi);
  return inst.unit_weights() ? w : w / inst.total_weight();
}

/// Optimizes a linear objective over the given constraint family.
inline OptResult optimize(const Instance& inst, const Objective& obj, Family family) {
  inst.validate();
  const auto w = objective_matrix(inst, obj);
  PolicyModel pm = build_family_model(inst, family);
  std::vector<lp::Term> terms;
  for (int i = 0; i < inst.num_individuals(); ++i)
    for (int c = 0; c < inst.num_outcomes(); ++c) {
      const double coeff = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (coeff != 0.0) terms.push_back({pm.pi[static_cast<std::size_t>(i)][c], coeff});
    }
  pm.model.set_objective(std::move(terms), obj.sense);

  const lp::Solution sol = lp::solve(pm.model);
  if (sol.status == lp::Status::Infeasible || sol.status == lp::Status::Unbounded)
    fail(Errc::SolverFailure,
         std::string("family polytope reported ") + lp::to_string(sol.status) +
             "; constant and favorite policies are always feasible");
  OptResult out;
  out.status = sol.status;
  out.family = family;
  if (sol.status == lp::Status::Optimal) {
    out.policy = pm.decode(sol, inst);
    out.objective_value = sol.objective_value;
    out.welfare = reported_welfare(inst, out.policy);
  }
  return out;
}

/// Best constant policy (everyone receives the same allocation), the
/// mechanism that randomizes once and classifies everyone identically.
/// Constant policies satisfy IF and MT-IF for any metrics, and the optimum
/// is guaranteed a 1/|C| fraction of the unconstrained objective.
inline OptResult randomize_then_classify_baseline(const Instance& inst, const Objective& obj) {
  inst.validate();
  require(obj.sense == lp::Sense::Maximize, Errc::InvalidArgument,
          "the constant-policy baseline is defined for maximization");
  const auto w = objective_matrix(inst, obj);
  lp::Model m;
  lp::Block a = m.add_block("alpha", inst.num_outcomes());
  lp::add_simplex_constraints(m, a);
  std::vector<lp::Term> terms;
  for (int c = 0; c < inst.num_outcomes(); ++c) {
    double coeff = 0.0;
    for (int i = 0; i < inst.num_individuals(); ++i)
      coeff += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    terms.push_back({a[c], coeff});
  }
  m.set_objective(std::move(terms), lp::Sense::Maximize);
  const lp::Solution sol = lp::solve(m);
  require(sol.status == lp::Status::Optimal, Errc::SolverFailure,
          "baseline LP over one simplex block must solve");

  Allocation alpha;
  alpha.probs.resize(static_cast<std::size_t>(inst.num_outcomes()));
  for (int c = 0; c < inst.num_outcomes(); ++c)
    alpha.probs[static_cast<std::size_t>(c)] =
        std::clamp(sol.values[static_cast<std::size_t>(a[c])], 0.0, 1.0);
  OptResult out;
  out.status = sol.status;
  out.family = inst.multi_task() ? Family::MTIF : Family::IF;
  for (const auto& ind : inst.individuals) out.policy.alloc[ind.id] = alpha;
  out.objective_value = sol.objective_value;
  out.welfare = reported_welfare(inst, out.policy);
  return out;
}

namespace detail {

template <typename Fn>
void for_each_grid_allocation(int n_outcomes, int g, std::vector<int>& units, int pos,
                              int remaining, Fn&& fn) {
  if (pos == n_outcomes - 1) {
    units[static_cast<std::size_t>(pos)] = remaining;
    fn(units);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    units[static_cast<std::size_t>(pos)] = k;
    for_each_grid_allocation(n_outcomes, g, units, pos + 1, remaining - k, fn);
  }
}

}  // namespace detail

inline Notion family_notion(Family f) {
  switch (f) {
    case Family::IF: return Notion::IF;
    case Family::EF: return Notion::EF;
    case Family::PIIF: return Notion::PIIF;
    case Family::MTIF: return Notion::MTIF;
    case Family::MTPIIF: return Notion::MTPIIF;
    case Family::Unconstrained: break;
  }
  fail(Errc::InvalidArgument, "no audit notion for this family");
}

/// Exhaustive search over all policies whose allocations lie on the 1/g grid
/// of the simplex, filtered by the family's audit. Test oracle only.
inline OptResult grid_optimum(const Instance& inst, const Objective& obj, Family family,
                              int g, double tol = kComparisonTol) {
  inst.validate();
  require(inst.num_individuals() <= 4 && inst.num_outcomes() <= 4 && g >= 1 && g <= 6,
          Errc::TooLarge, "grid_optimum is limited to |X|<=4, |C|<=4, g<=6");
  const auto w = objective_matrix(inst, obj);
  const int n = inst.num_individuals();
  const int k = inst.num_outcomes();

  std::vector<Allocation> grid;
  {
    std::vector<int> units(static_cast<std::size_t>(k), 0);
    detail::for_each_grid_allocation(k, g, units, 0, g, [&](const std::vector<int>& us) {
      Allocation a;
      a.probs.resize(static_cast<std::size_t>(k));
      for (int c = 0; c < k; ++c)
        a.probs[static_cast<std::size_t>(c)] = static_cast<double>(us[static_cast<std::size_t>(c)]) / g;
      grid.push_back(std::move(a));
    });
  }

  const bool maximize = obj.sense == lp::Sense::Maximize;
  bool found = false;
  double best = 0.0;
  Policy best_policy;

  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Policy pi;
    for (int i = 0; i < n; ++i)
      pi.alloc[inst.individuals[static_cast<std::size_t>(i)].id] = grid[idx[static_cast<std::size_t>(i)]];
    bool ok = true;
    if (family != Family::Unconstrained) ok = audit(inst, pi, family_notion(family), tol).overall;
    if (ok) {
      double value = 0.0;
      for (int i = 0; i < n; ++i)
        value += dot(w[static_cast<std::size_t>(i)], pi.at(i));
      if (!found || (maximize ? value > best : value < best)) {
        found = true;
        best = value;
        best_policy = std::move(pi);
      }
    }
    int pos = 0;
    for (; pos < n; ++pos) {
      if (++idx[static_cast<std::size_t>(pos)] < grid.size()) break;
      idx[static_cast<std::size_t>(pos)] = 0;
    }
    if (pos == n) break;
  }
  require(found, Errc::Internal, "grid search found no feasible policy");
  OptResult out;
  out.status = lp::Status::Optimal;
  out.family = family;
  out.policy = std::move(best_policy);
  out.objective_value = best;
  out.welfare = reported_welfare(inst, out.policy);
  return out;
}

struct WelfareRatio {
  double unconstrained = 0.0;
  double under_if = 0.0;
  double under_piif = 0.0;
  double ratio = 0.0;  // unconstrained / under_if, +inf when under_if is 0
};

/// Social-welfare optima across the unconstrained, IF and PIIF families
/// (multi-task variants on multi-task instances). The PIIF optimum always
/// equals the unconstrained one: the favorite-outcome policy is envy-free,
/// and envy-free policies are preference-informed fair.
inline WelfareRatio welfare_ratio(const Instance& inst) {
  const Objective obj = Objective::social_welfare();
  const bool mt = inst.multi_task();
  WelfareRatio out;
  out.unconstrained = optimize(inst, obj, Family::Unconstrained).welfare;
  out.under_if = optimize(inst, obj, mt ? Family::MTIF : Family::IF).welfare;
  out.under_piif = optimize(inst, obj, mt ? Family::MTPIIF : Family::PIIF).welfare;
  const double scale = std::max(1.0, std::abs(out.unconstrained));
  require(std::abs(out.under_piif - out.unconstrained) <= 1e-6 * scale, Errc::Internal,
          "PIIF welfare optimum must equal the unconstrained optimum");
  out.ratio = std::abs(out.under_if) < 1e-12 ? std::numeric_limits<double>::infinity()
                                             : out.unconstrained / out.under_if;
  return out;
}

}  // namespace pif
