#pragma once

#include <optional>

#include "pif/core.hpp"
#include "pif/polytope.hpp"

namespace pif {

enum class Notion { IF, EF, PIIF, MEF, MTIF, MTPIIF };

inline const char* to_string(Notion n) {
  switch (n) {
    case Notion::IF: return "if";
    case Notion::EF: return "ef";
    case Notion::PIIF: return "piif";
    case Notion::MEF: return "mef";
    case Notion::MTIF: return "mt-if";
    case Notion::MTPIIF: return "mt-piif";
  }
  return "?";
}

struct Violation {
  double lhs = 0.0;
  double rhs = 0.0;
  std::string kind;
};

/// Verdict for one ordered pair (i, j). Exactly one of witness/violation is
/// meaningful: a satisfied PIIF pair carries the surrogate p^{i;j}, a failed
/// pair carries the violated comparison.
struct PairVerdict {
  int i = 0;
  int j = 0;
  bool satisfied = false;
  std::optional<Allocation> witness;
  std::optional<Violation> violation;
};

struct AuditReport {
  Notion notion = Notion::IF;
  std::vector<PairVerdict> verdicts;  // all ordered pairs i != j, sorted by (i, j)
  bool overall = false;
};

namespace detail {

template <typename PairFn>
AuditReport run_pairwise(const Instance& inst, Notion notion, PairFn&& fn) {
  AuditReport rep;
  rep.notion = notion;
  rep.overall = true;
  for (int i = 0; i < inst.num_individuals(); ++i)
    for (int j = 0; j < inst.num_individuals(); ++j) {
      if (i == j) continue;
      PairVerdict v = fn(i, j);
      v.i = i;
      v.j = j;
      rep.overall = rep.overall && v.satisfied;
      rep.verdicts.push_back(std::move(v));
    }
  return rep;
}

}  // namespace detail

struct BallMin {
  double value = 0.0;
  Allocation witness;
};

/// Minimum of <u, p> over the total-variation ball {p : tv(p, q) <= r},
/// with the minimizing allocation. Mass is peeled greedily from q's
/// highest-utility outcomes onto the global minimum-utility outcome.
inline BallMin min_utility_witness_in_ball(const std::vector<double>& u, const Allocation& q,
                                           double r) {
  require(r >= 0.0 && r <= 1.0, Errc::InvalidArgument, "ball radius must lie in [0,1]");
  require(u.size() == q.size(), Errc::LengthMismatch, "utility/allocation dimension mismatch");
  std::vector<int> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return u[static_cast<std::size_t>(a)] > u[static_cast<std::size_t>(b)];
  });
  const int cmin = order.back();
  const double umin = u[static_cast<std::size_t>(cmin)];

  BallMin out;
  out.witness = q;
  double budget = r;
  double moved = 0.0;
  for (int c : order) {
    if (budget <= 0.0) break;
    if (u[static_cast<std::size_t>(c)] <= umin) break;
    const double take = std::min(out.witness[static_cast<std::size_t>(c)], budget);
    out.witness[static_cast<std::size_t>(c)] -= take;
    moved += take;
    budget -= take;
  }
  out.witness[static_cast<std::size_t>(cmin)] += moved;
  out.value = dot(u, out.witness);
  return out;
}

inline double min_utility_in_ball(const std::vector<double>& u, const Allocation& q, double r) {
  return min_utility_witness_in_ball(u, q, r).value;
}

/// Individual fairness: tv(pi(i), pi(j)) <= d(i,j) for every ordered pair.
inline AuditReport audit_if(const Instance& inst, const Policy& pi,
                            double tol = kComparisonTol) {
  validate_policy(inst, pi);
  const Metric& d = inst.metric();
  return detail::run_pairwise(inst, Notion::IF, [&](int i, int j) {
    PairVerdict v;
    const double lhs = tv_distance(pi.at(i), pi.at(j));
    const double rhs = d.at(i, j);
    v.satisfied = lhs <= rhs + tol;
    if (!v.satisfied) v.violation = Violation{lhs, rhs, "tv_exceeds_metric"};
    return v;
  });
}

/// Envy-freeness: pi(i) weakly preferred to pi(j) under i's relation.
/// Incomparable counts as a violation.
inline AuditReport audit_ef(const Instance& inst, const Policy& pi,
                            double tol = kComparisonTol) {
  validate_policy(inst, pi);
  return detail::run_pairwise(inst, Notion::EF, [&](int i, int j) {
    PairVerdict v;
    const auto& rel = inst.preference(i);
    const Comparison cmp = weakly_prefers(rel, pi.at(i), pi.at(j), tol);
    v.satisfied = cmp == Comparison::WeaklyPreferred;
    if (!v.satisfied) {
      Violation viol;
      viol.kind = cmp == Comparison::Incomparable ? "incomparable" : "not_weakly_preferred";
      if (auto u = utility_vector(rel, inst.num_outcomes())) {
        viol.lhs = dot(*u, pi.at(i));
        viol.rhs = dot(*u, pi.at(j));
      }
      v.violation = viol;
    }
    return v;
  });
}

namespace detail {

// Feasibility LP for one PIIF pair: does a surrogate p exist with
// tv(p, pi_j) <= radius (or per-coordinate bands) and pi_i weakly preferred
// to p? All comparisons are relaxed by tol so the verdict matches the
// closed-form path on boundary cases.
inline PairVerdict piif_pair_lp(const Instance& inst, const Allocation& pi_i,
                                const Allocation& pi_j, int i, int j, double tol) {
  const int k = inst.num_outcomes();
  lp::Model m;
  lp::Block p = m.add_block("p", k);
  lp::add_simplex_constraints(m, p);

  if (inst.multi_task()) {
    std::vector<double> bounds(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
      bounds[static_cast<std::size_t>(c)] = inst.task_metric(c).at(i, j) + tol;
    add_coordinate_band(m, p, pi_j.probs, bounds);
  } else {
    lp::add_tv_constraint(m, p, pi_j.probs, inst.metric().at(i, j) + tol, "z");
  }

  const auto& rel = inst.preference(i);
  if (std::holds_alternative<StochasticDominance>(rel)) {
    const OutcomeOrder ord = sorted_outcome_order(rel);
    std::vector<double> indicator(static_cast<std::size_t>(k), 0.0);
    std::size_t pos = 0;
    for (int boundary : ord.boundaries) {
      for (; pos < static_cast<std::size_t>(boundary); ++pos)
        indicator[static_cast<std::size_t>(ord.order[pos])] = 1.0;
      if (boundary == k) break;
      // prefix(p) <= prefix(pi_i) + tol
      std::vector<lp::Term> t;
      for (int c = 0; c < k; ++c)
        if (indicator[static_cast<std::size_t>(c)] > 0.0) t.push_back({p[c], 1.0});
      m.add_constraint(std::move(t), lp::Rel::LessEq, dot(indicator, pi_i) + tol);
    }
  } else if (auto u = utility_vector(rel, k)) {
    std::vector<lp::Term> t;
    for (int c = 0; c < k; ++c)
      if ((*u)[static_cast<std::size_t>(c)] != 0.0)
        t.push_back({p[c], (*u)[static_cast<std::size_t>(c)]});
    m.add_constraint(std::move(t), lp::Rel::LessEq, dot(*u, pi_i) + tol);
  } else {
    // Trivial reflexive: the surrogate must be pi_i itself.
    std::vector<double> bounds(static_cast<std::size_t>(k), tol);
    add_coordinate_band(m, p, pi_i.probs, bounds);
  }

  const lp::Solution sol = lp::solve(m);
  PairVerdict v;
  if (sol.status == lp::Status::Optimal) {
    v.satisfied = true;
    Allocation w;
    w.probs.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
      w.probs[static_cast<std::size_t>(c)] =
          std::clamp(sol.values[static_cast<std::size_t>(p[c])], 0.0, 1.0);
    v.witness = w;
  } else {
    v.satisfied = false;
    v.violation = Violation{0.0, 0.0, "surrogate_lp_infeasible"};
  }
  return v;
}

}  // namespace detail

/// Preference-informed IF via the closed form for expected-utility relations
/// (greedy ball minimum) and LP feasibility for stochastic dominance;
/// trivial-reflexive pairs degenerate to the IF check.
inline AuditReport audit_piif(const Instance& inst, const Policy& pi,
                              double tol = kComparisonTol) {
  validate_policy(inst, pi);
  require(!inst.multi_task(), Errc::MultiTaskInstance,
          "audit_piif needs a single-task instance (use audit_mt_piif)");
  const Metric& d = inst.metric();
  return detail::run_pairwise(inst, Notion::PIIF, [&](int i, int j) {
    const auto& rel = inst.preference(i);
    if (std::holds_alternative<StochasticDominance>(rel))
      return detail::piif_pair_lp(inst, pi.at(i), pi.at(j), i, j, tol);
    if (auto u = utility_vector(rel, inst.num_outcomes())) {
      PairVerdict v;
      BallMin ball = min_utility_witness_in_ball(*u, pi.at(j), d.at(i, j));
      const double own = dot(*u, pi.at(i));
      v.satisfied = ball.value <= own + tol;
      if (v.satisfied)
        v.witness = std::move(ball.witness);
      else
        v.violation = Violation{ball.value, own, "ball_minimum_exceeds_own_utility"};
      return v;
    }
    // Trivial reflexive: PIIF degenerates to IF for this pair.
    PairVerdict v;
    const double lhs = tv_distance(pi.at(i), pi.at(j));
    const double rhs = d.at(i, j);
    v.satisfied = lhs <= rhs + tol;
    if (v.satisfied)
      v.witness = pi.at(i);
    else
      v.violation = Violation{lhs, rhs, "tv_exceeds_metric"};
    return v;
  });
}

/// PIIF decided by per-pair LP feasibility for every preference kind.
/// Cross-check path for audit_piif, and the only path exposed for callers
/// that want LP witnesses uniformly.
inline AuditReport audit_piif_lp(const Instance& inst, const Policy& pi,
                                 double tol = kComparisonTol) {
  validate_policy(inst, pi);
  require(!inst.multi_task(), Errc::MultiTaskInstance,
          "audit_piif_lp needs a single-task instance");
  return detail::run_pairwise(inst, Notion::PIIF, [&](int i, int j) {
    return detail::piif_pair_lp(inst, pi.at(i), pi.at(j), i, j, tol);
  });
}

/// Metric envy-freeness: u_i(pi(i)) >= u_i(pi(j)) - d(i,j). Meaningful when
/// utilities and distances share the [0,1] scale (see normalize_utilities).
inline AuditReport audit_mef(const Instance& inst, const Policy& pi,
                             double tol = kComparisonTol) {
  validate_policy(inst, pi);
  const Metric& d = inst.metric();
  return detail::run_pairwise(inst, Notion::MEF, [&](int i, int j) {
    auto u = utility_vector(inst.preference(i), inst.num_outcomes());
    require(u.has_value(), Errc::NoUtility,
            "individual " + std::to_string(i) + " has no utility representation");
    PairVerdict v;
    const double own = dot(*u, pi.at(i));
    const double other = dot(*u, pi.at(j));
    v.satisfied = own >= other - d.at(i, j) - tol;
    if (!v.satisfied) v.violation = Violation{own, other - d.at(i, j), "metric_envy"};
    return v;
  });
}

/// Multiple-task IF: |pi(i)_c - pi(j)_c| <= d_c(i,j) for every task c.
inline AuditReport audit_mt_if(const Instance& inst, const Policy& pi,
                               double tol = kComparisonTol) {
  validate_policy(inst, pi);
  require(inst.multi_task(), Errc::SingleTaskInstance,
          "audit_mt_if needs a multi-task instance (use audit_if)");
  return detail::run_pairwise(inst, Notion::MTIF, [&](int i, int j) {
    PairVerdict v;
    v.satisfied = true;
    for (int c = 0; c < inst.num_outcomes(); ++c) {
      const double lhs = std::abs(pi.at(i)[static_cast<std::size_t>(c)] -
                                  pi.at(j)[static_cast<std::size_t>(c)]);
      const double rhs = inst.task_metric(c).at(i, j);
      if (lhs > rhs + tol) {
        v.satisfied = false;
        v.violation = Violation{lhs, rhs, "task_lipschitz c=" + std::to_string(c)};
        break;
      }
    }
    return v;
  });
}

/// Multiple-task PIIF: per-pair LP feasibility with per-coordinate bands.
inline AuditReport audit_mt_piif(const Instance& inst, const Policy& pi,
                                 double tol = kComparisonTol) {
  validate_policy(inst, pi);
  require(inst.multi_task(), Errc::SingleTaskInstance,
          "audit_mt_piif needs a multi-task instance (use audit_piif)");
  AuditReport rep = detail::run_pairwise(inst, Notion::MTPIIF, [&](int i, int j) {
    return detail::piif_pair_lp(inst, pi.at(i), pi.at(j), i, j, tol);
  });
  return rep;
}

inline AuditReport audit(const Instance& inst, const Policy& pi, Notion notion,
                         double tol = kComparisonTol) {
  switch (notion) {
    case Notion::IF: return audit_if(inst, pi, tol);
    case Notion::EF: return audit_ef(inst, pi, tol);
    case Notion::PIIF: return audit_piif(inst, pi, tol);
    case Notion::MEF: return audit_mef(inst, pi, tol);
    case Notion::MTIF: return audit_mt_if(inst, pi, tol);
    case Notion::MTPIIF: return audit_mt_piif(inst, pi, tol);
  }
  fail(Errc::Internal, "unhandled notion");
}

}  // namespace pif
