#pragma once

#include <map>
#include <utility>

#include "pif/core.hpp"
#include "pif/lp.hpp"

namespace pif {

enum class Family { Unconstrained, IF, EF, PIIF, MTIF, MTPIIF };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Unconstrained: return "unconstrained";
    case Family::IF: return "if";
    case Family::EF: return "ef";
    case Family::PIIF: return "piif";
    case Family::MTIF: return "mt-if";
    case Family::MTPIIF: return "mt-piif";
  }
  return "?";
}

/// An LP over policy variables plus, for the PIIF families, one surrogate
/// block per ordered pair.
struct PolicyModel {
  lp::Model model;
  std::vector<lp::Block> pi;                        // one block per individual
  std::map<std::pair<int, int>, lp::Block> surrogate;  // p^{i;j} blocks

  Policy decode(const lp::Solution& sol, const Instance& inst) const {
    Policy out;
    for (int i = 0; i < inst.num_individuals(); ++i) {
      Allocation a;
      a.probs.resize(static_cast<std::size_t>(inst.num_outcomes()));
      for (int c = 0; c < inst.num_outcomes(); ++c) {
        double v = sol.values[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)][c])];
        a.probs[static_cast<std::size_t>(c)] = std::clamp(v, 0.0, 1.0);
      }
      out.alloc[inst.individuals[static_cast<std::size_t>(i)].id] = a;
    }
    return out;
  }

  Allocation decode_surrogate(const lp::Solution& sol, int i, int j) const {
    const lp::Block& blk = surrogate.at({i, j});
    Allocation a;
    a.probs.resize(static_cast<std::size_t>(blk.size));
    for (int c = 0; c < blk.size; ++c)
      a.probs[static_cast<std::size_t>(c)] =
          std::clamp(sol.values[static_cast<std::size_t>(blk[c])], 0.0, 1.0);
    return a;
  }
};

namespace detail {

inline std::string pair_tag(int i, int j) {
  return std::to_string(i) + ";" + std::to_string(j);
}

// Per-coordinate |p_c - q_c| <= bound_c, two rows per coordinate. The scalar
// total variation of two Bernoulli marginals needs no slack variables.
inline void add_coordinate_band(lp::Model& m, lp::Block p, const lp::AllocTerm& q,
                                const std::vector<double>& bounds) {
  for (int c = 0; c < p.size; ++c) {
    {
      std::vector<lp::Term> t{{p[c], 1.0}};
      double rhs = bounds[static_cast<std::size_t>(c)] + lp::detail::append_coord(t, q, c, -1.0);
      m.add_constraint(std::move(t), lp::Rel::LessEq, rhs);
    }
    {
      std::vector<lp::Term> t{{p[c], -1.0}};
      double rhs = bounds[static_cast<std::size_t>(c)] + lp::detail::append_coord(t, q, c, 1.0);
      m.add_constraint(std::move(t), lp::Rel::LessEq, rhs);
    }
  }
}

// pi(i) >= p^{i;j} under i's preference relation. TrivialReflexive degrades
// the pair to IF by pinning the surrogate to preferred.
inline void add_preference_rows(lp::Model& m, const PreferenceRelation& rel, int n_outcomes,
                                const lp::AllocTerm& preferred, const lp::AllocTerm& dominated) {
  if (std::holds_alternative<StochasticDominance>(rel)) {
    lp::add_sd_preference_constraints(m, rel, preferred, dominated);
    return;
  }
  if (auto u = utility_vector(rel, n_outcomes)) {
    lp::add_eu_preference_constraint(m, *u, preferred, dominated);
    return;
  }
  // Trivial reflexive: dominated must equal preferred exactly.
  for (int c = 0; c < n_outcomes; ++c) {
    std::vector<lp::Term> t;
    double rhs = 0.0;
    rhs += lp::detail::append_coord(t, dominated, c, 1.0);
    rhs += lp::detail::append_coord(t, preferred, c, -1.0);
    m.add_constraint(std::move(t), lp::Rel::Equal, rhs);
  }
}

}  // namespace detail

/// The PIIF polytope: policy blocks pi(i), one surrogate block p^{i;j} per
/// ordered pair, total-variation balls around pi(j) (per-coordinate bands in
/// the multi-task case) and the preference rows tying pi(i) over p^{i;j}.
inline PolicyModel build_piif_polytope(const Instance& inst) {
  PolicyModel pm;
  const int n = inst.num_individuals();
  const int k = inst.num_outcomes();
  for (int i = 0; i < n; ++i) {
    pm.pi.push_back(pm.model.add_block("pi[" + std::to_string(i) + "]", k));
    lp::add_simplex_constraints(pm.model, pm.pi.back());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string tag = detail::pair_tag(i, j);
      lp::Block p = pm.model.add_block("p[" + tag + "]", k);
      pm.surrogate[{i, j}] = p;
      lp::add_simplex_constraints(pm.model, p);
      if (inst.multi_task()) {
        std::vector<double> bounds(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) bounds[static_cast<std::size_t>(c)] = inst.task_metric(c).at(i, j);
        detail::add_coordinate_band(pm.model, p, pm.pi[static_cast<std::size_t>(j)], bounds);
      } else {
        lp::add_tv_constraint(pm.model, p, pm.pi[static_cast<std::size_t>(j)],
                              inst.metric().at(i, j), "z[" + tag + "]");
      }
      detail::add_preference_rows(pm.model, inst.preference(i), k,
                                  pm.pi[static_cast<std::size_t>(i)], p);
    }
  }
  return pm;
}

/// Builds the LP for any constraint family over policy variables alone
/// (PIIF families delegate to build_piif_polytope).
inline PolicyModel build_family_model(const Instance& inst, Family family) {
  if (family == Family::PIIF || family == Family::MTPIIF) {
    if (family == Family::PIIF)
      require(!inst.multi_task(), Errc::MultiTaskInstance, "piif needs a single-task instance");
    else
      require(inst.multi_task(), Errc::SingleTaskInstance, "mt-piif needs a multi-task instance");
    return build_piif_polytope(inst);
  }
  PolicyModel pm;
  const int n = inst.num_individuals();
  const int k = inst.num_outcomes();
  for (int i = 0; i < n; ++i) {
    pm.pi.push_back(pm.model.add_block("pi[" + std::to_string(i) + "]", k));
    lp::add_simplex_constraints(pm.model, pm.pi.back());
  }
  switch (family) {
    case Family::Unconstrained:
      break;
    case Family::IF:
      require(!inst.multi_task(), Errc::MultiTaskInstance, "if needs a single-task instance");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          lp::add_tv_constraint(pm.model, pm.pi[static_cast<std::size_t>(i)],
                                pm.pi[static_cast<std::size_t>(j)], inst.metric().at(i, j),
                                "z[" + detail::pair_tag(i, j) + "]");
      break;
    case Family::MTIF:
      require(inst.multi_task(), Errc::SingleTaskInstance, "mt-if needs a multi-task instance");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<double> bounds(static_cast<std::size_t>(k));
          for (int c = 0; c < k; ++c)
            bounds[static_cast<std::size_t>(c)] = inst.task_metric(c).at(i, j);
          detail::add_coordinate_band(pm.model, pm.pi[static_cast<std::size_t>(i)],
                                      pm.pi[static_cast<std::size_t>(j)], bounds);
        }
      break;
    case Family::EF:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          detail::add_preference_rows(pm.model, inst.preference(i), k,
                                      pm.pi[static_cast<std::size_t>(i)],
                                      pm.pi[static_cast<std::size_t>(j)]);
        }
      break;
    default:
      fail(Errc::Internal, "unhandled family");
  }
  return pm;
}

}  // namespace pif
