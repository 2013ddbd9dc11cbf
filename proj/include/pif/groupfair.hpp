#pragma once

#include <set>

#include "pif/core.hpp"

namespace pif {

/// Deterministic binary classifier over the instance's individuals.
/// Labels are +1/-1; label +1 corresponds to outcome id 1 and label -1 to
/// outcome id 0 on two-outcome instances.
struct BinaryClassifier {
  std::map<int, int> labels;

  int at(int individual) const {
    auto it = labels.find(individual);
    require(it != labels.end(), Errc::ValidationFailed,
            "classifier has no label for individual " + std::to_string(individual));
    return it->second;
  }
};

/// A protected group S; the comparison group T is the complement.
struct GroupSpec {
  std::set<int> s;
};

inline void validate_classifier(const Instance& inst, const BinaryClassifier& h) {
  require(h.labels.size() == inst.individuals.size(), Errc::ValidationFailed,
          "classifier must label every individual exactly once");
  for (const auto& ind : inst.individuals) {
    const int l = h.at(ind.id);
    require(l == 1 || l == -1, Errc::ValidationFailed, "labels must be +1 or -1");
  }
}

namespace detail {

struct GroupSplit {
  std::vector<int> s;
  std::vector<int> t;
};

inline GroupSplit split_groups(const Instance& inst, const GroupSpec& g) {
  GroupSplit out;
  for (const auto& ind : inst.individuals) {
    if (g.s.count(ind.id))
      out.s.push_back(ind.id);
    else
      out.t.push_back(ind.id);
  }
  require(!out.s.empty(), Errc::EmptyGroup, "protected group S is empty");
  require(!out.t.empty(), Errc::EmptyGroup, "comparison group T is empty");
  require(out.s.size() == g.s.size(), Errc::ValidationFailed,
          "group contains unknown individual ids");
  return out;
}

inline double positive_rate(const Instance& inst, const BinaryClassifier& h,
                            const std::vector<int>& members) {
  double total = 0.0, positive = 0.0;
  for (int id : members) {
    const double w = inst.individuals[static_cast<std::size_t>(id)].weight;
    total += w;
    if (h.at(id) == 1) positive += w;
  }
  require(total > 0.0, Errc::EmptyGroup, "group has zero total weight");
  return positive / total;
}

}  // namespace detail

/// Smallest achievable rounding gap for exact parity over the finite groups:
/// 1 / (2 * min(|S|, |T|)). Statistical parity over finite populations is
/// generally unattainable exactly, so this is the default slack.
inline double default_parity_eps(const Instance& inst, const GroupSpec& g) {
  const auto split = detail::split_groups(inst, g);
  return 1.0 / (2.0 * static_cast<double>(std::min(split.s.size(), split.t.size())));
}

struct SpReport {
  bool satisfied = false;
  double rate_s = 0.0;
  double rate_t = 0.0;
};

/// Statistical parity: positive rates (weighted by individual weights) of S
/// and its complement differ by at most eps.
inline SpReport audit_sp(const Instance& inst, const BinaryClassifier& h, const GroupSpec& g,
                         double eps, double tol = kComparisonTol) {
  require(eps >= 0.0, Errc::InvalidArgument, "eps must be nonnegative");
  validate_classifier(inst, h);
  const auto split = detail::split_groups(inst, g);
  SpReport rep;
  rep.rate_s = detail::positive_rate(inst, h, split.s);
  rep.rate_t = detail::positive_rate(inst, h, split.t);
  rep.satisfied = std::abs(rep.rate_s - rep.rate_t) <= eps + tol;
  return rep;
}

struct PispReport {
  bool satisfied = false;
  double rate_t = 0.0;
  std::optional<BinaryClassifier> witness;
};

/// Preference-informed statistical parity: h is fair if some alternative h'
/// fixes T's labels, gives every member of S an outcome they weakly
/// disprefer to their actual one, and itself satisfies parity at eps.
/// The search scans the achievable counts of +1 labels inside S (exact for
/// equal member weights; unequal weights fall back to exhaustive subset
/// enumeration over the flippable members).
inline PispReport audit_pisp(const Instance& inst, const BinaryClassifier& h,
                             const GroupSpec& g, double eps, double tol = kComparisonTol) {
  require(eps >= 0.0, Errc::InvalidArgument, "eps must be nonnegative");
  require(inst.num_outcomes() == 2, Errc::InvalidArgument,
          "pisp needs a two-outcome instance");
  validate_classifier(inst, h);
  const auto split = detail::split_groups(inst, g);

  PispReport rep;
  rep.rate_t = detail::positive_rate(inst, h, split.t);

  const auto label_alloc = [](int label) { return Allocation::point_mass(label == 1 ? 1 : 0, 2); };
  // Members whose hypothetical label may differ from their actual one:
  // flipping is allowed only when the actual label is weakly preferred.
  std::vector<int> forced_pos, forced_neg, optional;
  for (int id : split.s) {
    const int cur = h.at(id);
    const bool can_flip = weakly_prefers(inst.preference(id), label_alloc(cur),
                                         label_alloc(-cur), tol) == Comparison::WeaklyPreferred;
    if (can_flip)
      optional.push_back(id);
    else if (cur == 1)
      forced_pos.push_back(id);
    else
      forced_neg.push_back(id);
  }

  double weight_s = 0.0, weight_forced_pos = 0.0;
  bool equal_weights = true;
  const double w0 = inst.individuals[static_cast<std::size_t>(split.s.front())].weight;
  for (int id : split.s) {
    const double w = inst.individuals[static_cast<std::size_t>(id)].weight;
    weight_s += w;
    if (w != w0) equal_weights = false;
  }
  for (int id : forced_pos)
    weight_forced_pos += inst.individuals[static_cast<std::size_t>(id)].weight;

  auto make_witness = [&](const std::vector<int>& positive_optional) {
    BinaryClassifier hp = h;
    for (int id : optional) hp.labels[id] = -1;
    for (int id : forced_pos) hp.labels[id] = 1;
    for (int id : forced_neg) hp.labels[id] = -1;
    for (int id : positive_optional) hp.labels[id] = 1;
    return hp;
  };

  if (equal_weights) {
    const auto n_s = static_cast<double>(split.s.size());
    int best_k = -1;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int k = static_cast<int>(forced_pos.size());
         k <= static_cast<int>(forced_pos.size() + optional.size()); ++k) {
      const double gap = std::abs(static_cast<double>(k) / n_s - rep.rate_t);
      if (gap < best_gap - 1e-15) {
        best_gap = gap;
        best_k = k;
      }
    }
    if (best_gap <= eps + tol) {
      rep.satisfied = true;
      std::vector<int> pos(optional.begin(),
                           optional.begin() + (best_k - static_cast<int>(forced_pos.size())));
      rep.witness = make_witness(pos);
    }
    return rep;
  }

  require(optional.size() <= 20, Errc::TooLarge,
          "pisp with unequal weights enumerates flippable subsets (limit 20)");
  double best_gap = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << optional.size()); ++mask) {
    double pos_weight = weight_forced_pos;
    for (std::size_t b = 0; b < optional.size(); ++b)
      if (mask & (1u << b))
        pos_weight += inst.individuals[static_cast<std::size_t>(optional[b])].weight;
    const double gap = std::abs(pos_weight / weight_s - rep.rate_t);
    if (gap < best_gap - 1e-15) {
      best_gap = gap;
      best_mask = mask;
    }
  }
  if (best_gap <= eps + tol) {
    rep.satisfied = true;
    std::vector<int> pos;
    for (std::size_t b = 0; b < optional.size(); ++b)
      if (best_mask & (1u << b)) pos.push_back(optional[b]);
    rep.witness = make_witness(pos);
  }
  return rep;
}

}  // namespace pif
