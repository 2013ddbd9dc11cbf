#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pif {

// Library-wide tolerances. Allocations must sum to one within kAllocationSumTol;
// every comparison made by audits and by the LP layer shares kComparisonTol so
// boundary verdicts agree across the two paths.
inline constexpr double kAllocationSumTol = 1e-9;
inline constexpr double kComparisonTol = 1e-7;

enum class Errc {
  LengthMismatch,
  NoUtility,
  MultiTaskInstance,
  SingleTaskInstance,
  WrongVariant,
  IndivisibleSplit,
  EmptyGroup,
  TooLarge,
  InvalidArgument,
  ValidationFailed,
  ParseError,
  SolverFailure,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

/// One possible outcome (interview slot, ad campaign, label, ...).
/// Ids are dense indices 0..|C|-1.
struct Outcome {
  int id = 0;
  std::string label;
};

/// A member of the population. `weight` is nonnegative population mass and
/// defaults to 1; fairness constraints are per-pair and ignore it, welfare
/// and objectives use it.
struct Individual {
  int id = 0;
  std::string label;
  double weight = 1.0;
};

/// A point of the outcome simplex: one probability per outcome.
struct Allocation {
  std::vector<double> probs;

  Allocation() = default;
  explicit Allocation(std::vector<double> p) : probs(std::move(p)) {}

  static Allocation point_mass(int outcome, int n_outcomes) {
    Allocation a;
    a.probs.assign(static_cast<std::size_t>(n_outcomes), 0.0);
    a.probs.at(static_cast<std::size_t>(outcome)) = 1.0;
    return a;
  }

  static Allocation uniform(int n_outcomes) {
    Allocation a;
    a.probs.assign(static_cast<std::size_t>(n_outcomes), 1.0 / n_outcomes);
    return a;
  }

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t c) const { return probs[c]; }
  double& operator[](std::size_t c) { return probs[c]; }

  bool operator==(const Allocation&) const = default;
};

inline bool is_distribution(const Allocation& a, double sum_tol = kAllocationSumTol) {
  if (a.probs.empty()) return false;
  double total = 0.0;
  for (double p : a.probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) return false;
    total += p;
  }
  return std::abs(total - 1.0) <= sum_tol;
}

inline bool approx_equal(const Allocation& p, const Allocation& q, double tol = kComparisonTol) {
  if (p.size() != q.size()) return false;
  for (std::size_t c = 0; c < p.size(); ++c)
    if (std::abs(p[c] - q[c]) > tol) return false;
  return true;
}

/// Total variation distance between two allocations: (1/2) * sum_c |p_c - q_c|.
inline double tv_distance(const Allocation& p, const Allocation& q) {
  require(p.size() == q.size(), Errc::LengthMismatch,
          "tv_distance: allocations have different lengths");
  double sum = 0.0;
  for (std::size_t c = 0; c < p.size(); ++c) sum += std::abs(p[c] - q[c]);
  return 0.5 * sum;
}

inline double dot(const std::vector<double>& u, const Allocation& p) {
  require(u.size() == p.size(), Errc::LengthMismatch, "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t c = 0; c < u.size(); ++c) s += u[c] * p[c];
  return s;
}

/// A policy maps every individual id to an allocation.
struct Policy {
  std::map<int, Allocation> alloc;

  const Allocation& at(int individual) const {
    auto it = alloc.find(individual);
    require(it != alloc.end(), Errc::InvalidArgument,
            "policy has no allocation for individual " + std::to_string(individual));
    return it->second;
  }

  bool operator==(const Policy&) const = default;
};

/// Task-specific similarity metric over individuals, values in [0,1].
/// Symmetry and a zero diagonal are hard invariants; the triangle inequality
/// is only linted (see Instance::lint).
struct Metric {
  std::vector<std::vector<double>> dist;

  double at(int i, int j) const {
    return dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  std::size_t size() const { return dist.size(); }
};

/// Divergence over allocations. Only total variation is implemented; the
/// enumeration is the extension point.
enum class DivergenceKind { TotalVariation };

}  // namespace pif
