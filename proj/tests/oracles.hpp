#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <optional>
#include <random>
#include <vector>

#include "pif/lp.hpp"

namespace pif::test {

struct VertexOracleResult {
  bool feasible = false;
  double best_value = 0.0;
  std::vector<double> best_point;
};

namespace detail {

// Solves the square system A x = b by Gaussian elimination with partial
// pivoting. Returns nullopt when (numerically) singular.
inline std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                       std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-9) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct Halfspace {
  std::vector<double> a;
  double rhs;
  bool equality;
};

inline std::vector<Halfspace> collect_halfspaces(const lp::Model& m) {
  std::vector<Halfspace> rows;
  const auto n = static_cast<std::size_t>(m.num_vars());
  for (const auto& c : m.constraints()) {
    Halfspace h{std::vector<double>(n, 0.0), c.rhs, c.rel == lp::Rel::Equal};
    for (const auto& t : c.terms) h.a[static_cast<std::size_t>(t.var)] += t.coeff;
    if (c.rel == lp::Rel::GreaterEq) {
      for (double& v : h.a) v = -v;
      h.rhs = -h.rhs;
    }
    rows.push_back(std::move(h));
  }
  for (int v = 0; v < m.num_vars(); ++v) {
    const auto& b = m.bounds(v);
    if (std::isfinite(b.lower)) {
      Halfspace h{std::vector<double>(n, 0.0), -b.lower, false};
      h.a[static_cast<std::size_t>(v)] = -1.0;
      rows.push_back(std::move(h));
    }
    if (std::isfinite(b.upper)) {
      Halfspace h{std::vector<double>(n, 0.0), b.upper, false};
      h.a[static_cast<std::size_t>(v)] = 1.0;
      rows.push_back(std::move(h));
    }
  }
  return rows;
}

}  // namespace detail

/// Brute-force LP oracle over bounded polyhedra: enumerates candidate basic
/// points (equalities plus every (n - #eq)-subset of inequalities treated as
/// tight), keeps the feasible ones and returns the best objective value.
/// Only valid when the feasible region is bounded, so that an optimum, if
/// any, sits at a vertex.
inline VertexOracleResult vertex_enumeration_optimum(const lp::Model& m, double feas_tol = 1e-7) {
  const int n = m.num_vars();
  auto rows = detail::collect_halfspaces(m);
  std::vector<std::size_t> eq_idx, ineq_idx;
  for (std::size_t r = 0; r < rows.size(); ++r)
    (rows[r].equality ? eq_idx : ineq_idx).push_back(r);

  VertexOracleResult out;
  const bool maximize = m.sense() == lp::Sense::Maximize;
  const int need = n - static_cast<int>(eq_idx.size());
  if (need < 0) return out;

  std::vector<std::size_t> pick(static_cast<std::size_t>(need));
  auto consider = [&](const std::vector<std::size_t>& active) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t r : eq_idx) {
      a.push_back(rows[r].a);
      b.push_back(rows[r].rhs);
    }
    for (std::size_t r : active) {
      a.push_back(rows[r].a);
      b.push_back(rows[r].rhs);
    }
    auto x = detail::solve_square(std::move(a), std::move(b));
    if (!x) return;
    for (const auto& h : rows) {
      double lhs = 0.0;
      for (int v = 0; v < n; ++v) lhs += h.a[static_cast<std::size_t>(v)] * (*x)[static_cast<std::size_t>(v)];
      if (h.equality ? std::abs(lhs - h.rhs) > feas_tol : lhs > h.rhs + feas_tol) return;
    }
    const double value = lp::objective_value(m, *x);
    if (!out.feasible || (maximize ? value > out.best_value : value < out.best_value)) {
      out.feasible = true;
      out.best_value = value;
      out.best_point = std::move(*x);
    }
  };

  // Enumerate need-subsets of the inequalities.
  std::vector<std::size_t> subset;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (subset.size() == static_cast<std::size_t>(need)) {
      consider(subset);
      return;
    }
    for (std::size_t i = start; i < ineq_idx.size(); ++i) {
      subset.push_back(ineq_idx[i]);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

/// Random small LP with box bounds (always bounded), mixed relations and a
/// coarse coefficient grid.
inline lp::Model random_boxed_lp(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv_pick(2, 5);
  std::uniform_int_distribution<int> nc_pick(1, 5);
  std::uniform_int_distribution<int> coeff_pick(-4, 4);
  std::uniform_int_distribution<int> rel_pick(0, 5);
  std::uniform_int_distribution<int> rhs_pick(-2, 6);
  const int nv = nv_pick(rng);
  const int nc = nc_pick(rng);

  lp::Model m;
  for (int v = 0; v < nv; ++v)
    m.add_var("x" + std::to_string(v), {0.0, 1.0 + (v % 2)});
  for (int c = 0; c < nc; ++c) {
    std::vector<lp::Term> terms;
    for (int v = 0; v < nv; ++v) {
      const double coeff = coeff_pick(rng) * 0.5;
      if (coeff != 0.0) terms.push_back({v, coeff});
    }
    if (terms.empty()) terms.push_back({0, 1.0});
    const int r = rel_pick(rng);
    const lp::Rel rel = r == 0 ? lp::Rel::Equal : (r <= 3 ? lp::Rel::LessEq : lp::Rel::GreaterEq);
    m.add_constraint(std::move(terms), rel, rhs_pick(rng) * 0.5);
  }
  std::vector<lp::Term> obj;
  for (int v = 0; v < nv; ++v) {
    const double coeff = coeff_pick(rng) * 0.5;
    if (coeff != 0.0) obj.push_back({v, coeff});
  }
  std::uniform_int_distribution<int> sense_pick(0, 1);
  m.set_objective(std::move(obj), sense_pick(rng) ? lp::Sense::Maximize : lp::Sense::Minimize);
  return m;
}

}  // namespace pif::test
