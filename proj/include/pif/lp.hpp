#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "pif/preferences.hpp"
#include "pif/types.hpp"

namespace pif::lp {

enum class Rel { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    case Status::IterationLimit: return "iteration_limit";
  }
  return "?";
}

struct Term {
  int var = 0;
  double coeff = 0.0;
};

struct Constraint {
  std::vector<Term> terms;
  Rel rel = Rel::LessEq;
  double rhs = 0.0;
};

struct VarBounds {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

/// A contiguous run of variables, e.g. one allocation vector.
struct Block {
  int first = 0;
  int size = 0;
  int operator[](int k) const { return first + k; }
};

class Model {
 public:
  int add_var(const std::string& name, VarBounds b = {}) {
    require(names_taken_.insert(name).second, Errc::InvalidArgument,
            "duplicate variable name: " + name);
    names_.push_back(name);
    bounds_.push_back(b);
    return num_vars_++;
  }

  /// Adds `size` variables named prefix[0]..prefix[size-1].
  Block add_block(const std::string& prefix, int size, VarBounds b = {}) {
    Block blk{num_vars_, size};
    for (int k = 0; k < size; ++k) add_var(prefix + "[" + std::to_string(k) + "]", b);
    return blk;
  }

  void add_constraint(std::vector<Term> terms, Rel rel, double rhs) {
    for (const auto& t : terms)
      require(t.var >= 0 && t.var < num_vars_, Errc::InvalidArgument,
              "constraint references unknown variable");
    constraints_.push_back({std::move(terms), rel, rhs});
  }

  void set_objective(std::vector<Term> terms, Sense sense) {
    for (const auto& t : terms)
      require(t.var >= 0 && t.var < num_vars_, Errc::InvalidArgument,
              "objective references unknown variable");
    objective_ = std::move(terms);
    sense_ = sense;
  }

  int num_vars() const { return num_vars_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Term>& objective() const { return objective_; }
  Sense sense() const { return sense_; }
  const VarBounds& bounds(int v) const { return bounds_[static_cast<std::size_t>(v)]; }
  void set_bounds(int v, VarBounds b) { bounds_[static_cast<std::size_t>(v)] = b; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }

 private:
  int num_vars_ = 0;
  std::vector<std::string> names_;
  std::unordered_set<std::string> names_taken_;
  std::vector<VarBounds> bounds_;
  std::vector<Constraint> constraints_;
  std::vector<Term> objective_;
  Sense sense_ = Sense::Maximize;
};

struct Solution {
  Status status = Status::Infeasible;
  std::vector<double> values;
  double objective_value = 0.0;
};

/// Either a block of model variables or a fixed allocation.
using AllocTerm = std::variant<Block, std::vector<double>>;

inline int alloc_size(const AllocTerm& a) {
  if (const auto* b = std::get_if<Block>(&a)) return b->size;
  return static_cast<int>(std::get<std::vector<double>>(a).size());
}

namespace detail {

// Appends +sign * a[c] to a row being built: a variable term when `a` is a
// block, an rhs adjustment (returned) when fixed.
inline double append_coord(std::vector<Term>& terms, const AllocTerm& a, int c, double sign) {
  if (const auto* b = std::get_if<Block>(&a)) {
    terms.push_back({(*b)[c], sign});
    return 0.0;
  }
  return -sign * std::get<std::vector<double>>(a)[static_cast<std::size_t>(c)];
}

// Appends sum_c coeffs[c] * sign * a[c]; returns the rhs adjustment.
inline double append_weighted(std::vector<Term>& terms, const AllocTerm& a,
                              const std::vector<double>& coeffs, double sign) {
  double rhs = 0.0;
  for (int c = 0; c < alloc_size(a); ++c) {
    const double w = coeffs[static_cast<std::size_t>(c)] * sign;
    if (w == 0.0) continue;
    if (const auto* b = std::get_if<Block>(&a)) {
      terms.push_back({(*b)[c], w});
    } else {
      rhs -= w * std::get<std::vector<double>>(a)[static_cast<std::size_t>(c)];
    }
  }
  return rhs;
}

}  // namespace detail

/// Constrains a block to the probability simplex: sum = 1 plus zero lower
/// bounds on every coordinate.
inline void add_simplex_constraints(Model& m, Block block) {
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(block.size));
  for (int c = 0; c < block.size; ++c) {
    terms.push_back({block[c], 1.0});
    auto b = m.bounds(block[c]);
    b.lower = std::max(b.lower, 0.0);
    m.set_bounds(block[c], b);
  }
  m.add_constraint(std::move(terms), Rel::Equal, 1.0);
}

/// Encodes tv(p, q) <= bound with |C| slack variables z_c >= |p_c - q_c| and
/// the cap (1/2) sum_c z_c <= bound: exactly 2|C|+1 inequalities.
/// Returns the slack block.
inline Block add_tv_constraint(Model& m, Block p, const AllocTerm& q, double bound,
                               const std::string& slack_prefix) {
  require(bound >= 0.0, Errc::InvalidArgument, "tv bound must be nonnegative");
  require(alloc_size(q) == p.size, Errc::LengthMismatch, "tv constraint dimension mismatch");
  Block z = m.add_block(slack_prefix, p.size);
  for (int c = 0; c < p.size; ++c) {
    {  // p_c - q_c <= z_c
      std::vector<Term> t{{p[c], 1.0}, {z[c], -1.0}};
      double rhs = detail::append_coord(t, q, c, -1.0);
      m.add_constraint(std::move(t), Rel::LessEq, rhs);
    }
    {  // q_c - p_c <= z_c
      std::vector<Term> t{{p[c], -1.0}, {z[c], -1.0}};
      double rhs = detail::append_coord(t, q, c, 1.0);
      m.add_constraint(std::move(t), Rel::LessEq, rhs);
    }
  }
  std::vector<Term> cap;
  for (int c = 0; c < z.size; ++c) cap.push_back({z[c], 0.5});
  m.add_constraint(std::move(cap), Rel::LessEq, bound);
  return z;
}

/// <u, preferred> >= <u, dominated> as a single row.
inline void add_eu_preference_constraint(Model& m, const std::vector<double>& u,
                                         const AllocTerm& preferred,
                                         const AllocTerm& dominated) {
  require(std::holds_alternative<Block>(preferred) || std::holds_alternative<Block>(dominated),
          Errc::InvalidArgument, "preference constraint needs at least one variable block");
  std::vector<Term> t;
  double rhs = 0.0;
  rhs += detail::append_weighted(t, preferred, u, 1.0);
  rhs += detail::append_weighted(t, dominated, u, -1.0);
  m.add_constraint(std::move(t), Rel::GreaterEq, rhs);
}

/// Prefix-sum dominance rows in the relation's descending-utility order, one
/// per tie-group boundary. The full-length prefix is implied by the simplex
/// equalities and omitted. Returns the number of rows added.
inline int add_sd_preference_constraints(Model& m, const PreferenceRelation& rel,
                                         const AllocTerm& preferred,
                                         const AllocTerm& dominated) {
  const OutcomeOrder ord = sorted_outcome_order(rel);
  std::vector<double> indicator(ord.order.size(), 0.0);
  int rows = 0;
  std::size_t pos = 0;
  for (int boundary : ord.boundaries) {
    for (; pos < static_cast<std::size_t>(boundary); ++pos)
      indicator[static_cast<std::size_t>(ord.order[pos])] = 1.0;
    if (boundary == static_cast<int>(ord.order.size())) break;
    std::vector<Term> t;
    double rhs = 0.0;
    rhs += detail::append_weighted(t, preferred, indicator, 1.0);
    rhs += detail::append_weighted(t, dominated, indicator, -1.0);
    m.add_constraint(std::move(t), Rel::GreaterEq, rhs);
    ++rows;
  }
  return rows;
}

/// True when `x` satisfies every constraint and bound of the model within tol.
inline bool satisfies(const Model& m, const std::vector<double>& x,
                      double tol = kComparisonTol) {
  if (x.size() != static_cast<std::size_t>(m.num_vars())) return false;
  for (int v = 0; v < m.num_vars(); ++v) {
    const auto& b = m.bounds(v);
    if (x[static_cast<std::size_t>(v)] < b.lower - tol) return false;
    if (x[static_cast<std::size_t>(v)] > b.upper + tol) return false;
  }
  for (const auto& c : m.constraints()) {
    double lhs = 0.0;
    for (const auto& t : c.terms) lhs += t.coeff * x[static_cast<std::size_t>(t.var)];
    switch (c.rel) {
      case Rel::LessEq:
        if (lhs > c.rhs + tol) return false;
        break;
      case Rel::GreaterEq:
        if (lhs < c.rhs - tol) return false;
        break;
      case Rel::Equal:
        if (std::abs(lhs - c.rhs) > tol) return false;
        break;
    }
  }
  return true;
}

inline double objective_value(const Model& m, const std::vector<double>& x) {
  double v = 0.0;
  for (const auto& t : m.objective()) v += t.coeff * x[static_cast<std::size_t>(t.var)];
  return v;
}

namespace detail {

// Dense two-phase primal simplex on the standard form min c.y, Ay=b, y>=0.
// Pricing is Dantzig with a permanent switch to Bland's rule after a run of
// degenerate pivots, so the method cannot cycle and stays deterministic.
class Simplex {
 public:
  Simplex(int rows, int cols) : m_(rows), n_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  std::vector<double> b;
  std::vector<double> cost;
  std::vector<int> basis;
  int ban_start = -1;  // artificial columns: may leave the basis, never enter

  int rows() const { return m_; }
  int cols() const { return n_; }

  // The tableau is kept fully eliminated, so cost[] always holds the current
  // reduced costs and cost_value the current objective.
  Status run(long max_iters, long& iters) {
    const int scan_end = ban_start >= 0 ? ban_start : n_;
    bool bland = false;
    int degenerate_run = 0;
    while (true) {
      if (iters >= max_iters) return Status::IterationLimit;
      int enter = -1;
      if (bland) {
        for (int j = 0; j < scan_end; ++j)
          if (cost[static_cast<std::size_t>(j)] < -kPivotTol) {
            enter = j;
            break;
          }
      } else {
        double best = -kPivotTol;
        for (int j = 0; j < scan_end; ++j)
          if (cost[static_cast<std::size_t>(j)] < best) {
            best = cost[static_cast<std::size_t>(j)];
            enter = j;
          }
      }
      if (enter < 0) return Status::Optimal;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        const double col = at(r, enter);
        if (col > kPivotTol) {
          const double ratio = b[static_cast<std::size_t>(r)] / col;
          if (ratio < best_ratio - kPivotTol) {
            best_ratio = ratio;
            leave = r;
          } else if (ratio < best_ratio + kPivotTol && leave >= 0) {
            // Tie-break: Bland by smallest basic variable index, otherwise
            // the largest pivot element for stability.
            if (bland ? basis[static_cast<std::size_t>(r)] <
                            basis[static_cast<std::size_t>(leave)]
                      : col > at(leave, enter)) {
              best_ratio = std::min(best_ratio, ratio);
              leave = r;
            }
          }
        }
      }
      if (leave < 0) return Status::Unbounded;

      if (best_ratio <= kPivotTol) {
        if (++degenerate_run > kDegenerateLimit) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      ++iters;
    }
  }

  void pivot(int r, int c) {
    const double piv = at(r, c);
    double* prow = &a_[static_cast<std::size_t>(r) * n_];
    const double inv = 1.0 / piv;
    for (int j = 0; j < n_; ++j) prow[j] *= inv;
    prow[c] = 1.0;
    b[static_cast<std::size_t>(r)] *= inv;

    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (std::abs(f) <= kEps) continue;
      double* row = &a_[static_cast<std::size_t>(i) * n_];
      for (int j = 0; j < n_; ++j) row[j] -= f * prow[j];
      row[c] = 0.0;
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(r)];
      if (b[static_cast<std::size_t>(i)] < 0.0 && b[static_cast<std::size_t>(i)] > -kEps)
        b[static_cast<std::size_t>(i)] = 0.0;
    }
    const double fc = cost[static_cast<std::size_t>(c)];
    if (std::abs(fc) > kEps) {
      for (int j = 0; j < n_; ++j) cost[static_cast<std::size_t>(j)] -= fc * prow[j];
      cost[static_cast<std::size_t>(c)] = 0.0;
      cost_value += fc * b[static_cast<std::size_t>(r)];
    }
    basis[static_cast<std::size_t>(r)] = c;
  }

  void drop_row(int r) {
    for (int i = r; i + 1 < m_; ++i) {
      for (int j = 0; j < n_; ++j) at(i, j) = at(i + 1, j);
      b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i + 1)];
      basis[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i + 1)];
    }
    --m_;
    b.resize(static_cast<std::size_t>(m_));
    basis.resize(static_cast<std::size_t>(m_));
  }

  double cost_value = 0.0;

  static constexpr double kPivotTol = 1e-9;
  static constexpr double kEps = 1e-12;
  static constexpr int kDegenerateLimit = 60;

 private:
  int m_;
  int n_;
  std::vector<double> a_;
};

// How a model variable maps into standard-form variables.
struct VarMap {
  double offset = 0.0;
  int pos = -1;       // y with +1 coefficient
  int neg = -1;       // y with -1 coefficient (free-variable split)
  double sign = 1.0;  // sign on `pos`
};

}  // namespace detail

/// Solves the model with a bundled dense primal simplex. Deterministic given
/// the model; iteration limit 50*(num_vars + num_constraints) surfaces as
/// Status::IterationLimit.
inline Solution solve(const Model& model) {
  using detail::Simplex;
  using detail::VarMap;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Standard-form variables for each model variable plus bound rows.
  std::vector<VarMap> vmap(static_cast<std::size_t>(model.num_vars()));
  int n_std = 0;
  struct BoundRow {
    int std_var;
    double rhs;
  };
  std::vector<BoundRow> bound_rows;
  for (int v = 0; v < model.num_vars(); ++v) {
    const auto& bd = model.bounds(v);
    auto& mp = vmap[static_cast<std::size_t>(v)];
    if (bd.lower > bd.upper) return {Status::Infeasible, {}, 0.0};
    if (std::isfinite(bd.lower)) {
      mp.offset = bd.lower;
      mp.pos = n_std++;
      mp.sign = 1.0;
      if (std::isfinite(bd.upper)) bound_rows.push_back({mp.pos, bd.upper - bd.lower});
    } else if (std::isfinite(bd.upper)) {
      mp.offset = bd.upper;
      mp.pos = n_std++;
      mp.sign = -1.0;
    } else {
      mp.pos = n_std++;
      mp.neg = n_std++;
      mp.sign = 1.0;
    }
  }

  // Assemble rows as dense arrays over the standard variables.
  struct Row {
    std::vector<double> a;
    Rel rel;
    double rhs;
  };
  std::vector<Row> rows;
  rows.reserve(model.constraints().size() + bound_rows.size());
  for (const auto& c : model.constraints()) {
    Row row{std::vector<double>(static_cast<std::size_t>(n_std), 0.0), c.rel, c.rhs};
    for (const auto& t : c.terms) {
      const auto& mp = vmap[static_cast<std::size_t>(t.var)];
      row.a[static_cast<std::size_t>(mp.pos)] += t.coeff * mp.sign;
      if (mp.neg >= 0) row.a[static_cast<std::size_t>(mp.neg)] -= t.coeff;
      row.rhs -= t.coeff * mp.offset;
    }
    rows.push_back(std::move(row));
  }
  for (const auto& br : bound_rows) {
    Row row{std::vector<double>(static_cast<std::size_t>(n_std), 0.0), Rel::LessEq, br.rhs};
    row.a[static_cast<std::size_t>(br.std_var)] = 1.0;
    rows.push_back(std::move(row));
  }

  // Normalize to <= / = and count slacks.
  int n_slack = 0;
  for (auto& row : rows) {
    if (row.rel == Rel::GreaterEq) {
      for (double& a : row.a) a = -a;
      row.rhs = -row.rhs;
      row.rel = Rel::LessEq;
    }
    if (row.rel == Rel::LessEq) ++n_slack;
  }

  const int m = static_cast<int>(rows.size());
  // Columns: structural | slacks | artificials (added as needed).
  std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
  int col = n_std;
  for (int r = 0; r < m; ++r)
    if (rows[static_cast<std::size_t>(r)].rel == Rel::LessEq)
      slack_col[static_cast<std::size_t>(r)] = col++;
  const int first_artificial = col;
  std::vector<int> artificial_col(static_cast<std::size_t>(m), -1);
  for (int r = 0; r < m; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    const bool negative = row.rhs < 0.0;
    // After fixing the sign, a +1 slack begins the basis for <= rows; every
    // other row needs an artificial.
    if (!(row.rel == Rel::LessEq && !negative)) artificial_col[static_cast<std::size_t>(r)] = col++;
  }
  const int n_total = col;

  Simplex tab(m, n_total);
  tab.b.assign(static_cast<std::size_t>(m), 0.0);
  tab.basis.assign(static_cast<std::size_t>(m), -1);
  tab.cost.assign(static_cast<std::size_t>(n_total), 0.0);
  tab.ban_start = first_artificial < n_total ? first_artificial : -1;

  for (int r = 0; r < m; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    double sgn = row.rhs < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n_std; ++j) tab.at(r, j) = sgn * row.a[static_cast<std::size_t>(j)];
    if (slack_col[static_cast<std::size_t>(r)] >= 0)
      tab.at(r, slack_col[static_cast<std::size_t>(r)]) = sgn;
    tab.b[static_cast<std::size_t>(r)] = sgn * row.rhs;
    if (artificial_col[static_cast<std::size_t>(r)] >= 0) {
      tab.at(r, artificial_col[static_cast<std::size_t>(r)]) = 1.0;
      tab.basis[static_cast<std::size_t>(r)] = artificial_col[static_cast<std::size_t>(r)];
    } else {
      tab.basis[static_cast<std::size_t>(r)] = slack_col[static_cast<std::size_t>(r)];
    }
  }

  const long max_iters =
      50L * (model.num_vars() + static_cast<long>(model.constraints().size()));
  long iters = 0;

  // Phase 1: drive the artificials to zero.
  if (first_artificial < n_total) {
    for (int j = first_artificial; j < n_total; ++j) tab.cost[static_cast<std::size_t>(j)] = 1.0;
    tab.cost_value = 0.0;
    // Eliminate basic artificials from the cost row.
    for (int r = 0; r < tab.rows(); ++r) {
      const int bv = tab.basis[static_cast<std::size_t>(r)];
      if (bv >= first_artificial) {
        for (int j = 0; j < n_total; ++j) tab.cost[static_cast<std::size_t>(j)] -= tab.at(r, j);
        tab.cost_value += tab.b[static_cast<std::size_t>(r)];
      }
    }
    const Status s1 = tab.run(max_iters, iters);
    if (s1 == Status::IterationLimit) return {Status::IterationLimit, {}, 0.0};
    if (s1 == Status::Unbounded)
      fail(Errc::Internal, "phase-1 objective cannot be unbounded");
    if (tab.cost_value > 1e-7) return {Status::Infeasible, {}, 0.0};
    // Pivot out any artificial stuck in the basis; drop redundant rows.
    for (int r = tab.rows() - 1; r >= 0; --r) {
      if (tab.basis[static_cast<std::size_t>(r)] < first_artificial) continue;
      int piv = -1;
      for (int j = 0; j < first_artificial; ++j)
        if (std::abs(tab.at(r, j)) > Simplex::kPivotTol) {
          piv = j;
          break;
        }
      if (piv >= 0) {
        tab.pivot(r, piv);
      } else {
        tab.drop_row(r);
      }
    }
  }

  // Phase 2: the real objective (internally minimized). Artificial columns
  // are banned from entering, so their costs stay zero.
  const double obj_sign = model.sense() == Sense::Maximize ? -1.0 : 1.0;
  std::vector<double> std_cost(static_cast<std::size_t>(n_total), 0.0);
  for (const auto& t : model.objective()) {
    const auto& mp = vmap[static_cast<std::size_t>(t.var)];
    std_cost[static_cast<std::size_t>(mp.pos)] += obj_sign * t.coeff * mp.sign;
    if (mp.neg >= 0) std_cost[static_cast<std::size_t>(mp.neg)] -= obj_sign * t.coeff;
  }
  tab.cost = std_cost;
  tab.cost_value = 0.0;
  for (int r = 0; r < tab.rows(); ++r) {
    const int bv = tab.basis[static_cast<std::size_t>(r)];
    const double cb = tab.cost[static_cast<std::size_t>(bv)];
    if (std::abs(cb) > Simplex::kEps) {
      for (int j = 0; j < tab.cols(); ++j)
        tab.cost[static_cast<std::size_t>(j)] -= cb * tab.at(r, j);
      tab.cost[static_cast<std::size_t>(bv)] = 0.0;
      tab.cost_value += cb * tab.b[static_cast<std::size_t>(r)];
    }
  }
  const Status s2 = tab.run(max_iters, iters);
  if (s2 == Status::IterationLimit) return {Status::IterationLimit, {}, 0.0};
  if (s2 == Status::Unbounded) return {Status::Unbounded, {}, 0.0};

  // Decode standard values back into model variables.
  std::vector<double> y(static_cast<std::size_t>(n_total), 0.0);
  for (int r = 0; r < tab.rows(); ++r)
    y[static_cast<std::size_t>(tab.basis[static_cast<std::size_t>(r)])] =
        tab.b[static_cast<std::size_t>(r)];
  Solution sol;
  sol.status = Status::Optimal;
  sol.values.resize(static_cast<std::size_t>(model.num_vars()));
  for (int v = 0; v < model.num_vars(); ++v) {
    const auto& mp = vmap[static_cast<std::size_t>(v)];
    double x = mp.offset + mp.sign * y[static_cast<std::size_t>(mp.pos)];
    if (mp.neg >= 0) x -= y[static_cast<std::size_t>(mp.neg)];
    sol.values[static_cast<std::size_t>(v)] = x;
  }
  sol.objective_value = objective_value(model, sol.values);
  return sol;
}

/// Plain-text dump (LP format) for external cross-checking.
inline std::string to_lp_text(const Model& m) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << (m.sense() == Sense::Maximize ? "Maximize" : "Minimize") << "\n obj:";
  for (const auto& t : m.objective())
    os << (t.coeff >= 0 ? " + " : " - ") << std::abs(t.coeff) << " " << m.name(t.var);
  if (m.objective().empty()) os << " 0";
  os << "\nSubject To\n";
  int idx = 0;
  for (const auto& c : m.constraints()) {
    os << " c" << idx++ << ":";
    for (const auto& t : c.terms)
      os << (t.coeff >= 0 ? " + " : " - ") << std::abs(t.coeff) << " " << m.name(t.var);
    switch (c.rel) {
      case Rel::LessEq: os << " <= "; break;
      case Rel::Equal: os << " = "; break;
      case Rel::GreaterEq: os << " >= "; break;
    }
    os << c.rhs << "\n";
  }
  os << "Bounds\n";
  for (int v = 0; v < m.num_vars(); ++v) {
    const auto& b = m.bounds(v);
    if (std::isinf(b.lower) && std::isinf(b.upper)) {
      os << " " << m.name(v) << " free\n";
    } else if (std::isinf(b.upper)) {
      os << " " << m.name(v) << " >= " << b.lower << "\n";
    } else {
      os << " " << b.lower << " <= " << m.name(v) << " <= " << b.upper << "\n";
    }
  }
  os << "End\n";
  return os.str();
}

}  // namespace pif::lp
