#pragma once

// Self-contained dense linear-program solver: two-phase primal simplex on a
// full tableau. Minimizes c.z subject to equality rows, <= rows, and
// per-variable bounds (either side may be unbounded).
//
// Variables are reduced to standard form (nonnegative) by shifting at a
// finite lower bound, mirroring at a finite upper bound, or splitting a free
// variable into a difference of nonnegatives. Finite ranges add a slack row
// for the upper end. Rows are equilibrated to unit max-norm.
//
// Pivot selection defaults to the largest-coefficient rule and falls back to
// Bland's rule after a run of degenerate pivots, which restores the finite-
// termination guarantee; pure Bland can be requested instead.
//
// The tableau is a flat (rows x columns) array of doubles: memory is
// O(rows x columns) and each pivot sweeps it once. Instances up to a few
// thousand constraints stay tractable; there is no sparse path.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace owakit {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

struct LinearConstraint {
  std::vector<double> coeffs;
  double rhs = 0.0;
};

struct VariableBounds {
  double lower = -kLpInfinity;
  double upper = kLpInfinity;
};

/// Dense LP instance: minimize objective . z subject to
/// equality rows, inequality rows (coeffs . z <= rhs), and variable bounds.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  std::vector<VariableBounds> bounds;

  LinearProgram() = default;
  explicit LinearProgram(int nv)
      : num_vars(nv), objective(static_cast<std::size_t>(nv), 0.0), bounds(static_cast<std::size_t>(nv)) {
    if (nv <= 0) throw std::invalid_argument("LinearProgram: num_vars must be positive");
  }

  void add_equality(std::vector<double> coeffs, double rhs) {
    equalities.push_back({std::move(coeffs), rhs});
  }
  void add_inequality(std::vector<double> coeffs, double rhs) {
    inequalities.push_back({std::move(coeffs), rhs});
  }
  void set_bounds(int var, double lower, double upper) {
    bounds.at(static_cast<std::size_t>(var)) = {lower, upper};
  }

  /// Rejects malformed instances (row width mismatches, inverted or NaN
  /// bounds, non-finite coefficients) before any solving is attempted.
  void validate() const {
    const auto nv = static_cast<std::size_t>(num_vars);
    if (num_vars <= 0) throw std::invalid_argument("LinearProgram: num_vars must be positive");
    if (objective.size() != nv) throw std::invalid_argument("LinearProgram: objective length mismatch");
    if (bounds.size() != nv) throw std::invalid_argument("LinearProgram: bounds length mismatch");
    for (double c : objective)
      if (!std::isfinite(c)) throw std::invalid_argument("LinearProgram: non-finite objective coefficient");
    auto check_rows = [&](const std::vector<LinearConstraint>& rows, const char* what) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].coeffs.size() != nv)
          throw std::invalid_argument(std::string("LinearProgram: ") + what + " row " + std::to_string(r) +
                                      " has " + std::to_string(rows[r].coeffs.size()) + " coefficients, expected " +
                                      std::to_string(num_vars));
        if (!std::isfinite(rows[r].rhs))
          throw std::invalid_argument(std::string("LinearProgram: ") + what + " row " + std::to_string(r) +
                                      " has non-finite rhs");
        for (double c : rows[r].coeffs)
          if (!std::isfinite(c))
            throw std::invalid_argument(std::string("LinearProgram: ") + what + " row " + std::to_string(r) +
                                        " has a non-finite coefficient");
      }
    };
    check_rows(equalities, "equality");
    check_rows(inequalities, "inequality");
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& bd = bounds[v];
      if (std::isnan(bd.lower) || std::isnan(bd.upper))
        throw std::invalid_argument("LinearProgram: NaN bound on variable " + std::to_string(v));
      if (bd.lower > bd.upper)
        throw std::invalid_argument("LinearProgram: inverted bounds on variable " + std::to_string(v));
    }
  }
};

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> solution;   // original variables, present iff optimal
  double objective_value = 0.0;   // meaningful iff optimal
  long iterations = 0;            // simplex pivots across both phases
};

enum class PivotRule { largest_coefficient, bland };

struct SimplexOptions {
  PivotRule rule = PivotRule::largest_coefficient;
  int stall_limit = 50;        // degenerate pivots before the Bland fallback kicks in
  double pivot_tol = 1e-10;    // tableau entries below this are treated as zero
  double opt_tol = 1e-9;       // reduced-cost threshold for optimality
  double feas_tol = 1e-9;      // phase-1 residual above this means infeasible
  long max_iterations = 0;     // 0: derived from problem size
};

/// Worst violation of the program's constraints and bounds at z
/// (0 for a feasible point). Used to vet every claimed-optimal solution.
inline double max_constraint_violation(const LinearProgram& lp, std::span<const double> z) {
  if (static_cast<int>(z.size()) != lp.num_vars)
    throw std::invalid_argument("max_constraint_violation: point has wrong dimension");
  double worst = 0.0;
  auto dot = [&](const std::vector<double>& row) {
    double acc = 0.0;
    for (std::size_t v = 0; v < row.size(); ++v) acc += row[v] * z[v];
    return acc;
  };
  for (const auto& c : lp.equalities) worst = std::max(worst, std::abs(dot(c.coeffs) - c.rhs));
  for (const auto& c : lp.inequalities) worst = std::max(worst, dot(c.coeffs) - c.rhs);
  for (int v = 0; v < lp.num_vars; ++v) {
    const auto& bd = lp.bounds[static_cast<std::size_t>(v)];
    if (std::isfinite(bd.lower)) worst = std::max(worst, bd.lower - z[static_cast<std::size_t>(v)]);
    if (std::isfinite(bd.upper)) worst = std::max(worst, z[static_cast<std::size_t>(v)] - bd.upper);
  }
  return worst;
}

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(const LinearProgram& lp, const SimplexOptions& opts) : lp_(lp), opts_(opts) { build(); }

  LpOutcome run() {
    LpOutcome out;
    // phase 1: minimize the artificial residual
    init_phase1_costs();
    if (!optimize(/*phase1=*/true)) {
      throw std::logic_error("simplex: phase 1 unbounded");  // cost is bounded below by 0
    }
    if (objective_ > opts_.feas_tol) {
      out.status = LpStatus::infeasible;
      out.iterations = iterations_;
      return out;
    }
    drive_out_artificials();
    for (int j = art_start_; j < cols_; ++j) allowed_[static_cast<std::size_t>(j)] = false;
    // the phase-1 certificate bounds the residual; clear the sub-tolerance
    // negatives it may leave so ratio tests stay sound
    for (double& bi : b_)
      if (bi < 0.0 && bi > -10.0 * opts_.feas_tol) bi = 0.0;

    // phase 2: the real objective
    init_phase2_costs();
    if (!optimize(/*phase1=*/false)) {
      out.status = LpStatus::unbounded;
      out.iterations = iterations_;
      return out;
    }

    out.status = LpStatus::optimal;
    out.iterations = iterations_;
    out.solution = recover_solution();
    out.objective_value = 0.0;
    for (int v = 0; v < lp_.num_vars; ++v)
      out.objective_value += lp_.objective[static_cast<std::size_t>(v)] * out.solution[static_cast<std::size_t>(v)];
    return out;
  }

 private:
  // ---- standard-form construction ------------------------------------
  struct VarMap {
    enum class Kind { shift, mirror, split } kind = Kind::shift;
    int col = -1;
    int col2 = -1;      // split only
    double offset = 0;  // shift: x = offset + y; mirror: x = offset - y
  };

  void build() {
    const int nv = lp_.num_vars;
    vmap_.resize(static_cast<std::size_t>(nv));
    int next_col = 0;
    std::vector<std::pair<int, double>> range_rows;  // (structural col, width) for l <= x <= u
    for (int v = 0; v < nv; ++v) {
      const auto& bd = lp_.bounds[static_cast<std::size_t>(v)];
      auto& m = vmap_[static_cast<std::size_t>(v)];
      if (std::isfinite(bd.lower)) {
        m.kind = VarMap::Kind::shift;
        m.offset = bd.lower;
        m.col = next_col++;
        if (std::isfinite(bd.upper)) range_rows.emplace_back(m.col, bd.upper - bd.lower);
      } else if (std::isfinite(bd.upper)) {
        m.kind = VarMap::Kind::mirror;
        m.offset = bd.upper;
        m.col = next_col++;
      } else {
        m.kind = VarMap::Kind::split;
        m.col = next_col++;
        m.col2 = next_col++;
      }
    }
    structural_ = next_col;

    const int num_eq = static_cast<int>(lp_.equalities.size());
    const int num_le = static_cast<int>(lp_.inequalities.size()) + static_cast<int>(range_rows.size());
    rows_ = num_eq + num_le;
    slack_start_ = structural_;
    art_start_ = structural_ + num_le;
    cols_ = art_start_;  // artificials appended below as needed

    a_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(art_start_), 0.0);
    b_.assign(static_cast<std::size_t>(rows_), 0.0);
    basis_.assign(static_cast<std::size_t>(rows_), -1);
    active_.assign(static_cast<std::size_t>(rows_), true);

    int row = 0;
    for (const auto& c : lp_.equalities) fill_row(row++, c.coeffs, c.rhs, /*slack_col=*/-1);
    int slack = slack_start_;
    for (const auto& c : lp_.inequalities) fill_row(row++, c.coeffs, c.rhs, slack++);
    for (const auto& [col, width] : range_rows) {
      const std::size_t base = static_cast<std::size_t>(row) * static_cast<std::size_t>(art_start_);
      a_[base + static_cast<std::size_t>(col)] = 1.0;
      a_[base + static_cast<std::size_t>(slack)] = 1.0;
      b_[static_cast<std::size_t>(row)] = width;
      basis_[static_cast<std::size_t>(row)] = slack;
      ++slack;
      ++row;
    }

    // rows without a usable slack get an artificial basis column
    std::vector<int> art_rows;
    for (int i = 0; i < rows_; ++i)
      if (basis_[static_cast<std::size_t>(i)] < 0) art_rows.push_back(i);
    cols_ = art_start_ + static_cast<int>(art_rows.size());

    // widen the matrix for artificial columns
    std::vector<double> widened(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0.0);
    for (int i = 0; i < rows_; ++i)
      std::copy_n(a_.begin() + static_cast<std::ptrdiff_t>(i) * art_start_, art_start_,
                  widened.begin() + static_cast<std::ptrdiff_t>(i) * cols_);
    a_ = std::move(widened);
    for (std::size_t t = 0; t < art_rows.size(); ++t) {
      const int i = art_rows[t];
      const int col = art_start_ + static_cast<int>(t);
      a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col)] = 1.0;
      basis_[static_cast<std::size_t>(i)] = col;
    }
    allowed_.assign(static_cast<std::size_t>(cols_), true);
    reduced_.assign(static_cast<std::size_t>(cols_), 0.0);
    cost_.assign(static_cast<std::size_t>(cols_), 0.0);
  }

  // Substitutes the variable transforms into one original row, equilibrates
  // it to unit max-norm, flips it nonnegative, and installs slack/basis
  // bookkeeping. slack_col < 0 marks an equality row.
  void fill_row(int row, const std::vector<double>& coeffs, double rhs, int slack_col) {
    const std::size_t base = static_cast<std::size_t>(row) * static_cast<std::size_t>(art_start_);
    double r = rhs;
    for (int v = 0; v < lp_.num_vars; ++v) {
      const double c = coeffs[static_cast<std::size_t>(v)];
      if (c == 0.0) continue;
      const auto& m = vmap_[static_cast<std::size_t>(v)];
      switch (m.kind) {
        case VarMap::Kind::shift:
          a_[base + static_cast<std::size_t>(m.col)] += c;
          r -= c * m.offset;
          break;
        case VarMap::Kind::mirror:
          a_[base + static_cast<std::size_t>(m.col)] -= c;
          r -= c * m.offset;
          break;
        case VarMap::Kind::split:
          a_[base + static_cast<std::size_t>(m.col)] += c;
          a_[base + static_cast<std::size_t>(m.col2)] -= c;
          break;
      }
    }
    double scale = 0.0;
    for (int j = 0; j < structural_; ++j) scale = std::max(scale, std::abs(a_[base + static_cast<std::size_t>(j)]));
    if (scale > 0.0) {
      const double inv = 1.0 / scale;
      for (int j = 0; j < structural_; ++j) a_[base + static_cast<std::size_t>(j)] *= inv;
      r *= inv;
    }
    double slack_sign = 1.0;
    if (r < 0.0) {
      for (int j = 0; j < structural_; ++j) a_[base + static_cast<std::size_t>(j)] = -a_[base + static_cast<std::size_t>(j)];
      r = -r;
      slack_sign = -1.0;
    }
    b_[static_cast<std::size_t>(row)] = r;
    if (slack_col >= 0) {
      a_[base + static_cast<std::size_t>(slack_col)] = slack_sign;
      if (slack_sign > 0.0) basis_[static_cast<std::size_t>(row)] = slack_col;
    }
  }

  // ---- cost rows -------------------------------------------------------
  void init_phase1_costs() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (int j = art_start_; j < cols_; ++j) cost_[static_cast<std::size_t>(j)] = 1.0;
    recompute_reduced_costs();
  }

  void init_phase2_costs() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (int v = 0; v < lp_.num_vars; ++v) {
      const double c = lp_.objective[static_cast<std::size_t>(v)];
      if (c == 0.0) continue;
      const auto& m = vmap_[static_cast<std::size_t>(v)];
      switch (m.kind) {
        case VarMap::Kind::shift: cost_[static_cast<std::size_t>(m.col)] += c; break;
        case VarMap::Kind::mirror: cost_[static_cast<std::size_t>(m.col)] -= c; break;
        case VarMap::Kind::split:
          cost_[static_cast<std::size_t>(m.col)] += c;
          cost_[static_cast<std::size_t>(m.col2)] -= c;
          break;
      }
    }
    recompute_reduced_costs();
  }

  void recompute_reduced_costs() {
    std::copy(cost_.begin(), cost_.end(), reduced_.begin());
    objective_ = 0.0;
    for (int i = 0; i < rows_; ++i) {
      if (!active_[static_cast<std::size_t>(i)]) continue;
      const double cb = cost_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
      if (cb == 0.0) continue;
      const double* arow = row_ptr(i);
      for (int j = 0; j < cols_; ++j) reduced_[static_cast<std::size_t>(j)] -= cb * arow[j];
      objective_ += cb * b_[static_cast<std::size_t>(i)];
    }
  }

  // ---- simplex iterations ----------------------------------------------
  // Returns false on unbounded descent.
  bool optimize(bool phase1) {
    const long max_iter = opts_.max_iterations > 0
                              ? opts_.max_iterations
                              : 20000L + 200L * (static_cast<long>(rows_) + static_cast<long>(cols_));
    bool bland = opts_.rule == PivotRule::bland;
    int stall = 0;
    while (true) {
      if (iterations_ > max_iter)
        throw std::runtime_error("simplex: iteration limit exceeded (" + std::to_string(max_iter) + ")");
      const int enter = bland ? pick_entering_bland() : pick_entering_dantzig();
      if (enter < 0) return true;  // optimal
      const int leave = pick_leaving(enter);
      if (leave < 0) {
        if (phase1) throw std::logic_error("simplex: phase 1 unbounded");
        return false;
      }
      const double before = objective_;
      pivot(leave, enter);
      ++iterations_;
      // Bland fallback bookkeeping: a run of non-improving pivots signals
      // stalling on a degenerate vertex
      if (opts_.rule == PivotRule::largest_coefficient) {
        if (objective_ < before - 1e-13 * (1.0 + std::abs(before))) {
          stall = 0;
          bland = false;
        } else if (++stall >= opts_.stall_limit) {
          bland = true;
        }
      }
    }
  }

  int pick_entering_dantzig() const {
    int best = -1;
    double best_val = -opts_.opt_tol;
    for (int j = 0; j < cols_; ++j) {
      if (!allowed_[static_cast<std::size_t>(j)]) continue;
      const double rj = reduced_[static_cast<std::size_t>(j)];
      if (rj < best_val) {
        best_val = rj;
        best = j;
      }
    }
    return best;
  }

  int pick_entering_bland() const {
    for (int j = 0; j < cols_; ++j) {
      if (!allowed_[static_cast<std::size_t>(j)]) continue;
      if (reduced_[static_cast<std::size_t>(j)] < -opts_.opt_tol) return j;
    }
    return -1;
  }

  // Minimum-ratio row; ties broken by the smallest basis variable index,
  // which keeps the Bland fallback a genuine anti-cycling rule.
  int pick_leaving(int enter) const {
    int best = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows_; ++i) {
      if (!active_[static_cast<std::size_t>(i)]) continue;
      const double aie = row_ptr(i)[enter];
      if (aie <= opts_.pivot_tol) continue;
      const double ratio = b_[static_cast<std::size_t>(i)] / aie;
      if (best < 0 || ratio < best_ratio - 1e-12 ||
          (std::abs(ratio - best_ratio) <= 1e-12 &&
           basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(best)])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(int prow, int pcol) {
    double* prow_ptr = row_ptr(prow);
    const double inv = 1.0 / prow_ptr[pcol];
    for (int j = 0; j < cols_; ++j) prow_ptr[j] *= inv;
    prow_ptr[pcol] = 1.0;  // avoid drift on the pivot element
    b_[static_cast<std::size_t>(prow)] *= inv;

    for (int i = 0; i < rows_; ++i) {
      if (i == prow || !active_[static_cast<std::size_t>(i)]) continue;
      double* arow = row_ptr(i);
      const double f = arow[pcol];
      if (std::abs(f) <= 1e-14) {
        arow[pcol] = 0.0;
        continue;
      }
      for (int j = 0; j < cols_; ++j) arow[j] -= f * prow_ptr[j];
      arow[pcol] = 0.0;
      b_[static_cast<std::size_t>(i)] -= f * b_[static_cast<std::size_t>(prow)];
      if (b_[static_cast<std::size_t>(i)] < 0.0 && b_[static_cast<std::size_t>(i)] > -1e-12)
        b_[static_cast<std::size_t>(i)] = 0.0;  // clamp ratio-test noise
    }
    const double rf = reduced_[static_cast<std::size_t>(pcol)];
    if (rf != 0.0) {
      for (int j = 0; j < cols_; ++j) reduced_[static_cast<std::size_t>(j)] -= rf * prow_ptr[j];
      reduced_[static_cast<std::size_t>(pcol)] = 0.0;
      objective_ += rf * b_[static_cast<std::size_t>(prow)];
    }
    basis_[static_cast<std::size_t>(prow)] = pcol;
  }

  // A basic artificial at a zero level either pivots onto a structural/slack
  // column or sits on a redundant row, which is then retired.
  void drive_out_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (!active_[static_cast<std::size_t>(i)]) continue;
      if (basis_[static_cast<std::size_t>(i)] < art_start_) continue;
      const double* arow = row_ptr(i);
      int col = -1;
      for (int j = 0; j < art_start_; ++j) {
        if (std::abs(arow[j]) > opts_.pivot_tol) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++iterations_;
      } else {
        active_[static_cast<std::size_t>(i)] = false;
      }
    }
  }

  std::vector<double> recover_solution() const {
    std::vector<double> std_val(static_cast<std::size_t>(cols_), 0.0);
    for (int i = 0; i < rows_; ++i) {
      if (!active_[static_cast<std::size_t>(i)]) continue;
      std_val[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] =
          std::max(0.0, b_[static_cast<std::size_t>(i)]);
    }
    std::vector<double> x(static_cast<std::size_t>(lp_.num_vars), 0.0);
    for (int v = 0; v < lp_.num_vars; ++v) {
      const auto& m = vmap_[static_cast<std::size_t>(v)];
      double val = 0.0;
      switch (m.kind) {
        case VarMap::Kind::shift: val = m.offset + std_val[static_cast<std::size_t>(m.col)]; break;
        case VarMap::Kind::mirror: val = m.offset - std_val[static_cast<std::size_t>(m.col)]; break;
        case VarMap::Kind::split:
          val = std_val[static_cast<std::size_t>(m.col)] - std_val[static_cast<std::size_t>(m.col2)];
          break;
      }
      x[static_cast<std::size_t>(v)] = val;
    }
    return x;
  }

  double* row_ptr(int i) { return a_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_); }
  const double* row_ptr(int i) const {
    return a_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_);
  }

  const LinearProgram& lp_;
  SimplexOptions opts_;

  std::vector<VarMap> vmap_;
  int structural_ = 0;
  int slack_start_ = 0;
  int art_start_ = 0;
  int rows_ = 0;
  int cols_ = 0;

  std::vector<double> a_;  // rows_ x cols_, dense
  std::vector<double> b_;
  std::vector<int> basis_;
  std::vector<bool> active_;
  std::vector<bool> allowed_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  double objective_ = 0.0;
  long iterations_ = 0;
};

}  // namespace detail

/// Solves the program with a fresh tableau. Infeasible and unbounded
/// instances are reported through the status, never as exceptions.
inline LpOutcome solve_lp(const LinearProgram& lp, const SimplexOptions& opts = {}) {
  lp.validate();
  detail::SimplexTableau tableau(lp, opts);
  LpOutcome out = tableau.run();
  assert(out.status != LpStatus::optimal ||
         max_constraint_violation(lp, out.solution) <= 10 * opts.feas_tol);
  return out;
}

}  // namespace owakit
