#pragma once

// The two minimax disparity formulations and their orchestration.
//
// Weight space: minimize the largest absolute difference delta between
// adjacent weights subject to normalization, a prescribed orness, and the
// [0,1] box:
//   min delta   s.t.  sum w_i = 1,  (1/(n-1)) sum (i-1) w_i = eta,
//                     |w_i - w_{i+1}| <= delta,  0 <= w_i <= 1.
//
// Alpha space: the same program re-expressed over the binomial-decomposition
// coefficients, truncated at the k-additive level (alpha_{k+1..n} = 0). The
// weights become linear images sum_j w_ji alpha_j and the box constraints
// become the alpha feasibility conditions. Coefficients are free in sign;
// for central orness levels a handful of them reconstruct the entire weight
// vector, which is the point of the truncation.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "owakit/decomposition.hpp"
#include "owakit/owa.hpp"
#include "owakit/simplex.hpp"

namespace owakit {

enum class Method { weight_space, alpha_space };

inline const char* to_string(Method m) {
  return m == Method::weight_space ? "weights" : "alpha";
}

/// Outcome of one minimax disparity solve. Infeasibility is a result, not an
/// error: truncated alpha models genuinely have empty feasible sets for some
/// (eta, k). For the weight-space method alpha is populated only for n <= 64,
/// where the decomposition is numerically meaningful (coefficients grow like
/// C(n,j), far past double precision for large n).
struct DisparitySolution {
  int n = 0;
  double eta = 0.0;
  Method method = Method::weight_space;
  int k = 0;  // truncation level; n for the weight-space method
  LpStatus status = LpStatus::infeasible;
  std::optional<WeightVector> weights;
  std::optional<AlphaVector> alpha;
  std::optional<double> delta;
  long lp_iterations = 0;
};

namespace detail {

inline void check_model_args(int n, int k) {
  if (n < 2) throw std::invalid_argument("minimax disparity: n must be >= 2, got " + std::to_string(n));
  if (k < 1 || k > n)
    throw std::invalid_argument("minimax disparity: k must lie in 1.." + std::to_string(n) + ", got " +
                                std::to_string(k));
}

}  // namespace detail

/// LP of the weight-space model over variables (w_1..w_n, delta).
inline LinearProgram build_weight_model(int n, OrnessLevel eta) {
  detail::check_model_args(n, 1);
  LinearProgram lp(n + 1);
  const int d = n;  // delta column
  lp.objective[static_cast<std::size_t>(d)] = 1.0;

  std::vector<double> row(static_cast<std::size_t>(n + 1), 0.0);
  std::fill(row.begin(), row.begin() + n, 1.0);
  lp.add_equality(row, 1.0);

  std::fill(row.begin(), row.end(), 0.0);
  for (int i = 1; i <= n; ++i)
    row[static_cast<std::size_t>(i - 1)] = static_cast<double>(i - 1) / static_cast<double>(n - 1);
  lp.add_equality(row, eta.value());

  for (int i = 0; i + 1 < n; ++i) {
    std::fill(row.begin(), row.end(), 0.0);
    row[static_cast<std::size_t>(i)] = 1.0;
    row[static_cast<std::size_t>(i + 1)] = -1.0;
    row[static_cast<std::size_t>(d)] = -1.0;
    lp.add_inequality(row, 0.0);  //  w_i - w_{i+1} <= delta
    row[static_cast<std::size_t>(i)] = -1.0;
    row[static_cast<std::size_t>(i + 1)] = 1.0;
    lp.add_inequality(row, 0.0);  // -(w_i - w_{i+1}) <= delta
  }

  for (int i = 0; i < n; ++i) lp.set_bounds(i, 0.0, 1.0);
  lp.set_bounds(d, 0.0, kLpInfinity);
  return lp;
}

/// LP of the alpha-space model over variables (alpha_1..alpha_k, delta).
/// Carries the orness constraint through the per-level orness values
/// (n-j)/((n-1)(j+1)), the 2(n-1) disparity rows expressed through the
/// binomial weights, and the full alpha feasibility set (the n-1 inequality
/// conditions plus alpha_1 >= 0, jointly the boundary and monotonicity
/// constraints on the implied weights).
inline LinearProgram build_alpha_model(int n, OrnessLevel eta, int k) {
  detail::check_model_args(n, k);
  LinearProgram lp(k + 1);
  const int d = k;  // delta column
  lp.objective[static_cast<std::size_t>(d)] = 1.0;

  std::vector<std::vector<double>> wrow;  // rows 1..k of the weight matrix
  wrow.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) wrow.push_back(binomial_weight_row(n, j));

  std::vector<double> row(static_cast<std::size_t>(k + 1), 0.0);
  std::fill(row.begin(), row.begin() + k, 1.0);
  lp.add_equality(row, 1.0);

  std::fill(row.begin(), row.end(), 0.0);
  for (int j = 1; j <= k; ++j) row[static_cast<std::size_t>(j - 1)] = binomial_orness(n, j);
  lp.add_equality(row, eta.value());

  for (int i = 0; i + 1 < n; ++i) {
    std::fill(row.begin(), row.end(), 0.0);
    for (int j = 0; j < k; ++j)
      row[static_cast<std::size_t>(j)] =
          wrow[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -
          wrow[static_cast<std::size_t>(j)][static_cast<std::size_t>(i + 1)];
    row[static_cast<std::size_t>(d)] = -1.0;
    lp.add_inequality(row, 0.0);
    for (int j = 0; j < k; ++j) row[static_cast<std::size_t>(j)] = -row[static_cast<std::size_t>(j)];
    lp.add_inequality(row, 0.0);
  }

  // feasibility conditions i = 2..n: sum_{j>=2} [1 - n w_{j,n-i+1}] alpha_j <= 1
  for (int i = 2; i <= n; ++i) {
    const int ip = n - i + 1;
    std::fill(row.begin(), row.end(), 0.0);
    for (int j = 2; j <= k; ++j)
      row[static_cast<std::size_t>(j - 1)] =
          1.0 - static_cast<double>(n) * wrow[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(ip - 1)];
    lp.add_inequality(row, 1.0);
  }
  // ... and alpha_1 >= 0, the remaining condition of the set
  std::fill(row.begin(), row.end(), 0.0);
  row[0] = -1.0;
  lp.add_inequality(row, 0.0);

  for (int j = 0; j < k; ++j) lp.set_bounds(j, -kLpInfinity, kLpInfinity);
  lp.set_bounds(d, 0.0, kLpInfinity);
  return lp;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("minimax disparity: solution failed internal validation: " + what);
}

inline DisparitySolution finish_solution(DisparitySolution sol, const LpOutcome& out) {
  sol.lp_iterations = out.iterations;
  if (out.status == LpStatus::infeasible) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  require(out.status == LpStatus::optimal, "model LP reported unbounded");
  sol.status = LpStatus::optimal;

  const int n = sol.n;
  if (sol.method == Method::weight_space) {
    std::vector<double> w(out.solution.begin(), out.solution.begin() + n);
    sol.delta = out.solution[static_cast<std::size_t>(n)];
    sol.weights = WeightVector(std::move(w), kFeasTol);
    if (n <= kExactWeightLimit) sol.alpha = weights_to_alpha(*sol.weights);
  } else {
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < sol.k; ++j) a[static_cast<std::size_t>(j)] = out.solution[static_cast<std::size_t>(j)];
    sol.delta = out.solution[static_cast<std::size_t>(sol.k)];
    sol.alpha = AlphaVector(std::move(a));
    sol.weights = alpha_to_weights(*sol.alpha, kFeasTol);
  }

  // cross-validate the advertised invariants before handing the result out
  const WeightVector& w = *sol.weights;
  require(std::abs(orness(w).value() - sol.eta) <= kFeasTol * static_cast<double>(n),
          "orness(weights) != eta at eta=" + std::to_string(sol.eta));
  require(std::abs(disparity(w) - *sol.delta) <= kFeasTol * static_cast<double>(n),
          "disparity(weights) != delta at eta=" + std::to_string(sol.eta));
  if (sol.alpha) {
    double alpha_scale = 0.0;
    for (double aj : sol.alpha->values()) alpha_scale += std::abs(aj);
    // the float evaluation of the conditions carries noise ~ n*scale*eps;
    // past this scale only the exact transform that produced alpha is
    // meaningful, so skip the redundant re-check
    if (alpha_scale <= 1e6)
      require(check_alpha_feasibility(*sol.alpha, kFeasTol).feasible(),
              "alpha fails the feasibility conditions at eta=" + std::to_string(sol.eta));
    if (sol.method == Method::alpha_space) {
      // the weights are the transform image by construction; re-check the
      // map cheaply against the raw linear form
      const auto raw = alpha_to_weights_raw(sol.alpha->values());
      double diff = 0.0;
      for (int i = 0; i < n; ++i) diff = std::max(diff, std::abs(raw[static_cast<std::size_t>(i)] - w[i]));
      require(diff <= kFeasTol, "weights drifted from the alpha image");
    }
  }
  return sol;
}

}  // namespace detail

/// Solves one (n, eta, method, k) instance. k defaults to n (no truncation);
/// the weight-space method ignores truncation and always optimizes over the
/// full weight vector.
inline DisparitySolution solve_minimax_disparity(int n, OrnessLevel eta, Method method,
                                                 std::optional<int> k = std::nullopt,
                                                 const SimplexOptions& opts = {}) {
  const int klevel = k.value_or(n);
  detail::check_model_args(n, klevel);
  if (method == Method::weight_space && k.has_value() && *k != n)
    throw std::invalid_argument("minimax disparity: the weight-space method does not truncate; leave k unset");

  DisparitySolution sol;
  sol.n = n;
  sol.eta = eta.value();
  sol.method = method;
  sol.k = method == Method::weight_space ? n : klevel;

  const LinearProgram lp = method == Method::weight_space ? build_weight_model(n, eta)
                                                          : build_alpha_model(n, eta, klevel);
  return detail::finish_solution(std::move(sol), solve_lp(lp, opts));
}

struct KCurvePoint {
  int k = 0;
  LpStatus status = LpStatus::infeasible;
  std::optional<double> delta;
};

/// Objective value of the alpha-space model across truncation levels.
/// Feasibility is monotone in k and delta never increases as k grows.
inline std::vector<KCurvePoint> kcurve(int n, OrnessLevel eta, const std::vector<int>& k_values,
                                       const SimplexOptions& opts = {}) {
  std::vector<KCurvePoint> points;
  points.reserve(k_values.size());
  for (int k : k_values) {
    const auto sol = solve_minimax_disparity(n, eta, Method::alpha_space, k, opts);
    points.push_back({k, sol.status, sol.delta});
  }
  return points;
}

/// One solution per requested orness level, in input order. Infeasible
/// entries are carried as results; the sweep never aborts on them.
inline std::vector<DisparitySolution> sweep(int n, const std::vector<double>& eta_values, Method method,
                                            std::optional<int> k = std::nullopt,
                                            const SimplexOptions& opts = {}) {
  std::vector<DisparitySolution> out;
  out.reserve(eta_values.size());
  for (double eta : eta_values) out.push_back(solve_minimax_disparity(n, OrnessLevel(eta), method, k, opts));
  return out;
}

}  // namespace owakit
