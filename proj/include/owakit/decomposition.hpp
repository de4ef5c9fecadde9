#pragma once

// The binomial decomposition A = sum_j alpha_j C_j: bidirectional transform
// between OWA weights and alpha coefficients, the alpha-space orness formula,
// and the feasibility conditions on alpha.
//
// The linear system tying the two representations is
//   w_i = sum_{j=1}^{n-i+1} w_ji alpha_j,          i = 1..n
// which is anti-triangular with nonzero anti-diagonal pivots w_{m,n-m+1} =
// 1/C(n,m); solving from the last equation upward needs no pivoting and
// starts at alpha_1 = n w_n.
//
// An alpha vector encodes a genuine OWA exactly when
//   (c1)      alpha_1 = 1 - sum_{j>=2} alpha_j >= 0
//   (c_i)     sum_{j=2}^n [1 - n C(i-1,j-1)/C(n,j)] alpha_j <= 1,   i = 2..n
// together with sum_j alpha_j = 1. Under the normalization, condition c_i is
// algebraically n w_{n-i+1} >= 0 and c1 is n w_n >= 0, so the set coincides
// with the boundary and monotonicity constraints on the weights; the
// feasibility report evaluates both forms and cross-checks them.

#include <cmath>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "owakit/binomial.hpp"
#include "owakit/owa.hpp"

namespace owakit {

/// Coefficients alpha_1..alpha_n of the binomial decomposition. Holds any
/// real coefficients; whether they encode a valid OWA is a property checked
/// by check_alpha_feasibility / enforced by alpha_to_weights.
///
/// Transforms that computed the coefficients exactly attach the rational
/// originals; the coefficients grow like C(n,j), so past moderate n the
/// doubles alone cannot take a round trip back to the weights.
class AlphaVector {
 public:
  explicit AlphaVector(std::vector<double> alpha) : a_(std::move(alpha)) {
    if (a_.size() < 2)
      throw std::invalid_argument("AlphaVector: dimension must be >= 2, got " + std::to_string(a_.size()));
    for (std::size_t j = 0; j < a_.size(); ++j)
      if (!std::isfinite(a_[j]))
        throw std::invalid_argument("AlphaVector: alpha_" + std::to_string(j + 1) + " is not finite");
  }

  AlphaVector(std::vector<double> alpha, std::vector<Rational> exact) : AlphaVector(std::move(alpha)) {
    if (exact.size() != a_.size())
      throw std::invalid_argument("AlphaVector: exact payload length mismatch");
    exact_ = std::make_shared<const std::vector<Rational>>(std::move(exact));
  }

  int dim() const { return static_cast<int>(a_.size()); }
  double operator[](int j) const { return a_[static_cast<std::size_t>(j)]; }  // 0-based
  const std::vector<double>& values() const { return a_; }

  /// Exact coefficients when this vector came out of an exact transform,
  /// null otherwise.
  const std::vector<Rational>* exact_coefficients() const { return exact_.get(); }

 private:
  std::vector<double> a_;
  std::shared_ptr<const std::vector<Rational>> exact_;
};

// ---------------------------------------------------------------------------
// Raw linear maps (no feasibility checks). Exact arithmetic backs the double
// versions for n <= kExactWeightLimit; the plain recurrences are used beyond,
// where alpha magnitudes grow like C(n,j) and exactness is out of reach
// anyway.
// ---------------------------------------------------------------------------

/// w = M^T alpha with M the binomial weight matrix, exact.
inline std::vector<Rational> alpha_to_weights_exact(std::span<const Rational> alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 2) throw std::invalid_argument("alpha_to_weights_exact: dimension must be >= 2");
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  for (int j = 1; j <= n; ++j) {
    const Rational& aj = alpha[static_cast<std::size_t>(j - 1)];
    if (aj == 0) continue;  // k-truncated vectors skip most rows
    const auto row = binomial_weight_row_exact(n, j);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] += aj * row[static_cast<std::size_t>(i)];
  }
  return w;
}

/// Back-substitution on the anti-triangular system, exact:
/// alpha_m = C(n,m) (w_{n-m+1} - sum_{j<m} w_{j,n-m+1} alpha_j).
inline std::vector<Rational> weights_to_alpha_exact(std::span<const Rational> w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) throw std::invalid_argument("weights_to_alpha_exact: dimension must be >= 2");
  std::vector<Rational> alpha(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    const int i = n - m + 1;
    const auto col = binomial_weight_col_exact(n, i);  // entries j = 1..n of column i
    Rational acc = w[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j < m; ++j) acc -= col[static_cast<std::size_t>(j - 1)] * alpha[static_cast<std::size_t>(j - 1)];
    alpha[static_cast<std::size_t>(m - 1)] = acc / col[static_cast<std::size_t>(m - 1)];  // pivot 1/C(n,m)
  }
  return alpha;
}

namespace detail {

inline std::vector<Rational> to_rational(std::span<const double> v) {
  std::vector<Rational> r(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) r[t] = Rational(v[t]);  // doubles convert exactly
  return r;
}

inline std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> d(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) d[t] = v[t].convert_to<double>();
  return d;
}

}  // namespace detail

/// Raw weights of an alpha vector (may land outside [0,1] when alpha is
/// infeasible); exact-backed for n <= 64.
inline std::vector<double> alpha_to_weights_raw(std::span<const double> alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 2) throw std::invalid_argument("alpha_to_weights_raw: dimension must be >= 2");
  if (n <= kExactWeightLimit) return detail::to_double(alpha_to_weights_exact(detail::to_rational(alpha)));
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j <= n; ++j) {
    const double aj = alpha[static_cast<std::size_t>(j - 1)];
    if (aj == 0.0) continue;
    const auto row = binomial_weight_row(n, j);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] += aj * row[static_cast<std::size_t>(i)];
  }
  return w;
}

/// Raw back-substitution; exact-backed for n <= 64.
inline std::vector<double> weights_to_alpha_raw(std::span<const double> w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) throw std::invalid_argument("weights_to_alpha_raw: dimension must be >= 2");
  if (n <= kExactWeightLimit) return detail::to_double(weights_to_alpha_exact(detail::to_rational(w)));
  std::vector<double> alpha(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    const int i = n - m + 1;
    const auto col = binomial_weight_col(n, i);
    double acc = w[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j < m; ++j) acc -= col[static_cast<std::size_t>(j - 1)] * alpha[static_cast<std::size_t>(j - 1)];
    alpha[static_cast<std::size_t>(m - 1)] = acc / col[static_cast<std::size_t>(m - 1)];
  }
  return alpha;
}

// ---------------------------------------------------------------------------
// Orness in alpha space
// ---------------------------------------------------------------------------

/// Orness of the binomial OWA C_j: (n-j)/((n-1)(j+1)), exact.
inline Rational binomial_orness_exact(int n, int j) {
  detail::check_weight_indices(n, j, 1);
  return Rational(BigInt(n - j), BigInt(n - 1) * (j + 1));
}

inline double binomial_orness(int n, int j) { return binomial_orness_exact(n, j).convert_to<double>(); }

/// orness(A) = sum_j alpha_j (n-j)/((n-1)(j+1)); linear in alpha because the
/// orness measure is linear in the weights.
inline OrnessLevel orness_from_alpha(const AlphaVector& a) {
  const int n = a.dim();
  double acc = 0.0;
  for (int j = 1; j <= n; ++j) acc += a[j - 1] * binomial_orness(n, j);
  return OrnessLevel(std::min(1.0, std::max(0.0, acc)));
}

// ---------------------------------------------------------------------------
// Feasibility
// ---------------------------------------------------------------------------

/// Per-condition diagnosis of an alpha vector. Condition indices: 0 is the
/// normalization sum_j alpha_j = 1, 1 is alpha_1 >= 0, and i in 2..n is the
/// i-th inequality of the feasibility set.
struct AlphaFeasibilityReport {
  double normalization_residual = 0.0;   // sum(alpha) - 1
  std::vector<double> condition_slacks;  // [0]: alpha_1 condition; [i-1]: condition i
  std::vector<double> weights;           // raw linear-map image of alpha
  bool conditions_ok = false;            // all slacks >= -tol and |residual| <= tol
  bool weights_ok = false;               // weights in [-tol, 1+tol], summing to 1 +- tol
  int first_violated = -1;               // -1 none; 0 normalization; else condition index

  bool feasible() const { return conditions_ok; }
};

/// Evaluates the alpha feasibility conditions and, independently, the
/// direct boundary/monotonicity test on the mapped weights. The two verdicts
/// agree up to tolerance blur at the boundary; a structural mismatch between
/// the condition slacks and the identity slack_i = n w_{n-i+1} - (s-1) is a
/// transcription error and throws.
inline AlphaFeasibilityReport check_alpha_feasibility(const AlphaVector& a, double tol = kFeasTol) {
  const int n = a.dim();
  AlphaFeasibilityReport rep;
  rep.condition_slacks.assign(static_cast<std::size_t>(n), 0.0);
  rep.weights = alpha_to_weights_raw(a.values());

  double s = 0.0, abs_scale = 0.0;
  for (int j = 0; j < n; ++j) {
    s += a[j];
    abs_scale += std::abs(a[j]);
  }
  rep.normalization_residual = s - 1.0;

  // condition 1: alpha_1 = 1 - sum_{j>=2} alpha_j >= 0, evaluated as written
  double tail = 0.0;
  for (int j = 2; j <= n; ++j) tail += a[j - 1];
  rep.condition_slacks[0] = 1.0 - tail;

  // conditions i = 2..n: slack_i = 1 - sum_{j>=2} [1 - n w_{j,n-i+1}] alpha_j
  for (int i = 2; i <= n; ++i) {
    const int ip = n - i + 1;
    const auto col = binomial_weight_col(n, ip);
    double lhs = 0.0;
    for (int j = 2; j <= n; ++j)
      lhs += (1.0 - static_cast<double>(n) * col[static_cast<std::size_t>(j - 1)]) * a[j - 1];
    rep.condition_slacks[static_cast<std::size_t>(i - 1)] = 1.0 - lhs;
  }

  // cross-check against the weight-space identity; this guards the index
  // direction C(i-1,j-1) vs C(n-i,j-1) in the condition coefficients
  const double consistency_tol = 1e-9 * static_cast<double>(n) * (1.0 + abs_scale);
  for (int i = 1; i <= n; ++i) {
    const double expected =
        static_cast<double>(n) * rep.weights[static_cast<std::size_t>(n - i)] - (s - 1.0);
    const double got = rep.condition_slacks[static_cast<std::size_t>(i - 1)];
    if (std::abs(expected - got) > consistency_tol)
      throw std::logic_error("check_alpha_feasibility: condition " + std::to_string(i) +
                             " slack " + std::to_string(got) + " disagrees with weight-space value " +
                             std::to_string(expected));
  }

  rep.conditions_ok = std::abs(rep.normalization_residual) <= tol;
  if (!rep.conditions_ok) rep.first_violated = 0;
  for (int i = 1; i <= n && rep.first_violated < 0; ++i) {
    if (rep.condition_slacks[static_cast<std::size_t>(i - 1)] < -tol) {
      rep.conditions_ok = false;
      rep.first_violated = i;
    }
  }

  double wsum = 0.0;
  bool in_box = true;
  for (double wi : rep.weights) {
    wsum += wi;
    in_box = in_box && wi >= -tol && wi <= 1.0 + tol;
  }
  rep.weights_ok = in_box && std::abs(wsum - 1.0) <= tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Checked transforms
// ---------------------------------------------------------------------------

/// Weights of a feasible alpha vector. Rejects alphas violating the
/// feasibility conditions beyond tol, naming the first violated condition.
/// Vectors carrying exact coefficients are mapped and validated in rational
/// arithmetic.
inline WeightVector alpha_to_weights(const AlphaVector& a, double tol = kFeasTol) {
  if (const auto* exact = a.exact_coefficients()) {
    const int n = a.dim();
    const auto image = alpha_to_weights_exact(*exact);
    const Rational rtol(tol);
    Rational sum = 0;
    for (int i = 0; i < n; ++i) {
      const Rational& wi = image[static_cast<std::size_t>(i)];
      sum += wi;
      if (wi < -rtol || wi > 1 + rtol)
        throw std::invalid_argument("alpha_to_weights: infeasible alpha, condition " + std::to_string(n - i) +
                                    " violated (weight " + std::to_string(i + 1) + " = " +
                                    std::to_string(wi.convert_to<double>()) + ")");
    }
    if (boost::multiprecision::abs(sum - 1) > rtol)
      throw std::invalid_argument("alpha_to_weights: coefficients sum to " +
                                  std::to_string(sum.convert_to<double>()) + ", expected 1");
    auto w = detail::to_double(image);
    for (double& wi : w) wi = std::min(1.0, std::max(0.0, wi));
    return WeightVector(std::move(w), tol);
  }
  auto rep = check_alpha_feasibility(a, tol);
  if (!rep.feasible()) {
    if (rep.first_violated == 0)
      throw std::invalid_argument("alpha_to_weights: coefficients sum to " +
                                  std::to_string(1.0 + rep.normalization_residual) + ", expected 1");
    throw std::invalid_argument(
        "alpha_to_weights: infeasible alpha, condition " + std::to_string(rep.first_violated) +
        " violated (slack " +
        std::to_string(rep.condition_slacks[static_cast<std::size_t>(rep.first_violated - 1)]) + ")");
  }
  // feasible alphas map into the box up to tolerance; clip the noise so the
  // vector constructor sees clean values
  for (double& wi : rep.weights) wi = std::min(1.0, std::max(0.0, wi));
  return WeightVector(std::move(rep.weights), tol);
}

/// Unique alpha decomposition of an OWA weight vector (always exists: the
/// system is full-rank anti-triangular). Computes exactly when the dimension
/// allows it and keeps the rational coefficients alongside the doubles.
inline AlphaVector weights_to_alpha(const WeightVector& w) {
  if (w.dim() <= kExactWeightLimit) {
    auto exact = weights_to_alpha_exact(detail::to_rational(w.values()));
    auto doubles = detail::to_double(exact);
    return AlphaVector(std::move(doubles), std::move(exact));
  }
  return AlphaVector(weights_to_alpha_raw(w.values()));
}

}  // namespace owakit
