#pragma once

// OWA weight vectors, their evaluation A(x) = sum_i w_i x_(i) over the
// increasing reordering of x, and the two characterizing measures:
//   orness(w)    = (1/(n-1)) sum_i (i-1) w_i        in [0, 1]
//   disparity(w) = max_i |w_i - w_{i+1}|            in [0, 1]

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "owakit/binomial.hpp"

namespace owakit {

// Single global feasibility tolerance for weight vectors recovered from
// solver output; LP vertices carry rounding noise at this scale.
inline constexpr double kFeasTol = 1e-9;
// Tolerance for weights supplied directly by the user (decimal parsing slack).
inline constexpr double kParseTol = 1e-12;

/// Orness level in [0, 1]; 0 is the minimum operator, 1 the maximum.
class OrnessLevel {
 public:
  explicit OrnessLevel(double value) : value_(value) {
    if (!(value >= -kParseTol && value <= 1.0 + kParseTol))
      throw std::invalid_argument("orness must lie in [0, 1], got " + std::to_string(value));
    value_ = std::min(1.0, std::max(0.0, value_));
  }
  double value() const { return value_; }

 private:
  double value_;
};

/// An OWA weighting vector: n >= 2 entries in [0, 1] summing to one,
/// validated at construction within the given tolerance.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w, double tol = kParseTol) : w_(std::move(w)) {
    if (w_.size() < 2)
      throw std::invalid_argument("WeightVector: dimension must be >= 2, got " + std::to_string(w_.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const double wi = w_[i];
      if (!std::isfinite(wi) || wi < -tol || wi > 1.0 + tol)
        throw std::invalid_argument("WeightVector: w_" + std::to_string(i + 1) + " = " +
                                    std::to_string(wi) + " outside [0, 1]");
      sum += wi;
    }
    if (std::abs(sum - 1.0) > tol)
      throw std::invalid_argument("WeightVector: weights sum to " + std::to_string(sum) + ", expected 1");
  }

  int dim() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<double>& values() const { return w_; }

  /// (w_n, ..., w_1); reversal flips orness and preserves disparity.
  WeightVector reversed() const {
    std::vector<double> r(w_.rbegin(), w_.rend());
    return WeightVector(std::move(r), kFeasTol);
  }

 private:
  std::vector<double> w_;
};

namespace detail {

inline std::vector<double> sorted_increasing(std::span<const double> x) {
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// A(x) = sum_i w_i x_(i). The result lies in [min x, max x].
inline double evaluate_owa(const WeightVector& w, std::span<const double> x) {
  if (static_cast<int>(x.size()) != w.dim())
    throw std::invalid_argument("evaluate_owa: input length " + std::to_string(x.size()) +
                                " does not match dimension " + std::to_string(w.dim()));
  const auto s = detail::sorted_increasing(x);
  double acc = 0.0;
  for (int i = 0; i < w.dim(); ++i) acc += w[i] * s[static_cast<std::size_t>(i)];
  return acc;
}

inline OrnessLevel orness(const WeightVector& w) {
  const int n = w.dim();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += static_cast<double>(i) * w[i];
  acc /= static_cast<double>(n - 1);
  // valid weights give a value in [0,1] up to rounding; clamp the noise
  return OrnessLevel(std::min(1.0, std::max(0.0, acc)));
}

inline double disparity(const WeightVector& w) {
  double worst = 0.0;
  for (int i = 0; i + 1 < w.dim(); ++i) worst = std::max(worst, std::abs(w[i] - w[i + 1]));
  return worst;
}

/// C_j(x) = sum_i w_ji x_(i), the binomial OWA of level j.
/// C_1 is the arithmetic mean and C_n the minimum.
inline double evaluate_binomial_owa(int n, int j, std::span<const double> x) {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("evaluate_binomial_owa: input length " + std::to_string(x.size()) +
                                " does not match n=" + std::to_string(n));
  const auto row = binomial_weight_row(n, j);
  const auto s = detail::sorted_increasing(x);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += row[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
  return acc;
}

}  // namespace owakit
