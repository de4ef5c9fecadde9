#pragma once

// Fast internal consistency battery behind the CLI's hidden --seed-check
// flag: decomposition round trips, weight-matrix row sums, and the
// symmetry/equivalence relations between the two model formulations.
// Deterministic (fixed seed) and meant to finish well under a second.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "owakit/decomposition.hpp"
#include "owakit/minimax.hpp"

namespace owakit {

namespace detail {

inline std::vector<double> random_simplex_point(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> exp_dist(1.0);
  std::vector<double> w(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& x : w) {
    x = exp_dist(rng);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

}  // namespace detail

/// Runs the battery; returns human-readable failure descriptions (empty
/// means everything held).
inline std::vector<std::string> self_check() {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  // exact row sums of the weight matrix
  for (int n = 2; n <= 24; ++n) {
    for (int j = 1; j <= n; ++j) {
      Rational sum = 0;
      for (const auto& w : binomial_weight_row_exact(n, j)) sum += w;
      expect(sum == 1, "weight matrix row sum != 1 at n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
  }

  // decomposition round trip on random weight vectors
  std::mt19937_64 rng(0x0a11a5eedULL);
  for (int n = 2; n <= 12; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      const WeightVector w(detail::random_simplex_point(rng, n), kFeasTol);
      const auto back = alpha_to_weights(weights_to_alpha(w), kFeasTol);
      for (int i = 0; i < n; ++i)
        expect(std::abs(back[i] - w[i]) <= 1e-10,
               "round trip drift at n=" + std::to_string(n) + " rep=" + std::to_string(rep));
    }
  }

  // delta symmetry and weight/alpha model agreement at n=10
  for (int t = 0; t <= 10; ++t) {
    const OrnessLevel eta(t / 10.0);
    const OrnessLevel mirrored(1.0 - t / 10.0);
    const auto a = solve_minimax_disparity(10, eta, Method::weight_space);
    const auto b = solve_minimax_disparity(10, mirrored, Method::weight_space);
    const auto c = solve_minimax_disparity(10, eta, Method::alpha_space, 10);
    expect(std::abs(*a.delta - *b.delta) <= 1e-8, "delta symmetry broken at eta=" + std::to_string(eta.value()));
    expect(std::abs(*a.delta - *c.delta) <= 1e-8, "model equivalence broken at eta=" + std::to_string(eta.value()));
  }

  return failures;
}

}  // namespace owakit
