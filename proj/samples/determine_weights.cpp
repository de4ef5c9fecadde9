// Minimal library walkthrough: solve a minimax disparity instance in alpha
// space, recover the weights, and evaluate the resulting OWA on an input.

#include <cstdio>

#include "owakit/owakit.hpp"

int main() {
  using namespace owakit;

  const int n = 10;
  const auto sol = solve_minimax_disparity(n, OrnessLevel(0.7), Method::alpha_space, 2);
  if (sol.status != LpStatus::optimal) {
    std::puts("no feasible weights at this truncation level");
    return 1;
  }

  std::printf("delta = %.6f\n", *sol.delta);
  std::printf("alpha = (%.6f, %.6f)\n", (*sol.alpha)[0], (*sol.alpha)[1]);
  std::printf("weights =");
  for (double w : sol.weights->values()) std::printf(" %.4f", w);
  std::printf("\n");

  const std::vector<double> scores{6.0, 9.5, 7.2, 8.8, 5.1, 7.9, 6.4, 9.0, 8.2, 7.5};
  std::printf("aggregated score = %.4f\n", evaluate_owa(*sol.weights, scores));
  std::printf("orness = %.4f  disparity = %.4f\n", orness(*sol.weights).value(), disparity(*sol.weights));
  return 0;
}
