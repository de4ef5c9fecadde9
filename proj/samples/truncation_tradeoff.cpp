// Scans the k-additive levels for a fixed orness and prints the objective,
// showing how few coefficients already reach the untruncated optimum.

#include <cstdio>
#include <numeric>
#include <vector>

#include "owakit/owakit.hpp"

int main() {
  using namespace owakit;

  const int n = 10;
  std::vector<int> levels(static_cast<std::size_t>(n));
  std::iota(levels.begin(), levels.end(), 1);

  const auto points = kcurve(n, OrnessLevel(0.2), levels);
  for (const auto& p : points) {
    if (p.status == LpStatus::optimal)
      std::printf("k=%2d  delta=%.6f\n", p.k, *p.delta);
    else
      std::printf("k=%2d  %s\n", p.k, to_string(p.status));
  }
  return 0;
}
