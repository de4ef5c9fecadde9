#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <optional>
#include <vector>

#include "owakit/minimax.hpp"

using namespace owakit;

namespace {

// Independent check for n=3: the two equality constraints leave one degree
// of freedom, so walk w_1 over a 1e-4 grid of the constrained simplex slice
// and take the best max-gap.
std::optional<double> grid_search_delta3(double eta, double step = 1e-4) {
  std::optional<double> best;
  const long steps = std::lround(1.0 / step);
  for (long t = 0; t <= steps; ++t) {
    const double w1 = static_cast<double>(t) * step;
    const double w3 = 2.0 * eta - 1.0 + w1;
    const double w2 = 1.0 - w1 - w3;
    if (w3 < -1e-12 || w3 > 1.0 + 1e-12 || w2 < -1e-12 || w2 > 1.0 + 1e-12) continue;
    const double d = std::max(std::abs(w1 - w2), std::abs(w2 - w3));
    if (!best || d < *best) best = d;
  }
  return best;
}

}  // namespace

TEST_CASE("weight model structure") {
  const auto lp = build_weight_model(10, OrnessLevel(0.3));
  CHECK(lp.num_vars == 11);
  CHECK(lp.equalities.size() == 2);
  CHECK(lp.inequalities.size() == 18);
  CHECK(lp.bounds[0].lower == 0.0);
  CHECK(lp.bounds[0].upper == 1.0);
  CHECK(lp.bounds[10].upper == kLpInfinity);
  CHECK_THROWS_AS(build_weight_model(1, OrnessLevel(0.3)), std::invalid_argument);
}

TEST_CASE("alpha model structure") {
  const int n = 10, k = 4;
  const auto lp = build_alpha_model(n, OrnessLevel(0.3), k);
  CHECK(lp.num_vars == k + 1);
  CHECK(lp.equalities.size() == 2);
  // 2(n-1) disparity rows + (n-1) feasibility rows + alpha_1 >= 0
  CHECK(lp.inequalities.size() == 2 * (n - 1) + (n - 1) + 1);
  CHECK(lp.bounds[0].lower == -kLpInfinity);  // coefficients are free
  CHECK(lp.bounds[k].lower == 0.0);           // delta is not
  CHECK_THROWS_AS(build_alpha_model(n, OrnessLevel(0.3), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_alpha_model(n, OrnessLevel(0.3), n + 1), std::invalid_argument);
  CHECK_THROWS_AS(build_alpha_model(n, OrnessLevel(1.5), 2), std::invalid_argument);
}

TEST_CASE("level 0.5 pins the arithmetic mean with zero gap") {
  for (Method m : {Method::weight_space, Method::alpha_space}) {
    const auto sol = solve_minimax_disparity(10, OrnessLevel(0.5), m);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(*sol.delta == Catch::Approx(0.0).margin(1e-9));
    for (int i = 0; i < 10; ++i) CHECK((*sol.weights)[i] == Catch::Approx(0.1).margin(1e-9));
    REQUIRE(sol.alpha);
    CHECK((*sol.alpha)[0] == Catch::Approx(1.0).margin(1e-6));
  }
}

TEST_CASE("endpoints force the extreme operators") {
  for (Method m : {Method::weight_space, Method::alpha_space}) {
    const auto bottom = solve_minimax_disparity(10, OrnessLevel(0.0), m);
    REQUIRE(bottom.status == LpStatus::optimal);
    CHECK(*bottom.delta == Catch::Approx(1.0).margin(1e-9));
    CHECK((*bottom.weights)[0] == Catch::Approx(1.0).margin(1e-9));

    const auto top = solve_minimax_disparity(10, OrnessLevel(1.0), m);
    REQUIRE(top.status == LpStatus::optimal);
    CHECK(*top.delta == Catch::Approx(1.0).margin(1e-9));
    CHECK((*top.weights)[9] == Catch::Approx(1.0).margin(1e-9));
  }
  const auto tiny = solve_minimax_disparity(3, OrnessLevel(0.0), Method::weight_space);
  REQUIRE(tiny.status == LpStatus::optimal);
  CHECK((*tiny.weights)[0] == Catch::Approx(1.0).margin(1e-9));
  CHECK(*tiny.delta == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("reference instances at n=10") {
  const auto a = solve_minimax_disparity(10, OrnessLevel(0.9), Method::weight_space);
  REQUIRE(a.status == LpStatus::optimal);
  CHECK(*a.delta == Catch::Approx(0.12).margin(0.005));

  const auto b = solve_minimax_disparity(10, OrnessLevel(0.6), Method::alpha_space, 2);
  REQUIRE(b.status == LpStatus::optimal);
  CHECK(*b.delta == Catch::Approx(0.01).margin(0.005));
  CHECK((*b.alpha)[0] == Catch::Approx(1.49).margin(0.01));
  CHECK((*b.alpha)[1] == Catch::Approx(-0.49).margin(0.01));

  const auto c = solve_minimax_disparity(10, OrnessLevel(0.7), Method::alpha_space, 2);
  REQUIRE(c.status == LpStatus::optimal);
  CHECK(*c.delta == Catch::Approx(0.02).margin(0.005));
  CHECK((*c.alpha)[0] == Catch::Approx(1.98).margin(0.01));
  CHECK((*c.alpha)[1] == Catch::Approx(-0.98).margin(0.01));

  // solutions advertise consistent measures
  CHECK(orness(*c.weights).value() == Catch::Approx(0.7).margin(1e-9));
  CHECK(disparity(*c.weights) == Catch::Approx(*c.delta).margin(1e-9));
  CHECK(check_alpha_feasibility(*c.alpha).feasible());
}

TEST_CASE("truncation below the representable level is infeasible, as data") {
  const auto one = solve_minimax_disparity(10, OrnessLevel(0.2), Method::alpha_space, 1);
  CHECK(one.status == LpStatus::infeasible);
  CHECK_FALSE(one.weights.has_value());
  CHECK_FALSE(one.delta.has_value());
  const auto two = solve_minimax_disparity(10, OrnessLevel(0.2), Method::alpha_space, 2);
  CHECK(two.status == LpStatus::infeasible);
}

TEST_CASE("k-curve at a hard orness level") {
  std::vector<int> ks;
  for (int k = 1; k <= 10; ++k) ks.push_back(k);
  const auto pts = kcurve(10, OrnessLevel(0.2), ks);
  REQUIRE(pts.size() == 10);
  CHECK(pts[0].status == LpStatus::infeasible);
  CHECK(pts[1].status == LpStatus::infeasible);
  std::optional<double> prev;
  for (int k = 3; k <= 10; ++k) {
    const auto& p = pts[static_cast<std::size_t>(k - 1)];
    REQUIRE(p.status == LpStatus::optimal);
    if (prev) CHECK(*p.delta <= *prev + 1e-10);  // larger k never hurts
    prev = p.delta;
  }
  CHECK(*pts[9].delta == Catch::Approx(0.04).margin(0.005));
}

TEST_CASE("feasibility is monotone in the truncation level") {
  std::vector<int> ks;
  for (int k = 1; k <= 10; ++k) ks.push_back(k);
  const auto pts = kcurve(10, OrnessLevel(0.1), ks);
  bool seen_feasible = false;
  std::optional<double> prev;
  for (const auto& p : pts) {
    if (p.status == LpStatus::optimal) {
      seen_feasible = true;
      if (prev) CHECK(*p.delta <= *prev + 1e-10);
      prev = p.delta;
    } else {
      CHECK_FALSE(seen_feasible);  // no infeasible level after a feasible one
    }
  }
  REQUIRE(seen_feasible);
  // at this level five coefficients are needed; the untruncated optimum is 0.12
  CHECK(pts[3].status == LpStatus::infeasible);
  CHECK(pts[4].status == LpStatus::optimal);
  CHECK(*pts[9].delta == Catch::Approx(0.12).margin(0.005));
}

TEST_CASE("k-curve at the central level is flat zero") {
  const auto pts = kcurve(10, OrnessLevel(0.5), {1, 3, 6, 10});
  for (const auto& p : pts) {
    REQUIRE(p.status == LpStatus::optimal);
    CHECK(*p.delta == Catch::Approx(0.0).margin(1e-9));
  }
}

TEST_CASE("full-truncation model matches the weight-space model") {
  for (int n : {3, 6, 10, 12}) {
    for (int t = 0; t <= 10; ++t) {
      const OrnessLevel eta(t / 10.0);
      const auto ws = solve_minimax_disparity(n, eta, Method::weight_space);
      const auto as = solve_minimax_disparity(n, eta, Method::alpha_space, n);
      REQUIRE(ws.status == LpStatus::optimal);
      REQUIRE(as.status == LpStatus::optimal);
      REQUIRE(std::abs(*ws.delta - *as.delta) <= 1e-8);
    }
  }
}

TEST_CASE("objective is symmetric under orness reversal") {
  for (int t = 0; t <= 10; ++t) {
    const auto lo = solve_minimax_disparity(10, OrnessLevel(t / 10.0), Method::weight_space);
    const auto hi = solve_minimax_disparity(10, OrnessLevel(1.0 - t / 10.0), Method::weight_space);
    REQUIRE(std::abs(*lo.delta - *hi.delta) <= 1e-8);
  }
}

TEST_CASE("grid-search certificate at n=3") {
  for (int t = 1; t <= 9; ++t) {
    const double eta = t / 10.0;
    const auto sol = solve_minimax_disparity(3, OrnessLevel(eta), Method::weight_space);
    REQUIRE(sol.status == LpStatus::optimal);
    const auto grid = grid_search_delta3(eta);
    REQUIRE(grid.has_value());
    REQUIRE(std::abs(*sol.delta - *grid) <= 2e-4);
  }
}

TEST_CASE("sweep preserves order and carries infeasible entries") {
  // at k=2 the levels 0.2 and 0.8 are genuinely infeasible (the implied
  // boundary weight turns negative); 0.5 and 0.7 are representable
  const std::vector<double> etas{0.5, 0.2, 0.7, 0.8};
  const auto sols = sweep(10, etas, Method::alpha_space, 2);
  REQUIRE(sols.size() == 4);
  CHECK(sols[0].eta == 0.5);
  CHECK(sols[0].status == LpStatus::optimal);
  CHECK(sols[1].status == LpStatus::infeasible);
  CHECK(sols[2].status == LpStatus::optimal);
  CHECK(sols[3].status == LpStatus::infeasible);
  CHECK(sweep(10, {}, Method::weight_space).empty());
}

TEST_CASE("weight-space solutions carry the decomposition for moderate n") {
  const auto sol = solve_minimax_disparity(12, OrnessLevel(0.35), Method::weight_space);
  REQUIRE(sol.status == LpStatus::optimal);
  REQUIRE(sol.alpha.has_value());
  const auto image = alpha_to_weights(*sol.alpha, kFeasTol);
  for (int i = 0; i < 12; ++i) CHECK(image[i] == Catch::Approx((*sol.weights)[i]).margin(1e-9));
  CHECK(sol.k == 12);
}

TEST_CASE("explicit truncation is rejected for the weight-space method") {
  CHECK_THROWS_AS(solve_minimax_disparity(10, OrnessLevel(0.4), Method::weight_space, 5),
                  std::invalid_argument);
  CHECK_NOTHROW(solve_minimax_disparity(10, OrnessLevel(0.4), Method::weight_space, 10));
}
