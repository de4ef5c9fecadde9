#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "owakit/simplex.hpp"

using namespace owakit;

TEST_CASE("single lower bound") {
  LinearProgram lp(1);
  lp.objective = {1.0};
  lp.set_bounds(0, 1.0, kLpInfinity);
  const auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.solution[0] == Catch::Approx(1.0).margin(1e-9));
  CHECK(out.objective_value == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("contradictory constraints are infeasible") {
  LinearProgram lp(1);
  lp.add_inequality({1.0}, 0.0);    //  x <= 0
  lp.add_inequality({-1.0}, -1.0);  //  x >= 1
  lp.set_bounds(0, -kLpInfinity, kLpInfinity);
  CHECK(solve_lp(lp).status == LpStatus::infeasible);
}

TEST_CASE("triangle vertex optimum") {
  // min -x-y over the standard simplex: vertices (0,0), (1,0), (0,1),
  // best objective -1
  LinearProgram lp(2);
  lp.objective = {-1.0, -1.0};
  lp.add_inequality({1.0, 1.0}, 1.0);
  lp.set_bounds(0, 0.0, kLpInfinity);
  lp.set_bounds(1, 0.0, kLpInfinity);
  const auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.objective_value == Catch::Approx(-1.0).margin(1e-9));
  CHECK(out.solution[0] + out.solution[1] == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("unbounded ray") {
  LinearProgram lp(1);
  lp.objective = {-1.0};
  lp.set_bounds(0, 0.0, kLpInfinity);
  CHECK(solve_lp(lp).status == LpStatus::unbounded);
}

TEST_CASE("malformed programs are rejected before solving") {
  LinearProgram lp(2);
  lp.add_inequality({1.0}, 0.0);  // wrong width
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);

  LinearProgram lp2(2);
  lp2.set_bounds(0, 2.0, 1.0);  // inverted bounds
  CHECK_THROWS_AS(solve_lp(lp2), std::invalid_argument);

  LinearProgram lp3(1);
  lp3.objective = {std::nan("")};
  CHECK_THROWS_AS(solve_lp(lp3), std::invalid_argument);

  CHECK_THROWS_AS(LinearProgram(0), std::invalid_argument);
}

TEST_CASE("equalities with free variables") {
  // x + y = 3, x - y = 1 has the unique solution (2, 1)
  LinearProgram lp(2);
  lp.objective = {1.0, 2.0};
  lp.add_equality({1.0, 1.0}, 3.0);
  lp.add_equality({1.0, -1.0}, 1.0);
  const auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.solution[0] == Catch::Approx(2.0).margin(1e-9));
  CHECK(out.solution[1] == Catch::Approx(1.0).margin(1e-9));
  CHECK(out.objective_value == Catch::Approx(4.0).margin(1e-9));
}

TEST_CASE("upper-bounded and range variables") {
  LinearProgram lp(1);
  lp.objective = {-1.0};
  lp.set_bounds(0, -kLpInfinity, 5.0);
  const auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.solution[0] == Catch::Approx(5.0).margin(1e-9));

  LinearProgram lp2(1);
  lp2.objective = {-1.0};
  lp2.set_bounds(0, 2.0, 3.0);
  const auto out2 = solve_lp(lp2);
  REQUIRE(out2.status == LpStatus::optimal);
  CHECK(out2.solution[0] == Catch::Approx(3.0).margin(1e-9));
}

TEST_CASE("standard-form conversion corners") {
  SECTION("negative right-hand side forces an artificial start") {
    LinearProgram lp(1);
    lp.objective = {1.0};
    lp.add_inequality({-1.0}, -3.0);  // x >= 3
    lp.set_bounds(0, 0.0, kLpInfinity);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::optimal);
    CHECK(out.solution[0] == Catch::Approx(3.0).margin(1e-9));
  }
  SECTION("range variables on a negative equality") {
    LinearProgram lp(2);
    lp.objective = {1.0, -1.0};
    lp.add_equality({1.0, 1.0}, -5.0);
    lp.set_bounds(0, -10.0, 10.0);
    lp.set_bounds(1, -10.0, 10.0);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::optimal);
    CHECK(out.objective_value == Catch::Approx(-15.0).margin(1e-9));
    CHECK(out.solution[0] == Catch::Approx(-10.0).margin(1e-9));
    CHECK(out.solution[1] == Catch::Approx(5.0).margin(1e-9));
  }
  SECTION("a variable fixed by coincident bounds") {
    LinearProgram lp(2);
    lp.objective = {1.0, 1.0};
    lp.add_equality({1.0, 1.0}, 4.0);
    lp.set_bounds(0, 2.5, 2.5);
    lp.set_bounds(1, 0.0, kLpInfinity);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::optimal);
    CHECK(out.solution[0] == Catch::Approx(2.5).margin(1e-9));
    CHECK(out.solution[1] == Catch::Approx(1.5).margin(1e-9));
  }
  SECTION("parallel equalities are infeasible") {
    LinearProgram lp(2);
    lp.add_equality({1.0, 1.0}, 1.0);
    lp.add_equality({1.0, 1.0}, 2.0);
    lp.set_bounds(0, 0.0, kLpInfinity);
    lp.set_bounds(1, 0.0, kLpInfinity);
    CHECK(solve_lp(lp).status == LpStatus::infeasible);
  }
  SECTION("all-zero equality rows") {
    LinearProgram lp(1);
    lp.objective = {1.0};
    lp.add_equality({0.0}, 0.0);  // vacuous
    lp.set_bounds(0, 1.0, 5.0);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::optimal);
    CHECK(out.solution[0] == Catch::Approx(1.0).margin(1e-9));

    LinearProgram lp2(1);
    lp2.add_equality({0.0}, 1.0);  // unsatisfiable
    lp2.set_bounds(0, 0.0, kLpInfinity);
    CHECK(solve_lp(lp2).status == LpStatus::infeasible);
  }
}

TEST_CASE("degenerate instance that cycles under naive pivoting") {
  // Beale's example; the optimum is -1/20 at (1/25, 0, 1, 0)
  auto make = [] {
    LinearProgram lp(4);
    lp.objective = {-0.75, 150.0, -0.02, 6.0};
    lp.add_inequality({0.25, -60.0, -0.04, 9.0}, 0.0);
    lp.add_inequality({0.5, -90.0, -0.02, 3.0}, 0.0);
    lp.add_inequality({0.0, 0.0, 1.0, 0.0}, 1.0);
    for (int v = 0; v < 4; ++v) lp.set_bounds(v, 0.0, kLpInfinity);
    return lp;
  };
  for (PivotRule rule : {PivotRule::largest_coefficient, PivotRule::bland}) {
    SimplexOptions opts;
    opts.rule = rule;
    const auto out = solve_lp(make(), opts);
    REQUIRE(out.status == LpStatus::optimal);
    CHECK(out.objective_value == Catch::Approx(-0.05).margin(1e-9));
    CHECK(out.iterations > 0);
  }
}

TEST_CASE("redundant equalities do not break phase 1") {
  LinearProgram lp(2);
  lp.objective = {1.0, 1.0};
  lp.add_equality({1.0, 1.0}, 2.0);
  lp.add_equality({2.0, 2.0}, 4.0);  // same hyperplane
  lp.set_bounds(0, 0.0, kLpInfinity);
  lp.set_bounds(1, 0.0, kLpInfinity);
  const auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::optimal);
  CHECK(out.objective_value == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("random feasible programs: optimality and feasibility certificates") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int solved = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const int nvars = 2 + static_cast<int>(rng() % 4);
    const int nrows = 1 + static_cast<int>(rng() % 5);
    // anchor feasibility at a random interior point
    std::vector<double> x0(static_cast<std::size_t>(nvars));
    for (double& v : x0) v = unit(rng);

    LinearProgram lp(nvars);
    for (int v = 0; v < nvars; ++v) {
      lp.objective[static_cast<std::size_t>(v)] = coeff(rng);
      lp.set_bounds(v, 0.0, 1.0);
    }
    for (int r = 0; r < nrows; ++r) {
      std::vector<double> row(static_cast<std::size_t>(nvars));
      double lhs = 0.0;
      for (int v = 0; v < nvars; ++v) {
        row[static_cast<std::size_t>(v)] = coeff(rng);
        lhs += row[static_cast<std::size_t>(v)] * x0[static_cast<std::size_t>(v)];
      }
      lp.add_inequality(row, lhs + 0.1 * unit(rng));
    }
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::optimal);  // x0 is feasible by construction
    ++solved;

    // returned point violates nothing beyond the advertised tolerance
    REQUIRE(max_constraint_violation(lp, out.solution) <= 1e-9);

    // weak optimality: no rejection-sampled feasible point does better
    double obj0 = 0.0;
    for (int v = 0; v < nvars; ++v) obj0 += lp.objective[static_cast<std::size_t>(v)] * x0[static_cast<std::size_t>(v)];
    REQUIRE(obj0 >= out.objective_value - 1e-9);
    for (int s = 0; s < 200; ++s) {
      std::vector<double> cand(static_cast<std::size_t>(nvars));
      for (double& v : cand) v = unit(rng);
      if (max_constraint_violation(lp, cand) > 0.0) continue;
      double obj = 0.0;
      for (int v = 0; v < nvars; ++v) obj += lp.objective[static_cast<std::size_t>(v)] * cand[static_cast<std::size_t>(v)];
      REQUIRE(obj >= out.objective_value - 1e-9);
    }
  }
  CHECK(solved == 60);
}

TEST_CASE("deterministic resolves") {
  LinearProgram lp(3);
  lp.objective = {1.0, -2.0, 0.5};
  lp.add_equality({1.0, 1.0, 1.0}, 1.0);
  lp.add_inequality({1.0, -1.0, 0.0}, 0.25);
  for (int v = 0; v < 3; ++v) lp.set_bounds(v, 0.0, 1.0);
  const auto a = solve_lp(lp);
  const auto b = solve_lp(lp);
  REQUIRE(a.status == LpStatus::optimal);
  CHECK(a.solution == b.solution);  // bitwise equality
  CHECK(a.iterations == b.iterations);
  CHECK(a.objective_value == b.objective_value);
}
