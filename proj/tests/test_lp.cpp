#include "doctest.h"
#include "oracles.hpp"
#include "tlg/lp.hpp"

using namespace tlg;

TEST_CASE("bounded maximization") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0 -> (8/5, 6/5), value 14/5
  LinearProgram lp(2);
  lp.nonnegative = {true, true};
  lp.objective = rats({1, 1});
  lp.maximize = true;
  lp.add(rats({1, 2}), Relation::LessEqual, 4);
  lp.add(rats({3, 1}), Relation::LessEqual, 6);
  auto r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == Rat(14, 5));
  CHECK(r.x == RatVector{Rat(8, 5), Rat(6, 5)});
}

TEST_CASE("infeasible and unbounded programs") {
  LinearProgram lp(1);
  lp.add(rats({1}), Relation::GreaterEqual, 1);
  lp.add(rats({1}), Relation::LessEqual, 0);
  CHECK(solve_lp(lp).status == LPStatus::Infeasible);

  LinearProgram ub(2);
  ub.objective = rats({1, 0});
  ub.add(rats({0, 1}), Relation::Equal, 3);
  CHECK(solve_lp(ub).status == LPStatus::Unbounded);
}

TEST_CASE("free variables and equalities") {
  // min x subject to x - y = -3, y in [-1, 2] -> x = -4
  LinearProgram lp(2);
  lp.objective = rats({1, 0});
  lp.add(rats({1, -1}), Relation::Equal, -3);
  lp.add(rats({0, 1}), Relation::GreaterEqual, -1);
  lp.add(rats({0, 1}), Relation::LessEqual, 2);
  auto r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == -4);
  CHECK(r.x == rats({-4, -1}));
}

TEST_CASE("redundant equality rows are tolerated") {
  LinearProgram lp(2);
  lp.objective = rats({1, 1});
  lp.nonnegative = {true, true};
  lp.add(rats({1, 1}), Relation::Equal, 2);
  lp.add(rats({2, 2}), Relation::Equal, 4);
  auto r = solve_lp(lp);
  REQUIRE(r.optimal());
  CHECK(r.value == 2);
}

TEST_CASE("random planar programs agree with vertex enumeration") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<std::pair<RatVector, Rat>> halfplanes;  // a.x <= b
    for (long s : {-1L, 1L}) {
      halfplanes.push_back({rats({s, 0}), 6});
      halfplanes.push_back({rats({0, s}), 6});
    }
    int extra = static_cast<int>(rng.uniform(1, 5));
    for (int k = 0; k < extra; ++k)
      halfplanes.push_back({rats({rng.uniform(-4, 4), rng.uniform(-4, 4)}), Rat(rng.uniform(-6, 8))});
    RatVector c = rats({rng.uniform(-5, 5), rng.uniform(-5, 5)});

    bool feasible = false;
    Rat best;
    for (std::size_t i = 0; i < halfplanes.size(); ++i)
      for (std::size_t j = i + 1; j < halfplanes.size(); ++j) {
        const auto& [a, b] = halfplanes[i];
        const auto& [d, e] = halfplanes[j];
        Rat det = a[0] * d[1] - a[1] * d[0];
        if (det == 0) continue;
        RatVector p{(b * d[1] - a[1] * e) / det, (a[0] * e - b * d[0]) / det};
        bool inside = true;
        for (const auto& [f, g] : halfplanes)
          if (dot(f, p) > g) inside = false;
        if (!inside) continue;
        Rat v = dot(c, p);
        if (!feasible || v > best) best = v;
        feasible = true;
      }

    LinearProgram lp(2);
    lp.objective = c;
    lp.maximize = true;
    for (const auto& [a, b] : halfplanes) lp.add(a, Relation::LessEqual, b);
    auto r = solve_lp(lp);
    if (!feasible) {
      CHECK(r.status == LPStatus::Infeasible);
      continue;
    }
    REQUIRE(r.optimal());
    CHECK(r.value == best);
    for (const auto& [a, b] : halfplanes) CHECK(dot(a, r.x) <= b);
  }
}
