#include <doctest.h>

#include <chrono>

#include "cmalg/constructions.hpp"
#include "cmalg/verify.hpp"

using namespace cma;

TEST_CASE("tor bound without the dimension hypothesis") {
  auto [J, L] = caviglia_tor_pair(3);
  const RingContext& T = J.ring();
  ModuleData A(T, ModulePresentation::cyclic(J)), B(T, ModulePresentation::cyclic(L));
  PairData P(A, B);
  CHECK(P.delta() == 2);
  BoundReport r = check_reg_tor(P, 0);
  CHECK_FALSE(r.applicable());
  CHECK(r.lhs == 7);
  CHECK(r.rhs == 6);
  CHECK_FALSE(r.numeric_holds());
  CHECK_FALSE(r.violated());
}

TEST_CASE("tor bound on finite length modules") {
  RingContext R(3);
  Ideal I = random_ideal(R, 2, 4, 11, RandomFlavor::MPrimaryForms);
  ModuleData A(R, ModulePresentation::cyclic(I)), B(R, ModulePresentation::cyclic(I));
  PairData P(A, B);
  CHECK_THROWS(check_tor_bound(P, 0, 0, 1, 1));
  for (int p = 0; p <= 3; ++p) {
    auto reps = check_tor_bound(P, 0, 0, p, 3 - p);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].applicable() == (P.delta() <= 1));
    CHECK(reps[0].rhs_parts.has_value());
  }
  for (int p = 0; p <= 3; ++p) {
    BoundReport s = check_subadd(P, p);
    CHECK_FALSE(s.violated());
  }
}

TEST_CASE("residue field pair") {
  RingContext R(2);
  Ideal m = max_ideal_power(R, 1);
  ModuleData A(R, ModulePresentation::cyclic(m)), B(R, ModulePresentation::cyclic(m));
  PairData P(A, B);
  for (int j = 0; j <= 2; ++j)
    for (int k = 0; k <= 2; ++k) {
      int N = 2 - j + k;
      for (int p = 0; p <= N; ++p)
        for (auto& r : check_tor_bound(P, j, k, p, N - p)) CHECK_FALSE(r.violated());
    }
}

TEST_CASE("stepwise socle estimate fails on the first example") {
  Ideal I = paper_example("caviglia1");
  BoundReport r = check_socle_stepwise(I, 1);
  CHECK(r.kind == StatementKind::Informational);
  CHECK(r.lhs == 7);
  CHECK(r.rhs == 6);
  ModuleData A(I.ring(), ModulePresentation::cyclic(I));
  for (int q = 0; q <= 4; ++q) CHECK_FALSE(check_socle_estimation(A, I, q).violated());
}

TEST_CASE("monomial statements") {
  RingContext R(4);
  for (auto& r : check_monomial_powers(R, 3, 1)) {
    CHECK(r.applicable());
    CHECK(r.lhs == 0);
  }
  RingContext R3(3);
  BoundReport c = check_monomial_criterion(R3, 4, 8);
  CHECK(c.applicable());
  CHECK(c.lhs == 4);
  CHECK(c.numeric_holds());
}

TEST_CASE("catalecticant statements") {
  RingContext R(3);
  QuadricSpace V = catalecticant_space(R.F(), 3);
  Ideal I = V.ideal(R);
  BoundReport rees = check_rees(I, 5, 10);
  CHECK(rees.applicable());
  CHECK(rees.lhs == 2);
  CHECK(rees.numeric_holds());
  BoundReport eu = check_eisenbud_ulrich(I);
  CHECK(eu.applicable());
  CHECK(eu.lhs == 0);
  for (auto& r : check_initials(I)) CHECK(r.numeric_holds());
  for (auto& r : check_powers(I, 2)) CHECK_FALSE(r.violated());
}

TEST_CASE("generator bound on a Gorenstein quadric") {
  RingContext R(3);
  QuadraticForm Q;
  Q.gram = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Ideal I = apolar_ideal_of_quadric(R, Q);
  auto reps = check_generator_bound(I);
  REQUIRE(reps.size() == 4);
  for (auto& r : reps) {
    CHECK(r.applicable());
    CHECK(r.numeric_holds());
  }
  CHECK(reps[2].sharp());
}

TEST_CASE("instant elimination for the Veronese") {
  RingContext R(3);
  BoundReport r = check_instant_elimination(max_ideal_power(R, 2));
  CHECK(r.applicable());
  CHECK(r.lhs == 0);
}

TEST_CASE("fuzz is reproducible and finds no theorem violations") {
  FuzzConfig cfg;
  cfg.seed = 7;
  cfg.count = 12;
  cfg.n_min = cfg.n_max = 3;
  FuzzReport a = fuzz(cfg);
  cfg.jobs = 3;
  FuzzReport b = fuzz(cfg);
  CHECK(a.errors.empty());
  for (auto& e : a.errors) MESSAGE(e.second);
  CHECK(a.violations.empty());
  for (auto& v : a.violations) MESSAGE(v.report.theorem_id << "\n" << v.source);
  CHECK(a.checks == b.checks);
  CHECK(a.hypothesis_satisfying == b.hypothesis_satisfying);
  CHECK(a.hypothesis_satisfying > 0);
  for (int i = 0; i < 4; ++i) {
    FuzzInstance x = fuzz_instance(cfg, i), y = fuzz_instance(cfg, i);
    CHECK(x.I.gens() == y.I.gens());
  }
}
