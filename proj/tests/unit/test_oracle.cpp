#include <doctest.h>

#include "cmalg/constructions.hpp"
#include "cmalg/homalg.hpp"
#include "cmalg/oracle.hpp"

using namespace cma;

TEST_CASE("oracle reproduces the Koszul complex") {
  for (int n = 1; n <= 4; ++n) {
    RingContext R(n);
    OracleResult o = oracle_betti(R, ModulePresentation::cyclic(max_ideal(R)));
    CHECK(o.complete);
    for (int i = 0; i <= n; ++i) CHECK(o.table.at(i, i) == binomial(n, i));
    long long sum = 0;
    for (int i = 0; i <= n; ++i) sum += o.table.total(i);
    CHECK(sum == (1LL << n));
  }
}

TEST_CASE("oracle on the cubic example") {
  Ideal I = paper_example("caviglia1");
  OracleResult o = oracle_betti(I.ring(), ModulePresentation::cyclic(I));
  CHECK(o.table.t(1) == 3);
  CHECK(o.table.t(2) == 7);
  CHECK(o.table == betti_table(I));
}

TEST_CASE("oracle agrees with resolutions on random ideals") {
  for (uint64_t s = 0; s < 12; ++s) {
    int n = 2 + static_cast<int>(s % 3), d = 2 + static_cast<int>(s % 2);
    RingContext R(n);
    Ideal I = random_ideal(R, d, n + static_cast<int>(s % 3), 100 + s, RandomFlavor::MPrimaryForms);
    CHECK(oracle_betti(R, ModulePresentation::cyclic(I)).table == betti_table(I));
  }
}

TEST_CASE("oracle with a degree cap on a non-Artinian module") {
  RingContext R(3);
  Ideal I(R, {R.mul(R.var(0), R.var(1)), R.mul(R.var(1), R.var(2))});
  OracleResult o = oracle_betti(R, ModulePresentation::cyclic(I), 8);
  CHECK(o.table == betti_table(I));
  CHECK(oracle_hilbert_function(R, ModulePresentation::cyclic(I), 3) == hilbert_function(I, 3));
  CHECK_THROWS(oracle_betti(R, ModulePresentation::cyclic(I)));
}

TEST_CASE("oracle on a module with several generators") {
  RingContext R(3);
  Ideal I = max_ideal_power(R, 2);
  ModulePresentation M = ideal_module(I);
  OracleResult o = oracle_betti(R, M, 10);
  CHECK(o.table == minimal_free_resolution(R, M).second);
}
