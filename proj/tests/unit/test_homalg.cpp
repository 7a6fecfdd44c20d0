#include "cmalg/homalg.hpp"
#include "doctest.h"

using namespace cma;

namespace {
ModulePresentation cyc(const Ideal& I) { return ModulePresentation::cyclic(I); }
}  // namespace

TEST_CASE("Tor of residue fields is Koszul") {
  RingContext R(3);
  auto K = cyc(max_ideal(R));
  for (int k = 0; k <= 3; ++k) {
    auto T = tor_module(R, K, K, k);
    auto dims = hilbert_series(R, T).finite_dims();
    REQUIRE(dims);
    CHECK(dims->dims.size() == 1);
    CHECK(dims->dims.at(k) == binomial(3, k));
  }
  CHECK(is_zero_module(R, tor_module(R, K, K, 4)));
}

TEST_CASE("Tor_0 is the tensor product and Tor_1 matches (I cap J)/IJ") {
  RingContext R(3);
  Poly x = R.var(0), y = R.var(1), z = R.var(2);
  Ideal I(R, {R.mul(x, x), R.mul(x, y)}), J(R, {R.mul(y, z), R.mul(x, z), R.mul(y, y)});
  auto T0 = tor_module(R, cyc(I), cyc(J), 0);
  auto T1 = tor_module(R, cyc(I), cyc(J), 1);
  Ideal IJ = ideal_product(I, J), IcapJ = ideal_intersect(I, J);
  for (int d = 0; d < 8; ++d) {
    CHECK(hilbert_function(R, T0, d) == hilbert_function(ideal_sum(I, J), d));
    long long expect = hilbert_function(IJ, d) - hilbert_function(IcapJ, d);
    CHECK(hilbert_function(R, T1, d) == expect);
    CHECK(hilbert_function(R, tor_module(R, cyc(J), cyc(I), 1), d) == expect);
  }
}

TEST_CASE("Ext and local cohomology conventions") {
  RingContext R(3);
  auto K = cyc(max_ideal(R));
  for (int k = 0; k < 3; ++k) CHECK(is_zero_module(R, ext_module(R, K, k)));
  CHECK(mindeg(R, ext_module(R, K, 3)) == -3);
  CHECK(reg_local_cohomology(R, K, 0) == 0);
  auto S = ModulePresentation::free(FreeModule::ring());
  CHECK(reg_local_cohomology(R, S, 3) == -3);
  CHECK(reg_local_cohomology(R, S, 0) == kNegInf);
  Ideal L(R, {R.var(0)});
  CHECK(is_zero_module(R, ext_module(R, cyc(L), 2)));
  auto E1 = ext_module(R, cyc(L), 1);
  CHECK(mindeg(R, E1) == -1);
  for (int d = -1; d < 4; ++d) CHECK(hilbert_function(R, E1, d) == hilbert_function(L, d + 1));
}

TEST_CASE("mindeg, annihilator, socle") {
  RingContext R(3);
  CHECK(mindeg(R, ModulePresentation::free(FreeModule::ring())) == 0);
  CHECK(mindeg(R, ideal_module(max_ideal_power(R, 2))) == 2);
  CHECK(mindeg(R, ModulePresentation::free(FreeModule())) == kPosInf);
  Ideal I(R, {R.mul(R.var(0), R.var(1)), R.pow(R.var(2), 3)});
  CHECK(ideal_equal(annihilator(R, cyc(I)), I));
  CHECK(is_unit_ideal(annihilator(R, ModulePresentation::free(FreeModule()))));
  auto s = socle_summary(R, cyc(max_ideal_power(R, 3)));
  CHECK(s.dims.size() == 1);
  CHECK(s.top == 2);
  CHECK(s.dims.at(2) == 6);
  auto sk = socle_summary(R, cyc(max_ideal(R)));
  CHECK(sk.top == 0);
  CHECK_THROWS(socle_summary(R, cyc(I)));
}

TEST_CASE("dim_tor1 examples") {
  RingContext R(4);
  Ideal A(R, {R.var(0), R.var(1)}), B(R, {R.var(2), R.var(3)});
  CHECK(dim_tor1(R, cyc(A), cyc(B)) == -1);
  CHECK(dim_tor1(R, cyc(max_ideal(R)), cyc(max_ideal(R))) == 0);
}

TEST_CASE("kernel of identity is zero") {
  RingContext R(2);
  auto M = cyc(Ideal(R, {R.var(0)}));
  PresentationMap f{M, M, ModuleMap::identity(M.cover)};
  CHECK(is_zero_module(R, module_kernel(R, f)));
  CHECK(hilbert_function(R, module_image(R, f), 3) == 1);
}
