#include <doctest.h>

#include "cmalg/constructions.hpp"
#include "cmalg/reesalg.hpp"

using namespace cma;

TEST_CASE("symmetric power torsion") {
  RingContext R(3);
  Ideal ci(R, {R.pow(R.var(0), 2), R.pow(R.var(1), 2), R.pow(R.var(2), 2)});
  CHECK(sym_power_torsion(ci, 2).zero());
  CHECK(sym_power_torsion(ci, 3).zero());
  Ideal m2 = max_ideal_power(R, 2);
  CHECK(sym_power_torsion(m2, 1).zero());
  TorsionReport a = sym_power_torsion(m2, 2);
  if (!a.zero()) CHECK(a.degrees.bottom >= 4);
  CHECK_THROWS(sym_power_torsion(Ideal(R, {R.var(0)}), 2));
}

TEST_CASE("torsion of the degree five example") {
  Ideal I = paper_example("ex93");
  TorsionReport a = sym_power_torsion(I, 2);
  CHECK(a.reg == 11);
  CHECK(a.degrees.bottom == 10);
  REQUIRE_FALSE(a.gen_degrees.empty());
  for (int g : a.gen_degrees) CHECK(g == 10);
}

TEST_CASE("adjoint matrix") {
  RingContext R(2);
  ModuleMap phi(FreeModule({1}), FreeModule({0, 0}));
  phi.cols[0] = {R.var(0), R.var(1)};
  AdjointPair ap = adjoint_matrix(phi, 2);
  CHECK(ap.psi.rows() == 2);
  CHECK(ap.psi.ncols() == 1);
  CHECK(ap.psi.cols[0][0] == R.var(0));
  CHECK(ap.psi.cols[0][1] == R.var(1));

  RingContext R3(3);
  ModuleMap lp = linear_presentation(max_ideal_power(R3, 2));
  AdjointPair a1 = adjoint_matrix(lp, 3);
  AdjointPair a2 = adjoint_matrix(a1.psi, a1.N);
  CHECK(a2.psi.cols == lp.cols);
  phi.cols[0][0] = R.pow(R.var(0), 2);
  CHECK_THROWS(adjoint_matrix(phi, 2));
}

TEST_CASE("instant elimination") {
  RingContext R(3);
  EliminationReport v = instant_eliminate(max_ideal_power(R, 2));
  CHECK(v.hypothesis);
  CHECK(v.equal);
  CHECK(v.elimination.gb().elements.size() == 6);
  RingContext R2(2);
  EliminationReport c = instant_eliminate(max_ideal_power(R2, 3));
  CHECK(c.equal);
}

TEST_CASE("reduction numbers") {
  RingContext R(3);
  Ideal m2 = max_ideal_power(R, 2);
  CHECK(reduction_number(m2, m2) == 0);
  Ideal J = random_ideal(R, 2, 3, 5, RandomFlavor::Forms);
  CHECK(reduction_number(J, m2) == 1);
  Ideal C = catalecticant_space(R.F(), 3).ideal(R);
  Rng rng(3);
  std::vector<Poly> g;
  for (int k = 0; k < 3; ++k) {
    Poly f;
    for (auto& q : C.gens()) f = R.add(f, R.scale(q, static_cast<uint32_t>(rng.below(32003))));
    g.push_back(f);
  }
  CHECK(reduction_number(Ideal(R, g), C) == 2);
  CHECK_THROWS(reduction_number(m2, Ideal(R, {R.pow(R.var(0), 2)})));
}

TEST_CASE("power stabilization") {
  RingContext R(3);
  auto s1 = power_stabilization(max_ideal_power(R, 2));
  CHECK(s1.s == 1);
  CHECK(s1.next_holds);
  auto hh = power_stabilization(herzog_hibi_J(R, 4));
  CHECK(hh.s == 4);
  CHECK(hh.next_holds);
  CHECK_FALSE(hh.holds[2]);
  auto cat = power_stabilization(catalecticant_space(R.F(), 3).ideal(R));
  CHECK(cat.s == 2);
}
