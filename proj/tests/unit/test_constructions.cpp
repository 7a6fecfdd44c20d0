#include <doctest.h>

#include "cmalg/constructions.hpp"
#include "cmalg/homalg.hpp"
#include "cmalg/resolution.hpp"

using namespace cma;

TEST_CASE("power and linear subspace ideals") {
  RingContext R(4);
  CHECK(power_max_ideal(R, 1).gens().size() == 4);
  CHECK(power_max_ideal(R, 3).gens().size() == binomial(6, 3));
  Ideal L = linear_subspace_ideal(R, 3, 7);
  CHECK(L.gens().size() == 3);
  CHECK(krull_dim(L) == 1);
  CHECK_THROWS(linear_subspace_ideal(R, 5, 1));
}

TEST_CASE("monomial J and Herzog-Hibi ideals") {
  RingContext R3(3);
  CHECK(ideal_equal(monomial_J(R3, 4, 2), max_ideal_power(R3, 4)));
  CHECK(monomial_J(R3, 3, 1).gens().size() == 9);
  Ideal J20 = monomial_J(R3, 2, 0);
  CHECK(J20.gens().size() == 3);
  CHECK(ideal_equal(herzog_hibi_J(R3, 2), max_ideal_power(R3, 2)));
  Ideal H = herzog_hibi_J(R3, 3);
  CHECK_FALSE(ideal_equal(H, max_ideal_power(R3, 3)));
  CHECK(ideal_contains(H, R3.mul(R3.var(0), R3.pow(R3.var(2), 2))));
  RingContext R2(2);
  CHECK(ideal_equal(herzog_hibi_J(R2, 3), max_ideal_power(R2, 3)));
}

TEST_CASE("monomial powers containments") {
  RingContext R(4);
  Ideal J = monomial_J(R, 3, 1);
  Ideal J2 = ideal_power(J, 2);
  CHECK(ideal_contains(J2, monomial_J(R, 6, 2)));
  CHECK(ideal_equal(ideal_power(J, 3), max_ideal_power(R, 9)));
}

TEST_CASE("quadric spaces") {
  Field F(32003);
  RingContext R(3);
  QuadricSpace U = catalecticant_space(F, 3);
  CHECK(U.dim() == 5);
  for (int k = 0; k < U.dim(); ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(U.pencil_entry(i, j)[k] == U.basis[k].gram[i][j]);
  Ideal C = U.ideal(R);
  CHECK(krull_dim(C) == 0);
  CHECK(linear_steps(C) >= 1);
  QuadricSpace P = orthogonal_complement(F, U);
  CHECK(P.dim() == 1);
  QuadricSpace PP = orthogonal_complement(F, P);
  CHECK(PP.dim() == 5);
  CHECK(canonical_basis(F, PP).basis == canonical_basis(F, U).basis);

  QuadricSpace S2;
  S2.n = 3;
  for (auto& m : monomials_of_degree(3, 2)) S2.basis.push_back(QuadraticForm::from_poly(R, Poly::monomial(m)));
  CHECK(orthogonal_complement(F, S2).dim() == 0);
}

TEST_CASE("quadric rank and linear steps of the complement") {
  Field F(32003);
  RingContext R(3);
  for (int r = 2; r <= 3; ++r) {
    Poly q;
    for (int i = 0; i < r; ++i) q = R.add(q, R.pow(R.var(i), 2));
    QuadraticForm Q = QuadraticForm::from_poly(R, q);
    CHECK(quadric_rank(F, Q) == r);
    CHECK(Q.to_poly(R) == q);
    QuadricSpace U;
    U.n = 3;
    U.basis.push_back(Q);
    Ideal V = orthogonal_complement(F, U).ideal(R);
    CHECK(V.gens().size() == 5);
    CHECK(linear_steps(V) == r - 2);
  }
}

TEST_CASE("apolar ideals of quadrics") {
  RingContext R(3);
  for (int r = 1; r <= 3; ++r) {
    Poly q;
    for (int i = 0; i < r; ++i) q = R.add(q, R.pow(R.var(i), 2));
    Ideal J = apolar_ideal_of_quadric(R, QuadraticForm::from_poly(R, q));
    int linear = 0;
    for (auto& g : J.gens())
      if (g.degree() == 1) ++linear;
    CHECK(linear == 3 - r);
    CHECK(hilbert_function(J, 0) == 1);
    CHECK(hilbert_function(J, 1) == r);
    CHECK(hilbert_function(J, 2) == 1);
    CHECK(hilbert_function(J, 3) == 0);
    BettiTable T = betti_table(J);
    CHECK(T.at(T.length(), T.t(T.length())) == 1);
  }
}

TEST_CASE("named examples") {
  Ideal c1 = paper_example("caviglia1");
  CHECK(c1.gens().size() == 5);
  CHECK(c1.max_gen_degree() == 3);
  Ideal c2 = paper_example("caviglia2", 3);
  CHECK(c2.gens().size() == 3);
  CHECK(c2.n() == 4);
  Ideal e = paper_example("ex93");
  CHECK(e.gens().size() == 18);
  CHECK(e.min_gen_degree() == 5);
  Ideal k = paper_example("conca", 2);
  CHECK(k.n() == 4);
  CHECK_THROWS(paper_example("nope"));
  auto [J, L] = caviglia_tor_pair(3);
  CHECK(J.n() == 5);
  CHECK(L.gens().size() == 1);
}

TEST_CASE("random ideals") {
  RingContext R(3);
  Ideal a = random_ideal(R, 2, 3, 11, RandomFlavor::Forms);
  Ideal b = random_ideal(R, 2, 3, 11, RandomFlavor::Forms);
  CHECK(a.gens() == b.gens());
  int zero = 0;
  for (uint64_t s = 0; s < 100; ++s)
    if (krull_dim(random_ideal(R, 2, 3, s, RandomFlavor::MPrimaryForms)) == 0) ++zero;
  CHECK(zero == 100);
  Ideal m = random_ideal(R, 3, 4, 5, RandomFlavor::Monomials);
  CHECK(m.gens().size() == 4);
  for (auto& g : m.gens()) CHECK(g.degree() == 3);
}
