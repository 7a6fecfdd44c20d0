#include <algorithm>

#include "cmalg/groebner.hpp"
#include "doctest.h"

using namespace cma;

namespace {
struct R3 {
  RingContext R{3};
  Poly x = R.var(0), y = R.var(1), z = R.var(2);
  Poly sq(const Poly& f) const { return R.mul(f, f); }
};
}  // namespace

TEST_CASE("normal_form examples") {
  R3 r;
  auto& R = r.R;
  Poly g = R.add(r.sq(r.x), r.y);
  CHECK(normal_form(R, R.mul(g, r.z), buchberger(R, {g}, R.order)).is_zero());
  CHECK(normal_form(R, r.x, buchberger(R, {r.y}, R.order)) == r.x);
  auto G = buchberger(R, {R.sub(r.sq(r.x), r.sq(r.y)), R.sub(r.sq(r.y), r.sq(r.z))}, R.order);
  Poly f = R.mul(r.sq(r.x), r.y);
  CHECK(normal_form(R, f, G) == R.mul(r.y, r.sq(r.z)));
}

TEST_CASE("buchberger examples") {
  R3 r;
  auto& R = r.R;
  auto G = buchberger(R, {R.add(r.sq(r.x), r.sq(r.y)), R.mul(r.x, r.y)}, R.order);
  REQUIRE(G.elements.size() == 3);
  std::vector<Poly> expect{R.mul(r.x, r.y), R.add(r.sq(r.x), r.sq(r.y)), R.pow(r.y, 3)};
  for (auto& e : expect) CHECK(std::find(G.elements.begin(), G.elements.end(), e) != G.elements.end());
  auto M = buchberger(R, {R.mul(r.x, r.y), r.sq(r.z)}, R.order);
  CHECK(M.elements.size() == 2);
}

TEST_CASE("reduced basis independent of generator order") {
  R3 r;
  auto& R = r.R;
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<Term> t;
      for (auto& m : monomials_of_degree(3, 2))
        if (rng.below(2)) t.push_back({m, static_cast<uint32_t>(rng.below(R.F().p))});
      gens.push_back(Poly::from_terms(t, R.F()));
    }
    auto a = buchberger(R, gens, R.order);
    std::reverse(gens.begin(), gens.end());
    auto b = buchberger(R, gens, R.order);
    CHECK(a.elements == b.elements);
    for (auto& g : a.elements) {
      Poly nf = normal_form(R, R.add(g, R.mul(r.x, g)), a);
      CHECK(nf.is_zero());
    }
  }
}

TEST_CASE("ideal operations") {
  R3 r;
  auto& R = r.R;
  Ideal I(R, {R.add(r.sq(r.x), r.sq(r.y)), R.mul(r.x, r.y)});
  CHECK(ideal_contains(I, R.pow(r.y, 3)));
  CHECK_FALSE(ideal_contains(I, R.constant(1)));
  Ideal a(R, {r.x}), b(R, {r.y});
  CHECK(ideal_equal(ideal_intersect(a, b), Ideal(R, {R.mul(r.x, r.y)})));
  Ideal c(R, {r.x, r.y}), d(R, {r.y, r.z});
  CHECK(ideal_equal(ideal_intersect(c, d), Ideal(R, {r.y, R.mul(r.x, r.z)})));
  Ideal q = ideal_quotient(Ideal(R, {r.sq(r.x), R.mul(r.x, r.y)}), Ideal(R, {r.x}));
  CHECK(ideal_equal(q, Ideal(R, {r.x, r.y})));
  CHECK(is_unit_ideal(saturate(max_ideal_power(R, 3), max_ideal(R))));
  CHECK(ideal_equal(ideal_quotient(I, Ideal(R, {R.constant(1)})), I));
  CHECK(max_ideal_power(R, 4).gens().size() == 15);
  CHECK(ideal_power(Ideal(R, {r.x, r.y}), 2).gens().size() == 3);
}

TEST_CASE("elimination examples") {
  RingContext T({"t", "x1", "x2"});
  Poly t = T.var(0), a = T.var(1), b = T.var(2);
  Ideal I(T, {T.sub(t, a), T.sub(t, b)});
  Ideal E = elimination_ideal(I, {0});
  CHECK(ideal_equal(E, Ideal(T, {T.sub(a, b)})));
  RingContext U({"t", "x", "y"});
  Poly tt = U.var(0), x = U.var(1), y = U.var(2);
  Ideal C(U, {U.sub(x, U.pow(tt, 2)), U.sub(y, U.pow(tt, 3))});
  Ideal EC = elimination_ideal(C, {0});
  CHECK(ideal_equal(EC, Ideal(U, {U.sub(U.pow(x, 3), U.pow(y, 2))})));
}

TEST_CASE("krull dimension and Hilbert function") {
  R3 r;
  auto& R = r.R;
  CHECK(krull_dim(max_ideal(R)) == 0);
  CHECK(krull_dim(Ideal(R, {r.x})) == 2);
  CHECK(krull_dim(Ideal(R, {R.constant(1)})) == -1);
  for (int e = 0; e < 6; ++e) {
    CHECK(hilbert_function(Ideal(R, {}), e) == binomial(e + 2, 2));
    CHECK(hilbert_function(max_ideal_power(R, 3), e) == (e < 3 ? binomial(e + 2, 2) : 0));
  }
}

TEST_CASE("gin examples") {
  R3 r;
  auto& R = r.R;
  CHECK(gin(max_ideal_power(R, 2), 5) == initial_ideal(max_ideal_power(R, 2)));
  // Two general quadrics: Gin is (x1^2, x1 x2, x2^3).
  Rng rng(9);
  std::vector<Poly> q;
  for (int k = 0; k < 2; ++k) {
    std::vector<Term> t;
    for (auto& m : monomials_of_degree(3, 2)) t.push_back({m, static_cast<uint32_t>(rng.below(R.F().p))});
    q.push_back(Poly::from_terms(t, R.F()));
  }
  auto G = gin_checked(Ideal(R, q), 1);
  CHECK(G.stable);
  MonomialIdeal expect(3, {Monomial::from_exponents({2, 0, 0}), Monomial::from_exponents({1, 1, 0}),
                           Monomial::from_exponents({0, 3, 0})});
  CHECK(G.ideal == expect);
}
