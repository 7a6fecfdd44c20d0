#include <set>

#include "cmalg/ring.hpp"
#include "doctest.h"

using namespace cma;

namespace {
Monomial mono(std::vector<int> e) { return Monomial::from_exponents(e); }
}  // namespace

TEST_CASE("monomial_cmp examples") {
  auto g = MonomialOrder::grevlex();
  CHECK(g.cmp(mono({2, 0, 0}), mono({1, 1, 0})) == 1);
  CHECK(g.cmp(mono({1, 2, 3}), mono({1, 2, 3})) == 0);
  CHECK(MonomialOrder::lex().cmp(mono({0, 3, 0}), mono({1, 0, 0})) == -1);
  // grevlex tie-break: x1*x3 < x2^2 in three variables
  CHECK(g.cmp(mono({1, 0, 1}), mono({0, 2, 0})) == -1);
  auto b = MonomialOrder::eliminate(1);
  CHECK(b.cmp(mono({1, 0, 0}), mono({0, 5, 5})) == 1);
}

TEST_CASE("order axioms on random monomials") {
  Rng rng(7);
  std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::eliminate(2)};
  for (auto& ord : orders) {
    for (int it = 0; it < 300; ++it) {
      auto r = [&] {
        std::vector<int> e(4);
        for (auto& x : e) x = static_cast<int>(rng.below(4));
        return mono(e);
      };
      Monomial a = r(), b = r(), c = r();
      int ab = ord.cmp(a, b);
      CHECK(ab == -ord.cmp(b, a));
      if (ab > 0) CHECK(ord.cmp(a * c, b * c) > 0);
      if (ab > 0 && ord.cmp(b, c) > 0) CHECK(ord.cmp(a, c) > 0);
      CHECK(ord.cmp(a, Monomial()) >= 0);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  Field F(32003);
  Rng rng(11);
  for (int it = 0; it < 1000; ++it) {
    uint32_t a = rng.below(F.p), b = rng.below(F.p), c = rng.below(F.p);
    CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.add(a, F.neg(a)) == 0);
  }
  CHECK_THROWS(Field(32004));
}

TEST_CASE("poly_mul examples") {
  RingContext R(3);
  Poly x1 = R.var(0), x2 = R.var(1);
  Poly p = R.mul(R.add(x1, x2), R.sub(x1, x2));
  CHECK(p == R.sub(R.mul(x1, x1), R.mul(x2, x2)));
  CHECK(R.mul(p, Poly()).is_zero());
  RingContext R3(3, 3);
  Poly s = R3.pow(R3.add(R3.var(0), R3.var(1)), 2);
  CHECK(s.coeff(mono({1, 1, 0})) == 2);
  CHECK(s.size() == 3);
  CHECK(R.to_string(p) == "x1^2 - x2^2");
}

TEST_CASE("map_compose and Koszul complex") {
  RingContext R(3);
  Poly x = R.var(0), y = R.var(1), z = R.var(2);
  ModuleMap d1(FreeModule({1, 1, 1}), FreeModule::ring());
  d1.at(0, 0) = x;
  d1.at(0, 1) = y;
  d1.at(0, 2) = z;
  ModuleMap d2(FreeModule({2, 2, 2}), FreeModule({1, 1, 1}));
  // columns: e12, e13, e23
  d2.at(0, 0) = R.neg(y);
  d2.at(1, 0) = x;
  d2.at(0, 1) = R.neg(z);
  d2.at(2, 1) = x;
  d2.at(1, 2) = R.neg(z);
  d2.at(2, 2) = y;
  CHECK(d1.is_homogeneous());
  CHECK(d2.is_homogeneous());
  CHECK(map_compose(R, d1, d2).is_zero());
  ModuleMap id = ModuleMap::identity(d1.target);
  auto c = map_compose(R, id, d1);
  CHECK(c.cols == d1.cols);
  CHECK_THROWS(map_compose(R, d2, d1));
}
