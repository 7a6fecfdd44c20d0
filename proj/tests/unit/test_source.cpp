#include <doctest.h>

#include "cmalg/constructions.hpp"
#include "cmalg/render.hpp"
#include "cmalg/source.hpp"

using namespace cma;

TEST_CASE("source round trip") {
  IdealSource src = parse_source("ring 32003 [x,y,z]\nideal I = x^2 - 3*y*z, z^3 + 1\nideal J = x, y\n");
  CHECK(src.ring.n == 3);
  REQUIRE(src.ideals.size() == 2);
  CHECK(src.get("I").gens().size() == 2);
  IdealSource back = parse_source(print_source(src));
  REQUIRE(back.ideals.size() == 2);
  CHECK(back.get("I").gens() == src.get("I").gens());
  CHECK(back.get("J").gens() == src.get("J").gens());
  Ideal e = paper_example("caviglia1");
  CHECK(parse_source(print_source(e.ring(), {{"I", e}})).get("I").gens() == e.gens());
}

TEST_CASE("source errors") {
  CHECK_THROWS_AS(parse_source("ring 32003 [x,y]\nideal I = x + w\n"), ParseError);
  CHECK_THROWS_AS(parse_source("ring 32003 [x,y]\nideal I = x +\n"), ParseError);
  CHECK_THROWS_AS(parse_source("ideal I = x\n"), ParseError);
  try {
    parse_source("ring 32003 [x,y]\nideal I = x $ y\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("module expressions") {
  IdealSource src = parse_source("ring 32003 [x,y]\nideal I = x, y\nideal J = x\n");
  ModuleExpr q = parse_module_expr(src, "S/I^2");
  CHECK(q.quotient);
  CHECK(ideal_equal(q.ideal, max_ideal_power(src.ring, 2)));
  ModuleExpr s = parse_module_expr(src, "intersect(I, J) + J*I");
  CHECK_FALSE(s.quotient);
  CHECK(ideal_equal(s.ideal, src.get("J")));
  CHECK_THROWS(parse_module_expr(src, "S/K"));
}

TEST_CASE("betti rendering") {
  RingContext R(2);
  BettiTable T = betti_table(max_ideal(R));
  CHECK(render_betti(T) == "       0 1 2\ntotal: 1 2 1\n    0: 1 2 1\n");
  CHECK(render_betti(BettiTable{}) == "0\n");
  auto j = betti_json(R, T);
  CHECK(j["reg"] == 0);
  CHECK(j["pd"] == 2);
  CHECK(betti_from_json(j) == T);
  auto z = betti_json(R, BettiTable{});
  CHECK(z["reg"].is_null());
  CHECK(z["pd"].is_null());
  CHECK(ext_json(kPosInf) == "inf");
  CHECK(ext_text(kNegInf) == "-inf");
}

TEST_CASE("report rendering") {
  BoundReport r;
  r.theorem_id = "x";
  r.hypothesis("h", false);
  r.lhs = 7;
  r.rhs = 6;
  auto j = report_json(r);
  CHECK(j["holds"] == "not-applicable");
  CHECK(j["numeric_holds"] == false);
  CHECK(verdict(r) == "not-applicable");
  r.hypotheses.clear();
  CHECK(verdict(r) == "fails");
}
