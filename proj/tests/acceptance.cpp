#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cmalg/constructions.hpp"
#include "cmalg/oracle.hpp"
#include "cmalg/reesalg.hpp"
#include "cmalg/render.hpp"
#include "cmalg/verify.hpp"

using namespace cma;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = o.ok && secs < limit_s;
  if (!pass) ++failures;
  std::printf("%s %2d %8.2fs (limit %.0fs) %s\n", pass ? "PASS" : "FAIL", id, secs, limit_s, o.detail.c_str());
  std::fflush(stdout);
}

std::string s(int v) { return ext_text(v); }

Ideal general_combinations(const Ideal& I, int count, uint64_t seed) {
  const RingContext& R = I.ring();
  Rng rng(seed);
  std::vector<Poly> g;
  for (int k = 0; k < count; ++k) {
    Poly f;
    for (auto& q : I.gens()) f = R.add(f, R.scale(q, static_cast<uint32_t>(rng.below(R.F().p))));
    g.push_back(f);
  }
  return Ideal(R, g);
}

}  // namespace

int main() {
  criterion(1, 5, [] {
    BettiTable T = betti_table(paper_example("caviglia1"));
    return Outcome{T.t(1) == 3 && T.t(2) == 7, "t1=" + s(T.t(1)) + " t2=" + s(T.t(2))};
  });

  criterion(2, 30, [] {
    Outcome o{true, ""};
    for (int n = 3; n <= 4; ++n) {
      BettiTable T = betti_table(paper_example("caviglia2", n));
      o.ok = o.ok && T.t(2) == n * n && T.regularity() == n * n - 2;
      o.detail += "n=" + s(n) + ": t2=" + s(T.t(2)) + " reg=" + s(T.regularity()) + " ";
    }
    return o;
  });

  criterion(3, 60, [] {
    auto [J, L] = caviglia_tor_pair(3);
    const RingContext& T = J.ring();
    ModuleData A(T, ModulePresentation::cyclic(J)), B(T, ModulePresentation::cyclic(L));
    PairData P(A, B);
    BoundReport r = check_reg_tor(P, 0);
    bool ok = P.delta() == 2 && r.lhs == 7 && r.rhs == 6 && !r.applicable() && !r.numeric_holds();
    return Outcome{ok, "delta=" + s(P.delta()) + " reg Tor0=" + s(r.lhs) + " rhs=" + s(r.rhs) + " " + verdict(r) +
                           (r.numeric_holds() ? " numeric-holds" : " numeric-fails")};
  });

  criterion(4, 60, [] {
    RingContext R(4);
    Ideal J = monomial_J(R, 3, 1);
    bool cube = ideal_equal(ideal_power(J, 3), max_ideal_power(R, 9));
    bool contained = ideal_contains(ideal_power(J, 2), monomial_J(R, 6, 2));
    return Outcome{cube && contained, std::string("J^3=m^9 ") + (cube ? "yes" : "no") + ", J(6,2) in J^2 " +
                                          (contained ? "yes" : "no")};
  });

  criterion(5, 60, [] {
    RingContext R(3);
    Ideal J = herzog_hibi_J(R, 4);
    bool four = ideal_equal(ideal_power(J, 4), max_ideal_power(R, 16));
    bool three = ideal_equal(ideal_power(J, 3), max_ideal_power(R, 12));
    return Outcome{four && !three, std::string("J^4=m^16 ") + (four ? "yes" : "no") + ", J^3=m^12 " +
                                       (three ? "yes" : "no")};
  });

  criterion(6, 120, [] {
    Ideal I = paper_example("ex93");
    BettiTable T = betti_table(I);
    int t1 = t_ideal(T, 1);
    int steps = linear_steps(T);
    TorsionReport a = sym_power_torsion(I, 2);
    bool gens10 = !a.gen_degrees.empty();
    for (int g : a.gen_degrees) gens10 = gens10 && g == 10;
    bool ok = t1 == 6 && steps == 1 && a.reg == 11 && gens10;
    return Outcome{ok, "t1(I)=" + s(t1) + " linear steps=" + s(steps) + " reg A2=" + s(a.reg) +
                           " generated in 10 " + (gens10 ? "yes" : "no")};
  });

  criterion(7, 30, [] {
    RingContext R(3);
    Ideal C = catalecticant_space(R.F(), 3).ideal(R);
    bool sq = ideal_equal(ideal_power(C, 2), max_ideal_power(R, 4));
    auto r = reduction_number(general_combinations(C, 3, 7), C);
    bool ok = sq && r && *r == 2;
    return Outcome{ok, std::string("I^2=m^4 ") + (sq ? "yes" : "no") + " r_J(I)=" + (r ? s(*r) : "none")};
  });

  criterion(8, 30, [] {
    Field F(32003);
    RingContext R(3);
    Outcome o{true, ""};
    for (int r = 2; r <= 3; ++r) {
      Poly q;
      for (int i = 0; i < r; ++i) q = R.add(q, R.pow(R.var(i), 2));
      QuadricSpace U;
      U.n = 3;
      U.basis.push_back(QuadraticForm::from_poly(R, q));
      int steps = linear_steps(orthogonal_complement(F, U).ideal(R));
      o.ok = o.ok && quadric_rank(F, U.basis[0]) == r && steps == r - 2;
      o.detail += "rank " + s(r) + ": steps=" + s(steps) + " ";
    }
    return o;
  });

  criterion(9, 120, [] {
    RingContext R(3);
    EliminationReport e = instant_eliminate(max_ideal_power(R, 2));
    bool ok = e.equal && ideal_equal(e.annihilator, e.elimination);
    return Outcome{ok, std::string("ann(coker psi) = elimination ideal ") + (ok ? "yes" : "no") +
                           ", linear steps=" + s(e.linear_steps)};
  });

  criterion(10, 1800, [] {
    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.count = 200;
    cfg.n_min = 3, cfg.n_max = 4, cfg.d_min = 2, cfg.d_max = 3;
    FuzzReport f = fuzz(cfg);
    bool ok = f.violations.empty() && f.errors.empty() && f.hypothesis_satisfying > 0;
    return Outcome{ok, "instances=" + s(f.instances) + " hypothesis-satisfying=" + s(f.hypothesis_satisfying) +
                           " checks=" + std::to_string(f.checks) + " violations=" + s(int(f.violations.size())) +
                           " errors=" + s(int(f.errors.size()))};
  });

  criterion(11, 900, [] {
    int agree = 0;
    for (uint64_t k = 0; k < 50; ++k) {
      int n = 2 + static_cast<int>(k % 3), d = 2 + static_cast<int>((k / 3) % 2);
      RingContext R(n);
      Ideal I = random_ideal(R, d, n + static_cast<int>(k % 3), 1000 + k, RandomFlavor::MPrimaryForms);
      if (oracle_betti(R, ModulePresentation::cyclic(I)).table == betti_table(I)) ++agree;
    }
    return Outcome{agree == 50, "agree " + s(agree) + "/50"};
  });

  criterion(12, 1800, [] {
    FuzzConfig cfg;
    cfg.seed = 12;
    cfg.count = 100;
    cfg.n_min = cfg.n_max = 3;
    cfg.d_min = 2, cfg.d_max = 3;
    cfg.linearly_presented_only = true;
    cfg.only = {"eisenbud-ulrich"};
    FuzzReport f = fuzz(cfg);
    std::string report = fuzz_json(f).dump();
    long long applicable = f.stats.count("eisenbud-ulrich") ? f.stats["eisenbud-ulrich"].applicable : 0;
    bool ok = f.conjecture_violations.empty() && f.violations.empty() && f.errors.empty() && !report.empty() &&
              applicable == 100;
    return Outcome{ok, "instances=" + s(f.instances) + " applicable=" + std::to_string(applicable) +
                           " violations=" + s(int(f.conjecture_violations.size()))};
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
