#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "cmalg/constructions.hpp"
#include "cmalg/source.hpp"
#include "cmalg/verify.hpp"

namespace cma {

namespace {

using Reports = std::vector<BoundReport>;

void append(Reports& out, Reports more) {
  for (auto& r : more) out.push_back(std::move(r));
}

ModulePresentation module_a(const CheckInput& in) {
  if (in.A) return *in.A;
  if (in.I) return ModulePresentation::cyclic(*in.I);
  throw std::invalid_argument("statement needs a module A or an ideal I");
}

ModulePresentation module_b(const CheckInput& in) {
  if (in.B) return *in.B;
  if (in.J) return ModulePresentation::cyclic(*in.J);
  if (in.I) return ModulePresentation::cyclic(*in.I);
  throw std::invalid_argument("statement needs a module B or an ideal J");
}

const Ideal& ideal_i(const CheckInput& in) {
  if (!in.I) throw std::invalid_argument("statement needs an ideal I");
  return *in.I;
}

const Ideal& ideal_j(const CheckInput& in) { return in.J ? *in.J : ideal_i(in); }

using Runner = Reports (*)(const RingContext&, const CheckInput&);

template <class F>
Reports with_pair(const RingContext& R, const CheckInput& in, F f) {
  ModuleData A(R, module_a(in)), B(R, module_b(in));
  PairData P(A, B);
  return f(P);
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"tor-bound",
       [](const RingContext& R, const CheckInput& in) {
         return with_pair(R, in, [&](PairData& P) { return check_tor_bound(P, in.j, in.k, in.p, in.q); });
       }},
      {"generalization-of-regularity",
       [](const RingContext& R, const CheckInput& in) {
         return with_pair(R, in, [&](PairData& P) { return Reports{check_generalization_of_regularity(P, in.j, in.k)}; });
       }},
      {"cm-case",
       [](const RingContext& R, const CheckInput& in) {
         return with_pair(R, in, [&](PairData& P) { return Reports{check_cm_case(P, in.j, in.k)}; });
       }},
      {"reg-of-tor",
       [](const RingContext& R, const CheckInput& in) {
         return with_pair(R, in, [&](PairData& P) { return Reports{check_reg_tor(P, in.k)}; });
       }},
      {"newregtor",
       [](const RingContext& R, const CheckInput& in) {
         return with_pair(R, in, [&](PairData& P) { return Reports{check_newregtor(P, in.k, in.p)}; });
       }},
      {"reg-of-tor-cm",
       [](const RingContext& R, const CheckInput& in) {
         return with_pair(R, in, [&](PairData& P) { return Reports{check_reg_tor_cm(P, in.k)}; });
       }},
      {"subadd",
       [](const RingContext& R, const CheckInput& in) {
         return with_pair(R, in, [&](PairData& P) { return Reports{check_subadd(P, in.p)}; });
       }},
      {"socle-estimation",
       [](const RingContext& R, const CheckInput& in) {
         ModuleData A(R, module_a(in));
         return Reports{check_socle_estimation(A, ideal_j(in), in.q)};
       }},
      {"socle-stepwise",
       [](const RingContext&, const CheckInput& in) { return Reports{check_socle_stepwise(ideal_i(in), in.p)}; }},
      {"products", [](const RingContext&, const CheckInput& in) { return check_products(ideal_i(in), ideal_j(in)); }},
      {"powers", [](const RingContext&, const CheckInput& in) { return check_powers(ideal_i(in), in.t); }},
      {"specialization",
       [](const RingContext&, const CheckInput& in) { return check_specialization(ideal_i(in), in.p, in.s, in.seed); }},
      {"initials", [](const RingContext&, const CheckInput& in) { return check_initials(ideal_i(in)); }},
      {"hehi", [](const RingContext&, const CheckInput& in) { return Reports{check_hehi(ideal_i(in), in.seed)}; }},
      {"quadric-count", [](const RingContext&, const CheckInput& in) { return Reports{check_quadric_count(ideal_i(in))}; }},
      {"mu-bound", [](const RingContext&, const CheckInput& in) { return check_mu_bound(ideal_i(in)); }},
      {"rees",
       [](const RingContext&, const CheckInput& in) {
         return Reports{check_rees(ideal_i(in), in.seed, in.reduction_cap)};
       }},
      {"monomial-linear",
       [](const RingContext&, const CheckInput& in) { return Reports{check_monomial_linear(ideal_i(in), in.power_cap)}; }},
      {"contains", [](const RingContext&, const CheckInput& in) { return Reports{check_contains(ideal_i(in))}; }},
      {"monomial-powers", [](const RingContext& R, const CheckInput& in) { return check_monomial_powers(R, in.d, in.q); }},
      {"monomial-criterion",
       [](const RingContext& R, const CheckInput& in) { return Reports{check_monomial_criterion(R, in.d, in.power_cap)}; }},
      {"partial-annihilation",
       [](const RingContext&, const CheckInput& in) { return check_partial_annihilation(ideal_i(in), in.t); }},
      {"reg-of-A", [](const RingContext&, const CheckInput& in) { return Reports{check_reg_of_A(ideal_i(in), in.t)}; }},
      {"gorenstein",
       [](const RingContext&, const CheckInput& in) { return Reports{check_gorenstein_torsion(ideal_i(in), in.t)}; }},
      {"instant-elimination",
       [](const RingContext&, const CheckInput& in) { return Reports{check_instant_elimination(ideal_i(in))}; }},
      {"generator-bound", [](const RingContext&, const CheckInput& in) { return check_generator_bound(ideal_i(in)); }},
      {"eisenbud-ulrich",
       [](const RingContext&, const CheckInput& in) { return Reports{check_eisenbud_ulrich(ideal_i(in))}; }},
      {"us-reg", [](const RingContext&, const CheckInput& in) { return check_us_reg(ideal_i(in), std::max(in.k, 2)); }},
      {"us", [](const RingContext&, const CheckInput& in) { return check_us(ideal_i(in), in.power_cap); }},
      {"gin-conjecture",
       [](const RingContext&, const CheckInput& in) { return Reports{check_gin_conjecture(ideal_i(in), in.seed)}; }},
      {"sym-torsion",
       [](const RingContext&, const CheckInput& in) { return Reports{check_sym_torsion_conj(ideal_i(in), in.t)}; }},
  };
  return table;
}

uint64_t instance_seed(uint64_t seed, int index) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(index)};
  uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<uint64_t>(out[0]) << 32) | out[1];
}

int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(static_cast<uint64_t>(hi - lo + 1))); }

Ideal monomial_instance(const RingContext& R, int d, Rng& rng) {
  auto monos = monomials_of_degree(R.n, d);
  std::vector<Poly> gens;
  for (auto& m : monos) {
    bool pure = false;
    for (int i = 0; i < R.n; ++i)
      if (m.e[i] == d) pure = true;
    if (pure || rng.below(2) == 0) gens.push_back(Poly::monomial(m));
  }
  return Ideal(R, gens);
}

Ideal linearly_presented_instance(const RingContext& R, int d, Rng& rng) {
  const int full = static_cast<int>(binomial(R.n - 1 + d, R.n - 1));
  for (int attempt = 0; attempt < 40; ++attempt) {
    int count = uniform(rng, std::max(R.n, full - full / 2), full);
    Ideal I = random_ideal(R, d, count, rng.next(), RandomFlavor::Forms);
    if (krull_dim(I) != 0) continue;
    if (linear_steps(betti_table(I)) >= 1) return I;
  }
  return max_ideal_power(R, d);
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (auto& [id, f] : registry()) ids.push_back(id);
  return ids;
}

std::vector<BoundReport> run_check(const std::string& id, const RingContext& R, const CheckInput& in) {
  for (auto& [name, f] : registry())
    if (name == id) return f(R, in);
  throw std::invalid_argument("unknown statement '" + id + "'");
}

FuzzInstance fuzz_instance(const FuzzConfig& cfg, int index) {
  Rng rng(instance_seed(cfg.seed, index));
  FuzzInstance inst;
  inst.index = index;
  const int n = uniform(rng, cfg.n_min, cfg.n_max);
  const int d = uniform(rng, cfg.d_min, cfg.d_max);
  RingContext R(n);
  static const char* flavors[] = {"m-primary-forms", "forms", "monomials", "linearly-presented", "gorenstein"};
  int f = cfg.linearly_presented_only ? 3 : index % 5;
  inst.flavor = flavors[f];
  switch (f) {
    case 0:
      inst.I = random_ideal(R, d, uniform(rng, n, n + 2), rng.next(), RandomFlavor::MPrimaryForms);
      break;
    case 1:
      inst.I = random_ideal(R, d, uniform(rng, 2, n - 1), rng.next(), RandomFlavor::Forms);
      break;
    case 2:
      inst.I = monomial_instance(R, d, rng);
      break;
    case 3:
      inst.I = linearly_presented_instance(R, d, rng);
      break;
    default:
      inst.I = apolar_ideal_of_quadric(R, QuadraticForm::from_poly(R, random_form(R, 2, rng)));
  }
  switch (rng.below(4)) {
    case 0:
      inst.J = inst.I;
      break;
    case 1:
      inst.J = linear_subspace_ideal(R, uniform(rng, 1, n - 1), rng.next());
      break;
    case 2:
      inst.J = random_ideal(R, uniform(rng, cfg.d_min, cfg.d_max), uniform(rng, n, n + 1), rng.next(),
                            RandomFlavor::MPrimaryForms);
      break;
    default:
      inst.J = random_ideal(R, uniform(rng, cfg.d_min, cfg.d_max), uniform(rng, 1, n - 1), rng.next(),
                            RandomFlavor::Forms);
  }
  return inst;
}

std::vector<BoundReport> fuzz_checks(const FuzzInstance& inst, const FuzzConfig& cfg) {
  const Ideal& I = inst.I;
  const Ideal& J = inst.J;
  const RingContext& R = I.ring();
  const int n = R.n;
  const uint64_t seed = instance_seed(cfg.seed, inst.index) ^ 0x5bd1e995ULL;
  auto want = [&](const std::string& id) {
    return cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), id) != cfg.only.end();
  };
  Reports out;
  ModuleData A(R, ModulePresentation::cyclic(I)), B(R, ModulePresentation::cyclic(J));
  PairData P(A, B);

  for (int k = 0; k <= 1; ++k)
    for (int j = 0; j <= n; ++j) {
      const int N = n - j + k;
      if (want("tor-bound"))
        for (int p = 0; p <= N; ++p) append(out, check_tor_bound(P, j, k, p, N - p));
      if (want("generalization-of-regularity")) out.push_back(check_generalization_of_regularity(P, j, k));
      if (want("cm-case")) out.push_back(check_cm_case(P, j, k));
    }
  for (int k = 0; k <= 2; ++k) {
    if (want("reg-of-tor")) out.push_back(check_reg_tor(P, k));
    if (want("newregtor"))
      for (int p = k + std::max(B.dim(), 0); p <= std::min(A.codim(), n); ++p) out.push_back(check_newregtor(P, k, p));
    if (want("reg-of-tor-cm") && k > 0) out.push_back(check_reg_tor_cm(P, k));
  }
  if (want("subadd"))
    for (int p = 0; p <= n; ++p) out.push_back(check_subadd(P, p));
  if (want("socle-estimation"))
    for (const Ideal* K : {&I, &J})
      for (int q = 0; q <= n; ++q) out.push_back(check_socle_estimation(A, *K, q));
  if (want("socle-stepwise")) out.push_back(check_socle_stepwise(I, 1));
  if (want("products")) append(out, check_products(I, J));
  if (want("powers")) append(out, check_powers(I, 2));
  if (want("specialization"))
    for (int p = 0; p <= n; ++p)
      for (int s = 1; s <= 2; ++s) append(out, check_specialization(I, p, s, seed + p * 7 + s));
  const bool primary = krull_dim(I) == 0;
  if (primary && want("initials")) append(out, check_initials(I));
  if (want("quadric-count")) out.push_back(check_quadric_count(I));
  if (want("mu-bound")) append(out, check_mu_bound(I));
  if (want("rees")) out.push_back(check_rees(I, seed, 10));
  if (want("monomial-linear")) out.push_back(check_monomial_linear(I, 8));
  if (want("contains")) out.push_back(check_contains(I));
  if (primary) {
    if (want("partial-annihilation")) append(out, check_partial_annihilation(I, 2));
    if (want("reg-of-A")) out.push_back(check_reg_of_A(I, 1));
    if (want("gorenstein")) out.push_back(check_gorenstein_torsion(I, 2));
    if (want("instant-elimination") && n + static_cast<int>(I.gens().size()) <= 10)
      out.push_back(check_instant_elimination(I));
    if (want("generator-bound")) append(out, check_generator_bound(I));
  }
  if (want("hehi") && primary) out.push_back(check_hehi(I, seed));
  if (cfg.conjectures && primary) {
    if (want("eisenbud-ulrich")) out.push_back(check_eisenbud_ulrich(I));
    if (want("us-reg")) append(out, check_us_reg(I, 2));
    if (want("us")) append(out, check_us(I, 8));
    if (want("gin-conjecture")) out.push_back(check_gin_conjecture(I, seed));
    if (want("sym-torsion")) out.push_back(check_sym_torsion_conj(I, 2));
  }
  return out;
}

FuzzReport fuzz(const FuzzConfig& cfg) {
  struct Outcome {
    Reports reports;
    std::string source;
    std::string error;
  };
  std::vector<Outcome> results(std::max(cfg.count, 0));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.count; i = next++) {
      Outcome& o = results[i];
      try {
        FuzzInstance inst = fuzz_instance(cfg, i);
        o.source = print_source(inst.I.ring(), {{"I", inst.I}, {"J", inst.J}});
        o.reports = fuzz_checks(inst, cfg);
      } catch (const std::exception& e) {
        o.error = e.what();
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  FuzzReport rep;
  rep.config = cfg;
  rep.instances = cfg.count;
  for (int i = 0; i < cfg.count; ++i) {
    Outcome& o = results[i];
    if (!o.error.empty()) {
      rep.errors.push_back({i, o.error});
      continue;
    }
    bool satisfying = false;
    for (auto& r : o.reports) {
      ++rep.checks;
      StatementStats& st = rep.stats[r.theorem_id];
      ++st.checks;
      if (!r.applicable()) continue;
      ++st.applicable;
      if (r.kind == StatementKind::Theorem) satisfying = true;
      if (r.numeric_holds()) ++st.holds;
      if (r.sharp()) ++st.sharp;
      if (r.relation == Relation::Le && r.near_sharp()) ++st.near_sharp;
      if (r.kind == StatementKind::Informational) continue;
      if (!r.numeric_holds()) {
        auto& list = r.kind == StatementKind::Theorem ? rep.violations : rep.conjecture_violations;
        list.push_back({i, o.source, r});
      } else if (r.kind == StatementKind::Theorem && r.relation == Relation::Le && r.near_sharp() && !r.sharp() &&
                 rep.near_sharp.size() < 50) {
        rep.near_sharp.push_back({i, o.source, r});
      }
    }
    if (satisfying) ++rep.hypothesis_satisfying;
  }
  return rep;
}

}  // namespace cma
