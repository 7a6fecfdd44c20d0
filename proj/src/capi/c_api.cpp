#include "cmalg/cmalg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "cmalg/constructions.hpp"
#include "cmalg/reesalg.hpp"
#include "cmalg/render.hpp"
#include "cmalg/source.hpp"
#include "cmalg/verify.hpp"

using namespace cma;
using json = nlohmann::ordered_json;

struct cmalg_session {
  IdealSource src;
};

namespace {

thread_local std::string g_error;

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
cmalg_status guarded(F body) {
  try {
    g_error.clear();
    body();
    return CMALG_OK;
  } catch (const ParseError& e) {
    g_error = e.what();
    return CMALG_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return CMALG_ERR_MEMORY;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return CMALG_ERR_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_error = e.what();
    return CMALG_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_error = e.what();
    return CMALG_ERR_RUNTIME;
  }
}

void require(bool ok, const char* msg) {
  if (!ok) throw ArgumentError(msg);
}

const Ideal& pick_ideal(const cmalg_session* s, const char* name) {
  require(s != nullptr, "null session");
  if (!name || !*name) {
    require(!s->src.ideals.empty(), "the input declares no ideal");
    return s->src.ideals.front().second;
  }
  return s->src.get(name);
}

ModuleExpr pick_module(const cmalg_session* s, const char* text) {
  require(s != nullptr, "null session");
  if (!text || !*text) {
    require(!s->src.ideals.empty(), "the input declares no ideal");
    return parse_module_expr(s->src, "S/" + s->src.ideals.front().first);
  }
  return parse_module_expr(s->src, text);
}

MonomialOrder parse_order(const char* order, int n) {
  std::string o = order ? order : "grevlex";
  if (o == "grevlex") return MonomialOrder::grevlex();
  if (o == "lex") return MonomialOrder::lex();
  if (o.rfind("eliminate", 0) == 0) {
    int k = std::atoi(o.c_str() + 9);
    require(k >= 1 && k < n, "eliminate<k> needs 1 <= k < n");
    return MonomialOrder::eliminate(k);
  }
  throw ArgumentError("unknown order '" + o + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(char** out, const std::string& s) {
  require(out != nullptr, "null output pointer");
  *out = dup_string(s);
}

json module_json(const RingContext& R, const ModulePresentation& M) {
  auto [res, T] = minimal_free_resolution(R, M);
  (void)res;
  HilbertSeries hs = hilbert_series(R, M);
  json out{{"dim", hs.dimension()}};
  if (auto f = hs.finite_dims()) out["hilbert"] = summary_json(*f);
  out["resolution"] = betti_json(R, T);
  return out;
}

std::string module_text(const RingContext& R, const ModulePresentation& M) {
  auto [res, T] = minimal_free_resolution(R, M);
  (void)res;
  HilbertSeries hs = hilbert_series(R, M);
  std::ostringstream o;
  o << "dim " << hs.dimension() << "\n";
  o << "reg " << ext_text(T.regularity()) << "\n";
  if (auto f = hs.finite_dims()) o << "hilbert function:\n" << render_summary(*f);
  o << render_betti(T);
  return o.str();
}

std::string polys_text(const RingContext& R, const std::vector<Poly>& g) {
  std::string s;
  for (auto& f : g) s += R.to_string(f) + "\n";
  return s;
}

json polys_json(const RingContext& R, const std::vector<Poly>& g) {
  json a = json::array();
  for (auto& f : g) a.push_back(R.to_string(f));
  return a;
}

}  // namespace

extern "C" {

const char* cmalg_version(void) { return "1.0.0"; }
const char* cmalg_last_error(void) { return g_error.c_str(); }
void cmalg_string_free(char* s) { std::free(s); }

void cmalg_check_params_init(cmalg_check_params* p) {
  if (!p) return;
  *p = cmalg_check_params{};
  p->t = 2;
  p->s = 1;
  p->d = 2;
  p->seed = 1;
  p->power_cap = 8;
  p->reduction_cap = 10;
}

void cmalg_fuzz_params_init(cmalg_fuzz_params* p) {
  if (!p) return;
  FuzzConfig c;
  *p = cmalg_fuzz_params{};
  p->seed = c.seed;
  p->count = c.count;
  p->n_min = c.n_min;
  p->n_max = c.n_max;
  p->d_min = c.d_min;
  p->d_max = c.d_max;
  p->jobs = c.jobs;
  p->conjectures = c.conjectures ? 1 : 0;
}

cmalg_status cmalg_session_new(const char* source, cmalg_session** out) {
  return guarded([&] {
    require(source && out, "null argument");
    *out = nullptr;
    auto* s = new cmalg_session{parse_source(source)};
    *out = s;
  });
}

void cmalg_session_free(cmalg_session* s) { delete s; }

cmalg_status cmalg_session_source(const cmalg_session* s, char** out) {
  return guarded([&] {
    require(s != nullptr, "null session");
    emit(out, print_source(s->src));
  });
}

cmalg_status cmalg_gb(const cmalg_session* s, const char* ideal, const char* order, int as_json, char** out) {
  return guarded([&] {
    const Ideal& I = pick_ideal(s, ideal);
    const GroebnerBasis& G = I.gb(parse_order(order, I.n()));
    if (as_json)
      emit(out, dump(json{{"ring", ring_json(I.ring())}, {"order", G.order.name()}, {"gb", polys_json(I.ring(), G.elements)}}));
    else
      emit(out, polys_text(I.ring(), G.elements));
  });
}

cmalg_status cmalg_initial(const cmalg_session* s, const char* ideal, const char* order, int as_json, char** out) {
  return guarded([&] {
    const Ideal& I = pick_ideal(s, ideal);
    MonomialOrder ord = parse_order(order, I.n());
    MonomialIdeal in = initial_ideal(I, ord);
    std::vector<Poly> g;
    for (auto& m : in.gens) g.push_back(Poly::monomial(m));
    if (as_json)
      emit(out, dump(json{{"ring", ring_json(I.ring())}, {"order", ord.name()}, {"initial", polys_json(I.ring(), g)}}));
    else
      emit(out, polys_text(I.ring(), g));
  });
}

cmalg_status cmalg_betti(const cmalg_session* s, const char* module, int as_json, char** out) {
  return guarded([&] {
    ModuleExpr e = pick_module(s, module);
    BettiTable T = minimal_free_resolution(s->src.ring, e.module).second;
    emit(out, as_json ? dump(betti_json(s->src.ring, T)) : render_betti(T));
  });
}

cmalg_status cmalg_reg(const cmalg_session* s, const char* module, int as_json, char** out) {
  return guarded([&] {
    ModuleExpr e = pick_module(s, module);
    BettiTable T = minimal_free_resolution(s->src.ring, e.module).second;
    emit(out, as_json ? dump(json{{"module", e.text}, {"reg", ext_json(T.regularity())}}) : ext_text(T.regularity()) + "\n");
  });
}

cmalg_status cmalg_dim(const cmalg_session* s, const char* module, int as_json, char** out) {
  return guarded([&] {
    ModuleExpr e = pick_module(s, module);
    const RingContext& R = s->src.ring;
    HomologicalInvariants h = homological_invariants(R, e.module);
    if (as_json) {
      emit(out, dump(json{{"module", e.text},
                          {"dim", h.dim},
                          {"codim", h.codim},
                          {"depth", ext_json(h.depth)},
                          {"pd", ext_json(h.pd)}}));
    } else {
      std::ostringstream o;
      o << "dim " << h.dim << "\ncodim " << h.codim << "\ndepth " << ext_text(h.depth) << "\npd " << ext_text(h.pd)
        << "\n";
      emit(out, o.str());
    }
  });
}

cmalg_status cmalg_tor(const cmalg_session* s, const char* A, const char* B, int k, int as_json, char** out) {
  return guarded([&] {
    ModuleExpr a = pick_module(s, A), b = pick_module(s, B ? B : A);
    require(k >= 0, "k must be nonnegative");
    const RingContext& R = s->src.ring;
    ModulePresentation T = tor_module(R, a.module, b.module, k);
    if (as_json) {
      json j = module_json(R, T);
      j = json{{"k", k}, {"A", a.text}, {"B", b.text}, {"tor", j}};
      emit(out, dump(j));
    } else {
      emit(out, "Tor_" + std::to_string(k) + "(" + a.text + ", " + b.text + ")\n" + module_text(R, T));
    }
  });
}

cmalg_status cmalg_ext(const cmalg_session* s, const char* module, int k, int as_json, char** out) {
  return guarded([&] {
    ModuleExpr m = pick_module(s, module);
    require(k >= 0, "k must be nonnegative");
    const RingContext& R = s->src.ring;
    ModulePresentation E = ext_module(R, m.module, k);
    if (as_json)
      emit(out, dump(json{{"k", k}, {"module", m.text}, {"ext", module_json(R, E)}}));
    else
      emit(out, "Ext^" + std::to_string(k) + "(" + m.text + ", S)\n" + module_text(R, E));
  });
}

cmalg_status cmalg_power_check(const cmalg_session* s, const char* ideal, int cap, int as_json, char** out) {
  return guarded([&] {
    const Ideal& I = pick_ideal(s, ideal);
    require(cap >= 1, "cap must be positive");
    StabilizationReport r = power_stabilization(I, cap);
    if (as_json) {
      json holds = json::array();
      for (bool h : r.holds) holds.push_back(h);
      emit(out, dump(json{{"cap", cap},
                          {"s", r.s ? json(*r.s) : json(nullptr)},
                          {"next_holds", r.next_holds},
                          {"holds", holds}}));
    } else {
      std::ostringstream o;
      if (r.s)
        o << "I^" << *r.s << " = m^" << *r.s * I.max_gen_degree() << " (least exponent), next power "
          << (r.next_holds ? "also equal" : "differs") << "\n";
      else
        o << "no power up to " << cap << " equals the matching power of m\n";
      emit(out, o.str());
    }
  });
}

cmalg_status cmalg_torsion(const cmalg_session* s, const char* ideal, int t, int as_json, char** out) {
  return guarded([&] {
    const Ideal& I = pick_ideal(s, ideal);
    require(t >= 1, "t must be positive");
    TorsionReport r = sym_power_torsion(I, t);
    if (as_json) {
      emit(out, dump(json{{"t", r.t},
                          {"d", r.d},
                          {"reg", ext_json(r.reg)},
                          {"gen_degrees", r.gen_degrees},
                          {"degrees", summary_json(r.degrees)}}));
    } else {
      std::ostringstream o;
      o << "torsion of Sym_" << t << "(I): ";
      if (r.zero()) {
        o << "0\n";
      } else {
        o << "reg " << r.reg << ", generators in degrees";
        for (int g : r.gen_degrees) o << " " << g;
        o << "\n" << render_summary(r.degrees);
      }
      emit(out, o.str());
    }
  });
}

cmalg_status cmalg_eliminate(const cmalg_session* s, const char* ideal, int as_json, char** out) {
  return guarded([&] {
    const Ideal& I = pick_ideal(s, ideal);
    EliminationReport r = instant_eliminate(I);
    const RingContext& RT = r.elimination.ring();
    if (as_json) {
      emit(out, dump(json{{"linear_steps", r.linear_steps},
                          {"needed_steps", r.needed_steps},
                          {"hypothesis", r.hypothesis},
                          {"equal", r.equal},
                          {"annihilator", polys_json(RT, minimalize(r.annihilator).gens())},
                          {"elimination", polys_json(RT, minimalize(r.elimination).gens())}}));
    } else {
      std::ostringstream o;
      o << "linear steps " << r.linear_steps << " (needed " << r.needed_steps << ")\n";
      o << "ann(coker psi) " << (r.equal ? "equals" : "differs from") << " the elimination ideal\n";
      o << "elimination ideal:\n" << polys_text(RT, minimalize(r.elimination).gens());
      if (!r.equal) o << "annihilator:\n" << polys_text(RT, minimalize(r.annihilator).gens());
      emit(out, o.str());
    }
  });
}

cmalg_status cmalg_reduction(const cmalg_session* s, const char* ideal, const char* J, unsigned long long seed,
                             int cap, int as_json, char** out) {
  return guarded([&] {
    const Ideal& I = pick_ideal(s, ideal);
    require(cap >= 0, "cap must be nonnegative");
    Ideal K;
    if (J && *J) {
      K = s->src.get(J);
    } else {
      const RingContext& R = I.ring();
      Rng rng(seed);
      std::vector<Poly> g;
      for (int k = 0; k < R.n; ++k) {
        Poly f;
        for (auto& h : I.gens()) f = R.add(f, R.scale(h, static_cast<uint32_t>(rng.below(R.F().p))));
        g.push_back(f);
      }
      K = Ideal(R, g);
    }
    auto r = reduction_number(K, I, cap);
    if (as_json)
      emit(out, dump(json{{"cap", cap}, {"reduction_number", r ? json(*r) : json(nullptr)},
                          {"J", polys_json(K.ring(), K.gens())}}));
    else
      emit(out, r ? "r_J(I) = " + std::to_string(*r) + "\n" : "r_J(I) > " + std::to_string(cap) + "\n");
  });
}

cmalg_status cmalg_check_ids(char** out) {
  return guarded([&] {
    std::string s;
    for (auto& id : check_ids()) s += id + "\n";
    emit(out, s);
  });
}

cmalg_status cmalg_check(const cmalg_session* s, const char* id, const cmalg_check_params* p, int as_json, char** out,
                         cmalg_verdict* verdict) {
  return guarded([&] {
    require(s && id && p, "null argument");
    CheckInput in;
    ModuleExpr a = pick_module(s, p->A);
    ModuleExpr b = pick_module(s, p->B ? p->B : p->A);
    in.A = a.module;
    in.B = b.module;
    in.I = a.ideal;
    in.J = b.ideal;
    in.j = p->j, in.k = p->k, in.p = p->p, in.q = p->q, in.t = p->t, in.s = p->s, in.d = p->d;
    in.seed = p->seed;
    in.power_cap = p->power_cap;
    in.reduction_cap = p->reduction_cap;
    std::vector<BoundReport> reps = run_check(id, s->src.ring, in);
    bool any_applicable = false, violated = false;
    for (auto& r : reps) {
      if (r.kind == StatementKind::Informational) continue;
      any_applicable |= r.applicable();
      violated |= r.violated();
    }
    if (verdict) *verdict = violated ? CMALG_VIOLATED : any_applicable ? CMALG_HOLDS : CMALG_NOT_APPLICABLE;
    if (as_json) {
      json arr = json::array();
      for (auto& r : reps) arr.push_back(report_json(r));
      emit(out, dump(json{{"ring", ring_json(s->src.ring)}, {"reports", arr}}));
    } else {
      std::string t;
      for (auto& r : reps) t += render_report(r);
      emit(out, t);
    }
  });
}

cmalg_status cmalg_fuzz(const cmalg_fuzz_params* p, int as_json, char** out, int* theorem_violations) {
  return guarded([&] {
    require(p != nullptr, "null argument");
    FuzzConfig c;
    c.seed = p->seed;
    c.count = p->count;
    c.n_min = p->n_min, c.n_max = p->n_max, c.d_min = p->d_min, c.d_max = p->d_max;
    c.jobs = p->jobs;
    c.conjectures = p->conjectures != 0;
    c.linearly_presented_only = p->linearly_presented_only != 0;
    require(c.count >= 0, "count must be nonnegative");
    require(c.n_min >= 2 && c.n_min <= c.n_max && c.n_max <= 6, "n range must satisfy 2 <= n_min <= n_max <= 6");
    require(c.d_min >= 1 && c.d_min <= c.d_max && c.d_max <= 5, "d range must satisfy 1 <= d_min <= d_max <= 5");
    if (p->only && *p->only) {
      std::stringstream ss(p->only);
      std::string id;
      auto ids = check_ids();
      while (std::getline(ss, id, ',')) {
        require(std::find(ids.begin(), ids.end(), id) != ids.end(), "unknown statement id in --only");
        c.only.push_back(id);
      }
    }
    FuzzReport r = fuzz(c);
    if (theorem_violations) *theorem_violations = static_cast<int>(r.violations.size());
    emit(out, as_json ? dump(fuzz_json(r)) : render_fuzz(r));
  });
}

cmalg_status cmalg_example_names(char** out) {
  return guarded([&] {
    std::string s;
    for (auto& n : paper_example_names()) s += n + "\n";
    s += "caviglia-tor-pair\ncatalecticant\nherzog-hibi\n";
    emit(out, s);
  });
}

cmalg_status cmalg_example(const char* name, int param, char** out) {
  return guarded([&] {
    require(name != nullptr, "null argument");
    std::string n = name;
    if (n == "caviglia-tor-pair") {
      auto [J, L] = caviglia_tor_pair(param ? param : 3);
      emit(out, print_source(J.ring(), {{"J", J}, {"L", L}}));
    } else if (n == "catalecticant") {
      RingContext R(param ? param : 3);
      emit(out, print_source(R, {{"I", catalecticant_space(R.F(), R.n).ideal(R)}}));
    } else if (n == "herzog-hibi") {
      RingContext R(3);
      emit(out, print_source(R, {{"I", herzog_hibi_J(R, param ? param : 4)}}));
    } else {
      int d = param;
      if (!d && n == "caviglia2") d = 3;
      if (!d && n == "conca") d = 2;
      Ideal I = paper_example(n, d);
      emit(out, print_source(I.ring(), {{"I", I}}));
    }
  });
}

}  // extern "C"
