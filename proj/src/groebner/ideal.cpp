#include <algorithm>
#include <set>
#include <unordered_map>

#include "cmalg/groebner.hpp"
#include "cmalg/linalg.hpp"

namespace cma {

std::vector<Monomial> GroebnerBasis::leads() const {
  std::vector<Monomial> out;
  for (auto& g : elements) out.push_back(g.leading(order).m);
  return out;
}

GroebnerBasis buchberger(const RingContext& R, const std::vector<Poly>& gens, const MonomialOrder& ord) {
  ModuleOrder mo = ModuleOrder::top(ord);
  std::vector<ModVec> in;
  for (auto& g : gens)
    if (!g.is_zero()) in.push_back(to_modvec(g, mo));
  GBOptions opt;
  opt.product_criterion = true;
  auto G = module_groebner(in, mo, R.F(), opt);
  GroebnerBasis out;
  out.order = ord;
  for (auto& g : G) out.elements.push_back(to_poly(g, R.F()));
  return out;
}

Poly normal_form(const RingContext& R, const Poly& f, const GroebnerBasis& G) {
  ModuleOrder mo = ModuleOrder::top(G.order);
  std::vector<ModVec> g;
  for (auto& e : G.elements) g.push_back(to_modvec(e, mo));
  return to_poly(module_normal_form(to_modvec(f, mo), g, mo, R.F()), R.F());
}

Ideal::Ideal(RingContext R, std::vector<Poly> gens) : R_(std::move(R)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

bool Ideal::is_homogeneous() const {
  for (auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

int Ideal::min_gen_degree() const {
  int d = -1;
  for (auto& g : gens_)
    if (d < 0 || g.degree() < d) d = g.degree();
  return d;
}

int Ideal::max_gen_degree() const {
  int d = -1;
  for (auto& g : gens_) d = std::max(d, g.max_degree());
  return d;
}

const GroebnerBasis& Ideal::gb(const MonomialOrder& ord) const {
  std::string key = ord.name();
  auto it = cache_->find(key);
  if (it != cache_->end()) return it->second;
  return cache_->emplace(key, buchberger(R_, gens_, ord)).first->second;
}

MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& ord) {
  return MonomialIdeal(I.n(), I.gb(ord).leads());
}

MonomialIdeal initial_ideal(const Ideal& I) { return initial_ideal(I, I.ring().order); }

bool ideal_contains(const Ideal& I, const Poly& f) {
  if (f.is_zero()) return true;
  return normal_form(I.ring(), f, I.gb()).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  for (auto& g : J.gens())
    if (!ideal_contains(I, g)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  // Reduced Groebner bases are unique.
  const auto& a = I.gb().elements;
  const auto& b = J.gb().elements;
  return a == b;
}

bool is_unit_ideal(const Ideal& I) {
  const auto& g = I.gb().elements;
  return g.size() == 1 && g[0].size() == 1 && g[0].terms[0].m.is_one();
}

std::vector<Poly> dedup_generators(const RingContext& R, const std::vector<Poly>& g) {
  std::vector<Poly> out;
  std::set<std::vector<std::pair<std::vector<int>, uint32_t>>> seen;
  for (auto& f : g) {
    if (f.is_zero()) continue;
    Poly m = R.scale(f, R.F().inv(f.terms.front().c));
    std::vector<std::pair<std::vector<int>, uint32_t>> key;
    for (auto& t : m.terms) key.push_back({t.m.exponents(R.n), t.c});
    if (seen.insert(key).second) out.push_back(m);
  }
  return out;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Poly> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), dedup_generators(I.ring(), g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Poly> g;
  for (auto& a : I.gens())
    for (auto& b : J.gens()) g.push_back(I.ring().mul(a, b));
  return Ideal(I.ring(), dedup_generators(I.ring(), g));
}

Ideal ideal_power(const Ideal& I, int k) {
  if (k < 1) throw std::invalid_argument("ideal_power: exponent must be positive");
  Ideal P = Ideal(I.ring(), dedup_generators(I.ring(), I.gens()));
  Ideal base = P;
  for (int i = 1; i < k; ++i) P = ideal_product(P, base);
  return P;
}

namespace {
// Moves every polynomial into a ring with `shift` fresh leading variables.
Poly shift_vars(const Poly& f, int shift) {
  Poly r;
  for (auto& t : f.terms) {
    Monomial m;
    for (int i = 0; i + shift < kMaxVars; ++i) m.e[i + shift] = t.m.e[i];
    m.deg = t.m.deg;
    r.terms.push_back({m, t.c});
  }
  return r;  // shifting preserves lex key order
}

Poly unshift_vars(const Poly& f, int shift) {
  Poly r;
  for (auto& t : f.terms) {
    Monomial m;
    for (int i = shift; i < kMaxVars; ++i) m.e[i - shift] = t.m.e[i];
    m.deg = t.m.deg;
    r.terms.push_back({m, t.c});
  }
  return r;
}

RingContext extended_ring(const RingContext& R, int extra) {
  if (R.n + extra > kMaxVars) throw std::invalid_argument("too many variables for auxiliary ring");
  std::vector<std::string> names;
  for (int i = 0; i < extra; ++i) names.push_back("_t" + std::to_string(i));
  for (auto& s : R.names) names.push_back(s);
  return RingContext(names, R.field.p);
}

Poly exact_divide(const RingContext& R, Poly h, const Poly& g) {
  const MonomialOrder ord = MonomialOrder::grevlex();
  Term lg = g.leading(ord);
  uint32_t inv = R.F().inv(lg.c);
  std::vector<Term> q;
  while (!h.is_zero()) {
    Term lh = h.leading(ord);
    if (!lg.m.divides(lh.m)) throw std::logic_error("exact_divide: not divisible");
    Monomial m = lh.m / lg.m;
    uint32_t c = R.F().mul(lh.c, inv);
    q.push_back({m, c});
    h = R.sub(h, R.mul_term(g, m, c));
  }
  return Poly::from_terms(std::move(q), R.F());
}
}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  const RingContext& R = I.ring();
  if (I.gens().empty() || J.gens().empty()) return Ideal(R, {});
  RingContext T = extended_ring(R, 1);
  Poly t = T.var(0);
  Poly one_minus_t = T.sub(T.constant(1), t);
  std::vector<Poly> g;
  for (auto& f : I.gens()) g.push_back(T.mul(t, shift_vars(f, 1)));
  for (auto& f : J.gens()) g.push_back(T.mul(one_minus_t, shift_vars(f, 1)));
  GroebnerBasis G = buchberger(T, g, MonomialOrder::eliminate(1));
  std::vector<Poly> out;
  for (auto& e : G.elements) {
    bool has_t = false;
    for (auto& term : e.terms)
      if (term.m.e[0]) {
        has_t = true;
        break;
      }
    if (!has_t) out.push_back(unshift_vars(e, 1));
  }
  return Ideal(R, out);
}

Ideal ideal_quotient(const Ideal& I, const Poly& g) {
  const RingContext& R = I.ring();
  if (g.is_zero()) return Ideal(R, {R.constant(1)});
  Ideal inter = ideal_intersect(I, Ideal(R, {g}));
  std::vector<Poly> out;
  for (auto& h : inter.gens()) out.push_back(exact_divide(R, h, g));
  return Ideal(R, out);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  const RingContext& R = I.ring();
  if (J.gens().empty()) return Ideal(R, {R.constant(1)});
  Ideal acc = ideal_quotient(I, J.gens()[0]);
  for (size_t i = 1; i < J.gens().size(); ++i) acc = ideal_intersect(acc, ideal_quotient(I, J.gens()[i]));
  return Ideal(R, acc.gb().elements);
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur(I.ring(), I.gb().elements);
  for (;;) {
    Ideal next = ideal_quotient(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = Ideal(I.ring(), next.gb().elements);
  }
}

Ideal elimination_ideal(const Ideal& I, const std::vector<int>& drop) {
  const RingContext& R = I.ring();
  std::vector<int> perm;  // new position -> old variable
  std::vector<char> dropped(R.n, 0);
  for (int v : drop) {
    if (v < 0 || v >= R.n) throw std::invalid_argument("elimination_ideal: bad variable index");
    dropped[v] = 1;
  }
  for (int v = 0; v < R.n; ++v)
    if (dropped[v]) perm.push_back(v);
  const int k = static_cast<int>(perm.size());
  for (int v = 0; v < R.n; ++v)
    if (!dropped[v]) perm.push_back(v);
  auto permute = [&](const Poly& f, bool forward) {
    std::vector<Term> t;
    for (auto& term : f.terms) {
      Monomial m;
      for (int i = 0; i < R.n; ++i) {
        if (forward)
          m.e[i] = term.m.e[perm[i]];
        else
          m.e[perm[i]] = term.m.e[i];
      }
      m.deg = term.m.deg;
      t.push_back({m, term.c});
    }
    return Poly::from_terms(std::move(t), R.F());
  };
  std::vector<Poly> g;
  for (auto& f : I.gens()) g.push_back(permute(f, true));
  GroebnerBasis G = buchberger(R, g, MonomialOrder::eliminate(k));
  std::vector<Poly> out;
  for (auto& e : G.elements) {
    bool keep = true;
    for (auto& term : e.terms)
      for (int i = 0; i < k && keep; ++i)
        if (term.m.e[i]) keep = false;
    if (keep) out.push_back(permute(e, false));
  }
  return Ideal(R, out);
}

Ideal minimalize(const Ideal& I) {
  const RingContext& R = I.ring();
  if (!I.is_homogeneous()) throw std::invalid_argument("minimalize: inhomogeneous ideal");
  std::vector<Poly> gens = dedup_generators(R, I.gens());
  std::stable_sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  std::vector<Poly> kept;
  size_t i = 0;
  while (i < gens.size()) {
    int d = gens[i].degree();
    auto basis = monomials_of_degree(R.n, d);
    std::unordered_map<Monomial, int, MonomialHash> pos;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) pos[basis[k]] = k;
    auto to_dense = [&](const Poly& f) {
      DenseVec v(basis.size(), 0);
      for (auto& t : f.terms) v[pos.at(t.m)] = t.c;
      return v;
    };
    Echelon span(R.F(), static_cast<int>(basis.size()));
    for (auto& k : kept) {
      int e = d - k.degree();
      for (auto& m : monomials_of_degree(R.n, e)) span.add(to_dense(R.mul_term(k, m, 1)));
    }
    for (; i < gens.size() && gens[i].degree() == d; ++i)
      if (span.add(to_dense(gens[i]))) kept.push_back(gens[i]);
  }
  return Ideal(R, kept);
}

int krull_dim(const Ideal& I) {
  if (I.gens().empty()) return I.n();
  return initial_ideal(I).krull_dim();
}

long long hilbert_function(const Ideal& I, int d) {
  if (d < 0) return 0;
  if (I.gens().empty()) return binomial(d + I.n() - 1, I.n() - 1);
  return initial_ideal(I).hilbert_function(d);
}

IntPoly hilbert_series_numerator(const Ideal& I) {
  if (I.gens().empty()) return {1};
  return initial_ideal(I).hilbert_numerator();
}

MonomialIdeal gin(const Ideal& I, uint64_t seed) {
  const RingContext& R = I.ring();
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<DenseVec> rows(R.n, DenseVec(R.n));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<uint32_t>(rng.below(R.F().p));
    if (rank_of(R.F(), rows, R.n) < R.n) continue;
    std::vector<Poly> subs;
    for (int i = 0; i < R.n; ++i) {
      std::vector<Term> t;
      for (int j = 0; j < R.n; ++j) t.push_back({Monomial::var(j), rows[i][j]});
      subs.push_back(Poly::from_terms(t, R.F()));
    }
    std::vector<Poly> g;
    for (auto& f : I.gens()) g.push_back(R.substitute(f, subs));
    Ideal J(R, g);
    return initial_ideal(J, MonomialOrder::grevlex());
  }
  throw std::runtime_error("gin: could not draw an invertible change of coordinates");
}

GinResult gin_checked(const Ideal& I, uint64_t seed) {
  GinResult r;
  r.ideal = gin(I, seed);
  r.stable = gin(I, seed ^ 0x5bd1e995ULL) == r.ideal;
  return r;
}

Ideal max_ideal(const RingContext& R) {
  std::vector<Poly> g;
  for (int i = 0; i < R.n; ++i) g.push_back(R.var(i));
  return Ideal(R, g);
}

Ideal max_ideal_power(const RingContext& R, int d) {
  std::vector<Poly> g;
  for (auto& m : monomials_of_degree(R.n, d)) g.push_back(Poly::monomial(m));
  return Ideal(R, g);
}

}  // namespace cma
