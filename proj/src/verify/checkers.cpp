#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "cmalg/constructions.hpp"
#include "cmalg/linalg.hpp"
#include "cmalg/reesalg.hpp"
#include "cmalg/verify.hpp"

namespace cma {

namespace {

// Per-thread memo of the expensive invariants shared by several statements.
std::string ideal_key(const Ideal& I) {
  std::string k = std::to_string(I.ring().F().p) + ":" + std::to_string(I.n());
  for (auto& g : I.gens()) {
    k += '|';
    for (auto& t : g.terms) {
      k += std::to_string(t.c);
      for (int i = 0; i < I.n(); ++i) k += ',' + std::to_string(t.m.e[i]);
      k += ';';
    }
  }
  return k;
}

template <class V>
struct Memo {
  std::map<std::string, V> table;
  template <class F>
  V get(const std::string& key, F compute) {
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    if (table.size() >= 64) table.clear();
    return table.emplace(key, compute()).first->second;
  }
};

BettiTable cached_betti(const Ideal& I) {
  thread_local Memo<BettiTable> memo;
  return memo.get(ideal_key(I), [&] { return betti_table(I); });
}

TorsionReport cached_torsion(const Ideal& I, int t) {
  thread_local Memo<TorsionReport> memo;
  return memo.get(std::to_string(t) + "#" + ideal_key(I), [&] { return sym_power_torsion(I, t); });
}

Ideal cached_power(const Ideal& I, int t) {
  thread_local Memo<Ideal> memo;
  return memo.get(std::to_string(t) + "#" + ideal_key(I), [&] { return ideal_power(I, t); });
}

}  // namespace

bool BoundReport::applicable() const {
  for (auto& h : hypotheses)
    if (!h.pass) return false;
  return true;
}

bool BoundReport::numeric_holds() const { return relation == Relation::Eq ? lhs == rhs : lhs <= rhs; }

bool BoundReport::near_sharp() const {
  return is_finite(lhs) && is_finite(rhs) && rhs - lhs >= 0 && rhs - lhs <= 1;
}

void BoundReport::hypothesis(const std::string& name, bool pass, std::vector<std::pair<std::string, long long>> w) {
  hypotheses.push_back({name, pass, std::move(w)});
}

ModuleData::ModuleData(const RingContext& R, ModulePresentation M) : R_(R), M_(std::move(M)) {}

const BettiTable& ModuleData::betti() {
  if (!betti_) betti_ = minimal_free_resolution(R_, M_).second;
  return *betti_;
}

int ModuleData::t(int p) {
  if (p < 0) return kNegInf;
  return betti().t(p);
}

int ModuleData::reg() {
  if (dim() <= 0 && !betti_) return finite_top();
  return betti().regularity();
}

// Top degree of a finite length module, read from its Hilbert series.
int ModuleData::finite_top() {
  if (!top_) {
    auto dims = hilbert_series(R_, M_).finite_dims();
    top_ = dims && !dims->dims.empty() ? dims->top : kNegInf;
  }
  return *top_;
}

int ModuleData::dim() {
  if (!dim_) dim_ = hilbert_series(R_, M_).dimension();
  return *dim_;
}

bool ModuleData::zero() { return dim() < 0; }
int ModuleData::codim() { return zero() ? kPosInf : R_.n - dim(); }
int ModuleData::depth() { return zero() ? kPosInf : R_.n - betti().length(); }
bool ModuleData::cohen_macaulay() { return !zero() && depth() == dim(); }

int ModuleData::reg_h(int j) {
  if (j < 0 || j > R_.n) return kNegInf;
  if (dim() <= 0) return j == 0 ? finite_top() : kNegInf;
  if (!reg_h_) reg_h_ = reg_local_cohomology_all(R_, M_);
  return (*reg_h_)[j];
}

std::optional<Ideal> ModuleData::cyclic_ideal() const {
  if (!(M_.cover.degs == std::vector<int>{0})) return std::nullopt;
  std::vector<Poly> gens;
  for (auto& c : M_.relations.cols)
    if (!c[0].is_zero()) gens.push_back(c[0]);
  return Ideal(R_, gens);
}

ModuleData& PairData::tor(int k) {
  auto it = tor_.find(k);
  if (it == tor_.end()) {
    const RingContext& R = A_.ring();
    auto I = A_.cyclic_ideal(), J = B_.cyclic_ideal();
    ModulePresentation T;
    if (I && J && k == 0) {
      T = ModulePresentation::cyclic(ideal_sum(*I, *J));
    } else if (I && J && k == 1) {
      // Tor_1(S/I, S/J) = (I cap J) / IJ
      Ideal meet = ideal_intersect(*I, *J), prod = ideal_product(*I, *J);
      std::vector<Column> U, V;
      std::vector<int> ud, vd;
      for (auto& g : meet.gens()) U.push_back({g}), ud.push_back(g.degree());
      for (auto& g : prod.gens()) V.push_back({g}), vd.push_back(g.degree());
      T = module_subquotient(R, FreeModule::ring(), U, ud, V, vd);
    } else {
      T = tor_module(R, A_.module(), B_.module(), k);
    }
    it = tor_.emplace(k, std::make_unique<ModuleData>(R, std::move(T))).first;
  }
  return *it->second;
}

const std::optional<GradedVectorSpaceSummary>& PairData::finite_tor(int k) {
  auto it = finite_.find(k);
  if (it == finite_.end()) {
    std::optional<GradedVectorSpaceSummary> v;
    auto I = A_.cyclic_ideal(), J = B_.cyclic_ideal();
    if (I && J && (A_.dim() <= 0 || B_.dim() <= 0)) v = tor_dims_finite(*I, *J, k);
    it = finite_.emplace(k, std::move(v)).first;
  }
  return it->second;
}

int PairData::tor_reg(int k) {
  auto& f = finite_tor(k);
  return f ? f->top : tor(k).reg();
}

int PairData::tor_reg_h(int k, int j) {
  auto& f = finite_tor(k);
  if (f) return j == 0 ? f->top : kNegInf;
  return tor(k).reg_h(j);
}

int PairData::delta() {
  auto& f = finite_tor(1);
  if (f) return f->dims.empty() ? -1 : 0;
  return tor(1).dim();
}

namespace {

int add3(int a, int b, int c) { return ext_add(ext_add(a, b), c); }

void delta_hypothesis(BoundReport& r, int delta, int bound = 1) {
  r.hypothesis("dim Tor_1(A,B) <= " + std::to_string(bound), delta <= bound, {{"delta", delta}});
}

int single_degree_of(const Ideal& I) {
  if (I.gens().empty() || !I.is_homogeneous()) return -1;
  return I.min_gen_degree() == I.max_gen_degree() ? I.min_gen_degree() : -1;
}

// Regularity of the ideal I from the Betti table of S/I.
int reg_ideal(const BettiTable& T) { return ext_add(T.regularity(), 1); }
int t_of_ideal(const BettiTable& T, int p) { return p < 0 ? kNegInf : T.t(p + 1); }

// Least e with m^e contained in K; K must be m-primary.
int least_power_contained(const Ideal& K) {
  HilbertSeries hs;
  hs.num = hilbert_series_numerator(K);
  hs.n = K.n();
  auto dims = hs.finite_dims();
  if (!dims) throw std::logic_error("least_power_contained: ideal is not m-primary");
  return dims->dims.empty() ? 0 : dims->top + 1;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int linear_steps_or(const BettiTable& T, int fallback) {
  try {
    return linear_steps(T);
  } catch (const std::invalid_argument&) {
    return fallback;
  }
}

long long mu(const BettiTable& T) { return T.total(1); }

bool is_monomial_ideal(const Ideal& I) {
  for (auto& g : I.gens())
    if (g.terms.size() != 1) return false;
  return true;
}

Ideal general_combinations(const Ideal& I, int count, uint64_t seed) {
  const RingContext& R = I.ring();
  Rng rng(seed);
  std::vector<Poly> out;
  for (int k = 0; k < count; ++k) {
    Poly f;
    for (auto& g : I.gens()) f = R.add(f, R.scale(g, static_cast<uint32_t>(rng.below(R.F().p))));
    out.push_back(f);
  }
  return Ideal(R, out);
}

}  // namespace

std::vector<BoundReport> check_tor_bound(PairData& P, int j, int k, int p, int q) {
  const int n = P.A().ring().n;
  const int N = n - j + k;
  if (p + q != N) throw std::invalid_argument("check_tor_bound: need p + q = n - j + k");
  ModuleData& A = P.A();
  ModuleData& B = P.B();
  const int lhs = P.tor_reg_h(k, j);
  const int delta = P.delta();
  BoundReport r;
  r.theorem_id = "tor-bound";
  r.params = {{"j", j}, {"k", k}, {"p", p}, {"q", q}};
  delta_hypothesis(r, delta);
  int X = add3(A.t(p), B.t(q), -n);
  int Y = kNegInf, Z = kNegInf;
  for (int pp = p + 1; pp <= N + n + 1; ++pp) Y = ext_max(Y, ext_add(A.t(pp), B.reg_h(n - (N - pp))));
  for (int pp = p - 1; pp >= -n - 1; --pp) Z = ext_max(Z, ext_add(A.reg_h(n - pp), B.t(N - pp)));
  r.lhs = lhs;
  r.rhs = ext_max(X, ext_max(Y, Z));
  r.rhs_parts = std::array<int, 3>{X, Y, Z};
  if (delta > 1) {
    bool vanish = true;
    for (int l = 1; j + l + 1 <= n && vanish; ++l) vanish = P.tor_reg_h(k + l, j + l + 1) == kNegInf;
    r.note = std::string("weaker vanishing H^{j+l+1}(Tor_{k+l}) = 0 for l >= 1: ") + (vanish ? "yes" : "no");
  }
  std::vector<BoundReport> out{r};

  BoundReport s;
  s.theorem_id = "tor-bound1";
  s.params = r.params;
  delta_hypothesis(s, delta);
  s.hypothesis("p <= codim A", p <= A.codim(), {{"codim A", A.codim()}});
  s.hypothesis("q <= codim B", q <= B.codim(), {{"codim B", B.codim()}});
  s.lhs = lhs;
  s.rhs = X;
  out.push_back(s);
  return out;
}

BoundReport check_generalization_of_regularity(PairData& P, int j, int k) {
  const int n = P.A().ring().n;
  const int N = n - j + k;
  ModuleData& A = P.A();
  ModuleData& B = P.B();
  BoundReport r;
  r.theorem_id = "generalization-of-regularity";
  r.params = {{"j", j}, {"k", k}};
  delta_hypothesis(r, P.delta());
  int cA = A.codim(), cB = B.codim();
  r.hypothesis("n - j + k >= codim A + codim B", is_finite(cA) && is_finite(cB) && N >= cA + cB,
               {{"codim A", cA}, {"codim B", cB}});
  r.lhs = P.tor_reg_h(k, j);
  int best = kNegInf;
  if (is_finite(cA) && is_finite(cB))
    for (int p = cA; N - p >= cB; ++p) best = ext_max(best, add3(A.t(p), B.t(N - p), -n));
  r.rhs = best;
  return r;
}

BoundReport check_cm_case(PairData& P, int j, int k) {
  ModuleData& A = P.A();
  ModuleData& B = P.B();
  BoundReport r;
  r.theorem_id = "cm-case";
  r.params = {{"j", j}, {"k", k}};
  delta_hypothesis(r, P.delta());
  r.hypothesis("B Cohen-Macaulay", B.cohen_macaulay(), {{"depth B", B.depth()}, {"dim B", B.dim()}});
  const int b = B.dim();
  r.params.push_back({"b", b});
  r.lhs = P.tor_reg_h(k, j);
  r.rhs = add3(A.t(b - j + k), -b, B.reg());
  return r;
}

BoundReport check_reg_tor(PairData& P, int k) {
  BoundReport r;
  r.theorem_id = "reg-of-tor";
  r.params = {{"k", k}};
  delta_hypothesis(r, P.delta());
  r.lhs = P.tor_reg(k);
  r.rhs = add3(P.A().reg(), P.B().reg(), k);
  return r;
}

BoundReport check_newregtor(PairData& P, int k, int p) {
  const int n = P.A().ring().n;
  BoundReport r;
  r.theorem_id = "newregtor";
  r.params = {{"k", k}, {"p", p}};
  delta_hypothesis(r, P.delta());
  r.hypothesis("k + dim B <= p", k + P.B().dim() <= p, {{"dim B", P.B().dim()}});
  r.hypothesis("p <= codim A", p <= P.A().codim(), {{"codim A", P.A().codim()}});
  r.lhs = P.tor_reg(k);
  r.rhs = add3(P.A().t(p), P.B().t(n + k - p), -n);
  return r;
}

BoundReport check_reg_tor_cm(PairData& P, int k) {
  BoundReport r;
  r.theorem_id = "reg-of-tor-cm";
  r.params = {{"k", k}};
  const int delta = P.delta();
  delta_hypothesis(r, delta);
  r.hypothesis("k > 0", k > 0);
  r.hypothesis("B Cohen-Macaulay", P.B().cohen_macaulay(), {{"depth B", P.B().depth()}, {"dim B", P.B().dim()}});
  const int b = P.B().dim();
  int best = kNegInf;
  for (int p = b + k - delta; p <= b + k; ++p) best = ext_max(best, ext_add(P.A().t(p), -p));
  r.lhs = P.tor_reg(k);
  r.rhs = add3(best, P.B().reg(), k);
  return r;
}

BoundReport check_subadd(PairData& P, int p) {
  const int n = P.A().ring().n;
  BoundReport r;
  r.theorem_id = "subadd";
  r.params = {{"p", p}};
  delta_hypothesis(r, P.delta());
  r.hypothesis("dim B <= p", P.B().dim() <= p, {{"dim B", P.B().dim()}});
  r.hypothesis("p <= codim A", p <= P.A().codim(), {{"codim A", P.A().codim()}});
  r.lhs = P.tor(0).t(n);
  r.rhs = ext_add(P.A().t(p), P.B().t(n - p));
  return r;
}

BoundReport check_socle_estimation(ModuleData& A, const Ideal& J, int q) {
  const RingContext& R = A.ring();
  BoundReport r;
  r.theorem_id = "socle-estimation";
  r.params = {{"q", q}};
  ModuleData SJ(R, ModulePresentation::cyclic(J));
  const int c = A.codim();
  const int delta = A.dim() - A.depth();
  r.hypothesis("dim A - depth A <= 1", !A.zero() && delta <= 1, {{"delta", delta}});
  bool contained = !A.zero() && ideal_contains(annihilator(R, A.module()), J);
  r.hypothesis("J in ann A", contained);
  r.hypothesis("depth S/J >= depth A", SJ.depth() >= A.depth(), {{"depth S/J", SJ.depth()}, {"depth A", A.depth()}});
  r.hypothesis("0 <= q <= codim J", q >= 0 && q <= SJ.codim(), {{"codim J", SJ.codim()}});
  r.params.push_back({"c", c});
  r.params.push_back({"delta", delta});
  r.lhs = A.t(c + delta);
  r.rhs = ext_add(A.t(c + delta - q), SJ.t(q));
  return r;
}

BoundReport check_socle_stepwise(const Ideal& I, int step) {
  const BettiTable& T = cached_betti(I);
  BoundReport r;
  r.theorem_id = "socle-stepwise";
  r.kind = StatementKind::Informational;
  r.params = {{"step", step}};
  r.lhs = T.t(step + 1);
  r.rhs = ext_add(T.t(step), T.t(1));
  r.note = "stepwise form of the socle estimate; not a theorem";
  return r;
}

BoundReport check_intersection_product(const Ideal& I, const Ideal& J) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "intersection-and-product";
  IntPoly a = hilbert_series_numerator(ideal_product(I, J));
  IntPoly b = hilbert_series_numerator(ideal_intersect(I, J));
  HilbertSeries hs;
  hs.n = R.n;
  hs.num.assign(std::max(a.size(), b.size()), 0);
  for (size_t k = 0; k < a.size(); ++k) hs.num[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) hs.num[k] -= b[k];
  auto dims = hs.finite_dims();
  r.hypothesis("(IJ)_d = (I cap J)_d for d >> 0", dims.has_value());
  r.lhs = dims ? (dims->dims.empty() ? kNegInf : dims->top + 1) : kPosInf;
  r.rhs = ext_add(reg_ideal(cached_betti(I)), reg_ideal(cached_betti(J)));
  return r;
}

std::vector<BoundReport> check_products(const Ideal& I, const Ideal& J) {
  const RingContext& R = I.ring();
  const int n = R.n;
  std::vector<BoundReport> out;
  ModuleData A(R, ModulePresentation::cyclic(I)), B(R, ModulePresentation::cyclic(J));
  PairData P(A, B);
  const int delta = P.delta();
  Ideal IJ = ideal_product(I, J);
  const int regIJ = reg_ideal(cached_betti(IJ));
  const int regI = ext_add(A.reg(), 1), regJ = ext_add(B.reg(), 1);
  {
    BoundReport r;
    r.theorem_id = "reg-of-products";
    delta_hypothesis(r, delta);
    r.lhs = regIJ;
    r.rhs = ext_add(regI, regJ);
    out.push_back(r);
  }
  for (int p = 0; p <= n + 1; ++p) {
    int q = n + 1 - p;
    if (p > A.codim() || q > B.codim()) continue;
    BoundReport r;
    r.theorem_id = "reg-of-products2A";
    r.params = {{"p", p}, {"q", q}};
    delta_hypothesis(r, delta);
    r.hypothesis("p <= codim I", true, {{"codim I", A.codim()}});
    r.hypothesis("q <= codim J", true, {{"codim J", B.codim()}});
    r.lhs = regIJ;
    r.rhs = ext_max(ext_max(regI, regJ), add3(A.t(p), B.t(q), -n + 1));
    out.push_back(r);
  }
  for (int swap = 0; swap < 2; ++swap) {
    ModuleData& X = swap ? B : A;
    ModuleData& Y = swap ? A : B;
    const Ideal& XI = swap ? J : I;
    BoundReport r;
    r.theorem_id = "reg-of-products2";
    r.params = {{"order", swap}};
    int d = kNegInf;
    if (Y.dim() == 0) {
      d = XI.max_gen_degree();
      r.hypothesis("dim S/J = 0 and I generated in degrees <= d", true, {{"d", d}});
    } else if (Y.dim() == 1) {
      d = ext_add(X.t(2), -1);
      r.hypothesis("dim S/J = 1 and I related in degrees <= d+1", is_finite(d), {{"d", d}});
    } else {
      r.hypothesis("dim S/J <= 1", false, {{"dim S/J", Y.dim()}});
    }
    r.lhs = regIJ;
    r.rhs = ext_max(ext_add(X.reg(), 1), ext_add(d, ext_add(Y.reg(), 1)));
    out.push_back(r);
  }
  {
    BoundReport r;
    r.theorem_id = "half-way-linear2";
    int dI = single_degree_of(I), dJ = single_degree_of(J);
    int need = ceil_div(n - 1, 2);
    r.hypothesis("dim S/I <= 1 and dim S/J <= 1", A.dim() <= 1 && B.dim() <= 1);
    r.hypothesis("I and J generated in one common degree d", dI > 0 && dI == dJ, {{"d", dI}});
    int lsI = dI > 0 ? linear_steps_or(A.betti(), -1) : -1;
    int lsJ = dJ > 0 ? linear_steps_or(B.betti(), -1) : -1;
    r.hypothesis("linear for ceil((n-1)/2) steps", lsI >= need && lsJ >= need,
                 {{"steps I", lsI}, {"steps J", lsJ}, {"needed", need}});
    r.lhs = regIJ;
    r.rhs = 2 * dI;
    out.push_back(r);
  }
  {
    BoundReport r = check_intersection_product(I, J);
    out.push_back(r);
    if (B.cohen_macaulay()) {
      BoundReport s = r;
      s.theorem_id = "intersection-and-product-cm";
      const int b = B.dim();
      s.params = {{"b", b}};
      s.hypothesis("S/J Cohen-Macaulay", true, {{"dim S/J", b}});
      s.rhs = add3(t_of_ideal(A.betti(), b), -b, regJ);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<BoundReport> check_powers(const Ideal& I, int t) {
  const RingContext& R = I.ring();
  const int n = R.n;
  std::vector<BoundReport> out;
  if (t < 2) throw std::invalid_argument("check_powers: t >= 2");
  const BettiTable& T = cached_betti(I);
  ModuleData A(R, ModulePresentation::cyclic(I));
  const int dim = A.dim();
  int d = kNegInf;
  bool hyp = false;
  if (dim == 0) {
    d = I.max_gen_degree();
    hyp = true;
  } else if (dim == 1) {
    d = ext_add(T.t(2), -1);
    hyp = is_finite(d);
  }
  const int regIt = reg_ideal(cached_betti(cached_power(I, t)));
  const int regI = reg_ideal(T);
  {
    BoundReport r;
    r.theorem_id = "reg-of-powers2";
    r.params = {{"t", t}};
    r.hypothesis("dim S/I = 0, or dim S/I = 1 with relations in degrees <= d+1", hyp, {{"dim", dim}, {"d", d}});
    r.lhs = regIt;
    r.rhs = ext_add(regI, (t - 1) * d);
    out.push_back(r);
  }
  for (int p = 1 + std::max(dim, 0); p <= A.codim() && p <= n; ++p) {
    BoundReport r;
    r.theorem_id = "reg-of-powers2";
    r.params = {{"t", t}, {"p", p}};
    r.hypothesis("dim S/I = 0, or dim S/I = 1 with relations in degrees <= d+1", hyp, {{"dim", dim}, {"d", d}});
    r.hypothesis("1 + dim S/I <= p <= codim I", true);
    r.lhs = regIt;
    r.rhs = ext_add(add3(t_of_ideal(T, p - 1), t_of_ideal(T, n - p), -n), (t - 2) * d + 1);
    out.push_back(r);
  }
  {
    BoundReport r;
    r.theorem_id = "half-way-linear";
    r.params = {{"t", t}};
    int d1 = single_degree_of(I);
    int need = ceil_div(n - 1, 2);
    int ls = d1 > 0 ? linear_steps_or(T, -1) : -1;
    r.hypothesis("dim S/I <= 1", dim <= 1, {{"dim", dim}});
    r.hypothesis("generated in one degree", d1 > 0, {{"d", d1}});
    r.hypothesis("linear for ceil((n-1)/2) steps", ls >= need, {{"steps", ls}, {"needed", need}});
    r.lhs = regIt;
    r.rhs = t * d1;
    out.push_back(r);
  }
  return out;
}

std::vector<BoundReport> check_specialization(const Ideal& I, int p, int s, uint64_t seed) {
  const RingContext& R = I.ring();
  const int n = R.n;
  std::vector<BoundReport> out;
  const BettiTable& T = cached_betti(I);
  const int m = T.t(p);
  BoundReport r;
  r.theorem_id = "linear-complements";
  r.params = {{"p", p}, {"s", s}};
  r.hypothesis("0 <= p <= n", p >= 0 && p <= n);
  if (p < 0 || p > n || s < 1) {
    r.hypothesis("s >= 1", s >= 1);
    out.push_back(r);
    return out;
  }
  Ideal L = p < n ? linear_subspace_ideal(R, n - p, seed) : Ideal(R, {});
  Ideal K = ideal_sum(I, p < n ? cached_power(L, s) : L);
  bool primary = krull_dim(K) <= 0;
  r.hypothesis("I + L m-primary", primary && krull_dim(ideal_sum(I, L)) <= 0);
  r.hypothesis("s >= 1", true);
  r.lhs = primary ? least_power_contained(K) : kPosInf;
  r.rhs = add3(m, -p, s);
  out.push_back(r);
  return out;
}

std::vector<BoundReport> check_initials(const Ideal& I) {
  const RingContext& R = I.ring();
  const int n = R.n;
  std::vector<BoundReport> out;
  bool primary = krull_dim(I) == 0;
  const BettiTable& T = cached_betti(I);
  MonomialIdeal in = initial_ideal(I, MonomialOrder::grevlex());
  for (int p = 1; p <= n; ++p) {
    BoundReport r;
    r.theorem_id = "initials";
    r.params = {{"p", p}};
    r.hypothesis("I m-primary", primary);
    int e = kPosInf;
    if (primary) {
      for (e = 0;; ++e) {
        bool all = true;
        for (auto& mono : monomials_of_degree(p, e))
          if (!in.contains(mono)) {
            all = false;
            break;
          }
        if (all) break;
      }
    }
    r.lhs = e;
    r.rhs = ext_add(T.t(p), 1 - p);
    out.push_back(r);
  }
  return out;
}

BoundReport check_hehi(const Ideal& I, uint64_t seed) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "hehi";
  r.kind = StatementKind::Informational;
  r.relation = Relation::Eq;
  r.note = "the statement assumes characteristic zero; over F_p this is reported, not asserted";
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  int ls = d > 0 ? linear_steps_or(cached_betti(I), -1) : -1;
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  r.hypothesis("linear for n-2 steps", ls >= R.n - 2, {{"steps", ls}});
  if (!(primary && d > 0)) return r;
  GinResult g = gin_checked(I, seed);
  r.hypothesis("generic coordinates stable across two seeds", g.stable);
  r.lhs = static_cast<int>(g.ideal.gens.size());
  r.rhs = static_cast<int>(binomial(R.n + d - 1, R.n - 1));
  return r;
}

BoundReport check_quadric_count(const Ideal& I) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "bound-on-number-of-quadrics";
  int d = single_degree_of(I);
  const BettiTable& T = cached_betti(I);
  r.hypothesis("generated by quadrics", d == 2);
  r.hypothesis("I m-primary", krull_dim(I) == 0);
  int ls = d == 2 ? linear_steps_or(T, -1) : -1;
  r.hypothesis("linear for 1 step", ls >= 1, {{"steps", ls}});
  r.lhs = 2 * R.n - 1;
  r.rhs = static_cast<int>(mu(T));
  return r;
}

std::vector<BoundReport> check_mu_bound(const Ideal& I) {
  const RingContext& R = I.ring();
  const int n = R.n;
  std::vector<BoundReport> out;
  int d = single_degree_of(I);
  if (d <= 0) return out;
  const BettiTable& T = cached_betti(I);
  int ls = linear_steps_or(T, -1);
  bool primary = krull_dim(I) == 0;
  for (int q = 1; q <= std::min(ls, n - 1); ++q) {
    BoundReport r;
    r.theorem_id = "mu-bound";
    r.params = {{"q", q}};
    r.hypothesis("I m-primary", primary);
    r.hypothesis("linear for q steps", true, {{"steps", ls}});
    r.lhs = static_cast<int>((q + 1) * (n - q - 1) + binomial(q + d, d));
    r.rhs = static_cast<int>(mu(T));
    out.push_back(r);
  }
  return out;
}

BoundReport check_rees(const Ideal& I, uint64_t seed, int cap) {
  const RingContext& R = I.ring();
  const int n = R.n;
  BoundReport r;
  r.theorem_id = "rees";
  r.relation = Relation::Eq;
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!(primary && d > 0)) return r;
  bool is_power = ideal_equal(I, max_ideal_power(R, d));
  r.hypothesis("I != m^d", !is_power);
  int ls = linear_steps_or(cached_betti(I), -1);
  int need = ceil_div(n - 1, 2);
  r.hypothesis("linear for ceil((n-1)/2) steps", ls >= need, {{"steps", ls}, {"needed", need}});
  Ideal J = general_combinations(I, n, seed);
  bool jprimary = krull_dim(J) == 0;
  r.hypothesis("J m-primary", jprimary);
  r.rhs = std::max(2, n - 1 - (n - 1) / d);
  if (!r.applicable()) return r;
  auto red = reduction_number(J, I, cap);
  r.lhs = red ? *red : cap + 1;
  return r;
}

BoundReport check_monomial_linear(const Ideal& I, int cap) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "monomial-linear";
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("monomial ideal", is_monomial_ideal(I));
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  int ls = d > 0 ? linear_steps_or(cached_betti(I), -1) : -1;
  r.hypothesis("linearly presented", ls >= 1, {{"steps", ls}});
  if (!r.applicable()) return r;
  int target = ceil_div(R.n - 1, ls);
  r.params = {{"s", ls}};
  r.rhs = target;
  auto st = power_stabilization(I, std::min(cap, target));
  r.lhs = st.s ? *st.s : target + 1;
  return r;
}

BoundReport check_contains(const Ideal& I) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "contains";
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("monomial ideal", is_monomial_ideal(I));
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!r.applicable()) return r;
  int q = std::min(linear_steps_or(cached_betti(I), 0), R.n - 1);
  r.params = {{"q", q}};
  Ideal Jdq = monomial_J(R, d, q);
  MonomialIdeal M(R.n, [&] {
    std::vector<Monomial> g;
    for (auto& f : I.gens()) g.push_back(f.terms[0].m);
    return g;
  }());
  int missing = 0;
  for (auto& g : Jdq.gens())
    if (!M.contains(g.terms[0].m)) ++missing;
  r.lhs = missing;
  r.rhs = 0;
  return r;
}

namespace {
int missing_from_power(const Ideal& J, int i, const Ideal& target) {
  const RingContext& R = J.ring();
  const int D = i * single_degree_of(J);
  auto basis = power_component(J, i);
  auto monos = monomials_of_degree(R.n, D);
  Echelon e(R.F(), static_cast<int>(monos.size()));
  for (auto& v : basis) e.add(v);
  int missing = 0;
  for (auto& g : target.gens()) {
    DenseVec v(monos.size(), 0);
    for (auto& t : g.terms) {
      auto it = std::find(monos.begin(), monos.end(), t.m);
      v[it - monos.begin()] = t.c;
    }
    if (!e.contains(v)) ++missing;
  }
  return missing;
}
}  // namespace

std::vector<BoundReport> check_monomial_powers(const RingContext& R, int d, int q) {
  std::vector<BoundReport> out;
  const int n = R.n;
  Ideal J = monomial_J(R, d, q);
  for (int i = 2; i <= 3; ++i) {
    BoundReport r;
    r.theorem_id = "monomial-powers";
    r.params = {{"d", d}, {"q", q}, {"i", i}};
    r.lhs = missing_from_power(J, i, monomial_J(R, i * d, std::min(i * q, n - 1)));
    r.rhs = 0;
    out.push_back(r);
  }
  if (q >= 1) {
    int e = ceil_div(n - 1, q);
    BoundReport r;
    r.theorem_id = "monomial-powers";
    r.params = {{"d", d}, {"q", q}, {"e", e}};
    r.lhs = missing_from_power(J, e, max_ideal_power(R, d * e));
    r.rhs = 0;
    out.push_back(r);
  }
  return out;
}

BoundReport check_monomial_criterion(const RingContext& R, int d, int cap) {
  BoundReport r;
  r.theorem_id = "monomial-criterion";
  r.relation = Relation::Eq;
  r.params = {{"d", d}};
  int target = (d - 2) * (R.n - 1);
  r.hypothesis("threshold within the power cap", std::max(target, 1) <= cap, {{"threshold", target}});
  r.rhs = std::max(target, 1);
  if (!r.applicable()) return r;
  auto st = power_stabilization(herzog_hibi_J(R, d), cap);
  r.lhs = st.s ? *st.s : cap + 1;
  return r;
}

std::vector<BoundReport> check_partial_annihilation(const Ideal& I, int t) {
  const RingContext& R = I.ring();
  std::vector<BoundReport> out;
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  BoundReport a;
  a.theorem_id = "partial-annihilation-a";
  a.params = {{"t", t}};
  a.hypothesis("I m-primary", primary);
  a.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!a.applicable()) return {a};
  const BettiTable& T = cached_betti(I);
  const TorsionReport& A = cached_torsion(I, t);
  int e = ext_add(T.t(2), -1);
  a.lhs = A.reg;
  a.rhs = ext_add(reg_ideal(T), ext_add((t - 2) * d, e));
  out.push_back(a);
  BoundReport c;
  c.theorem_id = "partial-annihilation-c";
  c.params = {{"t", t}};
  int ls = linear_steps_or(T, -1);
  int need = ceil_div(R.n, 2);
  c.hypothesis("I m-primary", true);
  c.hypothesis("linear for ceil(n/2) steps", ls >= need, {{"steps", ls}, {"needed", need}});
  c.lhs = A.reg;
  c.rhs = t * d;
  out.push_back(c);
  BoundReport lower;
  lower.theorem_id = "torsion-lower-degree";
  lower.params = {{"t", t}};
  lower.hypothesis("I m-primary", true);
  lower.lhs = t * d;
  lower.rhs = A.zero() ? kPosInf : A.degrees.bottom;
  out.push_back(lower);
  return out;
}

BoundReport check_reg_of_A(const Ideal& I, int t) {
  BoundReport r;
  r.theorem_id = "reg-of-A";
  r.params = {{"t", t}};
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!r.applicable()) return r;
  const TorsionReport& At = cached_torsion(I, t);
  const TorsionReport& Anext = cached_torsion(I, t + 1);
  auto tor2 = tor_dims_finite(I, cached_power(I, t), 2);
  int reg2 = tor2->top;
  r.lhs = Anext.reg;
  r.rhs = ext_max(ext_add(d, At.reg), reg2);
  return r;
}

BoundReport check_gorenstein_torsion(const Ideal& I, int t) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "gorenstein";
  r.params = {{"t", t}};
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("n = 3", R.n == 3);
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!r.applicable()) return r;
  const BettiTable& T = cached_betti(I);
  r.hypothesis("Gorenstein", T.total(R.n) == 1);
  r.hypothesis("linearly presented", linear_steps_or(T, -1) >= 1);
  if (!r.applicable()) return r;
  const TorsionReport& A = cached_torsion(I, t);
  r.lhs = A.reg;
  r.rhs = t * d;
  return r;
}

BoundReport check_instant_elimination(const Ideal& V) {
  const RingContext& R = V.ring();
  BoundReport r;
  r.theorem_id = "instant-elimination";
  r.relation = Relation::Eq;
  int d = single_degree_of(V);
  bool primary = krull_dim(V) == 0;
  r.hypothesis("base point free", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  r.hypothesis("fits in the variable limit", R.n + static_cast<int>(V.gens().size()) <= kMaxVars);
  if (!r.applicable()) return r;
  Ideal W = minimalize(V);
  int ls = linear_steps_or(cached_betti(W), -1);
  int need = ceil_div(R.n, 2);
  r.hypothesis("linear for ceil(n/2) steps", ls >= need, {{"steps", ls}, {"needed", need}});
  if (ls < 1) return r;
  EliminationReport e = instant_eliminate(W);
  r.lhs = e.equal ? 0 : 1;
  r.rhs = 0;
  r.note = "lhs 0 means ann(coker psi) equals the elimination ideal";
  return r;
}

std::vector<BoundReport> check_generator_bound(const Ideal& I) {
  const RingContext& R = I.ring();
  const int n = R.n, rr = n - 1;
  std::vector<BoundReport> out;
  int d = single_degree_of(I);
  const BettiTable& T = cached_betti(I);
  bool finite = krull_dim(I) == 0;
  bool shape = d > 0 && finite && n >= 3;
  std::vector<int> b;
  if (shape) {
    for (auto& [ij, v] : T.entries) {
      auto [i, j] = ij;
      if (i == 0) continue;
      if (i <= rr) {
        if (j != d + i - 1) shape = false;
      } else if (i == rr + 1) {
        int bi = j - d - rr;
        if (bi < 0) shape = false;
        for (long long c = 0; c < v; ++c) b.push_back(bi);
      }
    }
  }
  auto base = [&](const std::string& id, Relation rel) {
    BoundReport r;
    r.theorem_id = id;
    r.relation = rel;
    r.hypothesis("S/I of finite length", finite);
    r.hypothesis("generated in one degree, n >= 3", d > 0 && n >= 3, {{"d", d}});
    r.hypothesis("almost linear resolution", shape);
    return r;
  };
  BoundReport i1 = base("identity-1", Relation::Eq), i2 = base("identity-2", Relation::Eq);
  BoundReport gb = base("generator-bound", Relation::Le), eq = base("generator-bound-equality", Relation::Eq);
  if (shape) {
    long long s1 = 0, s2 = 0;
    for (int bi : b) {
      s1 += binomial(bi + rr, rr);
      s2 += binomial(bi + rr - 1, rr);
    }
    long long m1 = T.at(1, d);
    i1.lhs = static_cast<int>(binomial(d + rr - 1, rr));
    i1.rhs = static_cast<int>(s1);
    i2.lhs = static_cast<int>(m1);
    i2.rhs = static_cast<int>(binomial(d + rr, rr) - s2);
    int bound = static_cast<int>(binomial(d + rr - 1, rr - 1) + binomial(d + rr - 2, rr - 1));
    gb.lhs = bound;
    gb.rhs = static_cast<int>(m1);
    eq.lhs = m1 == bound ? 1 : 0;
    eq.rhs = b.size() == 1 ? 1 : 0;
    eq.note = "equality in the bound exactly when S/I is Gorenstein";
  }
  out = {i1, i2, gb, eq};
  return out;
}

BoundReport check_eisenbud_ulrich(const Ideal& I) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "eisenbud-ulrich";
  r.kind = StatementKind::Conjecture;
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!r.applicable()) return r;
  r.hypothesis("linearly presented", linear_steps_or(cached_betti(I), -1) >= 1);
  if (!r.applicable()) return r;
  const int e = R.n - 1;
  long long full = binomial(R.n - 1 + e * d, R.n - 1);
  r.lhs = static_cast<int>(full - static_cast<long long>(power_component(I, e).size()));
  r.rhs = 0;
  r.note = "lhs is the codimension of (I^(n-1)) in degree (n-1)d";
  return r;
}

std::vector<BoundReport> check_us_reg(const Ideal& I, int k) {
  const RingContext& R = I.ring();
  const int n = R.n;
  std::vector<BoundReport> out;
  bool primary = krull_dim(I) == 0;
  if (!primary) {
    BoundReport r;
    r.theorem_id = "us-reg-a";
    r.kind = StatementKind::Conjecture;
    r.hypothesis("I m-primary", false);
    return {r};
  }
  BettiTable T1 = cached_betti(I), Tk = cached_betti(cached_power(I, k));
  for (int j = 0; j <= n - 1; ++j)
    for (int m = 0; m <= std::min(k * j, n - 1); ++m) {
      BoundReport r;
      r.theorem_id = "us-reg-a";
      r.kind = StatementKind::Conjecture;
      r.params = {{"k", k}, {"j", j}, {"m", m}};
      r.hypothesis("I m-primary", true);
      r.lhs = t_of_ideal(Tk, m);
      int tj = t_of_ideal(T1, j);
      r.rhs = is_finite(tj) ? k * tj - (k * j - m) : kNegInf;
      out.push_back(r);
    }
  for (int s = 0; s <= n - 1; ++s) {
    BoundReport r;
    r.theorem_id = "us-reg-b";
    r.kind = StatementKind::Conjecture;
    r.params = {{"k", k}, {"s", s}};
    r.hypothesis("I m-primary", true);
    r.lhs = t_of_ideal(Tk, n - 1);
    r.rhs = ext_add(t_of_ideal(Tk, s), (n - 1 - s) * t_of_ideal(T1, 0));
    out.push_back(r);
  }
  return out;
}

std::vector<BoundReport> check_us(const Ideal& I, int cap) {
  const RingContext& R = I.ring();
  const int n = R.n;
  BoundReport a, b;
  a.theorem_id = "us-linear";
  b.theorem_id = "us-power";
  a.kind = b.kind = StatementKind::Conjecture;
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  int s = d > 0 ? linear_steps_or(cached_betti(I), -1) : -1;
  for (auto* r : {&a, &b}) {
    r->hypothesis("I m-primary", primary);
    r->hypothesis("generated in one degree", d > 0, {{"d", d}});
    r->hypothesis("linear for s >= 1 steps", s >= 1, {{"s", s}});
  }
  if (!a.applicable()) return {a, b};
  a.params = {{"s", s}, {"t", 2}};
  a.lhs = std::min(2 * s, n - 1);
  a.rhs = linear_steps_or(cached_betti(cached_power(I, 2)), -1);
  int target = ceil_div(n - 1, s);
  b.params = {{"s", s}};
  b.rhs = target;
  auto st = power_stabilization(I, std::min(cap, target));
  b.lhs = st.s ? *st.s : target + 1;
  return {a, b};
}

BoundReport check_gin_conjecture(const Ideal& I, uint64_t seed) {
  const RingContext& R = I.ring();
  BoundReport r;
  r.theorem_id = "gin-conjecture-1";
  r.kind = StatementKind::Conjecture;
  r.note = "generic coordinates are sampled over F_p; evidence only";
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!r.applicable()) return r;
  r.hypothesis("linearly presented", linear_steps_or(cached_betti(I), -1) >= 1);
  if (!r.applicable() || R.n < 2) return r;
  GinResult g = gin_checked(I, seed);
  r.hypothesis("generic coordinates stable across two seeds", g.stable);
  int missing = 0;
  for (auto& base : monomials_of_degree(2, d - 1))
    for (int i = 0; i < R.n; ++i) {
      Monomial m = Monomial::var(0, base.e[0]) * Monomial::var(1, base.e[1]) * Monomial::var(i);
      if (!g.ideal.contains(m)) ++missing;
    }
  r.lhs = missing;
  r.rhs = 0;
  return r;
}

BoundReport check_sym_torsion_conj(const Ideal& I, int t) {
  BoundReport r;
  r.theorem_id = "sym-torsion-conj";
  r.kind = StatementKind::Conjecture;
  r.params = {{"t", t}};
  int d = single_degree_of(I);
  bool primary = krull_dim(I) == 0;
  r.hypothesis("I m-primary", primary);
  r.hypothesis("generated in one degree", d > 0, {{"d", d}});
  if (!r.applicable()) return r;
  r.hypothesis("linearly presented", linear_steps_or(cached_betti(I), -1) >= 1);
  if (!r.applicable()) return r;
  const TorsionReport& A = cached_torsion(I, t);
  r.lhs = A.gen_degrees.empty() ? kNegInf : A.gen_degrees.back();
  r.rhs = t * d;
  r.note = "lhs is the top generator degree of the torsion";
  return r;
}

}  // namespace cma
