#include "cmalg/reesalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

namespace cma {

namespace {

// Dense coordinates on S_D.
struct DegreeBasis {
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, int, MonomialHash> pos;
  DegreeBasis(int n, int D) : monos(monomials_of_degree(n, D)) {
    for (int k = 0; k < static_cast<int>(monos.size()); ++k) pos[monos[k]] = k;
  }
  int dim() const { return static_cast<int>(monos.size()); }
  DenseVec dense(const Poly& f) const {
    DenseVec v(monos.size(), 0);
    for (auto& t : f.terms) v[pos.at(t.m)] = t.c;
    return v;
  }
};

// v * f with v over `from` and the product over `to`.
DenseVec multiply(const Field& F, const DenseVec& v, const DegreeBasis& from, const Poly& f, const DegreeBasis& to) {
  DenseVec out(to.dim(), 0);
  for (int k = 0; k < from.dim(); ++k) {
    if (!v[k]) continue;
    for (auto& t : f.terms) {
      int j = to.pos.at(from.monos[k] * t.m);
      out[j] = F.add(out[j], F.mul(v[k], t.c));
    }
  }
  return out;
}

int single_degree(const Ideal& I, const char* what) {
  if (I.gens().empty()) throw std::invalid_argument(std::string(what) + ": zero ideal");
  if (!I.is_homogeneous() || I.min_gen_degree() != I.max_gen_degree())
    throw std::invalid_argument(std::string(what) + ": generators must share one degree");
  return I.min_gen_degree();
}

void enumerate(int N, int t, int i, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i == N - 1) {
    cur[i] = t;
    out.push_back(cur);
    return;
  }
  for (int a = t; a >= 0; --a) {
    cur[i] = a;
    enumerate(N, t - a, i + 1, cur, out);
  }
}

std::vector<std::vector<int>> exponent_vectors(int N, int t) {
  std::vector<std::vector<int>> out;
  if (t < 0) return out;
  std::vector<int> cur(N, 0);
  enumerate(N, t, 0, cur, out);
  return out;
}

struct SymPresentation {
  std::vector<std::vector<int>> cover;  // T-exponents of degree t
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<std::pair<int, Poly>>> rels;  // sparse columns
  std::vector<int> rel_degs;
};

SymPresentation sym_presentation(const RingContext& R, const std::vector<Poly>& g, int d, int t) {
  const int N = static_cast<int>(g.size());
  SymPresentation P;
  P.cover = exponent_vectors(N, t);
  for (int k = 0; k < static_cast<int>(P.cover.size()); ++k) P.index[P.cover[k]] = k;
  ModuleMap row(FreeModule(std::vector<int>(N, d)), FreeModule::ring());
  for (int j = 0; j < N; ++j) row.cols[j][0] = g[j];
  ModuleMap syz = syzygies(R, row, R.order);
  for (auto& u : exponent_vectors(N, t - 1)) {
    for (int c = 0; c < syz.ncols(); ++c) {
      std::vector<std::pair<int, Poly>> col;
      for (int k = 0; k < N; ++k) {
        if (syz.cols[c][k].is_zero()) continue;
        auto e = u;
        ++e[k];
        col.push_back({P.index.at(e), syz.cols[c][k]});
      }
      P.rels.push_back(std::move(col));
      P.rel_degs.push_back(syz.source.degs[c] + (t - 1) * d);
    }
  }
  return P;
}

Poly power_product(const RingContext& R, const std::vector<Poly>& g, const std::vector<int>& e) {
  Poly p = R.constant(1);
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k]) p = R.mul(p, R.pow(g[k], e[k]));
  return p;
}

// Minimal generator degrees of A_t by degreewise linear algebra over [lo, hi].
std::vector<int> torsion_generators(const RingContext& R, const std::vector<Poly>& g, const SymPresentation& P,
                                    int td, int lo, int hi) {
  const Field& F = R.F();
  const int C = static_cast<int>(P.cover.size());
  std::vector<Poly> images;
  for (auto& e : P.cover) images.push_back(power_product(R, g, e));
  std::vector<int> out;
  std::vector<DenseVec> prev_kernel;
  std::unique_ptr<DegreeBasis> prev_basis;
  for (int D = lo; D <= hi; ++D) {
    auto basis = std::make_unique<DegreeBasis>(R.n, D - td);
    DegreeBasis target(R.n, D);
    const int W = C * basis->dim();
    auto widx = [&](int c, int m) { return c * basis->dim() + m; };
    std::vector<DenseVec> imgs(W);
    for (int c = 0; c < C; ++c)
      for (int m = 0; m < basis->dim(); ++m)
        imgs[widx(c, m)] = target.dense(R.mul_term(images[c], basis->monos[m], 1));
    std::vector<DenseVec> K = kernel_of_images(F, imgs, target.dim());
    Echelon span(F, W);
    for (size_t r = 0; r < P.rels.size(); ++r) {
      int shift = D - P.rel_degs[r];
      if (shift < 0) continue;
      for (auto& m : monomials_of_degree(R.n, shift)) {
        DenseVec v(W, 0);
        for (auto& [c, f] : P.rels[r])
          for (auto& term : f.terms) {
            int k = widx(c, basis->pos.at(term.m * m));
            v[k] = F.add(v[k], term.c);
          }
        span.add(std::move(v));
      }
    }
    if (prev_basis) {
      for (auto& v : prev_kernel)
        for (int i = 0; i < R.n; ++i) {
          DenseVec w(W, 0);
          const int pd = prev_basis->dim();
          for (int c = 0; c < C; ++c)
            for (int m = 0; m < pd; ++m) {
              uint32_t a = v[c * pd + m];
              if (a) w[widx(c, basis->pos.at(prev_basis->monos[m] * Monomial::var(i)))] = a;
            }
          span.add(std::move(w));
        }
    }
    int fresh = static_cast<int>(K.size()) - span.rank();
    for (int k = 0; k < fresh; ++k) out.push_back(D);
    prev_kernel = std::move(K);
    prev_basis = std::move(basis);
  }
  return out;
}

}  // namespace

TorsionReport sym_power_torsion(const Ideal& I0, int t) {
  if (t < 1) throw std::invalid_argument("sym_power_torsion: t >= 1");
  const int d = single_degree(I0, "sym_power_torsion");
  if (krull_dim(I0) != 0) throw std::invalid_argument("sym_power_torsion: ideal is not m-primary");
  const RingContext& R = I0.ring();
  Ideal I = minimalize(I0);
  const std::vector<Poly>& g = I.gens();
  TorsionReport rep;
  rep.t = t;
  rep.d = d;
  SymPresentation P = sym_presentation(R, g, d, t);
  std::vector<Column> cols;
  for (auto& sc : P.rels) {
    Column c(P.cover.size());
    for (auto& [k, f] : sc) c[k] = R.add(c[k], f);
    cols.push_back(std::move(c));
  }
  ModulePresentation Sym =
      ModulePresentation::from_relations(FreeModule(std::vector<int>(P.cover.size(), t * d)), cols, P.rel_degs);
  HilbertSeries hs = hilbert_series(R, Sym);
  // HS(A_t) = HS(Sym_t) - HS(I^t), with HS(I^t) = (1 - num(S/I^t)) / (1-t)^n.
  IntPoly q = hilbert_series_numerator(ideal_power(I, t));
  HilbertSeries diff;
  diff.n = R.n;
  diff.num.assign(std::max(q.size(), hs.num.size() + hs.shift), 0);
  for (size_t k = 0; k < hs.num.size(); ++k) diff.num[k + hs.shift] += hs.num[k];
  diff.num[0] -= 1;
  for (size_t k = 0; k < q.size(); ++k) diff.num[k] += q[k];
  auto dims = diff.finite_dims();
  if (!dims) throw std::logic_error("sym_power_torsion: torsion is not of finite length");
  rep.degrees = *dims;
  if (rep.zero()) return rep;
  rep.reg = rep.degrees.top;
  rep.gen_degrees = torsion_generators(R, g, P, t * d, rep.degrees.bottom, rep.degrees.top);
  return rep;
}

ModuleMap linear_presentation(const Ideal& I) {
  const int d = single_degree(I, "linear_presentation");
  const RingContext& R = I.ring();
  const int N = static_cast<int>(I.gens().size());
  ModuleMap row(FreeModule(std::vector<int>(N, d)), FreeModule::ring());
  for (int j = 0; j < N; ++j) row.cols[j][0] = I.gens()[j];
  ModuleMap syz = syzygies(R, row, R.order);
  std::vector<Column> cols;
  for (int c = 0; c < syz.ncols(); ++c) {
    if (syz.source.degs[c] <= d) throw std::invalid_argument("linear_presentation: generators are not independent");
    if (syz.source.degs[c] == d + 1) cols.push_back(syz.cols[c]);
  }
  ModuleMap phi(FreeModule(std::vector<int>(cols.size(), d + 1)), FreeModule(std::vector<int>(N, d)));
  phi.cols = std::move(cols);
  return phi;
}

AdjointPair adjoint_matrix(const ModuleMap& phi, int nvars) {
  const int N = phi.rows(), M = phi.ncols();
  if (N > kMaxVars) throw std::invalid_argument("adjoint_matrix: too many rows");
  const Field F;
  AdjointPair out;
  out.phi = phi;
  out.n = nvars;
  out.N = N;
  out.psi = ModuleMap(FreeModule(std::vector<int>(M, 1)), FreeModule(std::vector<int>(nvars, 0)));
  for (int j = 0; j < M; ++j)
    for (int k = 0; k < N; ++k)
      for (auto& term : phi.cols[j][k].terms) {
        if (term.m.deg != 1) throw std::invalid_argument("adjoint_matrix: nonlinear entry");
        int i = 0;
        while (!term.m.e[i]) ++i;
        if (i >= nvars) throw std::invalid_argument("adjoint_matrix: variable out of range");
        auto& e = out.psi.cols[j][i];
        std::vector<Term> ts = e.terms;
        ts.push_back({Monomial::var(k), term.c});
        e = Poly::from_terms(ts, F);
      }
  return out;
}

RingContext t_ring(int N, uint32_t p) {
  std::vector<std::string> names;
  for (int k = 1; k <= N; ++k) names.push_back("T" + std::to_string(k));
  return RingContext(names, p);
}

Ideal image_ideal(const Ideal& V) {
  const RingContext& R = V.ring();
  const int n = R.n, N = static_cast<int>(V.gens().size());
  if (n + N > kMaxVars) throw std::invalid_argument("image_ideal: too many variables");
  std::vector<std::string> names = R.names;
  for (int k = 1; k <= N; ++k) names.push_back("T" + std::to_string(k));
  RingContext RX(names, R.F().p);
  std::vector<Poly> g;
  for (int k = 0; k < N; ++k) g.push_back(RX.sub(RX.var(n + k), V.gens()[k]));
  std::vector<int> drop;
  for (int i = 0; i < n; ++i) drop.push_back(i);
  Ideal E = elimination_ideal(Ideal(RX, g), drop);
  RingContext RT = t_ring(N, R.F().p);
  std::vector<Poly> out;
  for (auto& f : E.gens()) {
    std::vector<Term> ts;
    for (auto& term : f.terms) {
      Monomial m;
      for (int k = 0; k < N; ++k) m.e[k] = term.m.e[n + k];
      m.deg = term.m.deg;
      ts.push_back({m, term.c});
    }
    out.push_back(Poly::from_terms(ts, RT.F()));
  }
  return Ideal(RT, out);
}

EliminationReport instant_eliminate(const Ideal& V) {
  const RingContext& R = V.ring();
  single_degree(V, "instant_eliminate");
  if (krull_dim(V) != 0) throw std::invalid_argument("instant_eliminate: ideal is not m-primary");
  RingContext RT = t_ring(static_cast<int>(V.gens().size()), R.F().p);
  EliminationReport rep{Ideal(RT, {}), Ideal(RT, {})};
  rep.linear_steps = linear_steps(V);
  if (rep.linear_steps < 1) throw std::invalid_argument("instant_eliminate: no linear presentation");
  rep.needed_steps = (R.n + 1) / 2;
  rep.hypothesis = rep.linear_steps >= rep.needed_steps;
  AdjointPair ap = adjoint_matrix(linear_presentation(V), R.n);
  ModulePresentation coker = ModulePresentation::from_relations(FreeModule(std::vector<int>(R.n, 0)), ap.psi.cols,
                                                                ap.psi.source.degs);
  rep.annihilator = annihilator(RT, coker);
  rep.elimination = image_ideal(V);
  rep.equal = ideal_equal(rep.annihilator, rep.elimination);
  return rep;
}

std::vector<DenseVec> power_component(const Ideal& I, int s) {
  const int d = single_degree(I, "power_component");
  const RingContext& R = I.ring();
  DegreeBasis cur(R.n, 0);
  std::vector<DenseVec> V{cur.dense(R.constant(1))};
  for (int k = 1; k <= s; ++k) {
    DegreeBasis next(R.n, k * d);
    Echelon e(R.F(), next.dim());
    for (auto& v : V) {
      for (auto& f : I.gens()) {
        e.add(multiply(R.F(), v, cur, f, next));
        if (e.rank() == next.dim()) break;
      }
      if (e.rank() == next.dim()) break;
    }
    V = e.rows();
    cur = std::move(next);
  }
  return V;
}

std::optional<int> reduction_number(const Ideal& J, const Ideal& I, int cap) {
  if (!ideal_contains(I, J)) throw std::invalid_argument("reduction_number: J is not contained in I");
  const RingContext& R = I.ring();
  bool uniform = !J.gens().empty() && !I.gens().empty() && I.is_homogeneous() && J.is_homogeneous() &&
                 I.min_gen_degree() == I.max_gen_degree() && J.min_gen_degree() == J.max_gen_degree() &&
                 I.min_gen_degree() == J.min_gen_degree();
  if (!uniform) {
    Ideal Ir(R, {R.constant(1)});
    for (int r = 0; r <= cap; ++r) {
      Ideal Inext = ideal_product(Ir, I);
      if (ideal_contains(ideal_product(J, Ir), Inext)) return r;
      Ir = Inext;
    }
    return std::nullopt;
  }
  // Both sides are generated in degree (r+1)d, so equality there is equality of ideals.
  const int d = I.min_gen_degree();
  DegreeBasis cur(R.n, 0);
  std::vector<DenseVec> V{cur.dense(R.constant(1))};
  for (int r = 0; r <= cap; ++r) {
    DegreeBasis next(R.n, (r + 1) * d);
    Echelon full(R.F(), next.dim()), red(R.F(), next.dim());
    for (auto& v : V) {
      for (auto& f : I.gens()) full.add(multiply(R.F(), v, cur, f, next));
      for (auto& f : J.gens()) red.add(multiply(R.F(), v, cur, f, next));
    }
    if (red.rank() == full.rank()) return r;
    V = full.rows();
    cur = std::move(next);
  }
  return std::nullopt;
}

StabilizationReport power_stabilization(const Ideal& I, int cap) {
  const int d = single_degree(I, "power_stabilization");
  if (krull_dim(I) != 0) throw std::invalid_argument("power_stabilization: ideal is not m-primary");
  const RingContext& R = I.ring();
  StabilizationReport rep;
  DegreeBasis cur(R.n, 0);
  std::vector<DenseVec> V{cur.dense(R.constant(1))};
  for (int s = 1; s <= cap + 1; ++s) {
    DegreeBasis next(R.n, s * d);
    Echelon e(R.F(), next.dim());
    for (auto& v : V) {
      for (auto& f : I.gens()) {
        e.add(multiply(R.F(), v, cur, f, next));
        if (e.rank() == next.dim()) break;
      }
      if (e.rank() == next.dim()) break;
    }
    bool full = e.rank() == next.dim();
    if (rep.s) {
      rep.next_holds = full;
      break;
    }
    if (s > cap) break;
    rep.holds.push_back(full);
    if (full) rep.s = s;
    V = e.rows();
    cur = std::move(next);
  }
  return rep;
}

}  // namespace cma
