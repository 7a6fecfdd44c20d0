#include "cmalg/homalg.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "cmalg/linalg.hpp"
#include <stdexcept>

namespace cma {

long long GradedVectorSpaceSummary::total() const {
  long long s = 0;
  for (auto& [d, v] : dims) s += v;
  return s;
}

long long HilbertSeries::at(int d) const {
  long long v = 0;
  for (size_t k = 0; k < num.size(); ++k) {
    long long e = static_cast<long long>(d) - shift - static_cast<long long>(k);
    if (num[k] && e >= 0) v += num[k] * binomial(e + n - 1, n - 1);
  }
  return v;
}

namespace {
// Divides by (1 - t) when possible.
bool divide_one_minus_t(IntPoly& p) {
  long long s = 0;
  for (auto c : p) s += c;
  if (s != 0) return false;
  IntPoly q(p.size() > 1 ? p.size() - 1 : 1, 0);
  long long acc = 0;
  for (size_t k = 0; k + 1 < p.size(); ++k) {
    acc += p[k];
    q[k] = acc;
  }
  p = q;
  return true;
}

bool all_zero(const IntPoly& p) {
  for (auto c : p)
    if (c) return false;
  return true;
}
}  // namespace

std::optional<GradedVectorSpaceSummary> HilbertSeries::finite_dims() const {
  IntPoly p = num;
  GradedVectorSpaceSummary s;
  if (all_zero(p)) return s;
  for (int i = 0; i < n; ++i)
    if (!divide_one_minus_t(p)) return std::nullopt;
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k]) {
      int d = static_cast<int>(k) + shift;
      s.dims[d] = p[k];
      s.top = std::max(s.top, d);
      s.bottom = std::min(s.bottom, d);
    }
  return s;
}

int HilbertSeries::dimension() const {
  IntPoly p = num;
  if (all_zero(p)) return -1;
  int k = 0;
  while (k < n && divide_one_minus_t(p)) ++k;
  return n - k;
}

std::vector<ModVec> relation_groebner(const RingContext& R, const ModulePresentation& M) {
  ModuleOrder mo = ModuleOrder::top(R.order);
  GBOptions opt;
  opt.twists = M.cover.degs;
  opt.product_criterion = M.cover.rank() == 1;
  std::vector<ModVec> gens;
  for (auto& c : M.relations.cols) {
    ModVec v = to_modvec(c, mo);
    if (!v.empty()) gens.push_back(std::move(v));
  }
  return module_groebner(gens, mo, R.F(), opt);
}

HilbertSeries hilbert_series(const RingContext& R, const ModulePresentation& M) {
  HilbertSeries hs;
  hs.n = R.n;
  if (M.cover.rank() == 0) {
    hs.num = {0};
    return hs;
  }
  auto G = relation_groebner(R, M);
  std::vector<std::vector<Monomial>> leads(M.cover.rank());
  for (auto& g : G) leads[g[0].comp].push_back(g[0].m);
  hs.shift = *std::min_element(M.cover.degs.begin(), M.cover.degs.end());
  hs.num = {0};
  for (int i = 0; i < M.cover.rank(); ++i) {
    IntPoly Ni = leads[i].empty() ? IntPoly{1} : MonomialIdeal(R.n, leads[i]).hilbert_numerator();
    size_t off = M.cover.degs[i] - hs.shift;
    if (hs.num.size() < Ni.size() + off) hs.num.resize(Ni.size() + off, 0);
    for (size_t k = 0; k < Ni.size(); ++k) hs.num[k + off] += Ni[k];
  }
  while (hs.num.size() > 1 && hs.num.back() == 0) hs.num.pop_back();
  return hs;
}

long long hilbert_function(const RingContext& R, const ModulePresentation& M, int d) {
  return hilbert_series(R, M).at(d);
}

bool is_zero_module(const RingContext& R, const ModulePresentation& M) {
  return hilbert_series(R, M).dimension() < 0;
}

ModulePresentation prune(const RingContext& R, const ModulePresentation& M) {
  if (M.cover.rank() == 0) return M;
  Resolution res = minimize(R, schreyer_resolution(R, M, 2));
  ModulePresentation out;
  out.cover = res.F0;
  if (res.length() >= 1) {
    out.relations = res.maps[0];
  } else {
    out.relations = ModuleMap(FreeModule(), res.F0);
  }
  return out;
}

ModulePresentation shift(const ModulePresentation& M, int a) {
  ModulePresentation out = M;
  for (auto& d : out.cover.degs) d -= a;
  for (auto& d : out.relations.source.degs) d -= a;
  out.relations.target = out.cover;
  return out;
}

ModulePresentation tensor(const RingContext& R, const ModulePresentation& A, const ModulePresentation& B) {
  const int ra = A.cover.rank(), rb = B.cover.rank();
  std::vector<int> cover;
  for (int i = 0; i < ra; ++i)
    for (int l = 0; l < rb; ++l) cover.push_back(A.cover.degs[i] + B.cover.degs[l]);
  std::vector<Column> rels;
  std::vector<int> degs;
  for (int c = 0; c < A.relations.ncols(); ++c)
    for (int l = 0; l < rb; ++l) {
      Column col(ra * rb);
      for (int i = 0; i < ra; ++i) col[i * rb + l] = A.relations.cols[c][i];
      rels.push_back(std::move(col));
      degs.push_back(A.relations.source.degs[c] + B.cover.degs[l]);
    }
  for (int i = 0; i < ra; ++i)
    for (int c = 0; c < B.relations.ncols(); ++c) {
      Column col(ra * rb);
      for (int l = 0; l < rb; ++l) col[i * rb + l] = B.relations.cols[c][l];
      rels.push_back(std::move(col));
      degs.push_back(A.cover.degs[i] + B.relations.source.degs[c]);
    }
  (void)R;
  return ModulePresentation::from_relations(FreeModule(cover), rels, degs);
}

ModulePresentation ideal_module(const Ideal& I) {
  const RingContext& R = I.ring();
  ModuleMap gens(FreeModule(std::vector<int>{}), FreeModule::ring());
  std::vector<int> degs;
  for (auto& g : I.gens()) degs.push_back(g.degree());
  ModuleMap f(FreeModule(degs), FreeModule::ring());
  for (size_t j = 0; j < I.gens().size(); ++j) f.cols[j][0] = I.gens()[j];
  ModuleMap syz = syzygies(R, f, R.order);
  ModulePresentation M;
  M.cover = FreeModule(degs);
  M.relations = syz;
  return prune(R, M);
}

namespace {

// Generators of {v in src : A v in im(rels)}, as columns of src.
std::pair<std::vector<Column>, std::vector<int>> preimage(const RingContext& R, const FreeModule& src,
                                                          const FreeModule& tgt, const std::vector<Column>& A,
                                                          const std::vector<Column>& rels,
                                                          const std::vector<int>& rel_degs) {
  std::vector<int> degs = src.degs;
  degs.insert(degs.end(), rel_degs.begin(), rel_degs.end());
  ModuleMap f(FreeModule(degs), tgt);
  for (int j = 0; j < src.rank(); ++j) f.cols[j] = A[j];
  for (size_t j = 0; j < rels.size(); ++j) f.cols[src.rank() + j] = rels[j];
  ModuleMap syz = syzygies(R, f, R.order);
  std::vector<Column> K;
  std::vector<int> kd;
  for (int c = 0; c < syz.ncols(); ++c) {
    Column top(syz.cols[c].begin(), syz.cols[c].begin() + src.rank());
    if (column_is_zero(top)) continue;
    K.push_back(std::move(top));
    kd.push_back(syz.source.degs[c]);
  }
  return {K, kd};
}

std::vector<Column> identity_columns(int r) {
  std::vector<Column> cols(r, Column(r));
  for (int i = 0; i < r; ++i) cols[i][i] = Poly::constant(1);
  return cols;
}

// Homology at a term of a complex of presented modules:
// ker(d_out) / im(d_in), with d_out : cur -> prev and d_in : next -> cur.
ModulePresentation homology(const RingContext& R, const ModulePresentation& cur, const ModulePresentation* prev,
                            const std::vector<Column>* d_out, const std::vector<Column>& d_in,
                            const std::vector<int>& d_in_degs) {
  std::vector<Column> K;
  std::vector<int> kd;
  if (prev && d_out) {
    std::tie(K, kd) = preimage(R, cur.cover, prev->cover, *d_out, prev->relations.cols, prev->relations.source.degs);
  } else {
    K = identity_columns(cur.cover.rank());
    kd = cur.cover.degs;
  }
  std::vector<Column> V = d_in;
  std::vector<int> vd = d_in_degs;
  V.insert(V.end(), cur.relations.cols.begin(), cur.relations.cols.end());
  vd.insert(vd.end(), cur.relations.source.degs.begin(), cur.relations.source.degs.end());
  return module_subquotient(R, cur.cover, K, kd, V, vd);
}

}  // namespace

ModulePresentation module_subquotient(const RingContext& R, const FreeModule& cover, const std::vector<Column>& U,
                                      const std::vector<int>& u_degs, const std::vector<Column>& V,
                                      const std::vector<int>& v_degs) {
  const int ru = static_cast<int>(U.size());
  if (ru == 0) return ModulePresentation::free(FreeModule());
  std::vector<int> degs = u_degs;
  degs.insert(degs.end(), v_degs.begin(), v_degs.end());
  ModuleMap f(FreeModule(degs), cover);
  for (int j = 0; j < ru; ++j) f.cols[j] = U[j];
  for (size_t j = 0; j < V.size(); ++j) f.cols[ru + j] = V[j];
  ModuleMap syz = syzygies(R, f, R.order);
  std::vector<Column> rels;
  std::vector<int> rd;
  for (int c = 0; c < syz.ncols(); ++c) {
    Column top(syz.cols[c].begin(), syz.cols[c].begin() + ru);
    if (column_is_zero(top)) continue;
    rels.push_back(std::move(top));
    rd.push_back(syz.source.degs[c]);
  }
  return prune(R, ModulePresentation::from_relations(FreeModule(u_degs), rels, rd));
}

bool is_well_defined(const RingContext& R, const PresentationMap& f) {
  ModuleOrder mo = ModuleOrder::top(R.order);
  auto G = relation_groebner(R, f.target);
  for (auto& rel : f.source.relations.cols) {
    Column img(f.target.cover.rank());
    for (int i = 0; i < f.source.cover.rank(); ++i) {
      if (rel[i].is_zero()) continue;
      img = column_add(R, img, column_scale(R, f.matrix.cols[i], rel[i]));
    }
    if (!module_normal_form(to_modvec(img, mo), G, mo, R.F()).empty()) return false;
  }
  return true;
}

ModulePresentation module_kernel(const RingContext& R, const PresentationMap& f) {
  if (!is_well_defined(R, f)) throw std::invalid_argument("module_kernel: map does not respect relations");
  return homology(R, f.source, &f.target, &f.matrix.cols, {}, {});
}

ModulePresentation module_image(const RingContext& R, const PresentationMap& f) {
  if (!is_well_defined(R, f)) throw std::invalid_argument("module_image: map does not respect relations");
  return module_subquotient(R, f.target.cover, f.matrix.cols, f.source.cover.degs, f.target.relations.cols,
                            f.target.relations.source.degs);
}

ModulePresentation tor_module(const RingContext& R, const ModulePresentation& A, const ModulePresentation& B,
                              int k) {
  if (k < 0) throw std::invalid_argument("tor_module: negative index");
  auto [res, betti] = minimal_free_resolution(R, A);
  (void)betti;
  const int L = res.length();
  if (k > L) return ModulePresentation::free(FreeModule());
  const int rb = B.cover.rank();
  auto term = [&](int i) {
    ModulePresentation F = ModulePresentation::free(res.F(i));
    return tensor(R, F, B);
  };
  auto tensor_map = [&](int i) {  // d_i (x) 1 : F_i (x) B -> F_{i-1} (x) B, i >= 1
    const ModuleMap& d = res.maps[i - 1];
    std::vector<Column> cols;
    for (int j = 0; j < d.ncols(); ++j)
      for (int l = 0; l < rb; ++l) {
        Column c(d.rows() * rb);
        for (int r = 0; r < d.rows(); ++r) c[r * rb + l] = d.cols[j][r];
        cols.push_back(std::move(c));
      }
    return cols;
  };
  ModulePresentation cur = term(k);
  std::vector<Column> d_in;
  std::vector<int> d_in_degs;
  if (k + 1 <= L) {
    d_in = tensor_map(k + 1);
    d_in_degs = term(k + 1).cover.degs;
  }
  if (k == 0) return homology(R, cur, nullptr, nullptr, d_in, d_in_degs);
  ModulePresentation prev = term(k - 1);
  std::vector<Column> d_out = tensor_map(k);
  return homology(R, cur, &prev, &d_out, d_in, d_in_degs);
}

namespace {

ModulePresentation ext_from_resolution(const RingContext& R, const Resolution& res, int k) {
  const int L = res.length();
  if (k > L) return ModulePresentation::free(FreeModule());
  FreeModule dual;
  for (int d : res.F(k).degs) dual.degs.push_back(-d);
  ModulePresentation cur = ModulePresentation::free(dual);
  std::vector<Column> d_in;
  std::vector<int> d_in_degs;
  if (k >= 1) {
    ModuleMap t = res.maps[k - 1].transpose_dual();  // F_{k-1}^* -> F_k^*
    d_in = t.cols;
    d_in_degs = t.source.degs;
  }
  if (k + 1 <= L) {
    ModuleMap t = res.maps[k].transpose_dual();  // F_k^* -> F_{k+1}^*
    ModulePresentation nxt = ModulePresentation::free(t.target);
    return homology(R, cur, &nxt, &t.cols, d_in, d_in_degs);
  }
  return homology(R, cur, nullptr, nullptr, d_in, d_in_degs);
}

// Degree-e piece of a graded free module: offsets of each generator's block of monomials.
struct FreePiece {
  std::vector<int> offset;
  std::vector<std::vector<Monomial>> monos;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index;
  int dim = 0;

  FreePiece(int n, const FreeModule& F, int e) {
    for (int g = 0; g < F.rank(); ++g) {
      offset.push_back(dim);
      int D = e - F.degs[g];
      monos.push_back(D >= 0 ? monomials_of_degree(n, D) : std::vector<Monomial>{});
      std::unordered_map<Monomial, int, MonomialHash> ix;
      for (size_t a = 0; a < monos.back().size(); ++a) ix.emplace(monos.back()[a], static_cast<int>(a));
      index.push_back(std::move(ix));
      dim += static_cast<int>(monos.back().size());
    }
  }
};

int map_rank_in_degree(const RingContext& R, const ModuleMap& f, int e) {
  FreePiece src(R.n, f.source, e), dst(R.n, f.target, e);
  if (src.dim == 0 || dst.dim == 0) return 0;
  std::vector<DenseVec> rows;
  for (int g = 0; g < f.source.rank(); ++g)
    for (auto& mu : src.monos[g]) {
      DenseVec v(dst.dim, 0);
      for (int i = 0; i < f.target.rank(); ++i)
        for (auto& t : f.cols[g][i].terms) {
          Monomial m = t.m * mu;
          auto& c = v[dst.offset[i] + dst.index[i].at(m)];
          c = R.F().add(c, t.c);
        }
      rows.push_back(std::move(v));
    }
  return rank_of(R.F(), rows, dst.dim);
}

// Lowest degree of Ext^k(M, S) when it is known to be nonzero, by degreewise homology
// of the dual of a minimal resolution; kPosInf if nothing is found within the search window.
int ext_mindeg_degreewise(const RingContext& R, const Resolution& res, int k) {
  const int L = res.length();
  FreeModule dual;
  for (int d : res.F(k).degs) dual.degs.push_back(-d);
  if (dual.rank() == 0) return kPosInf;
  const int lo = *std::min_element(dual.degs.begin(), dual.degs.end());
  std::optional<ModuleMap> out, in;
  if (k + 1 <= L) out = res.maps[k].transpose_dual();
  if (k >= 1) in = res.maps[k - 1].transpose_dual();
  for (int e = lo; e <= lo + 64; ++e) {
    long long dim = FreePiece(R.n, dual, e).dim;
    if (dim == 0) continue;
    long long r_out = out ? map_rank_in_degree(R, *out, e) : 0;
    long long r_in = in ? map_rank_in_degree(R, *in, e) : 0;
    if (dim - r_out - r_in > 0) return e;
  }
  return kPosInf;
}

}  // namespace

std::vector<ModulePresentation> ext_modules(const RingContext& R, const ModulePresentation& M) {
  auto [res, betti] = minimal_free_resolution(R, M);
  (void)betti;
  std::vector<ModulePresentation> out;
  for (int k = 0; k <= R.n; ++k) out.push_back(ext_from_resolution(R, res, k));
  return out;
}

ModulePresentation ext_module(const RingContext& R, const ModulePresentation& M, int k) {
  if (k < 0) throw std::invalid_argument("ext_module: negative index");
  if (k > R.n) return ModulePresentation::free(FreeModule());
  auto [res, betti] = minimal_free_resolution(R, M);
  (void)betti;
  return ext_from_resolution(R, res, k);
}

int mindeg(const RingContext& R, const ModulePresentation& M) {
  ModulePresentation P = prune(R, M);
  if (P.cover.rank() == 0) return kPosInf;
  return *std::min_element(P.cover.degs.begin(), P.cover.degs.end());
}

int reg_local_cohomology(const RingContext& R, const ModulePresentation& M, int j) {
  if (j < 0 || j > R.n) throw std::invalid_argument("reg_local_cohomology: j out of range");
  return reg_local_cohomology_all(R, M)[j];
}

// H^j vanishes outside [depth, dim] and is nonzero at both ends, where the lowest
// degree of the dual Ext is found degreewise; indices strictly inside use the Ext module.
std::vector<int> reg_local_cohomology_all(const RingContext& R, const ModulePresentation& M) {
  const int n = R.n;
  std::vector<int> out(n + 1, kNegInf);
  const int dim = hilbert_series(R, M).dimension();
  if (dim < 0) return out;
  auto [res, betti] = minimal_free_resolution(R, M);
  const int depth = n - betti.length();
  for (int j = depth; j <= dim; ++j) {
    int md = kPosInf;
    if (j == depth || j == dim) md = ext_mindeg_degreewise(R, res, n - j);
    if (is_pos_inf(md)) md = mindeg(R, ext_from_resolution(R, res, n - j));
    out[j] = is_pos_inf(md) ? kNegInf : -md - n;
  }
  return out;
}

namespace {

// Degree-e piece of F (x) S/J, one block of standard monomials per generator of F.
struct QuotientPiece {
  std::vector<int> offset;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index;
  std::vector<std::vector<Monomial>> monos;
  int dim = 0;

  QuotientPiece(int n, const FreeModule& F, int e, const MonomialIdeal& in) {
    for (int g = 0; g < F.rank(); ++g) {
      offset.push_back(dim);
      std::vector<Monomial> std_monos;
      int D = e - F.degs[g];
      if (D >= 0)
        for (auto& m : monomials_of_degree(n, D))
          if (!in.contains(m)) std_monos.push_back(m);
      std::unordered_map<Monomial, int, MonomialHash> ix;
      for (size_t a = 0; a < std_monos.size(); ++a) ix.emplace(std_monos[a], static_cast<int>(a));
      dim += static_cast<int>(std_monos.size());
      monos.push_back(std::move(std_monos));
      index.push_back(std::move(ix));
    }
  }
};

int tensor_rank_in_degree(const RingContext& R, const ModuleMap& d, int e, const GroebnerBasis& G,
                          const MonomialIdeal& in) {
  QuotientPiece src(R.n, d.source, e, in), dst(R.n, d.target, e, in);
  if (src.dim == 0 || dst.dim == 0) return 0;
  std::vector<DenseVec> rows;
  for (int g = 0; g < d.source.rank(); ++g)
    for (auto& mu : src.monos[g]) {
      DenseVec v(dst.dim, 0);
      for (int r = 0; r < d.target.rank(); ++r) {
        if (d.cols[g][r].is_zero()) continue;
        Poly f = normal_form(R, R.mul_term(d.cols[g][r], mu, 1), G);
        for (auto& t : f.terms) {
          auto& c = v[dst.offset[r] + dst.index[r].at(t.m)];
          c = R.F().add(c, t.c);
        }
      }
      rows.push_back(std::move(v));
    }
  return rank_of(R.F(), rows, dst.dim);
}

}  // namespace

std::optional<GradedVectorSpaceSummary> tor_dims_finite(const Ideal& I0, const Ideal& J0, int k) {
  const RingContext& R = I0.ring();
  if (k < 0) throw std::invalid_argument("tor_dims_finite: negative index");
  // Resolve one side and tensor with the other, which must have finite length.
  const Ideal* I = &I0;
  const Ideal* J = &J0;
  HilbertSeries hj;
  hj.n = R.n;
  hj.num = hilbert_series_numerator(*J);
  auto fin = hj.finite_dims();
  if (!fin) {
    std::swap(I, J);
    hj.num = hilbert_series_numerator(*J);
    fin = hj.finite_dims();
    if (!fin) return std::nullopt;
  }
  GradedVectorSpaceSummary out;
  if (fin->dims.empty()) return out;
  auto [res, betti] = minimal_free_resolution(R, ModulePresentation::cyclic(*I));
  if (k > res.length()) return out;
  const GroebnerBasis& G = J->gb();
  MonomialIdeal in(R.n, G.leads());
  const FreeModule& Fk = res.F(k);
  if (Fk.rank() == 0) return out;
  const int lo = *std::min_element(Fk.degs.begin(), Fk.degs.end());
  const int hi = betti.t(k) + fin->top;
  for (int e = lo; e <= hi; ++e) {
    long long dim = QuotientPiece(R.n, Fk, e, in).dim;
    if (dim == 0) continue;
    if (k >= 1) dim -= tensor_rank_in_degree(R, res.maps[k - 1], e, G, in);
    if (k + 1 <= res.length()) dim -= tensor_rank_in_degree(R, res.maps[k], e, G, in);
    if (dim > 0) {
      out.dims[e] = dim;
      out.top = std::max(out.top, e);
      out.bottom = std::min(out.bottom, e);
    }
  }
  return out;
}

Ideal annihilator(const RingContext& R, const ModulePresentation& M0) {
  ModulePresentation M = prune(R, M0);
  if (M.cover.rank() == 0) return Ideal(R, {R.constant(1)});
  std::optional<Ideal> acc;
  for (int i = 0; i < M.cover.rank(); ++i) {
    std::vector<int> degs{M.cover.degs[i]};
    degs.insert(degs.end(), M.relations.source.degs.begin(), M.relations.source.degs.end());
    ModuleMap f(FreeModule(degs), M.cover);
    f.cols[0][i] = Poly::constant(1);
    for (int c = 0; c < M.relations.ncols(); ++c) f.cols[c + 1] = M.relations.cols[c];
    ModuleMap syz = syzygies(R, f, R.order);
    std::vector<Poly> g;
    for (auto& col : syz.cols)
      if (!col[0].is_zero()) g.push_back(col[0]);
    Ideal Q(R, g);
    acc = acc ? ideal_intersect(*acc, Q) : Q;
  }
  return Ideal(R, acc->gb().elements);
}

int module_dim(const RingContext& R, const ModulePresentation& M) {
  ModulePresentation P = prune(R, M);
  if (P.cover.rank() == 0) return -1;
  return krull_dim(annihilator(R, P));
}

GradedVectorSpaceSummary socle_summary(const RingContext& R, const ModulePresentation& M0) {
  ModulePresentation M = prune(R, M0);
  if (!hilbert_series(R, M).finite_dims()) throw std::invalid_argument("socle_summary: module has infinite length");
  ModulePresentation target;
  {
    std::vector<ModulePresentation> copies;
    std::vector<int> cover;
    std::vector<Column> rels;
    std::vector<int> rd;
    const int r = M.cover.rank();
    for (int v = 0; v < R.n; ++v) {
      for (int d : M.cover.degs) cover.push_back(d - 1);
      for (int c = 0; c < M.relations.ncols(); ++c) {
        Column col(r * R.n);
        for (int i = 0; i < r; ++i) col[v * r + i] = M.relations.cols[c][i];
        rels.push_back(std::move(col));
        rd.push_back(M.relations.source.degs[c] - 1);
      }
    }
    target = ModulePresentation::from_relations(FreeModule(cover), rels, rd);
  }
  PresentationMap f;
  f.source = M;
  f.target = target;
  const int r = M.cover.rank();
  f.matrix = ModuleMap(M.cover, target.cover);
  for (int i = 0; i < r; ++i)
    for (int v = 0; v < R.n; ++v) f.matrix.cols[i][v * r + i] = R.var(v);
  ModulePresentation soc = module_kernel(R, f);
  auto dims = hilbert_series(R, soc).finite_dims();
  return dims ? *dims : GradedVectorSpaceSummary{};
}

int dim_tor1(const RingContext& R, const ModulePresentation& A, const ModulePresentation& B) {
  return module_dim(R, tor_module(R, A, B, 1));
}

}  // namespace cma

namespace cma {

HomologicalInvariants homological_invariants(const RingContext& R, const ModulePresentation& M) {
  HomologicalInvariants h;
  if (is_zero_module(R, M)) return h;
  h.pd = minimal_free_resolution(R, M).second.length();
  h.depth = R.n - h.pd;
  h.dim = hilbert_series(R, M).dimension();
  h.codim = R.n - h.dim;
  return h;
}

}  // namespace cma
