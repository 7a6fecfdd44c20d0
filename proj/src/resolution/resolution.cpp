#include "cmalg/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cma {

ModulePresentation ModulePresentation::cyclic(const Ideal& I) {
  ModulePresentation M;
  M.cover = FreeModule::ring();
  std::vector<int> degs;
  for (auto& g : I.gens()) {
    if (!g.is_homogeneous()) throw std::invalid_argument("cyclic presentation needs homogeneous generators");
    degs.push_back(g.degree());
  }
  M.relations = ModuleMap(FreeModule(degs), M.cover);
  for (size_t j = 0; j < I.gens().size(); ++j) M.relations.cols[j][0] = I.gens()[j];
  return M;
}

ModulePresentation ModulePresentation::free(const FreeModule& F) {
  ModulePresentation M;
  M.cover = F;
  M.relations = ModuleMap(FreeModule(), F);
  return M;
}

ModulePresentation ModulePresentation::from_relations(const FreeModule& cover, const std::vector<Column>& rels,
                                                      const std::vector<int>& rel_degs) {
  ModulePresentation M;
  M.cover = cover;
  M.relations = ModuleMap(FreeModule(rel_degs), cover);
  M.relations.cols = rels;
  return M;
}

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (auto& [k, v] : entries)
    if (k.first == i) s += v;
  return s;
}

int BettiTable::t(int p) const {
  int best = kNegInf;
  for (auto& [k, v] : entries)
    if (k.first == p) best = std::max(best, k.second);
  return best;
}

int BettiTable::min_degree(int p) const {
  int best = kPosInf;
  for (auto& [k, v] : entries)
    if (k.first == p) best = std::min(best, k.second);
  return best;
}

int BettiTable::regularity() const {
  int r = kNegInf;
  for (auto& [k, v] : entries) r = std::max(r, k.second - k.first);
  return r;
}

int BettiTable::length() const {
  int l = -1;
  for (auto& [k, v] : entries) l = std::max(l, k.first);
  return l;
}

BettiTable Resolution::betti() const {
  BettiTable T;
  for (int k = 0; k <= length(); ++k)
    for (int d : F(k).degs) ++T.entries[{k, d}];
  return T;
}

ModuleMap syzygies(const RingContext& R, const ModuleMap& f, const MonomialOrder& ord) {
  const int r = f.rows(), s = f.ncols();
  ModuleOrder mo = ModuleOrder::pot(ord);
  GBOptions opt;
  opt.twists = f.target.degs;
  opt.twists.insert(opt.twists.end(), f.source.degs.begin(), f.source.degs.end());
  std::vector<ModVec> gens;
  for (int j = 0; j < s; ++j) {
    Column c = f.cols[j];
    c.resize(r + s);
    c[r + j] = Poly::constant(1);
    gens.push_back(to_modvec(c, mo));
  }
  auto G = module_groebner(gens, mo, R.F(), opt);
  std::vector<Column> cols;
  std::vector<int> degs;
  for (auto& g : G) {
    if (g[0].comp < r) continue;
    Column full = to_column(g, r + s, R.F());
    cols.emplace_back(full.begin() + r, full.end());
    degs.push_back(static_cast<int>(g[0].m.deg) + opt.twists[g[0].comp]);
  }
  ModuleMap out(FreeModule(degs), f.source);
  out.cols = std::move(cols);
  return out;
}

namespace {

// Sort key for the Schreyer frame: exponent of the given variable in the leading monomial.
void sort_by_variable(std::vector<ModVec>& level, int var) {
  std::stable_sort(level.begin(), level.end(),
                   [var](const ModVec& a, const ModVec& b) { return a[0].m.e[var] < b[0].m.e[var]; });
}

ModuleOrder induced_order(const ModuleOrder& prev, const std::vector<ModVec>& level, bool first) {
  ModuleOrder o;
  o.base = prev.base;
  o.kind = ModuleOrder::Kind::Schreyer;
  o.level0 = first ? prev.kind : prev.level0;
  const int m = static_cast<int>(level.size());
  o.lead.resize(m);
  o.lead_comp.resize(m);
  o.rank.resize(m);
  std::vector<std::pair<int, int>> keys(m);
  for (int i = 0; i < m; ++i) {
    const ModTerm& lt = level[i][0];
    if (first) {
      o.lead[i] = lt.m;
      o.lead_comp[i] = lt.comp;
      keys[i] = {0, i};
    } else {
      o.lead[i] = lt.m * prev.lead[lt.comp];
      o.lead_comp[i] = prev.lead_comp[lt.comp];
      keys[i] = {prev.rank[lt.comp], i};
    }
  }
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  for (int r = 0; r < m; ++r) o.rank[idx[r]] = r;
  return o;
}

// Syzygies of a Groebner basis `level` (under prev), as elements of the free
// module on `level` ordered by cur.
std::vector<ModVec> next_level(const std::vector<ModVec>& level, const ModuleOrder& prev, const ModuleOrder& cur,
                               const Field& F) {
  const int m = static_cast<int>(level.size());
  LeadIndex idx;
  for (int i = 0; i < m; ++i) idx.add(i, level[i][0]);
  std::map<int, std::vector<int>> by_comp;
  for (int i = 0; i < m; ++i) by_comp[level[i][0].comp].push_back(i);
  std::vector<ModVec> out;
  for (auto& [comp, members] : by_comp) {
    for (size_t b = 1; b < members.size(); ++b) {
      const int j = members[b];
      const Monomial& mj = level[j][0].m;
      std::vector<std::pair<Monomial, int>> quots;
      for (size_t a = 0; a < b; ++a) {
        const int i = members[a];
        quots.push_back({lcm(level[i][0].m, mj) / mj, i});
      }
      std::vector<std::pair<Monomial, int>> minimal;
      for (size_t a = 0; a < quots.size(); ++a) {
        bool redundant = false;
        for (size_t c = 0; c < quots.size() && !redundant; ++c) {
          if (c == a || !quots[c].first.divides(quots[a].first)) continue;
          if (quots[c].first != quots[a].first || c < a) redundant = true;
        }
        if (!redundant) minimal.push_back(quots[a]);
      }
      for (auto& [q, i] : minimal) {
        const Monomial l = q * mj;
        const Monomial qi = l / level[i][0].m;
        std::map<std::pair<int, std::vector<uint16_t>>, std::pair<Monomial, uint32_t>> acc;
        auto put = [&](int k, const Monomial& mm, uint32_t c) {
          auto key = std::make_pair(k, std::vector<uint16_t>(mm.e.begin(), mm.e.end()));
          auto it = acc.find(key);
          if (it == acc.end())
            acc.emplace(key, std::make_pair(mm, c));
          else
            it->second.second = F.add(it->second.second, c);
        };
        put(j, q, 1);
        put(i, qi, F.neg(1));
        ModVec h = modvec_axpy({}, F.neg(1), q, level[j], prev, F);
        h = modvec_axpy(h, 1, qi, level[i], prev, F);
        // h = q*g_j - qi*g_i reduces to zero as sum c*m*g_k.
        ModVec rem = reduce_tracking(h, level, idx, prev, F, [&](int k, const Monomial& mm, uint32_t c) {
          put(k, mm, F.neg(c));
        });
        if (!rem.empty()) throw std::logic_error("Schreyer frame: S-pair did not reduce to zero");
        ModVec syz;
        for (auto& [key, val] : acc)
          if (val.second) syz.push_back({key.first, val.first, val.second});
        sort_modvec(syz, cur);
        out.push_back(std::move(syz));
      }
    }
  }
  return out;
}

using SparseCol = std::vector<std::pair<int, Poly>>;  // sorted by row

SparseCol sparse_from(const Column& col) {
  SparseCol c;
  for (int i = 0; i < static_cast<int>(col.size()); ++i)
    if (!col[i].is_zero()) c.push_back({i, col[i]});
  return c;
}

const Poly* sparse_get(const SparseCol& c, int row) {
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) return &it->second;
  return nullptr;
}

// a - f * b
SparseCol sparse_axpy(const RingContext& R, const SparseCol& a, const Poly& f, const SparseCol& b) {
  SparseCol r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back({b[j].first, R.neg(R.mul(f, b[j].second))});
      ++j;
    } else {
      Poly p = R.sub(a[i].second, R.mul(f, b[j].second));
      if (!p.is_zero()) r.push_back({a[i].first, std::move(p)});
      ++i;
      ++j;
    }
  }
  return r;
}

struct SparseMap {
  std::vector<int> src_degs, tgt_degs;
  std::vector<SparseCol> cols;
  std::vector<char> col_alive, row_alive;
};

}  // namespace

Resolution schreyer_resolution(const RingContext& R, const ModulePresentation& M, int max_maps) {
  const Field& F = R.F();
  Resolution res;
  res.F0 = M.cover;
  ModuleOrder ord0 = ModuleOrder::top(R.order);
  GBOptions opt;
  opt.twists = M.cover.degs;
  opt.product_criterion = M.cover.rank() == 1;
  std::vector<ModVec> gens;
  for (auto& c : M.relations.cols) {
    ModVec v = to_modvec(c, ord0);
    if (!v.empty()) gens.push_back(std::move(v));
  }
  std::vector<ModVec> level = module_groebner(gens, ord0, F, opt);
  sort_by_variable(level, 0);
  ModuleOrder prev = ord0;
  FreeModule prevF = M.cover;
  bool first = true;
  int k = 0;
  while (!level.empty()) {
    std::vector<int> degs;
    for (auto& v : level) degs.push_back(static_cast<int>(v[0].m.deg) + prevF.degs[v[0].comp]);
    FreeModule Fk(degs);
    ModuleMap phi(Fk, prevF);
    for (size_t j = 0; j < level.size(); ++j) phi.cols[j] = to_column(level[j], prevF.rank(), F);
    res.maps.push_back(std::move(phi));
    if (max_maps >= 0 && res.length() >= max_maps) break;
    ModuleOrder cur = induced_order(prev, level, first);
    std::vector<ModVec> nxt = next_level(level, prev, cur, F);
    ++k;
    sort_by_variable(nxt, std::min(k, R.n - 1));
    level = std::move(nxt);
    prev = std::move(cur);
    prevF = Fk;
    first = false;
  }
  return res;
}

Resolution minimize(const RingContext& R, const Resolution& res) {
  const Field& F = R.F();
  const int L = res.length();
  std::vector<SparseMap> maps(L);
  for (int k = 0; k < L; ++k) {
    const ModuleMap& m = res.maps[k];
    maps[k].src_degs = m.source.degs;
    maps[k].tgt_degs = m.target.degs;
    for (auto& c : m.cols) maps[k].cols.push_back(sparse_from(c));
    maps[k].col_alive.assign(m.ncols(), 1);
    maps[k].row_alive.assign(m.rows(), 1);
  }
  for (int k = 0; k < L; ++k) {
    SparseMap& d = maps[k];
    for (;;) {
      int pj = -1, pi = -1;
      for (int j = 0; j < static_cast<int>(d.cols.size()) && pj < 0; ++j) {
        if (!d.col_alive[j]) continue;
        for (auto& [row, p] : d.cols[j])
          if (d.row_alive[row] && d.src_degs[j] == d.tgt_degs[row] && !p.is_zero()) {
            pj = j;
            pi = row;
            break;
          }
      }
      if (pj < 0) break;
      const uint32_t uinv = F.inv(sparse_get(d.cols[pj], pi)->terms[0].c);
      for (int c = 0; c < static_cast<int>(d.cols.size()); ++c) {
        if (c == pj || !d.col_alive[c]) continue;
        const Poly* e = sparse_get(d.cols[c], pi);
        if (!e) continue;
        Poly f = R.scale(*e, uinv);
        d.cols[c] = sparse_axpy(R, d.cols[c], f, d.cols[pj]);
      }
      d.col_alive[pj] = 0;
      d.row_alive[pi] = 0;
      if (k + 1 < L) maps[k + 1].row_alive[pj] = 0;
      if (k > 0) maps[k - 1].col_alive[pi] = 0;
    }
  }
  Resolution out;
  out.minimal = true;
  std::vector<int> keep0;
  if (L > 0) {
    for (int i = 0; i < static_cast<int>(maps[0].tgt_degs.size()); ++i)
      if (maps[0].row_alive[i]) keep0.push_back(i);
  } else {
    for (int i = 0; i < res.F0.rank(); ++i) keep0.push_back(i);
  }
  {
    std::vector<int> d;
    for (int i : keep0) d.push_back(res.F0.degs[i]);
    out.F0 = FreeModule(d);
  }
  std::vector<int> prev_keep = keep0;
  for (int k = 0; k < L; ++k) {
    SparseMap& d = maps[k];
    std::vector<int> keep;
    for (int j = 0; j < static_cast<int>(d.cols.size()); ++j)
      if (d.col_alive[j]) keep.push_back(j);
    if (keep.empty()) break;
    std::vector<int> row_pos(d.tgt_degs.size(), -1);
    for (size_t r = 0; r < prev_keep.size(); ++r) row_pos[prev_keep[r]] = static_cast<int>(r);
    std::vector<int> degs;
    for (int j : keep) degs.push_back(d.src_degs[j]);
    ModuleMap m(FreeModule(degs), out.F(k));
    for (size_t c = 0; c < keep.size(); ++c)
      for (auto& [row, p] : d.cols[keep[c]])
        if (row_pos[row] >= 0) m.cols[c][row_pos[row]] = p;
    out.maps.push_back(std::move(m));
    prev_keep = keep;
  }
  return out;
}

std::pair<Resolution, BettiTable> minimal_free_resolution(const RingContext& R, const ModulePresentation& M) {
  Resolution res = minimize(R, schreyer_resolution(R, M));
  BettiTable T = res.betti();
  return {std::move(res), std::move(T)};
}

BettiTable betti_table(const Ideal& I) {
  return minimal_free_resolution(I.ring(), ModulePresentation::cyclic(I)).second;
}

HomologicalInvariants homological_invariants(const Ideal& I) {
  HomologicalInvariants h;
  if (is_unit_ideal(I)) return h;
  BettiTable T = betti_table(I);
  h.pd = T.length();
  h.depth = I.n() - h.pd;
  h.dim = krull_dim(I);
  h.codim = I.n() - h.dim;
  return h;
}

int t_ideal(const BettiTable& cyclic, int p) { return cyclic.t(p + 1); }

int linear_steps(const BettiTable& T) {
  int lo = T.min_degree(1), hi = T.t(1);
  if (is_pos_inf(lo)) throw std::invalid_argument("linear_steps: zero ideal");
  if (lo != hi) throw std::invalid_argument("linear_steps: generators in mixed degrees");
  const int d = lo;
  const int pd_ideal = T.length() - 1;
  int s = 0;
  while (s + 1 <= pd_ideal && T.t(s + 2) == d + s + 1) ++s;
  return s;
}

int linear_steps(const Ideal& I) { return linear_steps(betti_table(I)); }

Ideal truncate(const Ideal& I, int s) {
  if (s < 0) throw std::invalid_argument("truncate: negative step");
  BettiTable T = betti_table(I);
  int ts = t_ideal(T, s);
  if (is_neg_inf(ts)) return minimalize(I);
  int k = ts - s;
  Ideal J = ideal_intersect(I, max_ideal_power(I.ring(), std::max(k, 0)));
  return minimalize(J);
}

}  // namespace cma
