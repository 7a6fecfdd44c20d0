#include "cmalg/gb_engine.hpp"

#include <algorithm>

namespace cma {

int ModuleOrder::schreyer_cmp(int ca, const Monomial& a, int cb, const Monomial& b) const {
  Monomial ia = a * lead[ca], ib = b * lead[cb];
  int c;
  if (level0 == Kind::PositionOverTerm) {
    if (lead_comp[ca] != lead_comp[cb]) return lead_comp[ca] < lead_comp[cb] ? 1 : -1;
    c = base.cmp(ia, ib);
    if (c) return c;
  } else {
    c = base.cmp(ia, ib);
    if (c) return c;
    if (lead_comp[ca] != lead_comp[cb]) return lead_comp[ca] < lead_comp[cb] ? 1 : -1;
  }
  if (rank[ca] != rank[cb]) return rank[ca] > rank[cb] ? 1 : -1;
  return 0;
}

void sort_modvec(ModVec& v, const ModuleOrder& ord) {
  std::sort(v.begin(), v.end(),
            [&](const ModTerm& x, const ModTerm& y) { return ord.cmp(x.comp, x.m, y.comp, y.m) > 0; });
}

ModVec to_modvec(const Column& col, const ModuleOrder& ord) {
  ModVec v;
  for (int i = 0; i < static_cast<int>(col.size()); ++i)
    for (auto& t : col[i].terms) v.push_back({i, t.m, t.c});
  sort_modvec(v, ord);
  return v;
}

ModVec to_modvec(const Poly& f, const ModuleOrder& ord) {
  ModVec v;
  for (auto& t : f.terms) v.push_back({0, t.m, t.c});
  sort_modvec(v, ord);
  return v;
}

Column to_column(const ModVec& v, int rank, const Field& F) {
  std::vector<std::vector<Term>> parts(rank);
  for (auto& t : v) parts[t.comp].push_back({t.m, t.c});
  Column col(rank);
  for (int i = 0; i < rank; ++i) col[i] = Poly::from_terms(std::move(parts[i]), F);
  return col;
}

Poly to_poly(const ModVec& v, const Field& F) {
  std::vector<Term> t;
  for (auto& x : v) t.push_back({x.m, x.c});
  return Poly::from_terms(std::move(t), F);
}

ModVec modvec_axpy(const ModVec& f, uint32_t c, const Monomial& m, const ModVec& g, const ModuleOrder& ord,
                   const Field& F) {
  ModVec r;
  r.reserve(f.size() + g.size());
  uint32_t nc = F.neg(c);
  size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].m * m;
    int s = ord.cmp(f[i].comp, f[i].m, g[j].comp, gm);
    if (s > 0) {
      r.push_back(f[i++]);
    } else if (s < 0) {
      r.push_back({g[j].comp, gm, F.mul(nc, g[j].c)});
      ++j;
    } else {
      uint32_t v = F.add(f[i].c, F.mul(nc, g[j].c));
      if (v) r.push_back({f[i].comp, f[i].m, v});
      ++i;
      ++j;
    }
  }
  while (i < f.size()) r.push_back(f[i++]);
  for (; j < g.size(); ++j) r.push_back({g[j].comp, g[j].m * m, F.mul(nc, g[j].c)});
  return r;
}

ModVec modvec_scale(const ModVec& f, uint32_t c, const Field& F) {
  if (c == 0) return {};
  ModVec r = f;
  for (auto& t : r) t.c = F.mul(t.c, c);
  return r;
}

ModVec modvec_make_monic(const ModVec& f, const Field& F) {
  if (f.empty() || f[0].c == 1) return f;
  return modvec_scale(f, F.inv(f[0].c), F);
}

void LeadIndex::add(int idx, const ModTerm& lead) {
  if (lead.comp >= static_cast<int>(buckets_.size())) buckets_.resize(lead.comp + 1);
  buckets_[lead.comp].push_back({lead.m, idx});
}

int LeadIndex::find(int comp, const Monomial& m) const {
  if (comp >= static_cast<int>(buckets_.size())) return -1;
  for (auto& e : buckets_[comp])
    if (e.m.divides(m)) return e.idx;
  return -1;
}

ModVec module_normal_form(const ModVec& f0, const std::vector<ModVec>& G, const LeadIndex& idx,
                          const ModuleOrder& ord, const Field& F) {
  ModVec r, f = f0;
  size_t pos = 0;
  while (pos < f.size()) {
    const ModTerm t = f[pos];
    int k = idx.find(t.comp, t.m);
    if (k < 0) {
      r.push_back(t);
      ++pos;
      continue;
    }
    const ModVec& g = G[k];
    uint32_t c = g[0].c == 1 ? t.c : F.mul(t.c, F.inv(g[0].c));
    ModVec rest(f.begin() + pos, f.end());
    f = modvec_axpy(rest, c, t.m / g[0].m, g, ord, F);
    pos = 0;
  }
  return r;
}

ModVec module_normal_form(const ModVec& f, const std::vector<ModVec>& G, const ModuleOrder& ord, const Field& F) {
  LeadIndex idx;
  for (int i = 0; i < static_cast<int>(G.size()); ++i)
    if (!G[i].empty()) idx.add(i, G[i][0]);
  return module_normal_form(f, G, idx, ord, F);
}

ModVec reduce_tracking(ModVec h, const std::vector<ModVec>& G, const LeadIndex& idx, const ModuleOrder& ord,
                       const Field& F, const std::function<void(int, const Monomial&, uint32_t)>& quot) {
  while (!h.empty()) {
    const ModTerm t = h[0];
    int k = idx.find(t.comp, t.m);
    if (k < 0) break;
    const ModVec& g = G[k];
    uint32_t c = g[0].c == 1 ? t.c : F.mul(t.c, F.inv(g[0].c));
    Monomial q = t.m / g[0].m;
    quot(k, q, c);
    h = modvec_axpy(h, c, q, g, ord, F);
  }
  return h;
}

namespace {

struct Pair {
  int i, j;
  int comp;
  Monomial l;
  long deg;
  long serial;
};

class Buchberger {
 public:
  Buchberger(const ModuleOrder& ord, const Field& F, const GBOptions& opt) : ord_(ord), F_(F), opt_(opt) {}

  std::vector<ModVec> run(const std::vector<ModVec>& gens) {
    std::vector<ModVec> in;
    for (auto& g : gens)
      if (!g.empty()) in.push_back(g);
    std::stable_sort(in.begin(), in.end(), [&](const ModVec& a, const ModVec& b) { return degree_of(a) < degree_of(b); });
    size_t next_gen = 0;
    while (next_gen < in.size() || !B_.empty()) {
      int best = -1;
      for (int k = 0; k < static_cast<int>(B_.size()); ++k)
        if (best < 0 || B_[k].deg < B_[best].deg || (B_[k].deg == B_[best].deg && B_[k].serial < B_[best].serial))
          best = k;
      ModVec h;
      if (next_gen < in.size() && (best < 0 || degree_of(in[next_gen]) <= B_[best].deg)) {
        h = in[next_gen++];
      } else {
        Pair p = B_[best];
        B_.erase(B_.begin() + best);
        h = spoly(p);
      }
      h = module_normal_form(h, G_, idx_, ord_, F_);
      if (h.empty()) continue;
      insert(modvec_make_monic(h, F_));
    }
    return finish();
  }

 private:
  long twist(int c) const { return opt_.twists.empty() ? 0 : opt_.twists[c]; }
  long degree_of(const ModVec& v) const {
    long d = 0;
    for (auto& t : v) d = std::max(d, static_cast<long>(t.m.deg) + twist(t.comp));
    return d;
  }

  ModVec spoly(const Pair& p) const {
    const ModVec& a = G_[p.i];
    const ModVec& b = G_[p.j];
    ModVec sa = modvec_axpy({}, F_.neg(1), p.l / a[0].m, a, ord_, F_);
    return modvec_axpy(sa, 1, p.l / b[0].m, b, ord_, F_);
  }

  void insert(ModVec h) {
    const int hi = static_cast<int>(G_.size());
    const ModTerm lh = h[0];
    const bool prod = opt_.product_criterion;
    std::vector<Pair> C, D;
    for (int i = 0; i < hi; ++i)
      if (active_[i] && G_[i][0].comp == lh.comp) {
        Monomial l = lcm(G_[i][0].m, lh.m);
        C.push_back({i, hi, lh.comp, l, static_cast<long>(l.deg) + twist(lh.comp), 0});
      }
    while (!C.empty()) {
      Pair p = C.back();
      C.pop_back();
      bool coprime = prod && G_[p.i][0].m.coprime(lh.m);
      bool dominated = false;
      if (!coprime) {
        for (auto& q : C)
          if (q.l.divides(p.l)) { dominated = true; break; }
        if (!dominated)
          for (auto& q : D)
            if (q.l.divides(p.l)) { dominated = true; break; }
      }
      if (coprime || !dominated) D.push_back(p);
    }
    std::vector<Pair> nb;
    for (auto& p : B_) {
      if (p.comp == lh.comp && lh.m.divides(p.l)) {
        Monomial l1 = lcm(G_[p.i][0].m, lh.m), l2 = lcm(G_[p.j][0].m, lh.m);
        if (l1 != p.l && l2 != p.l) continue;
      }
      nb.push_back(p);
    }
    for (auto& p : D) {
      if (prod && G_[p.i][0].m.coprime(lh.m)) continue;
      p.serial = serial_++;
      nb.push_back(p);
    }
    B_.swap(nb);
    for (int i = 0; i < hi; ++i)
      if (active_[i] && G_[i][0].comp == lh.comp && lh.m.divides(G_[i][0].m)) active_[i] = 0;
    G_.push_back(std::move(h));
    active_.push_back(1);
    idx_.add(hi, lh);
  }

  std::vector<ModVec> finish() {
    std::vector<ModVec> out;
    for (size_t i = 0; i < G_.size(); ++i)
      if (active_[i]) out.push_back(G_[i]);
    LeadIndex idx;
    for (int i = 0; i < static_cast<int>(out.size()); ++i) idx.add(i, out[i][0]);
    for (auto& g : out) {
      ModVec tail(g.begin() + 1, g.end());
      ModVec red = module_normal_form(tail, out, idx, ord_, F_);
      ModVec ng{g[0]};
      ng.insert(ng.end(), red.begin(), red.end());
      g = std::move(ng);
    }
    std::sort(out.begin(), out.end(), [&](const ModVec& a, const ModVec& b) {
      return ord_.cmp(a[0].comp, a[0].m, b[0].comp, b[0].m) < 0;
    });
    return out;
  }

  const ModuleOrder& ord_;
  const Field& F_;
  const GBOptions& opt_;
  std::vector<ModVec> G_;
  std::vector<char> active_;
  LeadIndex idx_;
  std::vector<Pair> B_;
  long serial_ = 0;
};

}  // namespace

std::vector<ModVec> module_groebner(const std::vector<ModVec>& gens, const ModuleOrder& ord, const Field& F,
                                    const GBOptions& opt) {
  Buchberger b(ord, F, opt);
  return b.run(gens);
}

}  // namespace cma
