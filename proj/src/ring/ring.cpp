#include "cmalg/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace cma {

namespace {
bool key_greater(const Term& a, const Term& b) { return key_cmp(a.m, b.m) > 0; }
}  // namespace

bool Poly::operator==(const Poly& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].c != o.terms[i].c || terms[i].m != o.terms[i].m) return false;
  return true;
}

Poly Poly::constant(uint32_t c) {
  Poly f;
  if (c) f.terms.push_back({Monomial(), c});
  return f;
}

Poly Poly::monomial(const Monomial& m, uint32_t c) {
  Poly f;
  if (c) f.terms.push_back({m, c});
  return f;
}

Poly Poly::from_terms(std::vector<Term> t, const Field& F) {
  std::sort(t.begin(), t.end(), key_greater);
  Poly f;
  for (auto& x : t) {
    if (!f.terms.empty() && f.terms.back().m == x.m) {
      f.terms.back().c = F.add(f.terms.back().c, x.c);
      if (f.terms.back().c == 0) f.terms.pop_back();
    } else if (x.c != 0) {
      f.terms.push_back(x);
    }
  }
  return f;
}

bool Poly::is_homogeneous() const {
  for (auto& t : terms)
    if (t.m.deg != terms.front().m.deg) return false;
  return true;
}

int Poly::degree() const { return terms.empty() ? -1 : static_cast<int>(terms.front().m.deg); }

int Poly::max_degree() const {
  int d = -1;
  for (auto& t : terms) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

Term Poly::leading(const MonomialOrder& ord) const {
  Term best = terms.front();
  for (auto& t : terms)
    if (ord.cmp(t.m, best.m) > 0) best = t;
  return best;
}

uint32_t Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), Term{m, 0}, key_greater);
  if (it != terms.end() && it->m == m) return it->c;
  return 0;
}

RingContext::RingContext(int nvars, uint32_t p) : n(nvars), field(p) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
}

RingContext::RingContext(std::vector<std::string> vars, uint32_t p)
    : n(static_cast<int>(vars.size())), names(std::move(vars)), field(p) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name " + names[i]);
}

Poly RingContext::constant(long long c) const { return Poly::constant(field.from_int(c)); }

Poly RingContext::add(const Poly& f, const Poly& g) const {
  Poly r;
  r.terms.reserve(f.size() + g.size());
  size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    int c = key_cmp(f.terms[i].m, g.terms[j].m);
    if (c > 0) {
      r.terms.push_back(f.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(g.terms[j++]);
    } else {
      uint32_t s = field.add(f.terms[i].c, g.terms[j].c);
      if (s) r.terms.push_back({f.terms[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < f.size()) r.terms.push_back(f.terms[i++]);
  while (j < g.size()) r.terms.push_back(g.terms[j++]);
  return r;
}

Poly RingContext::neg(const Poly& f) const {
  Poly r = f;
  for (auto& t : r.terms) t.c = field.neg(t.c);
  return r;
}

Poly RingContext::sub(const Poly& f, const Poly& g) const { return add(f, neg(g)); }

Poly RingContext::scale(const Poly& f, uint32_t c) const {
  if (c == 0) return {};
  Poly r = f;
  for (auto& t : r.terms) t.c = field.mul(t.c, c);
  return r;
}

Poly RingContext::mul_term(const Poly& f, const Monomial& m, uint32_t c) const {
  if (c == 0) return {};
  Poly r;
  r.terms.reserve(f.size());
  // Multiplying by a monomial preserves the lex key order.
  for (auto& t : f.terms) r.terms.push_back({t.m * m, field.mul(t.c, c)});
  return r;
}

Poly RingContext::mul(const Poly& f, const Poly& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  if (g.size() == 1) return mul_term(f, g.terms[0].m, g.terms[0].c);
  if (f.size() == 1) return mul_term(g, f.terms[0].m, f.terms[0].c);
  std::unordered_map<Monomial, uint32_t, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (auto& a : f.terms)
    for (auto& b : g.terms) {
      auto& slot = acc[a.m * b.m];
      slot = field.add(slot, field.mul(a.c, b.c));
    }
  std::vector<Term> t;
  t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) t.push_back({m, c});
  std::sort(t.begin(), t.end(), key_greater);
  Poly r;
  r.terms = std::move(t);
  return r;
}

Poly RingContext::pow(const Poly& f, int k) const {
  Poly r = Poly::constant(1 % field.p);
  Poly b = f;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return r;
}

Poly RingContext::make_monic(const Poly& f, const MonomialOrder& ord) const {
  if (f.is_zero()) return f;
  return scale(f, field.inv(f.leading(ord).c));
}

Poly RingContext::substitute(const Poly& f, const std::vector<Poly>& subs) const {
  Poly r;
  std::vector<std::vector<Poly>> powers(n);
  for (auto& t : f.terms) {
    Poly term = Poly::constant(t.c);
    for (int i = 0; i < n; ++i) {
      int e = t.m.e[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(mul(pw.back(), subs[i]));
      term = mul(term, pw[e]);
    }
    r = add(r, term);
  }
  return r;
}

std::string RingContext::to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!m.e[i]) continue;
    if (!first) os << '*';
    first = false;
    os << names[i];
    if (m.e[i] > 1) os << '^' << m.e[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string RingContext::to_string(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::vector<Term> t = f.terms;
  std::stable_sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.cmp(a.m, b.m) > 0; });
  std::ostringstream os;
  bool first = true;
  for (auto& x : t) {
    long long c = field.to_signed(x.c);
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (x.m.is_one()) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << to_string(x.m);
    }
  }
  return os.str();
}

ModuleMap::ModuleMap(FreeModule src, FreeModule tgt) : source(std::move(src)), target(std::move(tgt)) {
  cols.assign(source.rank(), Column(target.rank()));
}

ModuleMap ModuleMap::identity(const FreeModule& F) {
  ModuleMap m(F, F);
  for (int i = 0; i < F.rank(); ++i) m.cols[i][i] = Poly::constant(1);
  return m;
}

bool ModuleMap::is_zero() const {
  for (auto& c : cols)
    if (!column_is_zero(c)) return false;
  return true;
}

bool ModuleMap::is_homogeneous() const {
  if (static_cast<int>(cols.size()) != source.rank()) return false;
  for (int j = 0; j < source.rank(); ++j) {
    if (static_cast<int>(cols[j].size()) != target.rank()) return false;
    for (int i = 0; i < target.rank(); ++i) {
      const Poly& f = cols[j][i];
      if (f.is_zero()) continue;
      int want = source.degs[j] - target.degs[i];
      if (want < 0) return false;
      for (auto& t : f.terms)
        if (static_cast<int>(t.m.deg) != want) return false;
    }
  }
  return true;
}

ModuleMap ModuleMap::transpose_dual() const {
  FreeModule s, t;
  for (int d : target.degs) s.degs.push_back(-d);
  for (int d : source.degs) t.degs.push_back(-d);
  ModuleMap r(s, t);
  for (int j = 0; j < source.rank(); ++j)
    for (int i = 0; i < target.rank(); ++i) r.cols[i][j] = cols[j][i];
  return r;
}

ModuleMap map_compose(const RingContext& R, const ModuleMap& g, const ModuleMap& f) {
  if (!(g.source == f.target)) throw std::invalid_argument("map_compose: source/target mismatch");
  ModuleMap h(f.source, g.target);
  for (int j = 0; j < f.ncols(); ++j)
    for (int k = 0; k < f.rows(); ++k) {
      const Poly& a = f.cols[j][k];
      if (a.is_zero()) continue;
      for (int i = 0; i < g.rows(); ++i) {
        const Poly& b = g.cols[k][i];
        if (b.is_zero()) continue;
        h.cols[j][i] = R.add(h.cols[j][i], R.mul(b, a));
      }
    }
  return h;
}

Column column_add(const RingContext& R, const Column& a, const Column& b) {
  Column r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = R.add(a[i], b[i]);
  return r;
}

Column column_scale(const RingContext& R, const Column& a, const Poly& f) {
  Column r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = R.mul(a[i], f);
  return r;
}

bool column_is_zero(const Column& a) {
  for (auto& f : a)
    if (!f.is_zero()) return false;
  return true;
}

}  // namespace cma
