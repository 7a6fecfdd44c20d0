#include <algorithm>

#include "cmalg/groebner.hpp"

namespace cma {

namespace {
std::vector<Monomial> minimal_monomials(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return key_cmp(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (auto& m : g) {
    bool redundant = false;
    for (auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return key_cmp(a, b) > 0; });
  return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_add_shifted(IntPoly& a, const IntPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
}

IntPoly numerator_rec(std::vector<Monomial> gens, int n) {
  if (gens.empty()) return {1};
  bool coprime = true;
  int used = 0;
  for (auto& m : gens) {
    int s = m.support_mask();
    if (s & used) {
      coprime = false;
      break;
    }
    used |= s;
  }
  if (coprime) {
    IntPoly r{1};
    for (auto& m : gens) {
      IntPoly f(m.deg + 1, 0);
      f[0] = 1;
      f[m.deg] -= 1;
      r = poly_mul(r, f);
    }
    return r;
  }
  // Pivot on the variable occurring in the most generators.
  std::vector<int> count(kMaxVars, 0);
  for (auto& m : gens)
    for (int i = 0; i < n; ++i)
      if (m.e[i] && !(m.support_mask() == (1 << i))) ++count[i];
  int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial p = Monomial::var(v);
  std::vector<Monomial> plus{p}, colon;
  for (auto& m : gens) {
    if (!m.e[v]) plus.push_back(m);
    colon.push_back(m.e[v] ? m / p : m);
  }
  IntPoly a = numerator_rec(minimal_monomials(plus), n);
  IntPoly b = numerator_rec(minimal_monomials(colon), n);
  poly_add_shifted(a, b, 1);
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}
}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> g) : n(nvars), gens(minimal_monomials(std::move(g))) {}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  for (auto& m : o.gens)
    if (!contains(m)) return false;
  return true;
}

int MonomialIdeal::krull_dim() const {
  if (is_unit()) return -1;
  std::vector<int> masks;
  for (auto& g : gens) masks.push_back(g.support_mask());
  int best = 0;
  const int full = 1 << n;
  for (int s = 0; s < full; ++s) {
    int sz = __builtin_popcount(s);
    if (sz <= best) continue;
    bool ok = true;
    for (int m : masks)
      if ((m & s) == m) {
        ok = false;
        break;
      }
    if (ok) best = sz;
  }
  return best;
}

IntPoly MonomialIdeal::hilbert_numerator() const { return numerator_rec(gens, n); }

long long hilbert_from_numerator(const IntPoly& num, int n, int d) {
  long long v = 0;
  for (size_t k = 0; k < num.size(); ++k)
    if (num[k] && static_cast<int>(k) <= d) v += num[k] * binomial(d - static_cast<long long>(k) + n - 1, n - 1);
  return v;
}

long long MonomialIdeal::hilbert_function(int d) const {
  if (d < 0) return 0;
  return hilbert_from_numerator(hilbert_numerator(), n, d);
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> q;
  for (auto& g : gens) q.push_back(g / gcd(g, m));
  return MonomialIdeal(n, q);
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& o) const {
  std::vector<Monomial> g = gens;
  g.insert(g.end(), o.gens.begin(), o.gens.end());
  return MonomialIdeal(n, g);
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& o) const {
  std::vector<Monomial> g;
  for (auto& a : gens)
    for (auto& b : o.gens) g.push_back(a * b);
  return MonomialIdeal(n, g);
}

}  // namespace cma
