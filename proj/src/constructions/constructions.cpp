#include "cmalg/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cmalg/linalg.hpp"

namespace cma {

namespace {
void require_odd(const Field& F) {
  if (F.p == 2) throw std::invalid_argument("quadric spaces need characteristic other than 2");
}

// Upper-triangle coordinates of a symmetric matrix.
DenseVec sym_coords(const QuadraticForm& Q) {
  DenseVec v;
  for (int i = 0; i < Q.n(); ++i)
    for (int j = i; j < Q.n(); ++j) v.push_back(Q.gram[i][j]);
  return v;
}

QuadraticForm from_sym_coords(int n, const DenseVec& v) {
  QuadraticForm Q;
  Q.gram.assign(n, std::vector<uint32_t>(n, 0));
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Q.gram[i][j] = Q.gram[j][i] = v[k++];
    }
  return Q;
}
}  // namespace

Poly QuadraticForm::to_poly(const RingContext& R) const {
  std::vector<Term> t;
  for (int i = 0; i < n(); ++i)
    for (int j = i; j < n(); ++j) {
      uint32_t c = i == j ? gram[i][i] : R.F().add(gram[i][j], gram[j][i]);
      if (c) t.push_back({Monomial::var(i) * Monomial::var(j), c});
    }
  return Poly::from_terms(t, R.F());
}

QuadraticForm QuadraticForm::from_poly(const RingContext& R, const Poly& q) {
  require_odd(R.F());
  QuadraticForm Q;
  Q.gram.assign(R.n, std::vector<uint32_t>(R.n, 0));
  uint32_t half = R.F().inv(2);
  for (auto& t : q.terms) {
    if (t.m.deg != 2) throw std::invalid_argument("QuadraticForm: not a quadric");
    std::vector<int> idx;
    for (int i = 0; i < R.n; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      Q.gram[idx[0]][idx[0]] = t.c;
    } else {
      Q.gram[idx[0]][idx[1]] = Q.gram[idx[1]][idx[0]] = R.F().mul(t.c, half);
    }
  }
  return Q;
}

std::vector<uint32_t> QuadricSpace::pencil_entry(int i, int j) const {
  std::vector<uint32_t> v;
  for (auto& q : basis) v.push_back(q.gram[i][j]);
  return v;
}

Ideal QuadricSpace::ideal(const RingContext& R) const {
  std::vector<Poly> g;
  for (auto& q : basis) g.push_back(q.to_poly(R));
  return Ideal(R, g);
}

int quadric_rank(const Field& F, const QuadraticForm& Q) {
  std::vector<DenseVec> rows;
  for (auto& r : Q.gram) rows.push_back(r);
  return rank_of(F, rows, Q.n());
}

QuadricSpace canonical_basis(const Field& F, const QuadricSpace& U) {
  const int n = U.n, N = n * (n + 1) / 2;
  Echelon e(F, N);
  for (auto& q : U.basis) e.add(sym_coords(q));
  // Back-substitute to reduced form so the basis is canonical.
  std::vector<DenseVec> rows = e.rows();
  const auto& piv = e.pivots();
  for (int a = static_cast<int>(rows.size()) - 1; a >= 0; --a)
    for (int b = 0; b < a; ++b) {
      uint32_t c = rows[b][piv[a]];
      if (!c) continue;
      for (int j = 0; j < N; ++j) rows[b][j] = F.sub(rows[b][j], F.mul(c, rows[a][j]));
    }
  std::vector<int> order(rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return piv[a] < piv[b]; });
  QuadricSpace out;
  out.n = n;
  for (int i : order) out.basis.push_back(from_sym_coords(n, rows[i]));
  return out;
}

QuadricSpace orthogonal_complement(const Field& F, const QuadricSpace& U) {
  require_odd(F);
  const int n = U.n;
  const int N = n * (n + 1) / 2;
  // Pairing sum_{i,j} a_ij b_ij = sum_i a_ii b_ii + 2 sum_{i<j} a_ij b_ij.
  std::vector<uint32_t> weight;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) weight.push_back(i == j ? 1 : 2);
  // Kernel of the map b -> (<a_k, b>)_k.
  std::vector<DenseVec> images(N, DenseVec(U.dim(), 0));
  for (int c = 0; c < N; ++c)
    for (int k = 0; k < U.dim(); ++k) images[c][k] = F.mul(weight[c], sym_coords(U.basis[k])[c]);
  auto ker = kernel_of_images(F, images, U.dim());
  QuadricSpace out;
  out.n = n;
  for (auto& v : ker) out.basis.push_back(from_sym_coords(n, v));
  return canonical_basis(F, out);
}

QuadricSpace catalecticant_space(const Field& F, int n) {
  if (n < 2) throw std::invalid_argument("catalecticant_space: n >= 2");
  QuadricSpace U;
  U.n = n;
  for (int k = 0; k <= 2 * n - 2; ++k) {
    QuadraticForm Q;
    Q.gram.assign(n, std::vector<uint32_t>(n, 0));
    for (int i = 0; i < n; ++i) {
      int j = k - i;
      if (j >= 0 && j < n) Q.gram[i][j] = 1;
    }
    U.basis.push_back(Q);
  }
  (void)F;
  return U;
}

Ideal power_max_ideal(const RingContext& R, int d) {
  if (d < 1) throw std::invalid_argument("power_max_ideal: d >= 1");
  return max_ideal_power(R, d);
}

Ideal linear_subspace_ideal(const RingContext& R, int k, uint64_t seed) {
  if (k > R.n || k < 0) throw std::invalid_argument("linear_subspace_ideal: k > n");
  Rng rng(seed);
  for (;;) {
    std::vector<DenseVec> rows(k, DenseVec(R.n));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<uint32_t>(rng.below(R.F().p));
    if (rank_of(R.F(), rows, R.n) < k) continue;
    std::vector<Poly> g;
    for (auto& r : rows) {
      std::vector<Term> t;
      for (int i = 0; i < R.n; ++i) t.push_back({Monomial::var(i), r[i]});
      g.push_back(Poly::from_terms(t, R.F()));
    }
    return Ideal(R, g);
  }
}

Ideal monomial_J(const RingContext& R, int d, int q) {
  if (q < 0 || q + 1 > R.n || d < 1) throw std::invalid_argument("monomial_J: need 1 <= q+1 <= n and d >= 1");
  std::vector<Poly> g;
  for (auto& m : monomials_of_degree(R.n, d))
    if (__builtin_popcount(m.support_mask()) <= q + 1) g.push_back(Poly::monomial(m));
  return Ideal(R, g);
}

Ideal herzog_hibi_J(const RingContext& R, int d) {
  if (d < 2) throw std::invalid_argument("herzog_hibi_J: d >= 2");
  std::vector<Monomial> g;
  for (int i = 0; i < R.n; ++i)
    for (int j = 0; j < R.n; ++j) g.push_back(Monomial::var(i) * Monomial::var(j, d - 1));
  MonomialIdeal M(R.n, g);
  std::vector<Poly> out;
  for (auto& m : M.gens) out.push_back(Poly::monomial(m));
  return Ideal(R, out);
}

Ideal apolar_ideal_of_quadric(const RingContext& R, const QuadraticForm& Q) {
  require_odd(R.F());
  bool zero = true;
  for (auto& r : Q.gram)
    for (auto c : r)
      if (c) zero = false;
  if (zero) throw std::invalid_argument("apolar_ideal_of_quadric: zero form");
  std::vector<Poly> g;
  std::vector<DenseVec> images;
  for (int i = 0; i < R.n; ++i) images.push_back(DenseVec(Q.gram[i].begin(), Q.gram[i].end()));
  for (auto& v : kernel_of_images(R.F(), images, R.n)) {
    std::vector<Term> t;
    for (int i = 0; i < R.n; ++i) t.push_back({Monomial::var(i), v[i]});
    g.push_back(Poly::from_terms(t, R.F()));
  }
  QuadricSpace U;
  U.n = R.n;
  U.basis.push_back(Q);
  for (auto& q : orthogonal_complement(R.F(), U).basis) g.push_back(q.to_poly(R));
  for (auto& m : monomials_of_degree(R.n, 3)) g.push_back(Poly::monomial(m));
  return minimalize(Ideal(R, g));
}

namespace {
Poly mono_poly(std::vector<int> e) { return Poly::monomial(Monomial::from_exponents(e)); }
}  // namespace

Ideal paper_example(const std::string& name, int param, uint32_t p) {
  if (name == "caviglia1") {
    RingContext R(4, p);
    std::vector<Poly> g;
    Poly s;
    for (int i = 0; i < 4; ++i) {
      g.push_back(R.pow(R.var(i), 3));
      s = R.add(s, R.var(i));
    }
    g.push_back(R.pow(s, 3));
    return Ideal(R, g);
  }
  if (name == "caviglia2") {
    const int n = param;
    if (n < 2) throw std::invalid_argument("caviglia2: n >= 2");
    RingContext R(4, p);
    Poly a = R.mul(R.var(0), R.pow(R.var(2), n - 1));
    Poly b = R.mul(R.var(1), R.pow(R.var(3), n - 1));
    return Ideal(R, {R.pow(R.var(0), n), R.pow(R.var(1), n), R.sub(a, b)});
  }
  if (name == "conca") {
    const int r = param;
    if (r < 2) throw std::invalid_argument("conca: r >= 2");
    RingContext R(std::vector<std::string>{"a", "b", "c", "d"}, p);
    std::vector<Poly> g{mono_poly({1, r, 0, 0}), mono_poly({1, 0, r, 0}), mono_poly({0, r - 1, 1, 1})};
    for (int i = 0; i <= r - 1; ++i) g.push_back(mono_poly({0, 1 + (r - 1 - i), 1 + i, 0}));
    return Ideal(R, g);
  }
  if (name == "ex93") {
    RingContext R(std::vector<std::string>{"x", "y", "z"}, p);
    std::set<std::vector<int>> excluded{{3, 1, 1}, {1, 3, 1}, {1, 1, 3}};
    std::vector<Poly> g;
    for (auto& m : monomials_of_degree(3, 5))
      if (!excluded.count(m.exponents(3))) g.push_back(Poly::monomial(m));
    return Ideal(R, g);
  }
  throw std::invalid_argument("unknown example: " + name);
}

std::vector<std::string> paper_example_names() { return {"caviglia1", "caviglia2", "conca", "ex93"}; }

std::pair<Ideal, Ideal> caviglia_tor_pair(int n, uint32_t p) {
  RingContext T(std::vector<std::string>{"x1", "x2", "x3", "x4", "t"}, p);
  Poly a = T.mul(T.var(0), T.pow(T.var(2), n - 1));
  Poly b = T.mul(T.var(1), T.pow(T.var(3), n - 1));
  Poly f = T.add(T.sub(a, b), T.pow(T.var(4), n));
  Ideal J(T, {T.pow(T.var(0), n), T.pow(T.var(1), n), f});
  Ideal L(T, {T.var(4)});
  return {J, L};
}

Poly random_form(const RingContext& R, int d, Rng& rng) {
  std::vector<Term> t;
  for (auto& m : monomials_of_degree(R.n, d)) t.push_back({m, static_cast<uint32_t>(rng.below(R.F().p))});
  return Poly::from_terms(t, R.F());
}

Ideal random_ideal(const RingContext& R, int d, int count, uint64_t seed, RandomFlavor flavor) {
  if (count < 1) throw std::invalid_argument("random_ideal: count >= 1");
  Rng rng(seed);
  switch (flavor) {
    case RandomFlavor::Forms: {
      std::vector<Poly> g;
      for (int i = 0; i < count; ++i) g.push_back(random_form(R, d, rng));
      return Ideal(R, g);
    }
    case RandomFlavor::Monomials: {
      auto all = monomials_of_degree(R.n, d);
      std::set<int> pick;
      int want = std::min<int>(count, static_cast<int>(all.size()));
      while (static_cast<int>(pick.size()) < want) pick.insert(static_cast<int>(rng.below(all.size())));
      std::vector<Poly> g;
      for (int i : pick) g.push_back(Poly::monomial(all[i]));
      return Ideal(R, g);
    }
    case RandomFlavor::MPrimaryForms: {
      for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Poly> g;
        for (int i = 0; i < count; ++i) g.push_back(random_form(R, d, rng));
        Ideal I(R, g);
        if (krull_dim(I) == 0) return I;
      }
      throw std::runtime_error("random_ideal: m-primary retries exhausted");
    }
  }
  throw std::logic_error("random_ideal: bad flavor");
}

}  // namespace cma
