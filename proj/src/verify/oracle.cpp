#include "cmalg/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "cmalg/linalg.hpp"

namespace cma {

namespace {

// One graded piece M_e = W_e / R_e with W_e = sum_c S_{e - deg c}.
struct Piece {
  int e = 0;
  std::vector<std::pair<int, Monomial>> coords;  // basis of W_e
  std::map<std::pair<int, std::array<uint16_t, kMaxVars>>, int> index;
  std::unique_ptr<Echelon> rel;
  std::vector<int> free_cols;  // non-pivot coordinates: a basis of M_e
  std::vector<int> col_pos;    // coordinate -> position among free_cols, or -1
  int dim() const { return static_cast<int>(free_cols.size()); }
};

class Degreewise {
 public:
  Degreewise(const RingContext& R, const ModulePresentation& M) : R_(R), M_(M) {}

  const Piece& piece(int e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return *it->second;
    auto P = std::make_unique<Piece>();
    P->e = e;
    for (int c = 0; c < M_.cover.rank(); ++c) {
      int s = e - M_.cover.degs[c];
      if (s < 0) continue;
      for (auto& m : monomials_of_degree(R_.n, s)) {
        P->index[{c, m.e}] = static_cast<int>(P->coords.size());
        P->coords.push_back({c, m});
      }
    }
    const int W = static_cast<int>(P->coords.size());
    P->rel = std::make_unique<Echelon>(R_.F(), W);
    for (int r = 0; r < M_.relations.ncols(); ++r) {
      int s = e - M_.relations.source.degs[r];
      if (s < 0) continue;
      for (auto& m : monomials_of_degree(R_.n, s)) {
        DenseVec v(W, 0);
        for (int c = 0; c < M_.cover.rank(); ++c)
          for (auto& t : M_.relations.cols[r][c].terms) {
            int k = P->index.at({c, (t.m * m).e});
            v[k] = R_.F().add(v[k], t.c);
          }
        P->rel->add(std::move(v));
      }
    }
    std::vector<char> piv(W, 0);
    for (int p : P->rel->pivots()) piv[p] = 1;
    P->col_pos.assign(W, -1);
    for (int k = 0; k < W; ++k)
      if (!piv[k]) {
        P->col_pos[k] = static_cast<int>(P->free_cols.size());
        P->free_cols.push_back(k);
      }
    auto& ref = *P;
    cache_[e] = std::move(P);
    return ref;
  }

  // Coordinates in M_{e+1} of x_i times the b-th basis element of M_e.
  DenseVec times_var(int e, int b, int i) {
    const Piece& src = piece(e);
    const Piece& dst = piece(e + 1);
    auto [c, m] = src.coords[src.free_cols[b]];
    DenseVec v(dst.coords.size(), 0);
    v[dst.index.at({c, (m * Monomial::var(i)).e})] = 1;
    dst.rel->reduce(v);
    DenseVec out(dst.dim(), 0);
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
      if (v[k]) out[dst.col_pos[k]] = v[k];
    return out;
  }

 private:
  const RingContext& R_;
  const ModulePresentation& M_;
  std::map<int, std::unique_ptr<Piece>> cache_;
};

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Rank of the Koszul differential K_i (x) M_{j-i} -> K_{i-1} (x) M_{j-i+1}.
int koszul_rank(const RingContext& R, Degreewise& D, int i, int j) {
  if (i <= 0 || i > R.n) return 0;
  const int e = j - i;
  if (e < 0) return 0;
  const int src_dim = D.piece(e).dim();
  const int dst_dim = D.piece(e + 1).dim();
  if (src_dim == 0 || dst_dim == 0) return 0;
  auto S_i = subsets(R.n, i);
  auto S_lo = subsets(R.n, i - 1);
  std::map<std::vector<int>, int> lo_index;
  for (int k = 0; k < static_cast<int>(S_lo.size()); ++k) lo_index[S_lo[k]] = k;
  const int width = static_cast<int>(S_lo.size()) * dst_dim;
  std::vector<DenseVec> rows;
  for (auto& S : S_i)
    for (int b = 0; b < src_dim; ++b) {
      DenseVec row(width, 0);
      for (int pos = 0; pos < i; ++pos) {
        std::vector<int> rest = S;
        rest.erase(rest.begin() + pos);
        int blk = lo_index.at(rest) * dst_dim;
        DenseVec xm = D.times_var(e, b, S[pos]);
        bool neg = pos % 2 == 1;
        for (int k = 0; k < dst_dim; ++k)
          if (xm[k]) row[blk + k] = R.F().add(row[blk + k], neg ? R.F().neg(xm[k]) : xm[k]);
      }
      rows.push_back(std::move(row));
    }
  return rank_of(R.F(), rows, width);
}

}  // namespace

long long oracle_hilbert_function(const RingContext& R, const ModulePresentation& M, int e) {
  Degreewise D(R, M);
  return D.piece(e).dim();
}

OracleResult oracle_betti(const RingContext& R, const ModulePresentation& M, int degree_cap) {
  Degreewise D(R, M);
  OracleResult out;
  int max_cover = kNegInf;
  for (int d : M.cover.degs) max_cover = std::max(max_cover, d);
  if (M.cover.rank() == 0) {
    out.complete = true;
    out.degree_cap = degree_cap < 0 ? 0 : degree_cap;
    return out;
  }
  int min_cover = *std::min_element(M.cover.degs.begin(), M.cover.degs.end());
  if (degree_cap < 0) {
    // M_e = 0 past the cover degrees forces M_{e'} = 0 for all e' >= e.
    // A finite-length module is killed by forms of degree <= (top relation degree - bottom cover degree)
    // times the cover rank, so its top degree is bounded by the socle of a complete intersection of those.
    int max_rel = max_cover;
    for (int d : M.relations.source.degs) max_rel = std::max(max_rel, d);
    int e = max_cover;
    const int limit = max_cover + R.n * M.cover.rank() * std::max(1, max_rel - min_cover);
    while (D.piece(e).dim() != 0) {
      if (++e > limit) throw std::invalid_argument("oracle_betti: module does not have finite length");
    }
    out.degree_cap = e - 1 + R.n;
    out.complete = true;
  } else {
    if (degree_cap < max_cover) throw std::invalid_argument("oracle_betti: degree cap below generator degrees");
    out.degree_cap = degree_cap;
    int e = max_cover;
    while (e <= degree_cap && D.piece(e).dim() != 0) ++e;
    out.complete = e <= degree_cap && e - 1 + R.n <= degree_cap;
  }
  for (int j = min_cover; j <= out.degree_cap; ++j)
    for (int i = 0; i <= R.n; ++i) {
      int e = j - i;
      if (e < min_cover) continue;
      long long c = binomial(R.n, i) * D.piece(e).dim();
      if (c == 0) continue;
      long long b = c - koszul_rank(R, D, i, j) - koszul_rank(R, D, i + 1, j);
      if (b) out.table.entries[{i, j}] = b;
    }
  return out;
}

}  // namespace cma
