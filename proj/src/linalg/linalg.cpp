#include "cmalg/linalg.hpp"

namespace cma {

namespace {
void axpy_row(const Field& F, DenseVec& v, uint32_t c, const DenseVec& row, int from) {
  const uint64_t nc = F.neg(c);
  const uint64_t p = F.p;
  for (int j = from; j < static_cast<int>(v.size()); ++j)
    if (row[j]) v[j] = static_cast<uint32_t>((v[j] + nc * row[j]) % p);
}
}  // namespace

bool Echelon::reduce(DenseVec& v) const {
  bool zero = true;
  for (size_t k = 0; k < rows_.size(); ++k) {
    uint32_t c = v[pivots_[k]];
    if (c) axpy_row(F_, v, c, rows_[k], pivots_[k]);
  }
  for (auto x : v)
    if (x) {
      zero = false;
      break;
    }
  return zero;
}

bool Echelon::add(DenseVec v) {
  if (reduce(v)) return false;
  int piv = 0;
  while (v[piv] == 0) ++piv;
  uint32_t inv = F_.inv(v[piv]);
  for (int j = piv; j < dim_; ++j)
    if (v[j]) v[j] = F_.mul(v[j], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<DenseVec> kernel_of_images(const Field& F, const std::vector<DenseVec>& images, int target_dim) {
  const int m = static_cast<int>(images.size());
  Echelon ech(F, target_dim + m);
  std::vector<DenseVec> ker;
  for (int i = 0; i < m; ++i) {
    DenseVec v(target_dim + m, 0);
    for (int j = 0; j < target_dim; ++j) v[j] = images[i][j];
    v[target_dim + i] = 1;
    DenseVec r = v;
    ech.reduce(r);
    bool image_zero = true;
    for (int j = 0; j < target_dim; ++j)
      if (r[j]) {
        image_zero = false;
        break;
      }
    if (image_zero) {
      ker.emplace_back(r.begin() + target_dim, r.end());
    } else {
      ech.add(std::move(v));
    }
  }
  return ker;
}

int rank_of(const Field& F, const std::vector<DenseVec>& rows, int dim) {
  Echelon e(F, dim);
  for (auto& r : rows) e.add(r);
  return e.rank();
}

}  // namespace cma
