#pragma once
#include <cstdint>
#include <vector>

#include "cmalg/field.hpp"

namespace cma {

using DenseVec = std::vector<uint32_t>;

// Incrementally built row echelon basis of a subspace of F_p^dim.
class Echelon {
 public:
  Echelon(const Field& F, int dim) : F_(F), dim_(dim) {}
  // Reduces v against the basis in place; returns true if the result is zero.
  bool reduce(DenseVec& v) const;
  // Adds v to the span; returns true if it was independent.
  bool add(DenseVec v);
  bool contains(DenseVec v) const { return reduce(v); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<DenseVec>& rows() const { return rows_; }

 private:
  Field F_;
  int dim_;
  std::vector<DenseVec> rows_;
  std::vector<int> pivots_;
};

// Basis of {x : sum_i x_i * images[i] = 0}; images live in F_p^target_dim.
std::vector<DenseVec> kernel_of_images(const Field& F, const std::vector<DenseVec>& images, int target_dim);
int rank_of(const Field& F, const std::vector<DenseVec>& rows, int dim);

}  // namespace cma
