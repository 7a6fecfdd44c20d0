#pragma once
#include <string>
#include <utility>
#include <vector>

#include "cmalg/groebner.hpp"

namespace cma {

// Symmetric Gram matrix: q = sum_{i,j} gram[i][j] x_i x_j.
struct QuadraticForm {
  std::vector<std::vector<uint32_t>> gram;

  int n() const { return static_cast<int>(gram.size()); }
  Poly to_poly(const RingContext& R) const;
  static QuadraticForm from_poly(const RingContext& R, const Poly& q);
  bool operator==(const QuadraticForm& o) const { return gram == o.gram; }
};

// Span of quadratic forms; the pencil is sum_k T_k * basis[k].
struct QuadricSpace {
  int n = 0;
  std::vector<QuadraticForm> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  // Coefficients of the parameters T_0..T_{m-1} in entry (i, j) of the pencil matrix.
  std::vector<uint32_t> pencil_entry(int i, int j) const;
  Ideal ideal(const RingContext& R) const;
};

int quadric_rank(const Field& F, const QuadraticForm& Q);
QuadricSpace orthogonal_complement(const Field& F, const QuadricSpace& U);
QuadricSpace catalecticant_space(const Field& F, int n);
// Canonical basis of the span (reduced row echelon in upper-triangle coordinates).
QuadricSpace canonical_basis(const Field& F, const QuadricSpace& U);

Ideal power_max_ideal(const RingContext& R, int d);
Ideal linear_subspace_ideal(const RingContext& R, int k, uint64_t seed);
// Degree-d monomials supported on at most q+1 variables.
Ideal monomial_J(const RingContext& R, int d, int q);
// m * (x_1^{d-1}, ..., x_n^{d-1}), minimally generated.
Ideal herzog_hibi_J(const RingContext& R, int d);
// Kernel linear forms, orthogonal quadrics and all cubics.
Ideal apolar_ideal_of_quadric(const RingContext& R, const QuadraticForm& Q);

// Named examples: caviglia1, caviglia2 (param n), conca (param r), ex93.
Ideal paper_example(const std::string& name, int param = 0, uint32_t p = 32003);
// The pair (J, L) over S[t] witnessing failure of the Tor bound without the dimension hypothesis.
std::pair<Ideal, Ideal> caviglia_tor_pair(int n, uint32_t p = 32003);
std::vector<std::string> paper_example_names();

enum class RandomFlavor { Forms, Monomials, MPrimaryForms };
Ideal random_ideal(const RingContext& R, int d, int count, uint64_t seed, RandomFlavor flavor);
Poly random_form(const RingContext& R, int d, Rng& rng);

}  // namespace cma
