#pragma once
#include "cmalg/resolution.hpp"

namespace cma {

struct OracleResult {
  BettiTable table;
  int degree_cap = 0;
  bool complete = false;  // true when every nonzero entry is known to satisfy j <= degree_cap
};

// Betti numbers as Koszul homology of M computed degree by degree with dense linear algebra.
// No Groebner bases or syzygies are used. When degree_cap < 0 the module must have finite length
// and the cap is found from its top degree.
OracleResult oracle_betti(const RingContext& R, const ModulePresentation& M, int degree_cap = -1);

// Dimension of M_e by the same degreewise linear algebra.
long long oracle_hilbert_function(const RingContext& R, const ModulePresentation& M, int e);

}  // namespace cma
