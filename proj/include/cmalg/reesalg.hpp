#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cmalg/homalg.hpp"
#include "cmalg/linalg.hpp"

namespace cma {

struct TorsionReport {
  int t = 0;
  int d = 0;
  GradedVectorSpaceSummary degrees;
  std::vector<int> gen_degrees;  // with multiplicity, ascending
  int reg = kNegInf;             // top degree; kNegInf when A_t = 0
  bool zero() const { return degrees.dims.empty(); }
};

// Torsion of Sym_t(I) for m-primary I generated in a single degree.
TorsionReport sym_power_torsion(const Ideal& I, int t);

struct AdjointPair {
  ModuleMap phi;  // N x M, linear in the n variables x
  ModuleMap psi;  // n x M, linear in the N variables T
  int n = 0;
  int N = 0;
};

// Rereads an N x M linear matrix over n variables as an n x M linear matrix over N variables.
AdjointPair adjoint_matrix(const ModuleMap& phi, int nvars);

// Linear first syzygies of the given generators as columns (N x M).
ModuleMap linear_presentation(const Ideal& I);

struct EliminationReport {
  Ideal annihilator;  // ann(coker psi) over the T ring
  Ideal elimination;  // kernel of T_i -> f_i over the T ring
  int linear_steps = 0;
  int needed_steps = 0;
  bool hypothesis = false;  // linear for at least ceil(n/2) steps
  bool equal = false;
};

// The T ring has variables T1..TN, one per generator of V.
RingContext t_ring(int N, uint32_t p);
EliminationReport instant_eliminate(const Ideal& V);
// Kernel of K[T1..TN] -> S, T_i -> f_i, computed by elimination.
Ideal image_ideal(const Ideal& V);

// Least r <= cap with I^{r+1} = J I^r; nullopt when the cap is exceeded.
std::optional<int> reduction_number(const Ideal& J, const Ideal& I, int cap = 10);

struct StabilizationReport {
  std::optional<int> s;     // least s <= cap with I^s = m^{ds}
  bool next_holds = false;  // also verified at s+1
  std::vector<bool> holds;  // holds[k] for exponent k+1, k < cap
};
StabilizationReport power_stabilization(const Ideal& I, int cap = 8);

// Basis of (I^s)_{sd} for I generated in the single degree d, as dense vectors over monomials_of_degree(n, sd).
std::vector<DenseVec> power_component(const Ideal& I, int s);

}  // namespace cma
