#pragma once
#include <map>

#include "cmalg/resolution.hpp"

namespace cma {

struct GradedVectorSpaceSummary {
  std::map<int, long long> dims;  // only nonzero entries
  int top = kNegInf;
  int bottom = kPosInf;
  long long total() const;
};

// Hilbert series t^shift * num(t) / (1-t)^n.
struct HilbertSeries {
  IntPoly num;
  int shift = 0;
  int n = 0;
  long long at(int d) const;
  // Degreewise dimensions when the module has finite length; nullopt otherwise.
  std::optional<GradedVectorSpaceSummary> finite_dims() const;
  // Krull dimension read off the pole order at t = 1; -1 for the zero module.
  int dimension() const;
};

// Degree-preserving map between presented modules, given on covers.
struct PresentationMap {
  ModulePresentation source, target;
  ModuleMap matrix;  // source.cover -> target.cover
};

// Reduced Groebner basis of the relation module, ascending by leading term.
std::vector<ModVec> relation_groebner(const RingContext& R, const ModulePresentation& M);
HilbertSeries hilbert_series(const RingContext& R, const ModulePresentation& M);
long long hilbert_function(const RingContext& R, const ModulePresentation& M, int d);
bool is_zero_module(const RingContext& R, const ModulePresentation& M);

// Minimal presentation: minimal cover and minimal relations.
ModulePresentation prune(const RingContext& R, const ModulePresentation& M);
ModulePresentation tensor(const RingContext& R, const ModulePresentation& A, const ModulePresentation& B);
// Twist by a: M(a), so generator degrees drop by a.
ModulePresentation shift(const ModulePresentation& M, int a);
// The ideal I as a module (not S/I).
ModulePresentation ideal_module(const Ideal& I);

bool is_well_defined(const RingContext& R, const PresentationMap& f);
ModulePresentation module_kernel(const RingContext& R, const PresentationMap& f);
ModulePresentation module_image(const RingContext& R, const PresentationMap& f);
// (im U + im V) / im V inside the free module `cover`.
ModulePresentation module_subquotient(const RingContext& R, const FreeModule& cover, const std::vector<Column>& U,
                                      const std::vector<int>& u_degs, const std::vector<Column>& V,
                                      const std::vector<int>& v_degs);

ModulePresentation tor_module(const RingContext& R, const ModulePresentation& A, const ModulePresentation& B,
                              int k);
ModulePresentation ext_module(const RingContext& R, const ModulePresentation& M, int k);
// Ext^k(M, S) for every k, sharing one resolution.
std::vector<ModulePresentation> ext_modules(const RingContext& R, const ModulePresentation& M);

int mindeg(const RingContext& R, const ModulePresentation& M);  // kPosInf for zero
// reg H^j_m(M) through local duality; kNegInf when the Ext vanishes.
int reg_local_cohomology(const RingContext& R, const ModulePresentation& M, int j);
std::vector<int> reg_local_cohomology_all(const RingContext& R, const ModulePresentation& M);  // j = 0..n

Ideal annihilator(const RingContext& R, const ModulePresentation& M);
int module_dim(const RingContext& R, const ModulePresentation& M);  // via the annihilator
GradedVectorSpaceSummary socle_summary(const RingContext& R, const ModulePresentation& M);
// Degreewise dimensions of Tor_k(S/I, S/J) computed from a resolution of one side,
// when the other has finite length; nullopt if neither does.
std::optional<GradedVectorSpaceSummary> tor_dims_finite(const Ideal& I, const Ideal& J, int k);
int dim_tor1(const RingContext& R, const ModulePresentation& A, const ModulePresentation& B);

}  // namespace cma
