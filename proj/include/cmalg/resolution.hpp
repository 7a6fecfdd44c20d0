#pragma once
#include <map>
#include <utility>
#include <vector>

#include "cmalg/extint.hpp"
#include "cmalg/groebner.hpp"

namespace cma {

// Cokernel of relations: F1 -> cover.
struct ModulePresentation {
  FreeModule cover;
  ModuleMap relations;

  static ModulePresentation cyclic(const Ideal& I);  // S/I
  static ModulePresentation free(const FreeModule& F);
  static ModulePresentation from_relations(const FreeModule& cover, const std::vector<Column>& rels,
                                           const std::vector<int>& rel_degs);
  bool is_homogeneous() const { return relations.target == cover && relations.is_homogeneous(); }
};

struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j} >= 1

  long long at(int i, int j) const;
  long long total(int i) const;
  // max j with beta_{p,j} != 0, or kNegInf for an empty step.
  int t(int p) const;
  // min j with beta_{p,j} != 0, or kPosInf.
  int min_degree(int p) const;
  int regularity() const;  // kNegInf for the zero module
  int length() const;      // largest nonempty step, -1 for the zero module
  bool empty() const { return entries.empty(); }
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

struct Resolution {
  FreeModule F0;
  std::vector<ModuleMap> maps;  // maps[k] : F_{k+1} -> F_k
  bool minimal = false;

  const FreeModule& F(int k) const { return k == 0 ? F0 : maps[k - 1].source; }
  int length() const { return static_cast<int>(maps.size()); }
  BettiTable betti() const;
};

// Columns generating the kernel of f, computed from a Groebner basis of the
// columns with the Schreyer order.
ModuleMap syzygies(const RingContext& R, const ModuleMap& f, const MonomialOrder& ord);

// Nonminimal Schreyer resolution of coker(M.relations).
// Stops after max_maps differentials when max_maps >= 0.
Resolution schreyer_resolution(const RingContext& R, const ModulePresentation& M, int max_maps = -1);
// Removes unit entries by change of basis.
Resolution minimize(const RingContext& R, const Resolution& res);
std::pair<Resolution, BettiTable> minimal_free_resolution(const RingContext& R, const ModulePresentation& M);
BettiTable betti_table(const Ideal& I);  // of S/I

struct HomologicalInvariants {
  int pd = kNegInf;
  int depth = kNegInf;
  int dim = -1;
  int codim = 0;
};
HomologicalInvariants homological_invariants(const Ideal& I);  // of S/I
HomologicalInvariants homological_invariants(const RingContext& R, const ModulePresentation& M);

// t_p of the ideal I as a module, i.e. t_{p+1}(S/I).
int t_ideal(const BettiTable& cyclic, int p);
// Largest s with t_i(I) = d + i for 0 <= i <= s; throws for mixed generator degrees.
int linear_steps(const Ideal& I);
int linear_steps(const BettiTable& cyclic);
// I intersected with m^{t_s(I) - s}, minimally generated.
Ideal truncate(const Ideal& I, int s);

}  // namespace cma
