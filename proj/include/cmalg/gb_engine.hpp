#pragma once
#include <functional>
#include <vector>

#include "cmalg/ring.hpp"

namespace cma {

// Term order on a free module. Components are compared with smaller index
// ranking higher under PositionOverTerm.
struct ModuleOrder {
  enum class Kind { TermOverPosition, PositionOverTerm, Schreyer };
  MonomialOrder base;
  Kind kind = Kind::TermOverPosition;

  // Schreyer data, one entry per component: the level-0 image monomial and
  // component of the component's leading term, and a tie-break rank.
  Kind level0 = Kind::TermOverPosition;
  std::vector<Monomial> lead;
  std::vector<int> lead_comp;
  std::vector<int> rank;

  static ModuleOrder top(MonomialOrder b = {}) {
    ModuleOrder o;
    o.base = b;
    return o;
  }
  static ModuleOrder pot(MonomialOrder b = {}) {
    ModuleOrder o;
    o.base = b;
    o.kind = Kind::PositionOverTerm;
    return o;
  }

  int cmp(int ca, const Monomial& a, int cb, const Monomial& b) const {
    switch (kind) {
      case Kind::TermOverPosition: {
        int c = base.cmp(a, b);
        if (c) return c;
        return ca == cb ? 0 : (ca < cb ? 1 : -1);
      }
      case Kind::PositionOverTerm:
        if (ca != cb) return ca < cb ? 1 : -1;
        return base.cmp(a, b);
      case Kind::Schreyer:
        return schreyer_cmp(ca, a, cb, b);
    }
    return 0;
  }
  int schreyer_cmp(int ca, const Monomial& a, int cb, const Monomial& b) const;
};

struct ModTerm {
  int comp = 0;
  Monomial m;
  uint32_t c = 0;
};

// Module element as terms sorted descending under the active order.
using ModVec = std::vector<ModTerm>;

ModVec to_modvec(const Column& col, const ModuleOrder& ord);
ModVec to_modvec(const Poly& f, const ModuleOrder& ord);
Column to_column(const ModVec& v, int rank, const Field& F);
Poly to_poly(const ModVec& v, const Field& F);
void sort_modvec(ModVec& v, const ModuleOrder& ord);

// f - c * m * g under ord.
ModVec modvec_axpy(const ModVec& f, uint32_t c, const Monomial& m, const ModVec& g, const ModuleOrder& ord,
                   const Field& F);
ModVec modvec_scale(const ModVec& f, uint32_t c, const Field& F);
ModVec modvec_make_monic(const ModVec& f, const Field& F);

// Divisor lookup over a set of module elements, bucketed by leading component.
class LeadIndex {
 public:
  void add(int idx, const ModTerm& lead);
  // Index of the first element whose leading term divides (comp, m), or -1.
  int find(int comp, const Monomial& m) const;
  void clear() { buckets_.clear(); }

 private:
  struct Entry {
    Monomial m;
    int idx;
  };
  std::vector<std::vector<Entry>> buckets_;
};

struct GBOptions {
  // Buchberger's coprime-leading-term criterion; valid only for rank-one input.
  bool product_criterion = false;
  // Generator degrees of the ambient free module, used for pair selection.
  std::vector<int> twists;
};

// Reduced Groebner basis of the submodule generated by gens; elements monic,
// inter-reduced and sorted ascending by leading term.
std::vector<ModVec> module_groebner(const std::vector<ModVec>& gens, const ModuleOrder& ord, const Field& F,
                                    const GBOptions& opt = {});

// Full reduction of f by G (G need not be a Groebner basis).
ModVec module_normal_form(const ModVec& f, const std::vector<ModVec>& G, const LeadIndex& idx,
                          const ModuleOrder& ord, const Field& F);
ModVec module_normal_form(const ModVec& f, const std::vector<ModVec>& G, const ModuleOrder& ord, const Field& F);

// Leading-term reduction of h to zero, reporting each quotient term (c * m * G[k]).
// Returns the remainder (zero when G is a Groebner basis containing h's module).
ModVec reduce_tracking(ModVec h, const std::vector<ModVec>& G, const LeadIndex& idx, const ModuleOrder& ord,
                       const Field& F, const std::function<void(int k, const Monomial& m, uint32_t c)>& quot);

}  // namespace cma
