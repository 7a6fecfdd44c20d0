#pragma once
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cmalg/gb_engine.hpp"
#include "cmalg/ring.hpp"

namespace cma {

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly> elements;  // monic, inter-reduced, ascending by leading monomial
  std::vector<Monomial> leads() const;
};

GroebnerBasis buchberger(const RingContext& R, const std::vector<Poly>& gens, const MonomialOrder& ord);
Poly normal_form(const RingContext& R, const Poly& f, const GroebnerBasis& G);

// Integer polynomial in t, coefficient k at index k.
using IntPoly = std::vector<long long>;

struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> gens;  // minimal generators, sorted by key order

  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Monomial> g);  // minimalizes
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& o) const;
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool operator==(const MonomialIdeal& o) const { return n == o.n && gens == o.gens; }
  // dim of S/in: size of the largest variable set avoiding every generator's support; -1 for unit.
  int krull_dim() const;
  // K-polynomial numerator of the Hilbert series of S/M over (1-t)^n.
  IntPoly hilbert_numerator() const;
  long long hilbert_function(int d) const;
  MonomialIdeal quotient(const Monomial& m) const;
  MonomialIdeal sum(const MonomialIdeal& o) const;
  MonomialIdeal product(const MonomialIdeal& o) const;
};

// Value at d of the Hilbert function with series num(t) / (1-t)^n.
long long hilbert_from_numerator(const IntPoly& num, int n, int d);

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingContext R, std::vector<Poly> gens);  // drops zero generators

  const RingContext& ring() const { return R_; }
  const std::vector<Poly>& gens() const { return gens_; }
  int n() const { return R_.n; }
  bool is_homogeneous() const;
  // Generator degrees (min and max); -1 when there are no generators.
  int min_gen_degree() const;
  int max_gen_degree() const;

  const GroebnerBasis& gb(const MonomialOrder& ord) const;
  const GroebnerBasis& gb() const { return gb(R_.order); }

 private:
  RingContext R_;
  std::vector<Poly> gens_;
  mutable std::shared_ptr<std::map<std::string, GroebnerBasis>> cache_ = std::make_shared<std::map<std::string, GroebnerBasis>>();
};

MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& ord);
MonomialIdeal initial_ideal(const Ideal& I);
bool ideal_contains(const Ideal& I, const Poly& f);
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int k);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Poly& g);
Ideal saturate(const Ideal& I, const Ideal& J);
// Generators of the ideal lying in the variables not in `drop`; the block
// order places the dropped variables first internally.
Ideal elimination_ideal(const Ideal& I, const std::vector<int>& drop);
// Minimal generators of a homogeneous ideal (via linear algebra degree by degree).
Ideal minimalize(const Ideal& I);

int krull_dim(const Ideal& I);
long long hilbert_function(const Ideal& I, int d);  // of S/I
IntPoly hilbert_series_numerator(const Ideal& I);   // of S/I

// Initial ideal after a seeded random linear change of coordinates.
MonomialIdeal gin(const Ideal& I, uint64_t seed);
struct GinResult {
  MonomialIdeal ideal;
  bool stable = true;  // two seeds agreed
};
GinResult gin_checked(const Ideal& I, uint64_t seed);

// The maximal ideal and its powers.
Ideal max_ideal(const RingContext& R);
Ideal max_ideal_power(const RingContext& R, int d);

// Deduplicate generators up to scalar multiples.
std::vector<Poly> dedup_generators(const RingContext& R, const std::vector<Poly>& g);

}  // namespace cma
