#pragma once
#include <random>
#include <string>
#include <vector>

#include "cmalg/field.hpp"
#include "cmalg/monomial.hpp"

namespace cma {

struct Term {
  Monomial m;
  uint32_t c = 0;
};

// Sparse polynomial. Terms are stored in descending key order with no
// zero coefficients; any monomial order is applied at use time.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  static Poly constant(uint32_t c);
  static Poly monomial(const Monomial& m, uint32_t c = 1);
  // Sorts, merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> t, const Field& F);

  bool is_homogeneous() const;
  // Degree of the first stored term; -1 for zero.
  int degree() const;
  int max_degree() const;
  Term leading(const MonomialOrder& ord) const;
  uint32_t coeff(const Monomial& m) const;
};

struct RingContext {
  int n = 0;
  std::vector<std::string> names;
  Field field;
  MonomialOrder order;

  RingContext() = default;
  RingContext(int nvars, uint32_t p = 32003);
  RingContext(std::vector<std::string> vars, uint32_t p = 32003);

  const Field& F() const { return field; }
  Poly var(int i) const { return Poly::monomial(Monomial::var(i)); }
  Poly constant(long long c) const;

  Poly add(const Poly& f, const Poly& g) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly neg(const Poly& f) const;
  Poly scale(const Poly& f, uint32_t c) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly mul_term(const Poly& f, const Monomial& m, uint32_t c) const;
  Poly pow(const Poly& f, int k) const;
  Poly make_monic(const Poly& f, const MonomialOrder& ord) const;
  // f(x) with x_i replaced by subs[i].
  Poly substitute(const Poly& f, const std::vector<Poly>& subs) const;

  std::string to_string(const Poly& f) const;
  std::string to_string(const Monomial& m) const;
  // Ring with the variables renamed/extended; same field.
  bool same_as(const RingContext& o) const { return n == o.n && field == o.field; }
};

// Graded free module; entry i is the degree of generator e_i, so S(-d) has degree d.
struct FreeModule {
  std::vector<int> degs;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> d) : degs(std::move(d)) {}
  static FreeModule ring() { return FreeModule({0}); }
  int rank() const { return static_cast<int>(degs.size()); }
  bool operator==(const FreeModule& o) const { return degs == o.degs; }
};

// A column is a dense vector of polynomials indexed by target generators.
using Column = std::vector<Poly>;

// Homogeneous map source -> target; cols[j] is the image of source generator j.
struct ModuleMap {
  FreeModule source, target;
  std::vector<Column> cols;

  ModuleMap() = default;
  ModuleMap(FreeModule src, FreeModule tgt);
  static ModuleMap identity(const FreeModule& F);
  static ModuleMap zero(const FreeModule& src, const FreeModule& tgt) { return {src, tgt}; }

  int rows() const { return target.rank(); }
  int ncols() const { return source.rank(); }
  const Poly& at(int i, int j) const { return cols[j][i]; }
  Poly& at(int i, int j) { return cols[j][i]; }
  bool is_zero() const;
  // Every entry (i,j) is zero or homogeneous of degree source[j] - target[i].
  bool is_homogeneous() const;
  ModuleMap transpose_dual() const;
};

// g o f; throws if source(g) != target(f).
ModuleMap map_compose(const RingContext& R, const ModuleMap& g, const ModuleMap& f);
Column column_add(const RingContext& R, const Column& a, const Column& b);
Column column_scale(const RingContext& R, const Column& a, const Poly& f);
bool column_is_zero(const Column& a);

// Caller-owned seeded randomness. Raw engine output is used directly so that
// sequences are identical across standard library implementations.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  uint64_t next() { return eng(); }
  uint64_t below(uint64_t m) { return eng() % m; }
};

}  // namespace cma
