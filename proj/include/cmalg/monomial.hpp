#pragma once
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace cma {

constexpr int kMaxVars = 16;

// Exponent vector with cached total degree. Entries past the ring's
// variable count are always zero.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  Monomial() = default;
  static Monomial var(int i, int power = 1);
  static Monomial from_exponents(const std::vector<int>& ex);

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  int support_mask() const {
    int m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) m |= 1 << i;
    return m;
  }
  std::vector<int> exponents(int n) const { return std::vector<int>(e.begin(), e.begin() + n); }
};

// Aborts with a diagnostic on exponent overflow.
Monomial operator*(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Plain lexicographic comparison of exponent arrays; the storage key order.
inline int key_cmp(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  int block = 0;  // Block: lex on variables [0, block), grevlex on the rest

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder eliminate(int k) { return {Kind::Block, k}; }

  // Returns -1, 0, 1.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
  std::string name() const;
};

// All monomials of degree d in n variables, in descending lex key order.
std::vector<Monomial> monomials_of_degree(int n, int d);
long long binomial(long long a, long long b);

}  // namespace cma
