#include "cmalg/monomial.hpp"

#include <cstdio>
#include <cstdlib>

namespace cma {

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.e[i] = static_cast<uint16_t>(power);
  m.deg = power;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& ex) {
  Monomial m;
  if (ex.size() > static_cast<size_t>(kMaxVars)) {
    std::fprintf(stderr, "monomial: more than %d variables\n", kMaxVars);
    std::abort();
  }
  for (size_t i = 0; i < ex.size(); ++i) {
    if (ex[i] < 0 || ex[i] > 65535) {
      std::fprintf(stderr, "monomial: exponent %d out of range\n", ex[i]);
      std::abort();
    }
    m.e[i] = static_cast<uint16_t>(ex[i]);
    m.deg += ex[i];
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
    if (s > 65535) {
      std::fprintf(stderr, "monomial: exponent overflow in variable %d\n", i);
      std::abort();
    }
    r.e[i] = static_cast<uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    r.deg += r.e[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    r.deg += r.e[i];
  }
  return r;
}

static int grevlex_tail(const Monomial& a, const Monomial& b, int from) {
  for (int i = kMaxVars - 1; i >= from; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Grevlex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      return grevlex_tail(a, b, 0);
    case Kind::Lex:
      return key_cmp(a, b);
    case Kind::Block: {
      for (int i = 0; i < block; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      uint32_t da = 0, db = 0;
      for (int i = block; i < kMaxVars; ++i) {
        da += a.e[i];
        db += b.e[i];
      }
      if (da != db) return da > db ? 1 : -1;
      return grevlex_tail(a, b, block);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "eliminate(" + std::to_string(block) + ")";
  }
  return "";
}

static void fill_degree(int n, int d, int var, Monomial& cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.e[var] = static_cast<uint16_t>(d);
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur.e[var] = static_cast<uint16_t>(a);
    fill_degree(n, d - a, var + 1, cur, out);
  }
  cur.e[var] = 0;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || n <= 0) return out;
  Monomial cur;
  fill_degree(n, d, 0, cur, out);
  for (auto& m : out) m.deg = d;
  return out;
}

long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace cma
