#include "cmalg/field.hpp"

namespace cma {

Field::Field(uint32_t prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("field modulus " + std::to_string(prime) + " is not prime");
}

bool Field::is_prime(uint64_t q) {
  if (q < 2) return false;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace cma
