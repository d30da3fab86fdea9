#include "number_theory.hpp"

#include <algorithm>

namespace salem::detail {

std::vector<std::pair<unsigned long, unsigned>> factor_small(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> out;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> ds{1};
  for (auto [p, e] : factor_small(n)) {
    const std::size_t base = ds.size();
    unsigned long pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

unsigned long totient(unsigned long n) {
  unsigned long phi = n;
  for (auto [p, e] : factor_small(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_small_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long next_prime(unsigned long n) {
  unsigned long c = n + 1;
  while (!is_small_prime(c)) ++c;
  return c;
}

}  // namespace salem::detail
