#pragma once

// Small-integer number theory shared by several modules.

#include <cstdint>
#include <utility>
#include <vector>

namespace salem::detail {

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<unsigned long, unsigned>> factor_small(unsigned long n);

/// All positive divisors of n in increasing order.
std::vector<unsigned long> divisors(unsigned long n);

unsigned long totient(unsigned long n);

bool is_small_prime(unsigned long n);

/// The next prime strictly greater than n.
unsigned long next_prime(unsigned long n);

}  // namespace salem::detail
