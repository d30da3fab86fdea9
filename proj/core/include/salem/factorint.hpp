#pragma once

// Factorization of integer polynomials into irreducibles over Q:
// squarefree decomposition, Cantor-Zassenhaus modulo a small prime,
// Hensel lifting and exhaustive Zassenhaus recombination.

#include <cstdint>
#include <vector>

#include "salem/polyarith.hpp"

namespace salem {

struct FactorEntry {
  IntPoly factor;
  unsigned multiplicity = 1;

  friend bool operator==(const FactorEntry& a, const FactorEntry& b) {
    return a.multiplicity == b.multiplicity && a.factor == b.factor;
  }
};

/// p = unit * content * prod factor_i^multiplicity_i.
///
/// Factors are primitive, irreducible over Q, have positive leading
/// coefficient and are sorted by poly_less. The integer content is kept as
/// a single positive scalar rather than being split into primes.
struct Factorization {
  int unit = 1;
  Integer content = 1;
  std::vector<FactorEntry> factors;

  IntPoly expand() const;
  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.unit == b.unit && a.content == b.content && a.factors == b.factors;
  }
};

/// Yun's algorithm. Returns pairwise coprime squarefree parts (positive
/// leading coefficient) in increasing multiplicity; the weighted product
/// equals the primitive part of p normalized to positive leading coefficient.
std::vector<FactorEntry> squarefree_decomposition(const IntPoly& p);

/// Monic irreducible factors of p modulo `prime`, coefficients in
/// [0, prime), sorted. Throws PreconditionError if prime is not a prime,
/// divides the leading coefficient, or p is not squarefree modulo prime.
std::vector<IntPoly> factor_mod_p(const IntPoly& p, std::uint64_t prime, std::uint64_t seed = 0);

/// Lifts a factorization p/lc(p) = prod factors (mod prime) to modulus
/// prime^exponent. Factors must be monic and pairwise coprime modulo prime.
/// Returned coefficients lie in [0, prime^exponent).
std::vector<IntPoly> hensel_lift(const std::vector<IntPoly>& factors, const IntPoly& p, std::uint64_t prime,
                                 unsigned exponent);

/// Smallest k with prime^k > 2 * 2^deg(p) * ||p||_2 * |lc(p)|.
unsigned lift_exponent(const IntPoly& p, std::uint64_t prime);

/// Complete factorization over Z. Throws PreconditionError on zero input.
Factorization factor_z(const IntPoly& p, std::uint64_t seed = 0);

/// True iff p has exactly one irreducible factor, of multiplicity one,
/// and unit content. Throws PreconditionError on constants.
bool is_irreducible(const IntPoly& p);

}  // namespace salem
