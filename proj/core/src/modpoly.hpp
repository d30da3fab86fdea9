#pragma once

// Dense polynomials over the prime field F_p for p < 2^32. Internal to
// the factorization code.

#include <cstdint>
#include <random>
#include <vector>

#include "salem/polyarith.hpp"

namespace salem::detail {

/// Coefficients low-to-high in [0, p), no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

class ModField {
 public:
  explicit ModField(std::uint64_t p) : p_(p) {}
  std::uint64_t prime() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % p_;  // p < 2^32
  }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Integer& c) const;

  ModPoly from(const IntPoly& f) const;
  void trim(ModPoly& a) const;

  ModPoly add(const ModPoly& a, const ModPoly& b) const;
  ModPoly sub(const ModPoly& a, const ModPoly& b) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const;
  /// Quotient and remainder; b must be nonzero.
  void divmod(const ModPoly& a, const ModPoly& b, ModPoly* q, ModPoly* r) const;
  ModPoly rem(const ModPoly& a, const ModPoly& b) const;
  ModPoly quot(const ModPoly& a, const ModPoly& b) const;
  ModPoly monic(const ModPoly& a) const;
  /// Monic gcd (zero if both are zero).
  ModPoly gcd(ModPoly a, ModPoly b) const;
  /// (g, s, t) with s*a + t*b = g monic.
  void xgcd(const ModPoly& a, const ModPoly& b, ModPoly* g, ModPoly* s, ModPoly* t) const;
  ModPoly derivative(const ModPoly& a) const;
  ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) const;

  /// Number of irreducible factors of a squarefree polynomial (distinct-degree stage only).
  std::size_t count_irreducible_factors(const ModPoly& f) const;
  /// Irreducible monic factors of a squarefree monic polynomial.
  std::vector<ModPoly> factor_squarefree(const ModPoly& f, std::mt19937_64& rng) const;

 private:
  std::vector<ModPoly> split_equal_degree(const ModPoly& f, std::size_t d, std::mt19937_64& rng) const;
  std::uint64_t p_;
};

inline bool is_one(const ModPoly& a) { return a.size() == 1 && a[0] == 1; }

}  // namespace salem::detail
