#pragma once

// Totient bounds, quasi-unipotency, the trace criterion for positive
// entropy and the composition search f * g^N with a polynomial trace
// certificate.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "salem/error.hpp"
#include "salem/latiso.hpp"

namespace salem {

/// |tr f| is below rank + 1.
class TraceBelowThreshold : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The characteristic polynomial has a non-cyclotomic factor.
class NotQuasiUnipotent : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// compose_search ran past its bound without a certificate saying it must
/// have succeeded.
class BoundExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws PreconditionError on n == 0.
unsigned long euler_phi(unsigned long n);

struct BetaResult {
  Integer value;
  /// All n <= scan_bound with phi(n) <= d, increasing.
  std::vector<unsigned long> set;
  unsigned long scan_bound = 0;
};

/// lcm{n : phi(n) <= d}, scanning n <= 2 d^2 + 1. Throws on d == 0.
BetaResult beta_constant(unsigned long d);

/// lcm of the cyclotomic indices when p is a product of cyclotomic
/// polynomials; none otherwise. Throws PreconditionError for non-monic p.
std::optional<unsigned long> quasi_unipotent_exponent(const IntPoly& p);

enum class TraceVerdict { kPositive, kInconclusive };

/// kPositive iff |tr f| >= rank + 1.
TraceVerdict trace_bound_test(const Isometry& f);

struct GrowthWitness {
  /// Smallest n <= bound with |tr f^n| >= rank + 1.
  unsigned long n = 0;
  /// Least n for which lo^n + lo^-n - (rank - 2) > rank, lo the lower end of
  /// the Salem root enclosure; every power from here on passes the test.
  std::optional<unsigned long> certified_from;
  RatInterval salem_root;
};

/// Requires char_poly(f) to be cyclotomic factors times one simple Salem
/// factor (PreconditionError otherwise). Returns none if no n <= bound works.
std::optional<GrowthWitness> trace_growth_witness(const Isometry& f, unsigned long bound, const Rational& width);

struct UnipotentPart {
  unsigned long exponent = 1;
  Isometry power;
};

/// m = quasi_unipotent_exponent(char_poly(g)) and g^m, checked to satisfy
/// (g^m - I)^r = 0. Throws NotQuasiUnipotent.
UnipotentPart unipotent_part(const Isometry& g);

/// N -> tr(F Gu^N) as an exact polynomial of degree <= s.
struct TraceCertificate {
  /// Nilpotency index of Gu - I, minus one.
  unsigned s = 0;
  /// Coefficients low-to-high; coeffs[0] = tr F.
  std::vector<Rational> coeffs;
  /// Directly computed (N, tr(F Gu^N)), at least s + 2 of them.
  std::vector<std::pair<unsigned long, Integer>> samples;

  Rational eval(const Rational& n) const;
  /// True iff every coefficient of positive degree vanishes.
  bool is_constant() const;
};

/// Throws PreconditionError if Gu is not unipotent or the lattices differ.
TraceCertificate trace_polynomial(const Isometry& f, const Isometry& gu);

struct ComposeResult {
  unsigned long n = 0;
  Isometry composed;
  Integer trace;
  TraceCertificate certificate;
  /// Exponent m with g^m unipotent.
  unsigned long unipotent_exponent = 1;
  /// Every N >= this value satisfies |P(N)| >= rank + 1; none when P is
  /// constant.
  std::optional<unsigned long> eventual_from;
};

inline constexpr unsigned long kDefaultComposeBound = 1000000;

/// Smallest N in [1, bound] (coprime to `coprime_to` when given) with
/// |tr(F Gu^N)| >= rank + 1, where Gu = g^m is the unipotent part of g.
/// Throws TraceBelowThreshold, NotQuasiUnipotent, BoundExhausted, and
/// InvariantViolation when the certificate guarantees a hit that the search
/// did not find.
ComposeResult compose_search(const Isometry& f, const Isometry& g, unsigned long bound = kDefaultComposeBound,
                             std::optional<unsigned long> coprime_to = std::nullopt);

}  // namespace salem
