#pragma once

// Classification of integer polynomials into cyclotomic, Salem and other
// factors, spectral-radius and entropy enclosures, and minimal polynomials
// of powers of algebraic integers.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "salem/polyarith.hpp"
#include "salem/realroots.hpp"

namespace salem {

/// Why salem_test rejected a polynomial.
enum class SalemFailure {
  kNone,
  kNotMonic,
  kNotIrreducible,
  kNotReciprocal,
  kOddDegree,
  kCircleCountMismatch,
  kRootAtPlusMinusOne,
};

std::string_view to_string(SalemFailure f);

struct SalemVerdict {
  /// Enclosure of the Salem number (the unique root > 1) when accepted.
  std::optional<RootEnclosure> root;
  SalemFailure failure = SalemFailure::kNone;

  explicit operator bool() const { return root.has_value(); }
};

struct PolyClass {
  enum class Kind { kCyclotomic, kSalem, kOther };

  Kind kind = Kind::kOther;
  unsigned long cyclotomic_index = 0;       // kCyclotomic
  std::optional<RootEnclosure> salem_root;  // kSalem
  SalemFailure salem_failure = SalemFailure::kNone;  // kOther: why not Salem

  static PolyClass cyclotomic(unsigned long n);
  static PolyClass salem(RootEnclosure root);
  static PolyClass other(SalemFailure why);
};

std::string_view to_string(PolyClass::Kind k);

struct ClassifiedFactor {
  IntPoly factor;
  unsigned multiplicity = 1;
  PolyClass cls;
};

/// Decimal digits of an entropy value h with a guaranteed bound:
/// h lies in [text, text + error_bound].
struct EntropyDigits {
  std::string text;
  Rational error_bound;
  /// True when every printed digit is certified (error_bound = 10^-digits).
  bool pinned = false;
};

/// Degree admitted for Salem polynomials: 2d >= 2, so quadratic units count.
inline constexpr unsigned kSalemMinDegree = 2;

struct FactorReport {
  std::vector<ClassifiedFactor> factors;
  /// Salem factors counted with multiplicity.
  unsigned salem_count = 0;
  RatInterval spectral_radius;
  /// spectral_radius.lo > 1.
  bool entropy_positive = false;
  /// log of the spectral radius; empty when the radius may be below 1.
  EntropyDigits entropy;

  bool all_cyclotomic_or_salem() const;
  /// The first Salem factor, if any.
  const ClassifiedFactor* salem_factor() const;
};

/// n with p = Phi_n, searched over n <= 2 deg(p)^2 + 1 with phi(n) = deg p.
/// Throws PreconditionError for non-monic input.
std::optional<unsigned long> is_cyclotomic(const IntPoly& p);

/// Accepts p iff it is monic, irreducible, reciprocal, of even degree 2d,
/// and its trace polynomial has one root in (2, inf), none in (-inf, -2]
/// and d - 1 in (-2, 2). The Salem number's enclosure is refined to `width`.
SalemVerdict salem_test(const IntPoly& p, const Rational& width);

/// Factors p, classifies each factor and encloses the spectral radius to
/// `width`; the entropy is printed with `digits` fractional digits.
/// Throws PreconditionError for non-monic input.
FactorReport classify_poly(const IntPoly& p, const Rational& width, unsigned digits);

/// Minimal polynomial of lambda^n for a root lambda of the monic irreducible
/// p, via the resultant Res_x(p(x), y - x^n). Throws on n == 0, non-monic
/// or reducible input.
IntPoly power_min_poly(const IntPoly& p, unsigned long n);

/// The polynomial Res_x(p(x), y - x^n) = prod (y - lambda_i^n), monic p.
IntPoly power_resultant(const IntPoly& p, unsigned long n);

/// ln of the spectral radius from an enclosure alone; pinned only if the
/// enclosure is already tight enough. Throws if sp.lo < 1.
EntropyDigits entropy_digits(const RatInterval& sp, unsigned digits);

/// ln of the simple root of p isolated by `root`, refining until the
/// requested digits are certified.
EntropyDigits entropy_digits(const IntPoly& p, const RootEnclosure& root, unsigned digits);

}  // namespace salem
