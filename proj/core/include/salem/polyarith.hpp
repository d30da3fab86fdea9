#pragma once

// Exact integer/rational scalars and dense univariate integer polynomials.
//
// Coefficients are stored low-to-high: coeffs()[i] is the coefficient of x^i.
// The zero polynomial is the empty sequence and every operation returns
// normalized values (no trailing zeros).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace salem {

using Integer = mpz_class;
using Rational = mpq_class;

class IntPoly {
 public:
  /// Degree reported for the zero polynomial (stands in for minus infinity).
  static constexpr long kZeroDegree = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  /// x - r, for integer r.
  static IntPoly linear_root(const Integer& r);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero past the degree.
  Integer coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Integer leading() const;
  bool is_monic() const;
  bool is_constant() const { return coeffs_.size() <= 1; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Total order used for deterministic output: degree first, then
/// coefficients compared lexicographically from the constant term upward.
bool poly_less(const IntPoly& a, const IntPoly& b);

/// Human-readable form, e.g. "x^2 - 3*x + 1".
std::string to_string(const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
IntPoly poly_neg(const IntPoly& p);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_scale(const IntPoly& p, const Integer& c);
IntPoly poly_pow(const IntPoly& p, unsigned n);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return poly_add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return poly_sub(p, q); }
inline IntPoly operator-(const IntPoly& p) { return poly_neg(p); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return poly_mul(p, q); }

/// Exact value p(v) by Horner's rule.
Rational poly_eval(const IntPoly& p, const Rational& v);
Integer poly_eval(const IntPoly& p, const Integer& v);
/// Sign of p(v) in {-1, 0, 1}, evaluated without rational normalization.
int poly_sign_at(const IntPoly& p, const Rational& v);

IntPoly poly_derivative(const IntPoly& p);

/// gcd of the coefficients, always positive. Throws PreconditionError on zero.
Integer content(const IntPoly& p);
/// (c, q) with c > 0 and p = c*q. The sign of p is kept in q.
std::pair<Integer, IntPoly> content_primitive(const IntPoly& p);
/// Primitive part with positive leading coefficient.
IntPoly primitive_normalized(const IntPoly& p);

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = quot * b + rem.
struct PseudoDivision {
  IntPoly quot;
  IntPoly rem;
};
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Quotient a / b when b divides a in Z[x]; throws PreconditionError if not.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
/// True iff b divides a in Z[x]. b must be nonzero.
bool divides(const IntPoly& b, const IntPoly& a);

/// Primitive gcd with positive leading coefficient, via the subresultant
/// remainder sequence. Throws if both inputs are zero.
IntPoly subresultant_gcd(const IntPoly& p, const IntPoly& q);

/// Resultant via the subresultant chain. Throws on zero input.
Integer resultant(const IntPoly& p, const IntPoly& q);

/// True iff the coefficient sequence is a palindrome. Throws on zero.
bool is_reciprocal(const IntPoly& p);

/// For reciprocal p of even degree 2d returns Q of degree d with
/// p(x) = x^d * Q(x + 1/x). Q inherits the leading coefficient of p.
IntPoly trace_transform(const IntPoly& p);

/// The n-th cyclotomic polynomial. Throws on n == 0.
IntPoly cyclotomic_poly(unsigned long n);

/// Coefficients (low-to-high) of the unique polynomial of degree <= m taking
/// values[k] at x = k for k = 0..m. Uses Newton forward differences.
std::vector<Rational> interpolate_naturals(const std::vector<Rational>& values);

/// Closed interval [lo, hi] with exact rational endpoints.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  RatInterval(Rational lo_, Rational hi_);
  static RatInterval point(const Rational& v) { return {v, v}; }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool is_point() const { return lo == hi; }
  bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Rounds a rational to a decimal string with the given number of
/// fractional digits (truncation toward negative infinity).
std::string to_decimal_floor(const Rational& v, unsigned digits);

/// Parses "3", "-7/2", "0.125" or "1e-8" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace salem
