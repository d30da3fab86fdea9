#include "salem/logbounds.hpp"

#include "salem/error.hpp"

namespace salem {

namespace {

Rational dyadic_floor(const Rational& v, unsigned bits) {
  Integer s;
  mpz_ui_pow_ui(s.get_mpz_t(), 2, bits);
  Rational scaled = v * s;
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(n, s);
  r.canonicalize();
  return r;
}

Rational dyadic_ceil(const Rational& v, unsigned bits) {
  Integer s;
  mpz_ui_pow_ui(s.get_mpz_t(), 2, bits);
  Rational scaled = v * s;
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(n, s);
  r.canonicalize();
  return r;
}

// 2 * atanh(t) for 0 <= t <= 1/3.
RatInterval two_atanh(const Rational& t, unsigned bits) {
  const unsigned work = bits + 16;
  Rational eps(1);
  for (unsigned i = 0; i < bits + 4; ++i) eps /= 2;
  const Rational t2 = t * t;
  // Separate lower/upper powers t^(2j+1) so that dyadic rounding stays outward.
  Rational plo = t, phi = t;
  Rational lo = 0, hi = 0;
  for (unsigned long j = 0;; ++j) {
    lo += dyadic_floor(plo / (2 * j + 1), work);
    hi += dyadic_ceil(phi / (2 * j + 1), work);
    plo = dyadic_floor(plo * t2, work + 8);
    phi = dyadic_ceil(phi * t2, work + 8);
    // Remaining terms are bounded by t^(2j+3) / ((2j+3)(1 - t^2)).
    const Rational tail = phi / ((2 * j + 3) * (1 - t2));
    if (tail < eps) {
      hi += dyadic_ceil(tail, work);
      break;
    }
  }
  return {2 * lo, 2 * hi};
}

}  // namespace

RatInterval log_enclosure(const Rational& x, unsigned bits) {
  if (sgn(x) <= 0) throw PreconditionError("log_enclosure: argument must be positive");
  // x = 2^k * y with 1 <= y < 2.
  long k = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  Rational y = x;
  Rational two_k = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) two_k *= 2;
  if (k >= 0) y /= two_k; else y *= two_k;
  while (y >= 2) {
    y /= 2;
    ++k;
  }
  while (y < 1) {
    y *= 2;
    --k;
  }
  const unsigned extra = 8 + static_cast<unsigned>(mpz_sizeinbase(Integer(k < 0 ? -k : k).get_mpz_t(), 2));
  const RatInterval ln_y = two_atanh((y - 1) / (y + 1), bits + 2);
  if (k == 0) return ln_y;
  const RatInterval ln2 = two_atanh(Rational(1, 3), bits + extra);
  if (k > 0) return {ln_y.lo + k * ln2.lo, ln_y.hi + k * ln2.hi};
  return {ln_y.lo + k * ln2.hi, ln_y.hi + k * ln2.lo};
}

RatInterval log_enclosure(const RatInterval& iv, unsigned bits) {
  return {log_enclosure(iv.lo, bits).lo, log_enclosure(iv.hi, bits).hi};
}

}  // namespace salem
