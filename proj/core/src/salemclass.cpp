#include "salem/salemclass.hpp"

#include <algorithm>

#include "number_theory.hpp"
#include "salem/error.hpp"
#include "salem/factorint.hpp"
#include "salem/logbounds.hpp"

namespace salem {

namespace {

Rational pow10_neg(unsigned digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return Rational(1) / Rational(p);
}

RatInterval max_of(const RatInterval& a, const RatInterval& b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }

RatInterval interval_pow(const RatInterval& iv, unsigned long n) {
  Rational lo = 1, hi = 1;
  for (unsigned long i = 0; i < n; ++i) {
    lo *= iv.lo;
    hi *= iv.hi;
  }
  if (sgn(iv.lo) >= 0) return {lo, hi};
  if (sgn(iv.hi) <= 0) return (n % 2 == 0) ? RatInterval(hi, lo) : RatInterval(lo, hi);
  throw PreconditionError("interval_pow: interval straddles zero");
}

bool has_root_in(const IntPoly& f, const RatInterval& iv) {
  if (poly_sign_at(f, iv.lo) == 0 || poly_sign_at(f, iv.hi) == 0) return true;
  const IntPoly sqf = exact_quotient(primitive_normalized(f), subresultant_gcd(f, poly_derivative(f)));
  return count_roots_in(sturm_chain(sqf), iv) > 0;
}

}  // namespace

std::string_view to_string(SalemFailure f) {
  switch (f) {
    case SalemFailure::kNone: return "none";
    case SalemFailure::kNotMonic: return "not-monic";
    case SalemFailure::kNotIrreducible: return "not-irreducible";
    case SalemFailure::kNotReciprocal: return "not-reciprocal";
    case SalemFailure::kOddDegree: return "odd-degree";
    case SalemFailure::kCircleCountMismatch: return "circle-count-mismatch";
    case SalemFailure::kRootAtPlusMinusOne: return "root-at-plus-minus-one";
  }
  return "unknown";
}

std::string_view to_string(PolyClass::Kind k) {
  switch (k) {
    case PolyClass::Kind::kCyclotomic: return "cyclotomic";
    case PolyClass::Kind::kSalem: return "salem";
    case PolyClass::Kind::kOther: return "other";
  }
  return "unknown";
}

PolyClass PolyClass::cyclotomic(unsigned long n) {
  PolyClass c;
  c.kind = Kind::kCyclotomic;
  c.cyclotomic_index = n;
  return c;
}

PolyClass PolyClass::salem(RootEnclosure root) {
  PolyClass c;
  c.kind = Kind::kSalem;
  c.salem_root = std::move(root);
  return c;
}

PolyClass PolyClass::other(SalemFailure why) {
  PolyClass c;
  c.kind = Kind::kOther;
  c.salem_failure = why;
  return c;
}

bool FactorReport::all_cyclotomic_or_salem() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const ClassifiedFactor& f) { return f.cls.kind != PolyClass::Kind::kOther; });
}

const ClassifiedFactor* FactorReport::salem_factor() const {
  for (const auto& f : factors)
    if (f.cls.kind == PolyClass::Kind::kSalem) return &f;
  return nullptr;
}

std::optional<unsigned long> is_cyclotomic(const IntPoly& p) {
  if (!p.is_monic()) throw PreconditionError("is_cyclotomic: polynomial must be monic");
  const unsigned long d = static_cast<unsigned long>(p.degree());
  if (d == 0) return std::nullopt;
  // Cyclotomic polynomials have constant term +-1.
  if (abs(p.coeffs().front()) != 1) return std::nullopt;
  const unsigned long limit = 2 * d * d + 1;
  for (unsigned long n = 1; n <= limit; ++n) {
    if (detail::totient(n) != d) continue;
    if (cyclotomic_poly(n) == p) return n;
  }
  return std::nullopt;
}

SalemVerdict salem_test(const IntPoly& p, const Rational& width) {
  SalemVerdict v;
  auto fail = [&](SalemFailure f) {
    v.failure = f;
    return v;
  };
  if (p.is_zero() || !p.is_monic()) return fail(SalemFailure::kNotMonic);
  if (p.degree() < static_cast<long>(kSalemMinDegree) && p.degree() % 2 == 0) return fail(SalemFailure::kNotIrreducible);
  if (p.degree() % 2 != 0) return fail(SalemFailure::kOddDegree);
  if (!is_reciprocal(p)) return fail(SalemFailure::kNotReciprocal);
  if (!is_irreducible(p)) return fail(SalemFailure::kNotIrreducible);
  if (sgn(poly_eval(p, Integer(1))) == 0 || sgn(poly_eval(p, Integer(-1))) == 0)
    return fail(SalemFailure::kRootAtPlusMinusOne);

  const unsigned d = static_cast<unsigned>(p.degree() / 2);
  const IntPoly q = trace_transform(p);
  const SturmChain chain = sturm_chain(q);
  const Rational two(2);
  const unsigned above = chain.variations_at(two) - chain.variations_at_pos_inf();
  const unsigned below = chain.variations_at_neg_inf() - chain.variations_at(-two);
  const unsigned inside = count_roots_in(chain, {-two, two});
  if (above != 1 || below != 0 || inside != d - 1) return fail(SalemFailure::kCircleCountMismatch);

  const RatInterval box(Rational(1), cauchy_bound(p));
  if (count_roots_in(sturm_chain(p), box) != 1)
    throw InvariantViolation("salem_test: trace polynomial and p disagree on roots above 1");
  v.root = refine(p, {box, 1}, width);
  return v;
}

EntropyDigits entropy_digits(const RatInterval& sp, unsigned digits) {
  if (sp.lo < 1) throw PreconditionError("entropy_digits: spectral radius enclosure below 1");
  const Rational ulp = pow10_neg(digits);
  if (sp.hi == 1) return {to_decimal_floor(Rational(0), digits), ulp, true};
  const unsigned bits = 4 * digits + 12;
  const Rational lo = (sp.lo == 1) ? Rational(0) : log_enclosure(sp.lo, bits).lo;
  const Rational hi = log_enclosure(sp.hi, bits).hi;
  const std::string tlo = to_decimal_floor(lo, digits);
  const std::string thi = to_decimal_floor(hi, digits);
  if (tlo == thi) return {tlo, ulp, true};
  return {tlo, hi - parse_rational(tlo), false};
}

EntropyDigits entropy_digits(const IntPoly& p, const RootEnclosure& root, unsigned digits) {
  Rational width = pow10_neg(digits + 2);
  const Rational floor_width = pow10_neg(digits + 80);
  RootEnclosure e = root;
  while (true) {
    e = refine(p, e, width);
    EntropyDigits out = entropy_digits(e.interval, digits);
    if (out.pinned || width < floor_width) return out;
    width /= 256;
  }
}

FactorReport classify_poly(const IntPoly& p, const Rational& width, unsigned digits) {
  if (!p.is_monic()) throw PreconditionError("classify_poly: polynomial must be monic");
  if (p.degree() < 1) throw PreconditionError("classify_poly: polynomial must have degree >= 1");
  FactorReport report;
  const Factorization fz = factor_z(p);
  bool first = true;
  for (const auto& entry : fz.factors) {
    ClassifiedFactor cf{entry.factor, entry.multiplicity, {}};
    RatInterval radius;
    if (auto n = is_cyclotomic(entry.factor)) {
      cf.cls = PolyClass::cyclotomic(*n);
      radius = {Rational(1), Rational(1)};
    } else if (SalemVerdict s = salem_test(entry.factor, width)) {
      radius = s.root->interval;
      cf.cls = PolyClass::salem(*s.root);
      report.salem_count += entry.multiplicity;
    } else {
      cf.cls = PolyClass::other(s.failure);
      radius = max_abs_root_enclosure(entry.factor, width);
    }
    report.spectral_radius = first ? radius : max_of(report.spectral_radius, radius);
    first = false;
    report.factors.push_back(std::move(cf));
  }
  report.entropy_positive = report.spectral_radius.lo > 1;

  const ClassifiedFactor* best_salem = nullptr;
  for (const auto& f : report.factors)
    if (f.cls.kind == PolyClass::Kind::kSalem &&
        (!best_salem || f.cls.salem_root->interval.lo > best_salem->cls.salem_root->interval.lo))
      best_salem = &f;
  if (best_salem && report.all_cyclotomic_or_salem()) {
    report.entropy = entropy_digits(best_salem->factor, *best_salem->cls.salem_root, digits);
  } else if (report.spectral_radius.lo >= 1) {
    report.entropy = entropy_digits(report.spectral_radius, digits);
  }
  return report;
}

IntPoly power_resultant(const IntPoly& p, unsigned long n) {
  if (!p.is_monic()) throw PreconditionError("power_resultant: polynomial must be monic");
  if (n == 0) throw PreconditionError("power_resultant: exponent must be positive");
  const unsigned long d = static_cast<unsigned long>(p.degree());
  // Res_x(p, k - x^n) = prod_i (k - lambda_i^n), a monic polynomial of
  // degree d in k; sample it at k = 0..d and interpolate.
  const IntPoly xn = IntPoly::monomial(-1, n);
  std::vector<Rational> values;
  values.reserve(d + 1);
  for (unsigned long k = 0; k <= d; ++k) values.emplace_back(resultant(p, xn + IntPoly::constant(Integer(k))));
  std::vector<Integer> coeffs;
  for (const auto& c : interpolate_naturals(values)) {
    if (c.get_den() != 1) throw InvariantViolation("power_resultant: non-integral interpolated coefficient");
    coeffs.push_back(c.get_num());
  }
  IntPoly r(std::move(coeffs));
  if (!r.is_monic() || r.degree() != static_cast<long>(d))
    throw InvariantViolation("power_resultant: result is not monic of degree deg p");
  return r;
}

IntPoly power_min_poly(const IntPoly& p, unsigned long n) {
  if (n == 0) throw PreconditionError("power_min_poly: exponent must be positive");
  if (!p.is_monic()) throw PreconditionError("power_min_poly: polynomial must be monic");
  if (!is_irreducible(p)) throw PreconditionError("power_min_poly: polynomial is reducible");
  if (n == 1) return p;
  const IntPoly r = power_resultant(p, n);
  const IntPoly sqf = exact_quotient(r, subresultant_gcd(r, poly_derivative(r)));
  const Factorization fz = factor_z(sqf);
  if (fz.factors.size() == 1) return fz.factors.front().factor;

  // Pick the factor vanishing at lambda^n for the largest real root lambda.
  const auto roots = isolate_real_roots(p);
  if (roots.empty()) throw InvariantViolation("power_min_poly: no real root to select a factor with");
  RootEnclosure lambda = roots.back();
  Rational width = lambda.interval.width() / 4;
  for (int iter = 0; iter < 400; ++iter) {
    lambda = refine(p, lambda, width);
    if (lambda.interval.lo <= 0 && lambda.interval.hi >= 0 && !lambda.interval.is_point()) {
      width /= 4;
      continue;
    }
    const RatInterval target = interval_pow(lambda.interval, n);
    const IntPoly* hit = nullptr;
    int hits = 0;
    for (const auto& f : fz.factors)
      if (has_root_in(f.factor, target)) {
        hit = &f.factor;
        ++hits;
      }
    if (hits == 1) return *hit;
    width /= 4;
  }
  throw InvariantViolation("power_min_poly: could not separate the factors of the power resultant");
}

}  // namespace salem
