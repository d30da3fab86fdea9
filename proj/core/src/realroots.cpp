#include "salem/realroots.hpp"

#include <algorithm>

#include "salem/error.hpp"
#include "salem/factorint.hpp"

namespace salem {

namespace {

int sign_at_pos_inf(const IntPoly& p) { return sgn(p.leading()); }

int sign_at_neg_inf(const IntPoly& p) { return (p.degree() % 2 == 0) ? sgn(p.leading()) : -sgn(p.leading()); }

unsigned count_variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational mediant(const Rational& a, const Rational& b) {
  Rational m(a.get_num() + b.get_num(), a.get_den() + b.get_den());
  m.canonicalize();
  return m;
}

IntPoly squarefree_part(const IntPoly& p) {
  const IntPoly f = primitive_normalized(p);
  return exact_quotient(f, subresultant_gcd(f, poly_derivative(f)));
}

struct Isolator {
  const IntPoly& sqf;
  const SturmChain& chain;
  std::vector<RatInterval> out;

  unsigned count(const Rational& lo, const Rational& hi) const {
    return chain.variations_at(lo) - chain.variations_at(hi);
  }

  // (lo, hi) has non-root endpoints and contains `n` roots.
  void run(const Rational& lo, const Rational& hi, unsigned n) {
    if (n == 0) return;
    if (n == 1) {
      out.emplace_back(lo, hi);
      return;
    }
    const Rational mid = (lo + hi) / 2;
    if (poly_sign_at(sqf, mid) != 0) {
      const unsigned left = count(lo, mid);
      run(lo, mid, left);
      run(mid, hi, n - left);
      return;
    }
    // Exact rational root: shrink a window around it until it is the only
    // root inside, then recurse on both sides.
    Rational d = (hi - lo) / 4;
    Rational a = mid - d;
    Rational b = mid + d;
    while (true) {
      if (poly_sign_at(sqf, a) == 0) {
        a = mediant(lo, a);
        continue;
      }
      if (poly_sign_at(sqf, b) == 0) {
        b = mediant(b, hi);
        continue;
      }
      if (count(a, b) == 1) break;
      d /= 2;
      a = mid - d;
      b = mid + d;
    }
    const unsigned left = count(lo, a);
    run(lo, a, left);
    out.push_back(RatInterval::point(mid));
    run(b, hi, n - left - 1);
  }
};

RatInterval magnitude(const RatInterval& iv) {
  if (sgn(iv.lo) >= 0) return iv;
  if (sgn(iv.hi) <= 0) return {-iv.hi, -iv.lo};
  return {Rational(0), std::max(Rational(-iv.lo), iv.hi)};
}

// Combines enclosures of two nonnegative quantities into one of their max.
RatInterval max_of(const RatInterval& a, const RatInterval& b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }

// Enclosure of max |r| over the real roots of p (which must have at least one).
RatInterval max_abs_real_root(const IntPoly& p, const Rational& width) {
  auto roots = isolate_real_roots(p);
  RatInterval lo = magnitude(refine(p, {roots.front().interval, 1}, width).interval);
  RatInterval hi = magnitude(refine(p, {roots.back().interval, 1}, width).interval);
  return max_of(lo, hi);
}

unsigned bits_for_width(const Rational& width) {
  // Smallest b with 2^-b <= width / 8.
  Rational target = width / 8;
  unsigned b = 0;
  Rational v = 1;
  while (v > target) {
    v /= 2;
    ++b;
  }
  return b;
}

// Lower and upper rational bounds on x^(1/e), x >= 0, accurate to 2^-bits.
RatInterval root_enclosure(const Rational& x, unsigned long e, unsigned bits) {
  if (sgn(x) == 0) return {Rational(0), Rational(0)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Integer scale_e;
  mpz_pow_ui(scale_e.get_mpz_t(), scale.get_mpz_t(), e);
  Rational y = x * scale_e;
  Integer fl, ce;
  mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  mpz_cdiv_q(ce.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  Integer rlo, rhi;
  mpz_root(rlo.get_mpz_t(), fl.get_mpz_t(), e);
  if (mpz_root(rhi.get_mpz_t(), ce.get_mpz_t(), e) == 0) rhi += 1;
  Rational lo(rlo, scale), hi(rhi, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

IntPoly graeffe_step(const IntPoly& g) {
  std::vector<Integer> neg = g.coeffs();
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  const IntPoly h = g * IntPoly(std::move(neg));
  std::vector<Integer> out;
  for (std::size_t i = 0; i < h.coeffs().size(); i += 2) out.push_back(h.coeffs()[i]);
  IntPoly r(std::move(out));
  return (g.degree() % 2 == 0) ? r : poly_neg(r);
}

}  // namespace

unsigned SturmChain::variations_at(const Rational& v) const {
  std::vector<int> s;
  s.reserve(polys.size());
  for (const auto& p : polys) s.push_back(poly_sign_at(p, v));
  return count_variations(s);
}

unsigned SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : polys) s.push_back(sign_at_pos_inf(p));
  return count_variations(s);
}

unsigned SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : polys) s.push_back(sign_at_neg_inf(p));
  return count_variations(s);
}

SturmChain sturm_chain(const IntPoly& p) {
  if (p.degree() < 1) throw PreconditionError("sturm_chain: polynomial must have degree >= 1");
  if (subresultant_gcd(p, poly_derivative(p)).degree() > 0)
    throw PreconditionError("sturm_chain: polynomial is not squarefree");
  SturmChain chain;
  chain.polys.push_back(content_primitive(p).second);
  chain.polys.push_back(content_primitive(poly_derivative(p)).second);
  while (chain.polys.back().degree() > 0) {
    const IntPoly& a = chain.polys[chain.polys.size() - 2];
    const IntPoly& b = chain.polys.back();
    IntPoly r = poly_neg(pseudo_remainder(a, b));
    // prem scales by lc(b)^(delta+1); undo a negative factor.
    const long delta = a.degree() - b.degree();
    if (sgn(b.leading()) < 0 && (delta + 1) % 2 != 0) r = poly_neg(r);
    if (r.is_zero()) throw InvariantViolation("sturm_chain: remainder sequence ended early");
    chain.polys.push_back(content_primitive(r).second);
  }
  return chain;
}

unsigned count_roots_in(const SturmChain& chain, const RatInterval& iv) {
  const IntPoly& p = chain.polys.front();
  if (poly_sign_at(p, iv.lo) == 0 || poly_sign_at(p, iv.hi) == 0)
    throw PreconditionError("count_roots_in: interval endpoint is a root");
  if (iv.is_point()) return 0;
  return chain.variations_at(iv.lo) - chain.variations_at(iv.hi);
}

unsigned count_real_roots(const IntPoly& p) {
  if (p.degree() < 1) return 0;
  const SturmChain chain = sturm_chain(squarefree_part(p));
  return chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
}

Rational cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) throw PreconditionError("cauchy_bound: constant polynomial");
  Integer m = 0;
  for (long i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p.coeffs()[static_cast<std::size_t>(i)])));
  Rational b(m, abs(p.leading()));
  b.canonicalize();
  return b + 1;
}

std::vector<RootEnclosure> isolate_real_roots(const IntPoly& p) {
  if (p.degree() < 1) throw PreconditionError("isolate_real_roots: polynomial must have degree >= 1");
  const IntPoly sqf = squarefree_part(p);
  const SturmChain chain = sturm_chain(sqf);
  const Rational bound = cauchy_bound(p);
  Isolator iso{sqf, chain, {}};
  iso.run(-bound, bound, iso.count(-bound, bound));

  const auto parts = squarefree_decomposition(p);
  std::vector<RootEnclosure> out;
  out.reserve(iso.out.size());
  for (const auto& iv : iso.out) {
    unsigned mult = 0;
    for (const auto& part : parts) {
      const bool hit = iv.is_point() ? poly_sign_at(part.factor, iv.lo) == 0
                                     : poly_sign_at(part.factor, iv.lo) != poly_sign_at(part.factor, iv.hi);
      if (hit) {
        mult = part.multiplicity;
        break;
      }
    }
    if (mult == 0) throw InvariantViolation("isolate_real_roots: root not attributed to any squarefree part");
    out.push_back({iv, mult});
  }
  return out;
}

RootEnclosure refine(const IntPoly& p, const RootEnclosure& e, const Rational& width) {
  if (sgn(width) <= 0) throw PreconditionError("refine: width must be positive");
  if (e.interval.is_point()) return e;
  Rational lo = e.interval.lo;
  Rational hi = e.interval.hi;
  const int slo = poly_sign_at(p, lo);
  const int shi = poly_sign_at(p, hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw PreconditionError("refine: enclosure does not certify a simple root");
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    const int s = poly_sign_at(p, mid);
    if (s == 0) return {RatInterval::point(mid), e.multiplicity};
    if (s == slo) lo = std::move(mid);
    else hi = std::move(mid);
  }
  return {RatInterval(lo, hi), e.multiplicity};
}

RatInterval graeffe_enclosure(const IntPoly& p, const Rational& width, unsigned max_rounds) {
  if (p.degree() < 1) throw PreconditionError("graeffe_enclosure: constant polynomial");
  // Zero roots do not affect the maximum modulus.
  std::size_t z = 0;
  while (sgn(p.coeffs()[z]) == 0) ++z;
  IntPoly g(std::vector<Integer>(p.coeffs().begin() + static_cast<long>(z), p.coeffs().end()));
  if (g.degree() < 1) return {Rational(0), Rational(0)};
  const unsigned long n = static_cast<unsigned long>(g.degree());
  const unsigned bits = bits_for_width(width) + 4;
  RatInterval best;
  for (unsigned k = 0;; ++k) {
    // R^(2^k) is the largest root modulus of g. With e_i the elementary
    // symmetric functions, |e_i| <= C(n,i) R^i gives a lower bound and
    // Fujiwara's bound R <= 2 max |e_i|^(1/i) an upper bound.
    const unsigned long pow2 = 1ul << k;
    Rational lo = 0, hi = 0;
    const Integer& lead = g.leading();
    for (unsigned long i = 1; i <= n; ++i) {
      const Integer& c = g.coeffs()[n - i];
      if (sgn(c) == 0) continue;
      Rational ratio(abs(c), abs(lead));
      ratio.canonicalize();
      Rational lower_arg = ratio / Rational(binomial(n, i));
      lo = std::max(lo, root_enclosure(lower_arg, i * pow2, bits).lo);
      hi = std::max(hi, root_enclosure(ratio, i * pow2, bits).hi);
    }
    // 2^(1/2^k) factor from Fujiwara's constant.
    hi *= root_enclosure(Rational(2), pow2, bits).hi;
    RatInterval cur(lo, std::max(lo, hi));
    best = (k == 0) ? cur : RatInterval(std::max(best.lo, cur.lo), std::min(best.hi, cur.hi));
    if (best.width() <= width || k >= max_rounds) return best;
    g = graeffe_step(g);
  }
}

RatInterval max_abs_root_enclosure(const IntPoly& p, const Rational& width) {
  if (p.degree() < 1) throw PreconditionError("max_abs_root_enclosure: constant polynomial");
  if (sgn(width) <= 0) throw PreconditionError("max_abs_root_enclosure: width must be positive");
  IntPoly f = primitive_normalized(p);
  std::size_t z = 0;
  while (sgn(f.coeffs()[z]) == 0) ++z;
  f = IntPoly(std::vector<Integer>(f.coeffs().begin() + static_cast<long>(z), f.coeffs().end()));
  if (f.degree() < 1) return {Rational(0), Rational(0)};

  bool on_circle = false;
  for (long r : {1L, -1L}) {
    const IntPoly lin = IntPoly::linear_root(r);
    while (f.degree() >= 1 && sgn(poly_eval(f, Integer(r))) == 0) {
      f = exact_quotient(f, lin);
      on_circle = true;
    }
  }
  const RatInterval unit{Rational(1), Rational(1)};
  if (f.degree() < 1) return on_circle ? unit : RatInterval{Rational(0), Rational(0)};

  const IntPoly sqf = squarefree_part(f);
  const unsigned real = count_real_roots(sqf);
  if (real == static_cast<unsigned>(sqf.degree())) {
    RatInterval r = max_abs_real_root(sqf, width);
    return on_circle ? max_of(r, unit) : r;
  }
  if (is_reciprocal(sqf) && sqf.degree() % 2 == 0) {
    const IntPoly q = trace_transform(sqf);
    if (count_real_roots(q) == static_cast<unsigned>(q.degree())) {
      // Roots of q in (-2, 2) come from unit-circle roots; the rest from real roots.
      const bool circle = count_roots_in(sturm_chain(squarefree_part(q)), {Rational(-2), Rational(2)}) > 0;
      RatInterval r = real > 0 ? max_abs_real_root(sqf, width) : unit;
      return (circle || on_circle) ? max_of(r, unit) : r;
    }
  }
  RatInterval g = graeffe_enclosure(sqf, width);
  if (real > 0) {
    const RatInterval r = max_abs_real_root(sqf, width);
    g.lo = std::max(g.lo, r.lo);
  }
  if (on_circle) g.lo = std::max(g.lo, Rational(1));
  if (g.hi < g.lo) g.hi = g.lo;
  return g;
}

}  // namespace salem
