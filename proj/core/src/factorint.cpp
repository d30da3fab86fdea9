#include "salem/factorint.hpp"

#include <algorithm>
#include <random>

#include "modpoly.hpp"
#include "number_theory.hpp"
#include "salem/error.hpp"

namespace salem {

namespace {

using detail::ModField;
using detail::ModPoly;

constexpr std::size_t kPrimeTrials = 25;

IntPoly lift_to_z(const ModPoly& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (auto v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

IntPoly reduce_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c = f.coeffs();
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly reduce_symmetric(const IntPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> c = f.coeffs();
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m) { return reduce_mod(a * b, m); }

// One two-factor lift: on entry g*h = F (mod p); on exit the same holds
// modulo p^exponent. g and h are monic; F is monic modulo p^exponent.
void lift_pair(const IntPoly& big_f, IntPoly& g, IntPoly& h, const ModField& fp, unsigned exponent) {
  const ModPoly g0 = fp.from(g);
  const ModPoly h0 = fp.from(h);
  ModPoly gcd, s, t;
  fp.xgcd(g0, h0, &gcd, &s, &t);
  if (!detail::is_one(gcd)) throw PreconditionError("hensel_lift: factors are not coprime modulo the prime");
  const Integer p(static_cast<unsigned long>(fp.prime()));
  Integer pk = p;
  for (unsigned k = 1; k < exponent; ++k) {
    const Integer next = pk * p;
    IntPoly err = reduce_mod(big_f - g * h, next);
    std::vector<Integer> scaled = err.coeffs();
    for (auto& c : scaled) {
      if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()))
        throw InvariantViolation("hensel_lift: lifting error not divisible by current modulus");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    }
    const ModPoly e = fp.from(IntPoly(std::move(scaled)));
    const ModPoly a = fp.rem(fp.mul(t, e), g0);
    const ModPoly b = fp.quot(fp.sub(e, fp.mul(a, h0)), g0);
    g = reduce_mod(g + poly_scale(lift_to_z(a), pk), next);
    h = reduce_mod(h + poly_scale(lift_to_z(b), pk), next);
    pk = next;
  }
}

std::vector<IntPoly> lift_all(const std::vector<IntPoly>& fs, const IntPoly& big_f, const ModField& fp,
                              unsigned exponent, const Integer& modulus) {
  if (fs.size() == 1) return {reduce_mod(big_f, modulus)};
  const std::size_t mid = fs.size() / 2;
  const Integer p(static_cast<unsigned long>(fp.prime()));
  IntPoly g{1}, h{1};
  for (std::size_t i = 0; i < mid; ++i) g = mul_mod(g, fs[i], p);
  for (std::size_t i = mid; i < fs.size(); ++i) h = mul_mod(h, fs[i], p);
  lift_pair(big_f, g, h, fp, exponent);
  std::vector<IntPoly> left(fs.begin(), fs.begin() + static_cast<long>(mid));
  std::vector<IntPoly> right(fs.begin() + static_cast<long>(mid), fs.end());
  auto out = lift_all(left, g, fp, exponent, modulus);
  auto rest = lift_all(right, h, fp, exponent, modulus);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Integer prime_power(std::uint64_t prime, unsigned exponent) {
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), prime, exponent);
  return m;
}

// f / lc(f) modulo m; lc(f) must be a unit modulo m.
IntPoly monic_mod(const IntPoly& f, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), m.get_mpz_t()) == 0)
    throw PreconditionError("hensel_lift: leading coefficient is not invertible modulo the prime");
  return reduce_mod(poly_scale(f, inv), m);
}

bool good_prime(const IntPoly& f, const ModField& fp) {
  if (fp.reduce(f.leading()) == 0) return false;
  const ModPoly fm = fp.from(f);
  return fp.gcd(fm, fp.derivative(fm)).size() == 1;
}

// Zassenhaus recombination over subsets of increasing size.
std::vector<IntPoly> recombine(IntPoly f, std::vector<IntPoly> lifted, const Integer& modulus) {
  std::vector<IntPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      IntPoly g = IntPoly::constant(f.leading());
      for (auto i : idx) g = reduce_symmetric(g * lifted[i], modulus);
      g = primitive_normalized(g);
      if (g.degree() > 0 && divides(g, f)) {
        f = exact_quotient(f, g);
        found.push_back(g);
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        hit = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (f.degree() > 0) found.push_back(primitive_normalized(f));
  return found;
}

// Irreducible factors of a primitive, squarefree f with positive leading coefficient.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f, std::mt19937_64& rng) {
  if (f.degree() <= 1) return {f};
  std::uint64_t best_prime = 0;
  std::size_t best_count = 0;
  std::size_t tried = 0;
  for (unsigned long p = 3; tried < kPrimeTrials; p = detail::next_prime(p)) {
    ModField fp(p);
    if (!good_prime(f, fp)) continue;
    ++tried;
    const std::size_t count = fp.count_irreducible_factors(fp.from(f));
    if (best_prime == 0 || count < best_count) {
      best_prime = p;
      best_count = count;
    }
    if (best_count == 1) break;
  }
  if (best_count == 1) return {f};

  const ModField fp(best_prime);
  const ModPoly fm = fp.from(f);
  std::vector<IntPoly> modular;
  for (const auto& g : fp.factor_squarefree(fm, rng)) modular.push_back(lift_to_z(g));
  const unsigned k = lift_exponent(f, best_prime);
  const Integer modulus = prime_power(best_prime, k);
  auto lifted = lift_all(modular, monic_mod(f, modulus), fp, k, modulus);
  auto result = recombine(f, std::move(lifted), modulus);
#ifndef NDEBUG
  if (result.size() > modular.size())
    throw InvariantViolation("factor_z: more rational factors than modular factors");
#endif
  return result;
}

}  // namespace

IntPoly Factorization::expand() const {
  IntPoly r = IntPoly::constant(content * unit);
  for (const auto& e : factors) r = r * poly_pow(e.factor, e.multiplicity);
  return r;
}

std::vector<FactorEntry> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  const IntPoly f = primitive_normalized(p);
  std::vector<FactorEntry> out;
  if (f.degree() < 1) return out;
  const IntPoly fd = poly_derivative(f);
  const IntPoly a0 = subresultant_gcd(f, fd);
  IntPoly b = exact_quotient(f, a0);
  IntPoly c = exact_quotient(fd, a0);
  IntPoly d = c - poly_derivative(b);
  unsigned i = 1;
  while (b.degree() > 0) {
    const IntPoly a = subresultant_gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - poly_derivative(b);
    if (a.degree() > 0) out.push_back({a, i});
    ++i;
  }
  return out;
}

std::vector<IntPoly> factor_mod_p(const IntPoly& p, std::uint64_t prime, std::uint64_t seed) {
  if (prime < 2 || prime >= (1ull << 32) || !detail::is_small_prime(prime))
    throw PreconditionError("factor_mod_p: modulus must be a prime below 2^32");
  if (p.is_zero()) throw PreconditionError("factor_mod_p: zero polynomial");
  const ModField fp(prime);
  if (fp.reduce(p.leading()) == 0) throw PreconditionError("factor_mod_p: prime divides the leading coefficient");
  const ModPoly fm = fp.from(p);
  if (fp.gcd(fm, fp.derivative(fm)).size() != 1)
    throw PreconditionError("factor_mod_p: reduction is not squarefree");
  std::mt19937_64 rng(seed);
  std::vector<IntPoly> out;
  for (const auto& g : fp.factor_squarefree(fm, rng)) out.push_back(lift_to_z(g));
  return out;
}

std::vector<IntPoly> hensel_lift(const std::vector<IntPoly>& factors, const IntPoly& p, std::uint64_t prime,
                                 unsigned exponent) {
  if (factors.empty()) throw PreconditionError("hensel_lift: no factors");
  if (exponent == 0) throw PreconditionError("hensel_lift: exponent must be positive");
  if (prime >= (1ull << 32) || !detail::is_small_prime(prime))
    throw PreconditionError("hensel_lift: modulus must be a prime below 2^32");
  const ModField fp(prime);
  const Integer pm(static_cast<unsigned long>(prime));
  IntPoly product{1};
  std::vector<IntPoly> reduced;
  for (const auto& g : factors) {
    IntPoly r = reduce_mod(g, pm);
    if (!r.is_monic()) throw PreconditionError("hensel_lift: factors must be monic modulo the prime");
    product = mul_mod(product, r, pm);
    reduced.push_back(std::move(r));
  }
  if (product != monic_mod(p, pm)) throw PreconditionError("hensel_lift: factors do not multiply to p/lc(p)");
  const Integer modulus = prime_power(prime, exponent);
  return lift_all(reduced, monic_mod(p, modulus), fp, exponent, modulus);
}

unsigned lift_exponent(const IntPoly& p, std::uint64_t prime) {
  if (p.is_zero()) throw PreconditionError("lift_exponent: zero polynomial");
  // p^k > 2B with B = 2^n ||p||_2 |lc|  <=>  p^(2k) > 4 * 4^n * sum c_i^2 * lc^2
  Integer norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 4, static_cast<unsigned long>(p.degree()));
  bound *= 4 * norm2 * p.leading() * p.leading();
  const Integer p2 = Integer(static_cast<unsigned long>(prime)) * static_cast<unsigned long>(prime);
  Integer acc = p2;
  unsigned k = 1;
  while (acc <= bound) {
    acc *= p2;
    ++k;
  }
  return k;
}

Factorization factor_z(const IntPoly& p, std::uint64_t seed) {
  if (p.is_zero()) throw PreconditionError("factor_z: zero polynomial");
  Factorization out;
  out.unit = sgn(p.leading()) < 0 ? -1 : 1;
  out.content = content(p);
  std::mt19937_64 rng(seed);
  for (const auto& part : squarefree_decomposition(p))
    for (auto& g : factor_squarefree_primitive(part.factor, rng)) out.factors.push_back({std::move(g), part.multiplicity});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorEntry& a, const FactorEntry& b) { return poly_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) throw PreconditionError("is_irreducible: constant polynomial");
  const Factorization f = factor_z(p);
  return f.content == 1 && f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace salem
