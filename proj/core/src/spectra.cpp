#include "salem/spectra.hpp"

#include <numeric>
#include <random>

#include "number_theory.hpp"
#include "salem/factorint.hpp"

namespace salem {

namespace {

void require_same_lattice(const Isometry& f, const Isometry& g) {
  if (f.lattice() != g.lattice() && f.lattice()->gram() != g.lattice()->gram())
    throw PreconditionError("isometries act on different lattices");
}

// Dyadic rounding keeps the iterated powers in trace_growth_witness small.
constexpr unsigned kDyadicBits = 96;

Rational round_down(const Rational& x) {
  Integer scaled = x.get_num() << kDyadicBits;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  return Rational(scaled, Integer(1) << kDyadicBits);
}

Rational round_up(const Rational& x) {
  Integer scaled = x.get_num() << kDyadicBits;
  mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  return Rational(scaled, Integer(1) << kDyadicBits);
}

Integer abs_trace(const IntMatrix& m) { return abs(trace(m)); }

}  // namespace

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw PreconditionError("euler_phi: n must be positive");
  return detail::totient(n);
}

BetaResult beta_constant(unsigned long d) {
  if (d == 0) throw PreconditionError("beta_constant: d must be positive");
  BetaResult out;
  out.scan_bound = 2 * d * d + 1;
  out.value = 1;
  for (unsigned long n = 1; n <= out.scan_bound; ++n) {
    if (detail::totient(n) > d) continue;
    out.set.push_back(n);
    mpz_lcm_ui(out.value.get_mpz_t(), out.value.get_mpz_t(), n);
  }
  return out;
}

std::optional<unsigned long> quasi_unipotent_exponent(const IntPoly& p) {
  if (!p.is_monic()) throw PreconditionError("quasi_unipotent_exponent: polynomial must be monic");
  if (p.degree() == 0) return 1;
  unsigned long m = 1;
  for (const auto& entry : factor_z(p).factors) {
    const auto n = is_cyclotomic(entry.factor);
    if (!n) return std::nullopt;
    m = std::lcm(m, *n);
  }
  return m;
}

TraceVerdict trace_bound_test(const Isometry& f) {
  return abs_trace(f.matrix()) >= f.rank() + 1 ? TraceVerdict::kPositive : TraceVerdict::kInconclusive;
}

std::optional<GrowthWitness> trace_growth_witness(const Isometry& f, unsigned long bound, const Rational& width) {
  const FactorReport report = classify_poly(char_poly(f), width, 1);
  if (report.salem_count != 1 || !report.all_cyclotomic_or_salem())
    throw PreconditionError("trace_growth_witness: need cyclotomic factors and exactly one Salem factor");
  const ClassifiedFactor& salem_factor = *report.salem_factor();
  RootEnclosure root = *salem_factor.cls.salem_root;
  while (root.interval.lo <= 1) root = refine(salem_factor.factor, root, root.interval.width() / 2);

  const long r = static_cast<long>(f.rank());
  const Rational threshold(2 * r - 2);
  GrowthWitness out;
  out.salem_root = root.interval;

  // Lower bound for a^n + a^-n: lo^n + hi^-n.
  Rational pw_lo = 1, pw_hi = 1;
  bool found = false;
  IntMatrix pw = f.matrix();
  for (unsigned long n = 1; n <= bound; ++n) {
    pw_lo = round_down(pw_lo * root.interval.lo);
    pw_hi = round_up(pw_hi * root.interval.hi);
    if (!out.certified_from && pw_lo + 1 / pw_hi > threshold) out.certified_from = n;
    if (!found && abs_trace(pw) >= r + 1) {
      out.n = n;
      found = true;
    }
    if (found && out.certified_from) break;
    if (out.certified_from && !found)
      throw InvariantViolation("trace_growth_witness: certified power fails the trace test");
    pw = pw * f.matrix();
  }
  if (!found) return std::nullopt;
  return out;
}

UnipotentPart unipotent_part(const Isometry& g) {
  const auto m = quasi_unipotent_exponent(char_poly(g));
  if (!m) throw NotQuasiUnipotent("unipotent_part: characteristic polynomial has a non-cyclotomic factor");
  UnipotentPart out{*m, power(g, *m)};
  const IntMatrix d = out.power.matrix() - IntMatrix::identity(g.rank());
  if (!is_zero(matrix_pow(d, g.rank()))) throw InvariantViolation("unipotent_part: (g^m - I)^r != 0");
  return out;
}

Rational TraceCertificate::eval(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

bool TraceCertificate::is_constant() const {
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) return false;
  return true;
}

TraceCertificate trace_polynomial(const Isometry& f, const Isometry& gu) {
  require_same_lattice(f, gu);
  const std::size_t r = f.rank();
  const IntMatrix d = gu.matrix() - IntMatrix::identity(r);
  std::optional<unsigned> index;
  IntMatrix dk = IntMatrix::identity(r);
  for (unsigned k = 0; k <= r; ++k) {
    if (is_zero(dk)) {
      index = k;
      break;
    }
    dk = dk * d;
  }
  if (!index) throw PreconditionError("trace_polynomial: second isometry is not unipotent");

  TraceCertificate cert;
  cert.s = *index - 1;
  IntMatrix t = f.matrix();
  for (unsigned long n = 0; n <= cert.s + 2UL; ++n) {
    cert.samples.emplace_back(n, trace(t));
    t = t * gu.matrix();
  }
  std::vector<Rational> values;
  for (unsigned long n = 0; n <= cert.s; ++n) values.emplace_back(cert.samples[n].second);
  cert.coeffs = interpolate_naturals(values);
  for (const auto& [n, tr] : cert.samples)
    if (cert.eval(Rational(n)) != tr) throw InvariantViolation("trace_polynomial: interpolant misses a sample");
  return cert;
}

ComposeResult compose_search(const Isometry& f, const Isometry& g, unsigned long bound,
                             std::optional<unsigned long> coprime_to) {
  require_same_lattice(f, g);
  if (coprime_to && *coprime_to == 0) throw PreconditionError("compose_search: coprimality modulus must be positive");
  const unsigned long r = f.rank();
  if (trace_bound_test(f) != TraceVerdict::kPositive)
    throw TraceBelowThreshold("compose_search: |tr F| < rank + 1");
  const UnipotentPart up = unipotent_part(g);
  TraceCertificate cert = trace_polynomial(f, up.power);

  std::optional<unsigned long> eventual;
  if (!cert.is_constant()) {
    // |P(N)| >= |a_t| N - sum_{j<t} |a_j| >= r + 1 once N >= 1 + (S + r + 1)/|a_t|.
    std::size_t t = cert.coeffs.size() - 1;
    while (sgn(cert.coeffs[t]) == 0) --t;
    Rational s = 0;
    for (std::size_t j = 0; j < t; ++j) s += abs(cert.coeffs[j]);
    const Rational n0 = 1 + (s + r + 1) / abs(cert.coeffs[t]);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), n0.get_num_mpz_t(), n0.get_den_mpz_t());
    if (c.fits_ulong_p()) eventual = c.get_ui();
  }

  const Rational need(static_cast<long>(r + 1));
  std::optional<unsigned long> hit;
  for (unsigned long n = 1; n <= bound; ++n) {
    if (coprime_to && std::gcd(n, *coprime_to) != 1) continue;
    if (abs(cert.eval(Rational(n))) >= need) {
      hit = n;
      break;
    }
  }
  if (!hit) {
    const bool guaranteed =
        cert.is_constant() || (eventual && *eventual + (coprime_to ? *coprime_to : 0) <= bound);
    if (guaranteed) throw InvariantViolation("compose_search: certificate guarantees a hit below the bound");
    throw BoundExhausted("compose_search: no N <= bound satisfies the trace test");
  }

  Isometry composed = compose(f, power(up.power, *hit));
  const Integer tr = trace(composed.matrix());
  if (Rational(tr) != cert.eval(Rational(*hit)))
    throw InvariantViolation("compose_search: certificate disagrees with the composed trace");
  return ComposeResult{*hit, std::move(composed), tr, std::move(cert), up.exponent, eventual};
}

}  // namespace salem
