#include "salem/cli/reproduction_checks.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include <salem/salem.hpp>

#include "salem/cli/io.hpp"
#include "salem/cli/report.hpp"
#include "salem/cli/suites.hpp"

namespace salem::cli {

namespace {

constexpr unsigned kConeSuiteSize = 500;
constexpr unsigned kIsotropicSuiteSize = 200;
constexpr unsigned kComposePairs = 50;
constexpr unsigned kRoundTripCount = 1000;
constexpr unsigned long kGrowthBound = 1000;

using Check = std::function<std::string(const CheckOptions&)>;

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

IntPoly load_poly(const CheckOptions& o, const char* name) { return parse_poly(read_file(o.fixtures / name)); }

RatInterval interval_pow(const RatInterval& iv, unsigned n) {
  Rational lo = 1, hi = 1;
  for (unsigned i = 0; i < n; ++i) {
    lo *= iv.lo;
    hi *= iv.hi;
  }
  return {lo, hi};
}

const Rational kPrintedSalemRoot(269943, 10000);

std::string check_digests(const CheckOptions& o) {
  for (const auto& [name, digest] : fixture_digests())
    expect(sha256_hex(read_file(o.fixtures / name)) == digest, name + ": digest mismatch");
  return std::to_string(fixture_digests().size()) + " fixtures";
}

std::string check_p22(const CheckOptions& o) {
  const IntPoly p = load_poly(o, "p22.json");
  const FactorReport r = classify_poly(p, std::min(o.width, Rational(1, 1000000)), o.digits);
  expect(r.factors.size() == 1 && r.factors[0].multiplicity == 1, "not irreducible");
  expect(r.factors[0].cls.kind == PolyClass::Kind::kSalem, "not Salem");
  expect(p.degree() == 22, "degree is not 22");
  const RatInterval& a = r.factors[0].cls.salem_root->interval;
  expect(a.width() <= Rational(1, 1000000), "root enclosure wider than 1e-6");
  // The printed value is truncated: the root must lie in [26.9943, 26.9944).
  expect(kPrintedSalemRoot <= a.lo && a.hi < kPrintedSalemRoot + Rational(1, 10000), "root does not match 26.9943...");
  expect(r.entropy.text.rfind("3.295", 0) == 0, "entropy digits " + r.entropy.text);
  return "a in [" + to_decimal_floor(a.lo, 8) + ", " + to_decimal_floor(a.hi, 8) + "], h = " + r.entropy.text;
}

std::string check_fq3(const CheckOptions& o) {
  const IntPoly fq3 = load_poly(o, "fq3.json");
  const IntPoly q20 = load_poly(o, "q20.json");
  const Factorization f = factor_z(fq3, o.seed);
  expect(f.factors.size() == 2, "expected two factors");
  expect(f.factors[0].factor == cyclotomic_poly(3) && f.factors[1].factor == q20, "factors differ from the printed ones");
  expect(f.factors[0].multiplicity == 1 && f.factors[1].multiplicity == 1, "unexpected multiplicity");
  expect(poly_eval(fq3, Rational(1)) == -36, "value at 1 is not -36");
  return "x^2 + x + 1 times the degree-20 cofactor; value at 1 = -36";
}

std::string check_powers(const CheckOptions& o) {
  const IntPoly p = load_poly(o, "p22.json");
  const SalemVerdict base = salem_test(p, Rational(1, 1000000));
  expect(bool(base), "p22 not Salem");
  std::string detail;
  for (unsigned n : {2u, 3u}) {
    const IntPoly q = power_min_poly(p, n);
    expect(q.degree() == 22, "power " + std::to_string(n) + " has degree " + std::to_string(q.degree()));
    const SalemVerdict v = salem_test(q, Rational(1, 1000000));
    expect(bool(v), "power " + std::to_string(n) + " is not Salem");
    expect(v.root->interval.intersects(interval_pow(base.root->interval, n)),
           "power " + std::to_string(n) + " root misses a^n");
    detail += "n=" + std::to_string(n) + " ok ";
  }
  return detail;
}

std::string check_cone_suite(const CheckOptions& o) {
  unsigned salem = 0;
  for (unsigned i = 0; i < kConeSuiteSize; ++i) {
    const Isometry f = cone_preserving_word(o.seed + i);
    try {
      const IsometryReport r = classify_isometry(f, positive_witness(10), o.width, o.digits);
      expect(r.preserves_cone, "draw " + std::to_string(i) + " does not preserve the cone");
      salem += r.report.salem_count;
    } catch (const InvariantViolation& e) {
      throw Failure{"draw " + std::to_string(i) + ": " + e.what()};
    }
  }
  return std::to_string(kConeSuiteSize) + " isometries, " + std::to_string(salem) + " with a Salem factor";
}

std::string check_isotropic_suite(const CheckOptions& o) {
  for (unsigned i = 0; i < kIsotropicSuiteSize; ++i) {
    const TransvectionDraw d = transvection_product(o.seed + i);
    try {
      const FixedIsotropicResult r = fixed_isotropic_check(d.f, d.e, o.width, o.digits);
      expect(r.fixed, "draw " + std::to_string(i) + " moves e");
      expect(quasi_unipotent_exponent(char_poly(d.f)).has_value(), "draw " + std::to_string(i) + " not quasi-unipotent");
    } catch (const InvariantViolation& e) {
      throw Failure{"draw " + std::to_string(i) + ": " + e.what()};
    }
  }
  return std::to_string(kIsotropicSuiteSize) + " products";
}

std::vector<Isometry> large_trace_words(const CheckOptions& o) {
  std::vector<Isometry> out;
  for (unsigned i = 0; i < kConeSuiteSize; ++i) {
    Isometry f = cone_preserving_word(o.seed + i);
    if (trace_bound_test(f) == TraceVerdict::kPositive) out.push_back(std::move(f));
  }
  return out;
}

std::string check_trace_criterion(const CheckOptions& o) {
  const std::vector<Isometry> words = large_trace_words(o);
  for (const auto& f : words) {
    const FactorReport r = classify_poly(char_poly(f), o.width, o.digits);
    expect(r.salem_count == 1, "|tr| >= 11 without a Salem factor");
    const auto w = trace_growth_witness(f, kGrowthBound, o.width);
    expect(w.has_value() && w->certified_from.has_value(), "no certified growth witness");
  }
  return std::to_string(words.size()) + " isometries with |tr| >= 11";
}

std::string check_compose(const CheckOptions& o) {
  const std::vector<Isometry> words = large_trace_words(o);
  expect(!words.empty(), "no isometry with |tr| >= 11");
  for (unsigned i = 0; i < kComposePairs; ++i) {
    const Isometry& f = words[i % words.size()];
    const Isometry g = quasi_unipotent_word(o.seed + i);
    const ComposeResult c = compose_search(f, g);
    const Isometry gu = power(g, c.unipotent_exponent);
    for (unsigned long n : {c.certificate.s + 3UL, c.certificate.s + 7UL, c.certificate.s + 20UL}) {
      const Integer direct = trace(f.matrix() * matrix_pow(gu.matrix(), n));
      expect(c.certificate.eval(Rational(n)) == direct, "certificate misses the trace at N = " + std::to_string(n));
    }
    const FactorReport r = classify_poly(char_poly(c.composed), o.width, o.digits);
    expect(r.salem_count == 1, "composed isometry has no Salem factor");
  }
  return std::to_string(kComposePairs) + " pairs";
}

std::string check_beta(const CheckOptions&) {
  auto brute = [](unsigned long d) {
    Integer l = 1;
    for (unsigned long n = 1; n <= 2 * d * d + 1; ++n) {
      unsigned long phi = 0;
      for (unsigned long k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
      if (phi <= d) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), n);
    }
    return l;
  };
  for (unsigned long d = 1; d <= 10; ++d) expect(beta_constant(d).value == brute(d), "d = " + std::to_string(d));
  const Integer b22 = beta_constant(22).value;
  expect(b22 == brute(22), "d = 22");
  return "beta(22) = " + b22.get_str();
}

std::string check_round_trip(const CheckOptions& o) {
  for (unsigned i = 0; i < kRoundTripCount; ++i) {
    const IntPoly p = random_factor_product(o.seed + i);
    const Factorization f = factor_z(p, o.seed);
    expect(f.expand() == p, "product " + std::to_string(i) + " does not reconstruct");
    for (const auto& e : f.factors) expect(is_irreducible(e.factor), "reducible factor in product " + std::to_string(i));
    if (i < 50) expect(to_json(f).dump() == to_json(factor_z(p, o.seed)).dump(), "non-deterministic output");
  }
  return std::to_string(kRoundTripCount) + " products";
}

}  // namespace

const std::map<std::string, std::string>& fixture_digests() {
  static const std::map<std::string, std::string> digests = {
#include "fixture_digests.inc"
  };
  return digests;
}

IntPoly random_factor_product(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntPoly p{1};
  long total = 0;
  const unsigned count = 1 + static_cast<unsigned>(rng() % 5);
  for (unsigned k = 0; k < count; ++k) {
    const long d = 1 + static_cast<long>(rng() % 6);
    if (total + d > 24) break;
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
    c.back() = 1 + static_cast<long>(rng() % 3);
    c.front() = sgn(c.front()) == 0 ? Integer(1) : c.front();
    p = p * IntPoly(std::move(c));
    total += d;
  }
  return p;
}

std::vector<CheckResult> run_reproduction_checks(const CheckOptions& opts) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"fixture-digests", check_digests},
      {"salem-degree-22", check_p22},
      {"factor-degree-22-product", check_fq3},
      {"salem-powers", check_powers},
      {"cone-preserving-suite", check_cone_suite},
      {"isotropic-fixed-suite", check_isotropic_suite},
      {"trace-criterion", check_trace_criterion},
      {"compose-construction", check_compose},
      {"beta-constant", check_beta},
      {"factor-round-trip", check_round_trip},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = fn(opts);
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.why;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace salem::cli
