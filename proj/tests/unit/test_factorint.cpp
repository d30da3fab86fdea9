#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

namespace salem {
namespace {

using test::kFQ3;
using test::kP22;
using test::kQ20;

TEST(SquarefreeDecomposition, Examples) {
  const IntPoly xm1 = IntPoly::linear_root(1), xp1 = IntPoly::linear_root(-1);
  const auto parts = squarefree_decomposition(xm1 * xm1 * xp1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (FactorEntry{xp1, 1}));
  EXPECT_EQ(parts[1], (FactorEntry{xm1, 2}));
  EXPECT_EQ(squarefree_decomposition(kP22), (std::vector<FactorEntry>{{kP22, 1}}));
  EXPECT_EQ(squarefree_decomposition(IntPoly({0, 0, 0, 1})), (std::vector<FactorEntry>{{IntPoly({0, 1}), 3}}));
  EXPECT_THROW(squarefree_decomposition(IntPoly()), PreconditionError);
}

TEST(FactorModP, AgreesWithRootSearch) {
  const IntPoly x2p1{1, 0, 1};
  EXPECT_EQ(factor_mod_p(x2p1, 5), (std::vector<IntPoly>{IntPoly({2, 1}), IntPoly({3, 1})}));
  EXPECT_EQ(oracle::roots_mod(x2p1.coeffs(), 5), (std::vector<unsigned long>{2, 3}));
  EXPECT_EQ(factor_mod_p(x2p1, 3), (std::vector<IntPoly>{x2p1}));
  EXPECT_TRUE(oracle::roots_mod(x2p1.coeffs(), 3).empty());
  EXPECT_EQ(factor_mod_p(IntPoly({0, 1}), 7), (std::vector<IntPoly>{IntPoly({0, 1})}));
}

TEST(FactorModP, RejectsBadPrimes) {
  EXPECT_THROW(factor_mod_p(IntPoly({1, 0, 1}), 4), PreconditionError);
  EXPECT_THROW(factor_mod_p(IntPoly({1, 0, 5}), 5), PreconditionError);
  // (x + 1)^2 = x^2 + 2x + 1 is not squarefree anywhere.
  EXPECT_THROW(factor_mod_p(IntPoly({1, 2, 1}), 7), PreconditionError);
  // x^2 + 1 = (x + 1)^2 mod 2.
  EXPECT_THROW(factor_mod_p(IntPoly({1, 0, 1}), 2), PreconditionError);
}

TEST(FactorModP, FactorsMultiplyBackAndAreIrreducible) {
  std::mt19937_64 rng(31);
  for (unsigned long prime : {2ul, 3ul, 7ul, 101ul, 65537ul}) {
    for (int i = 0; i < 40; ++i) {
      std::vector<Integer> c(2 + rng() % 9);
      for (auto& x : c) x = static_cast<long>(rng() % 1000);
      c.back() = 1;
      const IntPoly p(c);
      std::vector<IntPoly> fs;
      try {
        fs = factor_mod_p(p, prime, i);
      } catch (const PreconditionError&) {
        continue;  // not squarefree modulo prime
      }
      IntPoly prod{1};
      for (const auto& f : fs) {
        prod = prod * f;
        if (prime <= 7 && f.degree() <= 6) {
          EXPECT_TRUE(oracle::irreducible_mod_prime_brute_force(f.coeffs(), prime));
        }
      }
      const Integer m(prime);
      std::vector<Integer> diff = (prod - p).coeffs();
      for (auto& x : diff) EXPECT_EQ(x % m, 0);
      EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end(), poly_less));
    }
  }
}

TEST(HenselLift, SquareRootsOfMinusOneModulo625) {
  const IntPoly x2p1{1, 0, 1};
  const auto lifted = hensel_lift(factor_mod_p(x2p1, 5), x2p1, 5, 4);
  EXPECT_EQ(lifted, (std::vector<IntPoly>{IntPoly({182, 1}), IntPoly({443, 1})}));
  // r^2 = -1 mod 625 by exhaustion; the factors are x - r.
  EXPECT_EQ(oracle::roots_mod(x2p1.coeffs(), 625), (std::vector<unsigned long>{182, 443}));
}

TEST(HenselLift, SingleFactorAndProductInvariant) {
  const IntPoly p{3, 1, 0, 1};
  const auto one = hensel_lift({IntPoly({3, 1, 0, 1})}, p, 7, 3);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], p);

  const auto fs = factor_mod_p(kP22, 13);
  const auto lifted = hensel_lift(fs, kP22, 13, 6);
  const Integer m = 13 * 13 * 13 * 13 * 13 * 13;
  IntPoly prod{1};
  for (const auto& f : lifted) prod = prod * f;
  const IntPoly diff = prod - kP22;
  for (const auto& c : diff.coeffs()) EXPECT_NE(mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()), 0);
  EXPECT_THROW(hensel_lift({IntPoly({1, 1})}, p, 7, 3), PreconditionError);
}

TEST(FactorZ, DegreeTwentyTwoProductSplitsIntoPrintedFactors) {
  const Factorization f = factor_z(kFQ3);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], (FactorEntry{IntPoly({1, 1, 1}), 1}));
  EXPECT_EQ(f.factors[1], (FactorEntry{kQ20, 1}));
  EXPECT_EQ(f.unit, 1);
  EXPECT_EQ(f.content, 1);
}

TEST(FactorZ, SalemPolynomialIsIrreducible) {
  const Factorization f = factor_z(kP22);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0], (FactorEntry{kP22, 1}));
  EXPECT_TRUE(is_irreducible(kP22));
  // Irreducible modulo 3 by exhaustion would be too slow at degree 22; the
  // squarefree check is the independent part here.
  EXPECT_EQ(oracle::sylvester_resultant(kP22.coeffs(), poly_derivative(kP22).coeffs()) != 0, true);
}

TEST(FactorZ, SmallExamples) {
  const Factorization f = factor_z(IntPoly::linear_root(1) * IntPoly({1, 1, 1}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].factor, IntPoly({-1, 1}));
  EXPECT_EQ(f.factors[1].factor, IntPoly({1, 1, 1}));
  EXPECT_FALSE(is_irreducible(IntPoly({-1, 0, 1})));
  EXPECT_TRUE(is_irreducible(IntPoly({1, -3, 1})));
  EXPECT_FALSE(is_irreducible(IntPoly({2, 4})));
  EXPECT_THROW(is_irreducible(IntPoly({5})), PreconditionError);
  EXPECT_THROW(factor_z(IntPoly()), PreconditionError);
}

TEST(FactorZ, UnitContentAndMultiplicity) {
  const IntPoly p = poly_scale(poly_pow(IntPoly({1, -2}), 3) * IntPoly({0, 1}), Integer(-6));
  const Factorization f = factor_z(p);
  EXPECT_EQ(f.unit, 1);  // -6 (1 - 2x)^3 x = 6 (2x - 1)^3 x
  EXPECT_EQ(f.content, 6);
  ASSERT_EQ(f.factors.size(), 2u);
  // Sorted by degree, then by coefficients from the constant term up.
  EXPECT_TRUE(f.factors[0] == (FactorEntry{IntPoly({-1, 2}), 3})) << f.factors[0].factor;
  EXPECT_TRUE(f.factors[1] == (FactorEntry{IntPoly({0, 1}), 1})) << f.factors[1].factor;
  EXPECT_EQ(f.expand(), p);
}

TEST(FactorZ, SwinnertonDyerNeedsRecombination) {
  // Irreducible over Q, splits into quadratics or linears modulo every prime.
  const IntPoly sd{1, 0, -10, 0, 1};
  EXPECT_TRUE(is_irreducible(sd));
  const IntPoly sd3{576, 0, -960, 0, 352, 0, -40, 0, 1};
  EXPECT_TRUE(is_irreducible(sd3));
  const Factorization f = factor_z(sd * IntPoly({-2, 0, 1}));
  EXPECT_EQ(f.factors.size(), 2u);
}

TEST(FactorZ, CyclotomicProducts) {
  IntPoly p{1};
  std::vector<IntPoly> expected;
  for (unsigned long n : {1, 2, 3, 5, 7, 8, 12, 30}) {
    p = p * cyclotomic_poly(n);
    expected.push_back(cyclotomic_poly(n));
  }
  std::sort(expected.begin(), expected.end(), poly_less);
  const Factorization f = factor_z(p);
  ASSERT_EQ(f.factors.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(f.factors[i].factor, expected[i]);
}

TEST(FactorZ, DeterministicPerSeed) {
  const IntPoly p = kFQ3 * IntPoly({-1, 0, 0, 1}) * IntPoly({3, 1, 4, 1});
  EXPECT_EQ(factor_z(p, 0), factor_z(p, 0));
  EXPECT_EQ(factor_z(p, 0), factor_z(p, 99));
}

TEST(LiftExponent, ExceedsMignotteBound) {
  const unsigned k = lift_exponent(kP22, 13);
  Integer pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= 13;
  Integer norm2 = 0;
  for (const auto& c : kP22.coeffs()) norm2 += c * c;
  // (p^k)^2 > 4 * 4^n * ||p||^2 * lc^2.
  Integer bound = 4 * norm2;
  for (long i = 0; i < kP22.degree(); ++i) bound *= 4;
  EXPECT_GT(pk * pk, bound);
  EXPECT_LE((pk / 13) * (pk / 13), bound);
}

}  // namespace
}  // namespace salem
