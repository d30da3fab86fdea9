#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace salem {
namespace {

using test::kFQ3;
using test::kP22;
using test::kQ20;

IntPoly random_poly(std::mt19937_64& rng, int max_degree, long range) {
  const int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range;
  return IntPoly(std::move(c));
}

TEST(PolyAdd, CancelsAndNormalizes) {
  EXPECT_EQ(IntPoly({1, 1}) + IntPoly({-1, 1}), IntPoly({0, 2}));
  EXPECT_EQ(IntPoly() + kP22, kP22);
  const IntPoly z = IntPoly({0, 0, 1}) + IntPoly({0, 0, -1});
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.coeffs().empty());
  EXPECT_EQ(z.degree(), IntPoly::kZeroDegree);
}

TEST(PolyMul, CyclotomicTimesCofactorGivesDegree22Product) {
  EXPECT_EQ(IntPoly({1, 1, 1}) * kQ20, kFQ3);
  EXPECT_EQ(IntPoly({1}) * kP22, kP22);
  EXPECT_EQ(IntPoly({-1, 1}) * IntPoly({1, 1}), IntPoly({-1, 0, 1}));
}

TEST(PolyMul, MatchesConvolutionOracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const IntPoly a = random_poly(rng, 8, 20), b = random_poly(rng, 8, 20);
    EXPECT_EQ((a * b).coeffs(), oracle::convolve(a.coeffs(), b.coeffs()));
  }
}

TEST(PolyMul, CommutativeAssociativeDegreeAdditive) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const IntPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9), c = random_poly(rng, 6, 9);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(PolyEval, ValueAtOneIsCoefficientSum) {
  EXPECT_EQ(poly_eval(kFQ3, Rational(1)), -36);
  EXPECT_EQ(oracle::coefficient_sum(kFQ3.coeffs()), -36);
  // Column sums of the convolution of the two printed factors.
  EXPECT_EQ(oracle::coefficient_sum(IntPoly({1, 1, 1}).coeffs()) * oracle::coefficient_sum(kQ20.coeffs()), -36);
  EXPECT_EQ(poly_eval(IntPoly({1, -3, 1}), Rational(0)), 1);
  EXPECT_EQ(poly_eval(kP22, Rational(1)), oracle::coefficient_sum(kP22.coeffs()));
  EXPECT_EQ(poly_eval(kP22, Integer(1)), -9);
}

TEST(PolyEval, RationalPointsMatchHornerOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const IntPoly p = random_poly(rng, 10, 50);
    const Rational x(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 13));
    EXPECT_EQ(poly_eval(p, x), oracle::horner(p.coeffs(), x));
    EXPECT_EQ(poly_sign_at(p, x), sgn(oracle::horner(p.coeffs(), x)));
  }
}

TEST(PolyDerivative, Basics) {
  EXPECT_EQ(poly_derivative(IntPoly({0, 0, 1})), IntPoly({0, 2}));
  EXPECT_TRUE(poly_derivative(IntPoly({5})).is_zero());
  EXPECT_EQ(poly_derivative(IntPoly({1, -3, 1})), IntPoly({-3, 2}));
}

TEST(ContentPrimitive, SignStaysInPrimitivePart) {
  auto [c1, q1] = content_primitive(IntPoly({4, 2}));
  EXPECT_EQ(c1, 2);
  EXPECT_EQ(q1, IntPoly({2, 1}));
  auto [c2, q2] = content_primitive(kP22);
  EXPECT_EQ(c2, 1);
  EXPECT_EQ(q2, kP22);
  auto [c3, q3] = content_primitive(IntPoly({0, -4}));
  EXPECT_EQ(c3, 4);
  EXPECT_EQ(q3, IntPoly({0, -1}));
  EXPECT_THROW(content_primitive(IntPoly()), PreconditionError);
}

TEST(ContentPrimitive, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    IntPoly p = poly_scale(random_poly(rng, 7, 30), Integer(1 + static_cast<long>(rng() % 12)));
    if (p.is_zero()) continue;
    auto [c, q] = content_primitive(p);
    EXPECT_GT(c, 0);
    EXPECT_EQ(poly_scale(q, c), p);
    EXPECT_EQ(content(q), 1);
  }
}

TEST(SubresultantGcd, Examples) {
  const IntPoly xm1 = IntPoly::linear_root(1), xp1 = IntPoly::linear_root(-1);
  EXPECT_EQ(subresultant_gcd(IntPoly({-6, 0, 4}), IntPoly()), IntPoly({-3, 0, 2}));
  EXPECT_EQ(subresultant_gcd(xm1 * xm1, xm1 * xp1), xm1);
  EXPECT_EQ(subresultant_gcd(kP22, poly_derivative(kP22)), IntPoly({1}));
  EXPECT_THROW(subresultant_gcd(IntPoly(), IntPoly()), PreconditionError);
}

TEST(SubresultantGcd, DividesBothInputs) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const IntPoly common = random_poly(rng, 3, 5);
    const IntPoly a = common * random_poly(rng, 4, 6), b = common * random_poly(rng, 4, 6);
    if (a.is_zero() && b.is_zero()) continue;
    const IntPoly g = subresultant_gcd(a, b);
    EXPECT_GT(g.leading(), 0);
    if (!a.is_zero()) {
      EXPECT_TRUE(pseudo_remainder(a, g).is_zero());
    }
    if (!b.is_zero()) {
      EXPECT_TRUE(pseudo_remainder(b, g).is_zero());
    }
    if (common.degree() >= 1 && !a.is_zero() && !b.is_zero()) {
      EXPECT_TRUE(divides(primitive_normalized(common), g));
    }
  }
}

TEST(Reciprocal, Palindromes) {
  EXPECT_TRUE(is_reciprocal(kP22));
  EXPECT_FALSE(is_reciprocal(IntPoly({-2, 1})));
  EXPECT_TRUE(is_reciprocal(IntPoly({1, 1, 1})));
  EXPECT_THROW(is_reciprocal(IntPoly()), PreconditionError);
}

TEST(TraceTransform, Examples) {
  EXPECT_EQ(trace_transform(IntPoly({1, -3, 1})), IntPoly({-3, 1}));
  EXPECT_EQ(trace_transform(IntPoly({1, 0, 1})), IntPoly({0, 1}));
  const IntPoly q = trace_transform(kP22);
  EXPECT_EQ(q.degree(), 11);
  EXPECT_TRUE(q.is_monic());
  EXPECT_THROW(trace_transform(IntPoly({-2, 1})), PreconditionError);
  EXPECT_THROW(trace_transform(IntPoly({1, 1, 1, 1})), PreconditionError);
}

// x^d Q(x + 1/x) computed as sum_k q_k (x^2 + 1)^k x^(d-k).
IntPoly untransform(const IntPoly& q) {
  const long d = q.degree();
  IntPoly out;
  for (long k = 0; k <= d; ++k)
    out = out + poly_scale(poly_pow(IntPoly({1, 0, 1}), static_cast<unsigned>(k)) *
                               IntPoly::monomial(1, static_cast<std::size_t>(d - k)),
                           q.coeff(static_cast<std::size_t>(k)));
  return out;
}

TEST(TraceTransform, RoundTripOnRandomReciprocals) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + static_cast<int>(rng() % 6);
    std::vector<Integer> c(static_cast<std::size_t>(2 * d) + 1);
    for (int k = 0; k <= d; ++k) {
      const Integer v = static_cast<long>(rng() % 21) - 10;
      c[static_cast<std::size_t>(k)] = v;
      c[static_cast<std::size_t>(2 * d - k)] = v;
    }
    c.front() = 1;
    c.back() = 1;
    const IntPoly p(c);
    EXPECT_EQ(untransform(trace_transform(p)), p);
  }
}

TEST(Resultant, Examples) {
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) EXPECT_EQ(resultant(IntPoly::linear_root(a), IntPoly::linear_root(b)), a - b);
  EXPECT_EQ(resultant(kP22, IntPoly({1})), 1);
  const IntPoly p{1, -3, 1}, q{1, -7, 1};
  EXPECT_EQ(resultant(p, q), oracle::sylvester_resultant(p.coeffs(), q.coeffs()));
  EXPECT_EQ(resultant(p, q), 16);
  EXPECT_THROW(resultant(IntPoly(), p), PreconditionError);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 120; ++i) {
    const IntPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a.coeffs(), b.coeffs())) << a << " | " << b;
  }
}

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(cyclotomic_poly(1), IntPoly({-1, 1}));
  EXPECT_EQ(cyclotomic_poly(3), IntPoly({1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(12), IntPoly({1, 0, -1, 0, 1}));
  IntPoly x12 = IntPoly::monomial(1, 12) - IntPoly({1});
  for (unsigned long d : {1, 2, 3, 4, 6}) x12 = exact_quotient(x12, cyclotomic_poly(d));
  EXPECT_EQ(cyclotomic_poly(12), x12);
  EXPECT_THROW(cyclotomic_poly(0), PreconditionError);
}

TEST(Cyclotomic, DividesXnMinusOneWithTotientDegree) {
  for (unsigned long n = 1; n <= 120; ++n) {
    const IntPoly phi = cyclotomic_poly(n);
    EXPECT_TRUE(phi.is_monic());
    EXPECT_EQ(static_cast<unsigned long>(phi.degree()), oracle::coprime_count(n));
    EXPECT_TRUE(divides(phi, IntPoly::monomial(1, n) - IntPoly({1})));
  }
}

TEST(Interpolation, RecoversPolynomialValues) {
  std::vector<Rational> values;
  for (long k = 0; k <= 4; ++k) values.emplace_back(3 * k * k * k - k + 7);
  auto c = interpolate_naturals(values);
  ASSERT_LE(c.size(), 5u);
  c.resize(5);
  EXPECT_EQ(c[0], 7);
  EXPECT_EQ(c[1], -1);
  EXPECT_EQ(c[2], 0);
  EXPECT_EQ(c[3], 3);
  EXPECT_EQ(c[4], 0);
}

TEST(RatIntervalType, RejectsReversedEndpoints) {
  EXPECT_THROW(RatInterval(Rational(2), Rational(1)), PreconditionError);
  const RatInterval iv(Rational(1), Rational(3));
  EXPECT_TRUE(iv.contains(Rational(2)));
  EXPECT_EQ(iv.width(), 2);
}

TEST(Decimal, ParseAndFloor) {
  EXPECT_EQ(parse_rational("1e-8"), Rational(1, 100000000));
  EXPECT_EQ(parse_rational("-7/2"), Rational(-7, 2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(to_decimal_floor(Rational(-1, 3), 3), "-0.334");
  EXPECT_EQ(to_decimal_floor(Rational(269943, 10000), 4), "26.9943");
  EXPECT_EQ(to_decimal_floor(Rational(0), 2), "0.00");
}

}  // namespace
}  // namespace salem
