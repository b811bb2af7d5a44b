#include <gtest/gtest.h>

#include <random>

#include "quintic/quadform.hpp"

using namespace quintic;

namespace {

Coeffs4 C(long a, long b, long c, long d) { return {Integer(a), Integer(b), Integer(c), Integer(d)}; }

void expect_scaling_relation(const Normalization& n) {
  // sum g_i (k_i X_i)^2 == multiplier * sum a_i X_i^2 for a few X
  std::array<std::array<Integer, 4>, 3> xs{{{1, 0, 0, 0}, {1, 2, 3, 4}, {-5, 7, 1, 2}}};
  for (auto& x : xs) {
    std::array<Integer, 4> y;
    for (int i = 0; i < 4; ++i) y[i] = n.scale[i] * x[i];
    EXPECT_EQ(Rational(n.form.eval(y)), n.multiplier * Rational(n.raw.eval(x)));
  }
}

}  // namespace

TEST(Normalize, Examples) {
  auto n = normalize(C(1, 2, 3, -5));
  EXPECT_EQ(n.form.a, C(1, 2, 3, -5));
  EXPECT_TRUE(n.trace.empty());
  n = normalize(C(4, 2, 3, -5));
  EXPECT_EQ(n.form.a, C(1, 2, 3, -5));
  EXPECT_EQ(n.scale[0], 2);
  expect_scaling_relation(n);
  auto fam = question3_family(3);
  Integer g5 = 5 * fam.g;
  n = normalize({Integer(1), Integer(2), Integer(3), Integer(-5 * g5 * g5)});
  EXPECT_EQ(n.form.a, C(1, 2, 3, -5));
  EXPECT_EQ(n.scale[3], g5);
  expect_scaling_relation(n);
  try {
    normalize(C(1, 0, 3, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroCoefficient);
  }
}

TEST(Normalize, CommonFactors) {
  auto n = normalize(C(3, 6, 15, 7));
  EXPECT_TRUE(n.form.is_normalized());
  EXPECT_EQ(n.form.a, C(1, 2, 5, 21));
  expect_scaling_relation(n);
  n = normalize(C(6, 12, 18, 30));
  EXPECT_TRUE(n.form.is_normalized());
  expect_scaling_relation(n);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> dist(-200, 200);
  for (int k = 0; k < 200; ++k) {
    Coeffs4 raw;
    for (auto& c : raw) {
      long v = 0;
      while (v == 0) v = dist(rng);
      c = v;
    }
    auto m = normalize(raw);
    EXPECT_TRUE(m.form.is_normalized());
    expect_scaling_relation(m);
  }
}

TEST(Jones, Examples) {
  EXPECT_TRUE(represents_zero(DiagonalForm{C(1, 2, 3, -5)}));
  auto r = represents_zero_report(DiagonalForm{C(1, 2, 3, 10)});
  EXPECT_FALSE(r.solvable);
  EXPECT_FALSE(r.signs);
  EXPECT_FALSE(represents_zero(DiagonalForm{C(1, 2, 3, -10)}));
  EXPECT_THROW(represents_zero(DiagonalForm{C(4, 2, 3, -5)}), Error);
}

TEST(LocalOracle, Examples) {
  EXPECT_TRUE(local_oracle(DiagonalForm{C(1, 2, 3, -5)}));
  EXPECT_FALSE(local_oracle(DiagonalForm{C(1, 1, 1, -7)}));
  EXPECT_FALSE(local_oracle(DiagonalForm{C(1, 1, 1, 1)}));
  EXPECT_FALSE(local_oracle(DiagonalForm{C(1, 2, 3, -10)}));
  EXPECT_TRUE(local_oracle(DiagonalForm{C(1, 1, 1, -1)}));
  // x^2 + y^2 - 3z^2 - 3w^2: anisotropic at 3
  EXPECT_FALSE(local_oracle(DiagonalForm{C(1, 1, -3, -3)}));
  EXPECT_FALSE(represents_zero(DiagonalForm{C(1, 1, -3, -3)}));
}

TEST(LocalOracle, SumOfThreeSquaresMod8) {
  // x^2 + y^2 + z^2 = n w^2 fails exactly when n = 7 mod 8 for odd squarefree n
  for (long n = 1; n < 60; n += 2) {
    if (squarefree_decompose(n).square_root_cofactor != 1) continue;
    EXPECT_EQ(local_oracle(DiagonalForm{C(1, 1, 1, -n)}), n % 8 != 7) << n;
  }
}

TEST(FindZero, Examples) {
  auto w = find_zero(DiagonalForm{C(1, 2, 3, -5)}, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::array<Integer, 4>{0, 1, 1, 1}));
  EXPECT_FALSE(find_zero(DiagonalForm{C(1, 1, 1, 1)}, 20).has_value());
  EXPECT_FALSE(find_zero(DiagonalForm{C(1, 2, 3, -10)}, 100).has_value());
}

TEST(FindZero, WitnessSoundness) {
  for (long a4 = -40; a4 <= -1; ++a4) {
    for (long a1 : {1L, 2L, 5L}) {
      DiagonalForm raw{C(a1, 2, 3, a4)};
      auto w = find_zero(raw, 12);
      if (!w) continue;
      EXPECT_EQ(raw.eval(*w), 0);
      EXPECT_TRUE(represents_zero(normalize(raw.a).form)) << a1 << " " << a4;
    }
  }
}

TEST(Ternary, Solvable) {
  EXPECT_TRUE(ternary_solvable(Integer(-1)));
  EXPECT_FALSE(ternary_solvable(Integer(1)));
  EXPECT_FALSE(ternary_solvable(Integer(-2)));
  EXPECT_FALSE(ternary_local_oracle(Integer(-2)));
  EXPECT_FALSE(ternary_solvable(Integer(0)));
}

TEST(Ternary, ScalingInvariance) {
  for (long a = -60; a <= -1; ++a) {
    bool base = represents_zero(normalize(C(1, 2, 3, 5 * a)).form);
    for (long s : {4L, 9L, 25L}) {
      EXPECT_EQ(represents_zero(normalize(C(s, 2, 3, 5 * a)).form), base);
      EXPECT_EQ(represents_zero(normalize(C(1, 2 * s, 3, 5 * a)).form), base);
      EXPECT_EQ(represents_zero(normalize(C(1, 2, 3, 5 * a * s)).form), base);
    }
  }
}

TEST(Conic, Example1Parametrization) {
  auto c = parametrize_conic(Integer(-1), TernarySolution{0, 1, 1});
  PolyQ u = PolyQ::variable("u"), v = PolyQ::variable("v");
  PolyQ den = u * u + PolyQ(2) * v * v + PolyQ(3);
  EXPECT_EQ(c.x, RatFunQ(PolyQ(-2) * u * (PolyQ(2) * v + PolyQ(3)), den));
  EXPECT_EQ(c.y, RatFunQ(u * u - PolyQ(2) * v * v - PolyQ(6) * v + PolyQ(3), den));
  EXPECT_EQ(c.z, RatFunQ(u * u + PolyQ(2) * v * v - PolyQ(4) * v - PolyQ(3), den));
  EXPECT_TRUE(is_identically_zero(conic_residual(c)));
  std::map<std::string, Rational> at{{"u", 0}, {"v", 0}};
  EXPECT_EQ(c.x.eval(at), Rational(0));
  EXPECT_EQ(c.y.eval(at), Rational(1));
  EXPECT_EQ(c.z.eval(at), Rational(-1));
  try {
    parametrize_conic(Integer(-1), TernarySolution{1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BaseNotOnConic);
  }
}

TEST(Conic, ParametrizationIdentityManyA) {
  int built = 0;
  for (long a = -1; a >= -60; --a) {
    if (!ternary_solvable(Integer(a))) continue;
    auto base = ternary_base_point(Integer(a), 60);
    ASSERT_TRUE(base.has_value()) << a;
    EXPECT_EQ(ternary_value(*base), Rational(-5 * a));
    EXPECT_TRUE(is_identically_zero(conic_residual(parametrize_conic(Integer(a), *base))));
    ++built;
  }
  EXPECT_GT(built, 20);
}

TEST(Question3, Family) {
  auto f1 = question3_family(1);
  EXPECT_EQ(f1.g, 3);
  EXPECT_EQ(f1.a, -225);
  EXPECT_EQ(f1.solutions[0], (std::array<Integer, 3>{25, 10, -10}));
  for (unsigned N = 1; N <= 8; ++N) {
    auto f = question3_family(N);
    ASSERT_EQ(f.solutions.size(), N);
    std::set<std::array<Integer, 3>> distinct(f.solutions.begin(), f.solutions.end());
    EXPECT_EQ(distinct.size(), N);
    for (auto& s : f.solutions) {
      EXPECT_EQ(s[0] * s[0] + 2 * s[1] * s[1] + 3 * s[2] * s[2], 125 * f.g * f.g);
      EXPECT_EQ(s[0] * s[0] + 2 * s[1] * s[1] + 3 * s[2] * s[2], -5 * f.a);
      for (auto& c : s) EXPECT_TRUE(mpz_divisible_ui_p(c.get_mpz_t(), 5));
    }
  }
}

TEST(Question3, PolynomialIdentityInK) {
  PolyQ k = PolyQ::variable("k");
  PolyQ d = k * k + PolyQ(2);
  PolyQ X = PolyQ(2) * k + PolyQ(3), Y = k * k + PolyQ(3) * k - PolyQ(2), Z = k * k - PolyQ(2) * k - PolyQ(1);
  EXPECT_EQ(X * X + PolyQ(2) * Y * Y + PolyQ(3) * Z * Z, PolyQ(5) * d * d);
}

TEST(Sweep, AgreementSmall) {
  auto s = agreement_sweep(12, 1);
  EXPECT_GT(s.forms, 500u);
  EXPECT_TRUE(s.disagreements.empty());
  auto s2 = agreement_sweep(12, 3);
  EXPECT_EQ(s.forms, s2.forms);
  EXPECT_EQ(s.solvable, s2.solvable);
}

TEST(Sweep, Theorem2Congruence) {
  auto s = theorem2_congruence_sweep(1, 200);
  EXPECT_TRUE(s.disagreements.empty());
  // N = 2 * 4^k * u with u = 1 mod 8 is the insolvable set (x^2+2y^2+3z^2 = 5N)
  for (long N = 1; N <= 200; ++N) {
    long m = N;
    bool bad = false;
    if (m % 2 == 0) {
      m /= 2;
      while (m % 4 == 0) m /= 4;
      bad = m % 8 == 1;
    }
    bool listed = std::find(s.insolvable.begin(), s.insolvable.end(), N) != s.insolvable.end();
    EXPECT_EQ(listed, bad) << N;
  }
}
