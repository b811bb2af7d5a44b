#include <gtest/gtest.h>

#include <random>
#include <set>

#include "quintic/surfaces.hpp"

using namespace quintic;

namespace {

using GR = GaussianRational;

GR gi(long re, long im) { return GR(Rational(re), Rational(im)); }

Rational rand_rational(std::mt19937_64& rng, int num, int den) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return Rational(n(rng), d(rng));
}

template <class E>
void expect_code(Errc code, E&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Theorem1, Example) {
  QuinticCoeffs f{0, 1, 0};
  auto res = thm1_point(f, 1, 1);
  EXPECT_TRUE(res.certificate.residual.is_zero());
  EXPECT_TRUE(residual(f, res.certificate.point).is_zero());
  EXPECT_EQ(res.certificate.triviality.nontrivial, classify(f, res.certificate.point).nontrivial);
  expect_code(Errc::DegenerateParameters, [&] { thm1_point(f, 0, 1); });
  expect_code(Errc::WrongFamily, [&] { thm1_point(QuinticCoeffs{1, 0, 1}, 1, 1); });
  expect_code(Errc::DegenerateParameters, [&] { thm1_point(f, 1, 0); });
}

TEST(Theorem1, PipelineOracles) {
  // Independent checks of the intermediate values by direct evaluation.
  QuinticCoeffs f{2, -3, 7};
  Rational a(2), b(-3), u(3, 2), v(-1, 3);
  auto res = thm1_point(f, u, v);
  auto& tr = res.trace;
  Rational rhs = tr.X * tr.X * tr.X - Rational(75) * a * a * tr.X -
                 Rational(125) * (Rational(5) * b * b * tr.t * tr.t + Rational(10) * b * b + Rational(2) * a * a * a);
  EXPECT_EQ(tr.Y * tr.Y, rhs);
  Rational delta = -Rational(5) * tr.y *
                   (Rational(15) * tr.y.pow(3) + Rational(20) * tr.x * tr.y * (tr.x - tr.y) + Rational(12) * a * tr.y +
                    Rational(8) * b);
  EXPECT_EQ(tr.w * tr.w, delta);
  auto& P = res.certificate.point;
  Rational x = P.p, y = P.p + P.q, z = P.r;
  EXPECT_EQ(P.r + P.s, y);
  Rational G = Rational(2) * b + Rational(3) * a * y + Rational(5) * x * x * y - Rational(5) * x * y * y +
               Rational(5) * y.pow(3) - Rational(5) * y * y * z + Rational(5) * y * z * z;
  EXPECT_TRUE(G.is_zero());
  auto other = thm1_point(f, u, v, ZBranch::Minus);
  EXPECT_EQ(other.certificate.point.r, P.s);
  EXPECT_EQ(other.certificate.point.s, P.r);
}

TEST(Theorem1, RandomAdmissible) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> co(-20, 20);
  int verified = 0, typed = 0;
  for (int k = 0; k < 100; ++k) {
    QuinticCoeffs f{co(rng), co(rng), co(rng)};
    if (f.b == 0) f.b = 1;
    Rational u = rand_rational(rng, 9, 5), v = rand_rational(rng, 9, 5);
    try {
      auto res = thm1_point(f, u, v);
      EXPECT_TRUE(residual(f, res.certificate.point).is_zero());
      ++verified;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::DegenerateParameters);
      ++typed;
    }
  }
  EXPECT_EQ(verified + typed, 100);
  EXPECT_GT(verified, 80);
}

TEST(Theorem1, DegenerateDenominatorsNamed) {
  // a = 10: 5a - A_p = 0 <=> 25(u^2-3v^2)/3 = 50 <=> u^2 - 3v^2 = 6, e.g. (u, v) = (3, 1)
  QuinticCoeffs f{10, 1, 0};
  try {
    thm1_point(f, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateParameters);
    EXPECT_NE(std::string(e.what()).find("5a - A_p"), std::string::npos);
  }
}

TEST(Theorem2, Example1Display) {
  auto par = thm2_parametrize(Integer(-1));
  PolyQ u = PolyQ::variable("u"), v = PolyQ::variable("v");
  PolyQ den = PolyQ(5) * (u * u + PolyQ(2) * v * v + PolyQ(3));
  RatFunQ p(PolyQ(2) * (PolyQ(2) * u * u + (PolyQ(2) * v + PolyQ(3)) * u + PolyQ(2) * v * v - PolyQ(9) * v - PolyQ(3)), den);
  RatFunQ q(u * u - PolyQ(4) * (PolyQ(2) * v + PolyQ(3)) * u - PolyQ(2) * v * v - PolyQ(6) * v + PolyQ(3), den);
  RatFunQ r(PolyQ(3) * (u * u - PolyQ(2) * v * v - PolyQ(6) * v + PolyQ(3)), den);
  RatFunQ s(PolyQ(2) * (u * u - (PolyQ(2) * v + PolyQ(3)) * u + PolyQ(4) * v * v - PolyQ(3) * (v + PolyQ(2))), den);
  EXPECT_EQ(par.point.p, p);
  EXPECT_EQ(par.point.q, q);
  EXPECT_EQ(par.point.r, r);
  EXPECT_EQ(par.point.s, s);
  EXPECT_TRUE(par.residual.is_identically_zero());
}

TEST(Theorem2, Origin) {
  for (long c : {0L, 1L, -7L}) {
    auto cert = thm2_point(Integer(-1), Integer(c), 0, 0);
    EXPECT_EQ(cert.point, (Point4<Rational>{Rational(-2, 5), Rational(1, 5), Rational(3, 5), Rational(-4, 5)}));
    EXPECT_TRUE(cert.residual.is_zero());
    EXPECT_TRUE(cert.triviality.nontrivial);
  }
  expect_code(Errc::NotSolvable, [] { thm2_parametrize(Integer(-2)); });
}

TEST(Theorem2, R4Factorization) {
  PolyQ x = PolyQ::variable("x"), y = PolyQ::variable("y"), z = PolyQ::variable("z"), a = PolyQ::variable("a");
  auto P = r4_point(RatFunQ(x), RatFunQ(y), RatFunQ(z));
  PolyQ R = residual_symbolic().substitute({{"b", PolyQ()}});
  auto sub = substitute(R, std::map<std::string, RatFunQ>{{"p", P.p}, {"q", P.q}, {"r", P.r}, {"s", P.s}});
  PolyQ rhs = PolyQ(6) * (x - y) * (x + PolyQ(2) * y - PolyQ(3) * z) * (x + PolyQ(2) * y + PolyQ(3) * z) *
              (x * x + PolyQ(2) * y * y + PolyQ(3) * z * z + PolyQ(5) * a);
  EXPECT_EQ(sub, RatFunQ(rhs, PolyQ(625)));
}

TEST(Theorem2, RandomPoints) {
  auto par = thm2_parametrize(Integer(-1));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    Rational u = rand_rational(rng, 20, 7), v = rand_rational(rng, 20, 7);
    auto cert = thm2_point_from(par, Integer(k - 50), u, v);
    EXPECT_TRUE(residual(QuinticCoeffs{-1, 0, Integer(k - 50)}, cert.point).is_zero());
  }
  for (long a = -3; a >= -40; --a) {
    if (!ternary_solvable(Integer(a))) {
      expect_code(Errc::NotSolvable, [&] { thm2_parametrize(Integer(a)); });
      continue;
    }
    auto pa = thm2_parametrize(Integer(a));
    EXPECT_TRUE(pa.residual.is_identically_zero()) << a;
  }
}

TEST(Gaussian, Examples) {
  auto cert = gaussian_point(QuinticCoeffs{}, 1, GR(1));
  EXPECT_TRUE(cert.residual.is_zero());
  auto& P = cert.point;
  EXPECT_TRUE((P.p.pow(5) + P.q.pow(5) - P.r.pow(5) - P.s.pow(5)).is_zero());
  EXPECT_FALSE(cert.notes.empty());
  expect_code(Errc::PoleAtPoint, [] { gaussian_point(QuinticCoeffs{1, 2, 3}, 2, gi(0, 20)); });
  expect_code(Errc::PoleAtPoint, [] { gaussian_point(QuinticCoeffs{1, 2, 3}, 0, gi(1, 0)); });
}

TEST(Gaussian, RandomPointsAndConicRoute) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> co(-9, 9);
  for (int k = 0; k < 100; ++k) {
    QuinticCoeffs f{co(rng), co(rng), co(rng)};
    Rational y = rand_rational(rng, 6, 4);
    if (y.is_zero()) y = 1;
    GR u(rand_rational(rng, 9, 4), rand_rational(rng, 9, 4));
    auto cert = gaussian_point(f, y, u);
    EXPECT_TRUE(residual(f, cert.point).is_zero());
    EXPECT_TRUE(cert.triviality.nontrivial) << k;
    GR a(Rational(f.a)), b(Rational(f.b)), Y(y);
    auto cw = gaussian_conic(a, b, Y, u);
    GR delta = -GR(5) * Y * (GR(15) * Y * Y * Y + GR(20) * cw.x * Y * (cw.x - Y) + GR(12) * a * Y + GR(8) * b);
    EXPECT_EQ(cw.w * cw.w, delta);
    EXPECT_EQ(r1_point(cw.x, Y, cw.w), cert.point);
  }
}

TEST(Gaussian, SymbolicResidual) {
  auto a = RatFunQi::variable("a"), b = RatFunQi::variable("b"), y = RatFunQi::variable("y"),
       u = RatFunQi::variable("u");
  auto P = gaussian_formulas(a, b, y, u);
  PolyQi R = lift(residual_symbolic());
  auto res = substitute(R, std::map<std::string, RatFunQi>{{"p", P.p}, {"q", P.q}, {"r", P.r}, {"s", P.s}});
  EXPECT_TRUE(res.is_identically_zero());
}

TEST(FifthPower, Examples) {
  auto c1 = fifth_power_solution(GR(1), GR(0));
  EXPECT_EQ(c1.point, (Point4<GR>{GR(1), GR(-1), gi(0, 1), gi(0, -1)}));
  auto c2 = fifth_power_solution(GR(0), GR(1));
  EXPECT_EQ(c2.point, (Point4<GR>{GR(75), GR(25), gi(50, -75), gi(50, 75)}));
  auto& P = c2.point;
  GR lhs = P.p.pow(5) + P.q.pow(5);
  EXPECT_EQ(lhs, GR(Rational(Integer(Integer(9765625) * 244))));
  EXPECT_EQ(lhs, P.r.pow(5) + P.s.pow(5));
}

TEST(FifthPower, Symbolic) {
  auto u = PolyQi::variable("u"), v = PolyQi::variable("v");
  auto P = fifth_power_generic(u, v);
  EXPECT_TRUE((P.p.pow(5) + P.q.pow(5) - P.r.pow(5) - P.s.pow(5)).is_zero());
}

TEST(NormLift, ExamplesAndIdentity) {
  auto n1 = norm_lift(1, 3, 2);
  EXPECT_EQ(n1.u, Rational(3));
  EXPECT_EQ(n1.v, Rational(2));
  EXPECT_EQ(n1.X, Rational(309));
  auto n2 = norm_lift(2, 3, 2);
  EXPECT_EQ(n2.u, Rational(9 - 300));
  EXPECT_EQ(n2.v, Rational(12));
  PolyQ t1 = PolyQ::variable("t1"), t2 = PolyQ::variable("t2");
  for (unsigned n = 1; n <= 4; ++n) {
    auto L = norm_lift_generic(n, t1, t2);
    EXPECT_EQ(L.u * L.u + PolyQ(75) * L.v * L.v, (t1 * t1 + PolyQ(75) * t2 * t2).pow(n)) << n;
  }
  auto tw = fifth_power_tower(3, 1, 1);
  auto& P = tw.point;
  EXPECT_EQ(P.p, tw.X.pow(3));
  EXPECT_EQ(tw.X.pow(15) + P.q.pow(5), P.r.pow(5) + P.s.pow(5));
}

TEST(Mixed, HIdentitySymbolic) {
  EXPECT_TRUE(mixed_identity_defect(mixed_coefficients()).is_identically_zero());
  MixedPair m{0, 0, 3, 0, 0, 1};
  EXPECT_EQ(mixed_H(m), special_cubic(PolyQ(2)));
  EXPECT_TRUE((MixedPair{1, 2, 3, 1, 2, 3}).degenerate());
  EXPECT_FALSE(m.degenerate());
}

TEST(Mixed, SpecialMapsAtTableRow) {
  Rational t(2, 45);
  auto P = CurvePoint::affine(1, Rational(403, 405));
  auto uv = special_forward(Rational(1), t, P.x, P.y);
  PolyQ S = special_cubic(PolyQ(1));
  EXPECT_TRUE(S.eval({{"U", uv.U}, {"V", uv.V}, {"t", t}}).is_zero());
  auto back = special_inverse(Rational(1), t, uv.U, uv.V);
  EXPECT_EQ(back.X, P.x);
  EXPECT_EQ(back.Y, P.y);
  EXPECT_THROW(special_inverse(Rational(1), t, Rational(1), Rational(2)), Error);
  auto maps = mixed_special_maps(Integer(1), Integer(0), t, P, 25);
  EXPECT_EQ(maps.check.points, 50u);
  EXPECT_TRUE(maps.check.pass());
  expect_code(Errc::DegenerateSpecialization, [&] { mixed_special_maps(Integer(4), Integer(4), t, P); });
}

TEST(Mixed, SpecialMapsSymbolic) {
  PolyQ D = PolyQ::variable("D");
  auto m = special_map_pair(D);
  PolyQ curve = special_curve_poly(D);
  PolyQ square = PolyQ::variable("Y") * PolyQ::variable("Y") - curve;  // Y^2 -> rhs
  // inverse(forward(X, Y)) = (X, Y) modulo the curve
  std::map<std::string, RatFunQ> fw{{"U", m.forward[0]}, {"V", m.forward[1]}};
  for (int k = 0; k < 2; ++k) {
    RatFunQ diff = substitute(m.inverse[k].num(), fw) / substitute(m.inverse[k].den(), fw) -
                   RatFunQ::variable(k == 0 ? "X" : "Y");
    EXPECT_TRUE(diff.num().reduce_square("Y", square).is_zero()) << k;
  }
  // forward image lies on S modulo the curve
  RatFunQ onS = substitute(special_cubic(D), fw);
  EXPECT_TRUE(onS.num().reduce_square("Y", square).is_zero());
}

TEST(Mixed, PointsFromTable) {
  for (long D : {1L, 7L, 89L}) {
    const auto rows = shipped_table();
    const auto& row = rows[static_cast<std::size_t>(D - 1)];
    std::set<std::pair<Rational, Rational>> seen;
    for (long k = 1; k <= 5; ++k) {
      try {
        auto res = mixed_point(Integer(D), Integer(0), row.t, k, row.P);
        auto& p = res.certificate.point;
        QuinticCoeffs F{0, 0, Integer(D)}, G{0, 0, 0};
        EXPECT_TRUE((F.eval(p.p) + G.eval(p.q) - F.eval(p.r) - G.eval(p.s)).is_zero());
        EXPECT_TRUE(res.certificate.triviality.nontrivial);
        seen.insert({res.U, res.V});
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::MapPole);
      }
    }
    EXPECT_EQ(seen.size(), 5u) << D;
  }
  expect_code(Errc::DegenerateSpecialization, [] {
    mixed_point(Integer(2), Integer(2), Rational(1), 1, CurvePoint::affine(0, 0));
  });
}

TEST(Cubic, SpecialCaseJInvariant) {
  PolyQ S = special_cubic(PolyQ(1)).substitute({{"t", PolyQ(1)}});
  auto model = cubic_to_weierstrass(S, ProjectivePoint{1, 0, 1});
  auto E = specialization_curve(Integer(1), Integer(0), Rational(1));
  EXPECT_EQ(model.curve.j_invariant(), E.j_invariant());
  EXPECT_TRUE(model.image_on_curve);
  EXPECT_TRUE(model.check.failures == 0);
}

TEST(Cubic, RandomMixedPair) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> co(-6, 6);
  int built = 0;
  for (int k = 0; k < 6; ++k) {
    MixedPair m{co(rng), co(rng), co(rng), co(rng), co(rng), co(rng)};
    if (m.degenerate()) continue;
    Rational t0(co(rng), 1 + (k % 3));
    if (t0.is_zero()) t0 = 2;
    PolyQ H = mixed_H(m).substitute({{"t", PolyQ(t0)}});
    try {
      auto model = cubic_to_weierstrass(H, ProjectivePoint{1, 0, 1});
      EXPECT_TRUE(model.image_on_curve);
      EXPECT_EQ(model.check.failures, 0u);
      ++built;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SingularCubic);
    }
  }
  EXPECT_GT(built, 2);
}

TEST(Cubic, FlexAndInfinity) {
  // V^2 - U^3 - U - 1 with the flex at infinity [0:1:0]
  PolyQ U = PolyQ::variable("U"), V = PolyQ::variable("V");
  PolyQ C = V * V - U.pow(3) - U - PolyQ(1);
  auto model = cubic_to_weierstrass(C, ProjectivePoint{0, 1, 0});
  EXPECT_EQ(model.curve.j_invariant(), WeierstrassCurve::short_form(1, 1).j_invariant());
  EXPECT_TRUE(model.image_on_curve);
  EXPECT_EQ(model.check.failures, 0u);
  auto affine = cubic_to_weierstrass(C, ProjectivePoint{0, 1, 1});
  EXPECT_EQ(affine.curve.j_invariant(), WeierstrassCurve::short_form(1, 1).j_invariant());
}

TEST(Cubic, Errors) {
  PolyQ U = PolyQ::variable("U"), V = PolyQ::variable("V");
  PolyQ nodal = V * V - U * U * (U + PolyQ(1));
  expect_code(Errc::SingularCubic, [&] { cubic_to_weierstrass(nodal, ProjectivePoint{-1, 0, 1}); });
  expect_code(Errc::SingularCubic, [&] { cubic_to_weierstrass(nodal, ProjectivePoint{0, 0, 1}); });
  expect_code(Errc::PointNotOnCubic, [&] { cubic_to_weierstrass(nodal, ProjectivePoint{1, 1, 1}); });
}

TEST(Symmetric, GIdentity) {
  EXPECT_TRUE(symmetric_identity_defect(symbolic_symmetric_coeffs()).is_identically_zero());
  PolyQ G = symmetric_G();
  auto Gi = lift(G).substitute({{"U", PolyQi(GR::i())}, {"V", PolyQi()}});
  EXPECT_TRUE(Gi.is_zero());
  SymmetricQuinticCoeffs q4;
  q4.a = {1, 2, 3, 1, 1};
  q4.b = {4, 3, 2};
  q4.c0 = 1;   // 5 - 6 + 1 = 0
  q4.c1 = 4;   // 2 - 6 + 4 = 0
  EXPECT_TRUE(question4_degenerate(q4));
  EXPECT_TRUE(symmetric_G(q4).coefficient("U", 2).is_zero());
  expect_code(Errc::DegenerateConic, [&] { symmetric_gaussian_point(q4, 1, GR(1)); });
  expect_code(Errc::DegenerateConic, [&] { symmetric_gaussian_family(q4); });
}

TEST(Symmetric, ConsaniScholtenDisplay) {
  auto k = consani_scholten();
  auto t = PolyQi::variable("t"), u = PolyQi::variable("u");
  PolyQi one(1), i(GR::i()), opi(gi(1, 1)), omi(gi(1, -1));
  PolyQi den = PolyQi(2) * (t - opi * u);
  auto fam = symmetric_gaussian_family(k);
  EXPECT_EQ(fam.p, RatFunQi(opi * (u * u - PolyQi(gi(2, -1)) * t * u - i * t * t + t - one), den));
  EXPECT_EQ(fam.q, RatFunQi(opi * (-u * u - i * t * u + t * t - t + one), den));
  EXPECT_EQ(fam.r, RatFunQi(opi * (i * u * u - PolyQi(gi(2, 1)) * t * u + t * t - i * t + i), den));
  EXPECT_EQ(fam.s, RatFunQi(omi * (u * u - t * u + t * t - t + one), den));
  auto C = symmetric_conic(lift_coeffs<PolyQ>(k), PolyQ::variable("t"));
  PolyQ tt = PolyQ::variable("t");
  EXPECT_EQ(C.b20, PolyQ(5) * (PolyQ(2) + tt));
  auto cert = symmetric_gaussian_point(k, 1, GR(0));
  EXPECT_TRUE(cert.residual.is_zero());
  std::map<std::string, GR> at{{"t", GR(1)}, {"u", GR(0)}};
  EXPECT_EQ(cert.point.p, fam.p.eval(at));
  EXPECT_EQ(cert.point.s, fam.s.eval(at));
}

TEST(Symmetric, ConsaniScholtenRandom) {
  auto k = consani_scholten();
  std::mt19937_64 rng(23);
  for (int n = 0; n < 100; ++n) {
    Rational t = rand_rational(rng, 9, 4);
    GR u(rand_rational(rng, 9, 4), rand_rational(rng, 9, 4));
    try {
      auto cert = symmetric_gaussian_point(k, t, u);
      auto co = lift_coeffs<GR>(k);
      EXPECT_EQ(symmetric_eval(co, cert.point.p, cert.point.q), symmetric_eval(co, cert.point.r, cert.point.s));
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == Errc::DegenerateConic || e.code() == Errc::PoleAtPoint) << e.what();
    }
  }
}

TEST(Symmetric, C1Example) {
  auto k = c1_29_example();
  auto C = symmetric_conic(lift_coeffs<Rational>(k), Rational(1));
  EXPECT_EQ(C.b20, Rational(32));
  EXPECT_EQ(C.b11, Rational(-32));
  EXPECT_EQ(C.b02, Rational(11));
  EXPECT_EQ(C.b01, Rational(-32));
  EXPECT_EQ(C.b00, Rational(32));
  EXPECT_TRUE(C.eval(Rational(3), Rational(8)).is_zero());
  auto fam = symmetric_rational_family(k, 1, 3, 8);
  PolyQ w = PolyQ::variable("w");
  PolyQ den = PolyQ(8) * (PolyQ(32) * w * w - PolyQ(24) * w + PolyQ(5));
  EXPECT_EQ(fam.p, RatFunQ(PolyQ(96) * w * w - PolyQ(48) * w + PolyQ(7), den));
  EXPECT_EQ(fam.q, RatFunQ(PolyQ(160) * w * w - PolyQ(144) * w + PolyQ(33), den));
  EXPECT_EQ(fam.r, RatFunQ(PolyQ(224) * w * w - PolyQ(160) * w + PolyQ(29), den));
  EXPECT_EQ(fam.s, RatFunQ(PolyQ(32) * w * w - PolyQ(32) * w + PolyQ(11), den));
  auto cert = symmetric_rational_point(k, 1, 3, 8, 0);
  EXPECT_EQ(cert.point, (Point4<Rational>{Rational(7, 40), Rational(33, 40), Rational(29, 40), Rational(11, 40)}));
  EXPECT_TRUE(cert.triviality.nontrivial);
  expect_code(Errc::SeedNotOnConic, [&] { symmetric_rational_point(k, 1, 0, 0, 0); });
  std::mt19937_64 rng(29);
  for (int n = 0; n < 100; ++n) {
    try {
      auto c = symmetric_rational_point(k, 1, 3, 8, rand_rational(rng, 40, 9));
      EXPECT_TRUE(c.residual.is_zero());
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::PoleAtPoint);
    }
  }
}
