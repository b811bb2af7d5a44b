#pragma once

// The displayed identities as exact symbolic checks. Each check takes a
// perturbation `delta` (0 for the real identity); any nonzero delta alters
// one coefficient, so the check must then fail.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "quintic/parallel.hpp"
#include "quintic/quadform.hpp"
#include "quintic/surfaces.hpp"

namespace quintic {

struct IdentityOutcome {
  bool pass = false;
  std::string detail;
};

struct IdentityCheck {
  std::string name;
  std::string description;
  std::function<IdentityOutcome(int delta, std::uint64_t seed)> run;
};

struct IdentityResult {
  std::string name;
  std::string description;
  bool pass = false;
  std::string detail;
};

namespace ident {

using Sub = std::map<std::string, RatFunQ>;

inline IdentityOutcome outcome(bool ok, std::string what) {
  return {ok, ok ? what : "FAILED: " + what};
}

inline PolyQ var(const char* n) { return PolyQ::variable(n); }
inline RatFunQ rvar(const char* n) { return RatFunQ::variable(n); }

inline PolyQ G_poly(int delta) {
  PolyQ x = var("x"), y = var("y"), z = var("z"), a = var("a"), b = var("b");
  return PolyQ(2) * b + PolyQ(3) * a * y + PolyQ(5) * x * x * y - PolyQ(5) * x * y * y +
         PolyQ(5 + delta) * y.pow(3) - PolyQ(5) * y * y * z + PolyQ(5) * y * z * z;
}

inline RatFunQ curve_E(const RatFunQ& a, const RatFunQ& b, const RatFunQ& X, const RatFunQ& t, const RatFunQ& Y,
                       int delta = 0) {
  return Y * Y - (X * X * X - RatFunQ(75) * a * a * X -
                  RatFunQ(125) * (RatFunQ(5 + delta) * b * b * t * t + RatFunQ(10) * b * b + RatFunQ(2) * a * a * a));
}

inline IdentityOutcome r1_factorization(int delta, std::uint64_t) {
  PolyQ x = var("x"), y = var("y"), z = var("z");
  PolyQ sub = residual_symbolic().substitute({{"p", x}, {"q", y - x}, {"r", z}, {"s", y - z}});
  return outcome((sub - (x - z) * (x - y + z) * G_poly(delta)).is_zero(),
                 "R(x, y-x, z, y-z) = (x-z)(x-y+z) G(x,y,z)");
}

inline IdentityOutcome thm1_discriminant(int delta, std::uint64_t) {
  PolyQ disc = discriminant_quadratic(G_poly(0), "z");
  PolyQ y = var("y");
  PolyQ D = delta_xy(var("a"), var("b"), var("x"), y) + PolyQ(delta) * y.pow(4);
  return outcome(disc == D, "disc_z G = -5y(15y^3 + 20xy(x-y) + 12ay + 8b)");
}

inline IdentityOutcome thm1_map_inverse(int delta, std::uint64_t) {
  auto a = rvar("a"), b = rvar("b"), X = rvar("X"), t = rvar("t"), Y = rvar("Y");
  auto x = rvar("x"), y = rvar("y"), w = rvar("w");
  auto s = surface_from_curve(a, b, X, t, Y);
  auto back = curve_from_surface(a, b, s.x, s.y, s.w);
  bool ok = back.X + RatFunQ(delta) == X && back.t == t && back.Y == Y;
  auto c = curve_from_surface(a, b, x, y, w);
  auto fwd = surface_from_curve(a, b, c.X, c.t, c.Y);
  ok = ok && fwd.x == x && fwd.y == y && fwd.w == w;
  return outcome(ok, "(X,t,Y) -> (x,y,w) -> (X,t,Y) and back are identities");
}

inline IdentityOutcome thm1_transport(int delta, std::uint64_t) {
  auto a = rvar("a"), b = rvar("b"), X = rvar("X"), t = rvar("t"), Y = rvar("Y");
  auto x = rvar("x"), y = rvar("y"), w = rvar("w");
  auto s = surface_from_curve(a, b, X, t, Y);
  RatFunQ d = X + RatFunQ(5) * a;
  bool ok = s.w * s.w - delta_xy(a, b, s.x, s.y) ==
            RatFunQ(400) * b * b / d.pow(4) * curve_E(a, b, X, t, Y, delta);
  auto c = curve_from_surface(a, b, x, y, w);
  ok = ok && curve_E(a, b, c.X, c.t, c.Y) == RatFunQ(25) * b * b / y.pow(4) * (w * w - delta_xy(a, b, x, y));
  return outcome(ok, "w^2 - Delta pulls back to 400b^2/(X+5a)^4 (Y^2 - X^3 + 75a^2X + 125(5b^2t^2 + 10b^2 + 2a^3))");
}

inline IdentityOutcome thm1_ansatz(int delta, std::uint64_t) {
  auto a = rvar("a"), b = rvar("b"), u = rvar("u"), v = rvar("v"), T = rvar("T");
  auto p = rvar("p"), q = rvar("q"), r = rvar("r"), s = rvar("s");
  auto coeffs = [&](const RatFunQ& p, const RatFunQ& q, const RatFunQ& r, const RatFunQ& s) {
    std::array<RatFunQ, 6> c;
    RatFunQ u2 = u * u, u3 = u2 * u;
    c[0] = RatFunQ(250) * a.pow(3) + RatFunQ(1250) * b * b + RatFunQ(75) * a * a * p - p.pow(3) +
           RatFunQ(625) * b * b * s * s;
    c[1] = RatFunQ(30) * (RatFunQ(5) * a - p) * (RatFunQ(5) * a + p) * u;
    c[2] = RatFunQ(75) * a * a - RatFunQ(3) * p * p + r * r - RatFunQ(300) * p * u2 + RatFunQ(250) * b * s * v;
    c[3] = RatFunQ(2) * (q * r - RatFunQ(30) * p * u - RatFunQ(500) * u3);
    c[4] = -RatFunQ(3) * p + q * q + RatFunQ(2) * r - RatFunQ(300) * u2 + RatFunQ(25) * v * v;
    c[5] = RatFunQ(2) * (q - RatFunQ(15) * u);
    return c;
  };
  // F(X, Y, t) under the ansatz equals the displayed a0 + ... + a5 T^5
  RatFunQ X = T * T + RatFunQ(10) * u * T + p, Y = T.pow(3) + q * T * T + r * T;
  RatFunQ t = v / (RatFunQ(5) * b) * T * T + s;
  auto c = coeffs(p, q, r, s);
  RatFunQ series;
  for (int k = 5; k >= 0; --k) series = series * T + c[static_cast<std::size_t>(k)];
  bool display = curve_E(a, b, X, t, Y) == series;
  auto A = ansatz_generic(a, b, u, v);
  auto cr = coeffs(A.A_p, A.A_q, A.A_r + RatFunQ(delta), A.A_s);
  bool annihilated = cr[2].is_zero() && cr[3].is_zero() && cr[4].is_zero() && cr[5].is_zero();
  bool root = (cr[0] + cr[1] * A.T).is_zero();
  std::string what = "F = a0 + ... + a5 T^5; (R3) kills a2..a5; a0 + a1 T = 0";
  if (!display) what += " [display]";
  if (!annihilated) what += " [a2..a5]";
  if (!root) what += " [root]";
  return outcome(display && annihilated && root, what);
}

inline IdentityOutcome thm2_factorization(int delta, std::uint64_t) {
  PolyQ x = var("x"), y = var("y"), z = var("z"), a = var("a");
  auto P = r4_point(RatFunQ(x), RatFunQ(y), RatFunQ(z));
  PolyQ R = residual_symbolic().substitute({{"b", PolyQ()}});
  auto sub = substitute(R, Sub{{"p", P.p}, {"q", P.q}, {"r", P.r}, {"s", P.s}});
  PolyQ rhs = PolyQ(6) * (x - y) * (x + PolyQ(2) * y - PolyQ(3) * z) * (x + PolyQ(2) * y + PolyQ(3) * z) *
              (x * x + PolyQ(2) * y * y + PolyQ(3) * z * z + PolyQ(5 + delta) * a);
  return outcome(sub == RatFunQ(rhs, PolyQ(625)),
                 "R(R4) = 6(x-y)(x+2y-3z)(x+2y+3z)(x^2+2y^2+3z^2+5a)/625 at b = 0");
}

inline IdentityOutcome example1_parametrization(int delta, std::uint64_t) {
  auto par = thm2_parametrize(Integer(-1));
  PolyQ u = var("u"), v = var("v");
  PolyQ den = PolyQ(5) * (u * u + PolyQ(2) * v * v + PolyQ(3));
  RatFunQ p(PolyQ(2) * (PolyQ(2) * u * u + (PolyQ(2) * v + PolyQ(3)) * u + PolyQ(2) * v * v - PolyQ(9) * v -
                        PolyQ(3 + delta)),
            den);
  RatFunQ q(u * u - PolyQ(4) * (PolyQ(2) * v + PolyQ(3)) * u - PolyQ(2) * v * v - PolyQ(6) * v + PolyQ(3), den);
  RatFunQ r(PolyQ(3) * (u * u - PolyQ(2) * v * v - PolyQ(6) * v + PolyQ(3)), den);
  RatFunQ s(PolyQ(2) * (u * u - (PolyQ(2) * v + PolyQ(3)) * u + PolyQ(4) * v * v - PolyQ(3) * (v + PolyQ(2))),
            den);
  bool ok = par.point.p == p && par.point.q == q && par.point.r == r && par.point.s == s &&
            par.residual.is_identically_zero();
  return outcome(ok, "a = -1: the four displayed functions of (u, v), residual 0");
}

inline IdentityOutcome question3_identity(int delta, std::uint64_t) {
  PolyQ k = var("k");
  PolyQ d = k * k + PolyQ(2);
  PolyQ X = PolyQ(2) * k + PolyQ(3), Y = k * k + PolyQ(3) * k - PolyQ(2),
        Z = k * k - PolyQ(2) * k - PolyQ(1 + delta);
  return outcome(X * X + PolyQ(2) * Y * Y + PolyQ(3) * Z * Z == PolyQ(5) * d * d,
                 "(2k+3)^2 + 2(k^2+3k-2)^2 + 3(k^2-2k-1)^2 = 5(k^2+2)^2");
}

inline IdentityOutcome gaussian_conic_identity(int delta, std::uint64_t) {
  auto a = RatFunQi::variable("a"), b = RatFunQi::variable("b"), y = RatFunQi::variable("y"),
       u = RatFunQi::variable("u");
  auto cw = gaussian_conic(a, b, y, u);
  RatFunQi w = cw.w + RatFunQi(delta);
  bool ok = w * w == delta_xy(a, b, cw.x, y) && r1_point(cw.x, y, w) == gaussian_formulas(a, b, y, u);
  return outcome(ok, "x = iP, w = 10yP + u lies on w^2 = Delta(x, y) and gives the displayed p, q, r, s");
}

inline IdentityOutcome gaussian_residual(int delta, std::uint64_t seed) {
  auto a = RatFunQi::variable("a"), b = RatFunQi::variable("b"), y = RatFunQi::variable("y"),
       u = RatFunQi::variable("u");
  auto P = gaussian_formulas(a, b, y, u);
  P.p = P.p * RatFunQi(1 + delta);
  PolyQi R = lift(residual_symbolic());
  auto res = substitute(R, std::map<std::string, RatFunQi>{{"p", P.p}, {"q", P.q}, {"r", P.r}, {"s", P.s}});
  bool ok = res.is_identically_zero();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> co(-9, 9), pos(1, 9);
  for (int n = 0; n < 8 && ok; ++n) {
    QuinticCoeffs f{co(rng), co(rng), co(rng)};
    Rational yy(pos(rng), pos(rng));
    GaussianRational uu(Rational(co(rng)), Rational(co(rng)));
    if (uu == GaussianRational(5) * GaussianRational::i() * GaussianRational(yy * yy)) continue;
    auto cert = gaussian_point(f, yy, uu);
    ok = residual(f, cert.point).is_zero();
  }
  return outcome(ok, "f(p)+f(q)-f(r)-f(s) = 0 for the four Q(i) formulas in (a, b, y, u)");
}

inline IdentityOutcome fifth_power_identity(int delta, std::uint64_t) {
  auto u = PolyQi::variable("u"), v = PolyQi::variable("v");
  auto P = fifth_power_generic(u, v);
  P.p = P.p + PolyQi(delta) * v * v;
  return outcome((P.p.pow(5) + P.q.pow(5) - P.r.pow(5) - P.s.pow(5)).is_zero(),
                 "p^5 + q^5 = r^5 + s^5 for the homogeneous quadratic forms in (u, v)");
}

inline IdentityOutcome norm_lift_identity(int delta, std::uint64_t) {
  PolyQ t1 = var("t1"), t2 = var("t2");
  bool ok = true;
  for (unsigned n = 1; n <= 4; ++n) {
    auto L = norm_lift_generic(n, t1, t2);
    PolyQ uu = L.u + PolyQ(delta);
    ok = ok && uu * uu + PolyQ(75) * L.v * L.v == (t1 * t1 + PolyQ(75) * t2 * t2).pow(n);
  }
  return outcome(ok, "u^2 + 75v^2 = (t1^2 + 75t2^2)^n for n = 1..4");
}

inline IdentityOutcome mixed_H_identity(int delta, std::uint64_t) {
  auto k = mixed_coefficients();
  auto U = rvar("U"), V = rvar("V"), t = rvar("t");
  RatFunQ defect = mixed_identity_defect(k) + RatFunQ(delta) * (t * V - U - RatFunQ(1)) * t * U;
  return outcome(defect.is_identically_zero(),
                 "V^4 (F(p)+G(q)-F(r)-G(s)) = -(tV-U-1) H(U,V,t) with a..f symbolic");
}

inline IdentityOutcome mixed_special_case(int delta, std::uint64_t) {
  PolyQ c = var("c"), f = var("f");
  PolyQ H = mixed_H(std::array<PolyQ, 6>{PolyQ(), PolyQ(), c, PolyQ(), PolyQ(), f});
  return outcome(H == special_cubic(c - f + PolyQ(delta)), "H at a=b=d=e=0 is the displayed cubic in D = c - f");
}

inline IdentityOutcome mixed_maps(int delta, std::uint64_t seed) {
  PolyQ D = var("D");
  auto m = special_map_pair(D);
  m.forward[0] = m.forward[0] + RatFunQ(delta);
  PolyQ curve = special_curve_poly(D);
  PolyQ Y = var("Y");
  PolyQ square = Y * Y - curve;
  Sub fw{{"U", m.forward[0]}, {"V", m.forward[1]}};
  bool ok = true;
  for (int k = 0; k < 2; ++k) {
    RatFunQ diff = substitute(m.inverse[static_cast<std::size_t>(k)].num(), fw) /
                       substitute(m.inverse[static_cast<std::size_t>(k)].den(), fw) -
                   RatFunQ::variable(k == 0 ? "X" : "Y");
    ok = ok && diff.num().reduce_square("Y", square).is_zero();
  }
  ok = ok && substitute(special_cubic(D), fw).num().reduce_square("Y", square).is_zero();
  // the inverse lands on E_t modulo S_{F,G}
  RatFunQ onE = substitute(curve, Sub{{"X", m.inverse[0]}, {"Y", m.inverse[1]}});
  ok = ok && onE.num().divide_exact(special_cubic(D)).has_value();
  // exact round trips at table rows
  std::mt19937_64 rng(seed);
  const auto rows = shipped_table();
  for (int n = 0; n < 3 && ok; ++n) {
    const auto& row = rows[rng() % rows.size()];
    auto chk = check_special_maps(row.D, Integer(0), row.t, curve_sample(specialization_curve(row.D, Integer(0), row.t), row.P, 4));
    ok = chk.pass();
  }
  return outcome(ok, "E_t <-> S_{F,G} (F = x^5+cx, G = x^5+fx) are inverse maps, each onto the other surface");
}

inline IdentityOutcome symmetric_G_identity(int delta, std::uint64_t) {
  auto U = rvar("U"), V = rvar("V"), t = rvar("t");
  RatFunQ defect = symmetric_identity_defect(symbolic_symmetric_coeffs()) +
                   RatFunQ(delta) * (U - RatFunQ(1)) * (t * V - U - RatFunQ(1)) * V;
  return outcome(defect.is_identically_zero(),
                 "V^4 (f(p,q) - f(r,s)) = -(U-1)(tV-U-1) G(U,V,t) with a1..a5, b1..b3, c0, c1 symbolic");
}

inline IdentityOutcome symmetric_examples(int delta, std::uint64_t) {
  using GR = GaussianRational;
  auto t = PolyQi::variable("t"), u = PolyQi::variable("u");
  PolyQi one(1), i(GR::i()), opi(GR(Rational(1), Rational(1))), omi(GR(Rational(1), Rational(-1)));
  PolyQi den = PolyQi(2) * (t - opi * u);
  auto fam = symmetric_gaussian_family(consani_scholten());
  bool cs = fam.p == RatFunQi(opi * (u * u - PolyQi(GR(Rational(2), Rational(-1))) * t * u - i * t * t + t - one), den) &&
            fam.q == RatFunQi(opi * (-u * u - i * t * u + t * t - t + one), den) &&
            fam.r == RatFunQi(opi * (i * u * u - PolyQi(GR(Rational(2), Rational(1))) * t * u + t * t - i * t + i), den) &&
            fam.s == RatFunQi(omi * (u * u - t * u + t * t - t + PolyQi(1 + delta)), den);
  PolyQ w = var("w");
  PolyQ d = PolyQ(8) * (PolyQ(32) * w * w - PolyQ(24) * w + PolyQ(5));
  auto rf = symmetric_rational_family(c1_29_example(), 1, 3, 8);
  bool c1 = rf.p == RatFunQ(PolyQ(96) * w * w - PolyQ(48) * w + PolyQ(7), d) &&
            rf.q == RatFunQ(PolyQ(160) * w * w - PolyQ(144) * w + PolyQ(33), d) &&
            rf.r == RatFunQ(PolyQ(224) * w * w - PolyQ(160) * w + PolyQ(29), d) &&
            rf.s == RatFunQ(PolyQ(32) * w * w - PolyQ(32) * w + PolyQ(11), d);
  auto co = lift_coeffs<RatFunQ>(c1_29_example());
  c1 = c1 && (symmetric_eval(co, rf.p, rf.q) - symmetric_eval(co, rf.r, rf.s)).is_identically_zero();
  std::string what = "Consani-Scholten Q(i) family in (t, u); c1 = 29 family in w";
  if (!cs) what += " [Consani-Scholten]";
  if (!c1) what += " [c1 = 29]";
  return outcome(cs && c1, what);
}

}  // namespace ident

/// The four Theorem 1 surface checks; `perturb_r` adds to the (R3) value of r.
struct Thm1IdentityReport {
  bool discriminant = false;
  bool maps_inverse = false;
  bool transport = false;
  bool ansatz = false;
  bool all() const { return discriminant && maps_inverse && transport && ansatz; }
};

inline Thm1IdentityReport thm1_surface_identities(int perturb_r = 0) {
  return {ident::thm1_discriminant(0, 0).pass, ident::thm1_map_inverse(0, 0).pass, ident::thm1_transport(0, 0).pass,
          ident::thm1_ansatz(perturb_r, 0).pass};
}

inline const std::vector<IdentityCheck>& identity_checks() {
  static const std::vector<IdentityCheck> checks{
      {"r1-factorization", "(R1) factorization of the residual with G", ident::r1_factorization},
      {"thm1-discriminant", "discriminant of G in z equals Delta(x, y)", ident::thm1_discriminant},
      {"thm1-map-inverse", "(x,y,w) <-> (X,t,Y) maps are mutually inverse", ident::thm1_map_inverse},
      {"thm1-transport", "the maps carry w^2 = Delta onto the Weierstrass surface", ident::thm1_transport},
      {"thm1-ansatz", "ansatz coefficients, (R3) annihilation and the T root", ident::thm1_ansatz},
      {"thm2-factorization", "(R4) factorization at b = 0", ident::thm2_factorization},
      {"example1-parametrization", "Example 1 parametrization for a = -1", ident::example1_parametrization},
      {"question3-identity", "the k-family on x^2 + 2y^2 + 3z^2 = 5(k^2+2)^2", ident::question3_identity},
      {"gaussian-conic", "Q(i) conic route through [i:10y:0]", ident::gaussian_conic_identity},
      {"gaussian-residual", "Q(i) p, q, r, s residual", ident::gaussian_residual},
      {"fifth-power", "homogeneous p^5 + q^5 = r^5 + s^5", ident::fifth_power_identity},
      {"norm-lift", "norm lift u + sqrt(-75) v for n <= 4", ident::norm_lift_identity},
      {"mixed-H", "H identity in the nine symbolic coefficients", ident::mixed_H_identity},
      {"mixed-special-case", "H for F = x^5 + cx, G = x^5 + fx", ident::mixed_special_case},
      {"mixed-maps", "birational maps between E_t and S_{F,G}", ident::mixed_maps},
      {"symmetric-G", "G identity for symmetric f(x, y)", ident::symmetric_G_identity},
      {"symmetric-examples", "Consani-Scholten and c1 = 29 parametrizations", ident::symmetric_examples},
  };
  return checks;
}

struct IdentityOptions {
  std::string only;    // name prefix filter
  std::string mutate;  // name of the check to perturb
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

inline std::vector<IdentityResult> run_identities(const IdentityOptions& opt) {
  std::vector<const IdentityCheck*> sel;
  for (auto& c : identity_checks())
    if (c.name.rfind(opt.only, 0) == 0) sel.push_back(&c);
  if (!opt.mutate.empty()) {
    bool known = false;
    for (auto* c : sel) known = known || c->name == opt.mutate;
    if (!known) throw Error(Errc::InvalidInput, "unknown or filtered-out identity '" + opt.mutate + "'");
  }
  return parallel_map<IdentityResult>(sel.size(), opt.jobs, [&](std::size_t k) {
    const auto& c = *sel[k];
    int delta = c.name == opt.mutate ? 1 : 0;
    IdentityResult r{c.name, c.description, false, ""};
    try {
      auto o = c.run(delta, opt.seed);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("FAILED: ") + e.what();
    }
    return r;
  });
}

}  // namespace quintic
