#pragma once

// Rational points on V_f for b != 0 through the elliptic surface
// Y^2 = X^3 - 75a^2 X - 125(5b^2 t^2 + 10b^2 + 2a^3).

#include <string>

#include "quintic/certificate.hpp"
#include "quintic/errors.hpp"
#include "quintic/exact.hpp"
#include "quintic/hypersurface.hpp"
#include "quintic/poly.hpp"

namespace quintic {

/// Coefficients of the ansatz X = T^2 + 10uT + A_p, Y = T^3 + A_q T^2 + A_r T,
/// t = (v/5b) T^2 + A_s, and the root T of the remaining linear equation.
template <class S>
struct Ansatz {
  S A_p, A_q, A_r, A_s, T;
};

using AnsatzSolution = Ansatz<Rational>;

/// Works for any field-like scalar so the same formulas serve exact numeric
/// evaluation and the symbolic identity checks.
template <class S>
Ansatz<S> ansatz_generic(const S& a, const S& b, const S& u, const S& v) {
  Ansatz<S> s;
  S u2 = u * u, v2 = v * v;
  s.A_p = S(25) * (u2 - S(3) * v2) / S(3);
  s.A_q = S(15) * u;
  s.A_r = S(50) * (u2 - v2);
  s.A_s = (S(25) * u2 * u2 - S(450) * u2 * v2 - S(75) * v2 * v2 - S(9) * a * a) / (S(30) * b * v);
  S num = S(250) * a * a * a + S(1250) * b * b + S(75) * a * a * s.A_p - s.A_p * s.A_p * s.A_p +
          S(625) * b * b * s.A_s * s.A_s;
  S den = S(30) * (S(5) * a - s.A_p) * (S(5) * a + s.A_p) * u;
  s.T = -num / den;
  return s;
}

/// (X, Y, t) on E from the ansatz.
template <class S>
struct SurfacePoint {
  S X, Y, t;
};

template <class S>
SurfacePoint<S> ansatz_point(const Ansatz<S>& A, const S& b, const S& u, const S& v) {
  const S& T = A.T;
  S T2 = T * T;
  return {T2 + S(10) * u * T + A.A_p, T2 * T + A.A_q * T2 + A.A_r * T, v / (S(5) * b) * T2 + A.A_s};
}

/// (x, y, w) on w^2 = Delta(x, y) from (X, t, Y).
template <class S>
struct DeltaPoint {
  S x, y, w;
};

template <class S>
DeltaPoint<S> surface_from_curve(const S& a, const S& b, const S& X, const S& t, const S& Y) {
  S d = X + S(5) * a;
  return {-S(5) * b * (t + S(1)) / d, -S(10) * b / d, S(20) * b * Y / (d * d)};
}

template <class S>
SurfacePoint<S> curve_from_surface(const S& a, const S& b, const S& x, const S& y, const S& w) {
  return {-S(5) * (S(2) * b + a * y) / y, S(5) * b * w / (y * y), (S(2) * x - y) / y};
}

/// Delta(x, y) = -5y(15y^3 + 20xy(x-y) + 12ay + 8b).
template <class S>
S delta_xy(const S& a, const S& b, const S& x, const S& y) {
  return -S(5) * y * (S(15) * y * y * y + S(20) * x * y * (x - y) + S(12) * a * y + S(8) * b);
}

/// The two roots of G(x, y, z) = 0 in z are (5y^2 +- w) / (10y).
enum class ZBranch { Plus, Minus };

template <class S>
Point4<S> r1_point(const S& x, const S& y, const S& w, ZBranch branch = ZBranch::Plus) {
  S z = (S(5) * y * y + (branch == ZBranch::Plus ? w : -w)) / (S(10) * y);
  return {x, y - x, z, y - z};
}

struct Thm1Trace {
  AnsatzSolution ansatz;
  Rational X, Y, t;
  Rational x, y, w;
};

struct Thm1Result {
  Certificate<Rational> certificate;
  Thm1Trace trace;
};

inline Thm1Result thm1_point(const QuinticCoeffs& f, const Rational& u, const Rational& v,
                             ZBranch branch = ZBranch::Plus) {
  if (f.b == 0) throw Error(Errc::WrongFamily, "Theorem 1 needs b != 0");
  if (u.is_zero()) throw Error(Errc::DegenerateParameters, "u = 0: the T denominator 30(5a-A_p)(5a+A_p)u vanishes");
  if (v.is_zero()) throw Error(Errc::DegenerateParameters, "v = 0: the A_s denominator 30bv vanishes");
  Rational a(f.a), b(f.b);
  Rational Ap = Rational(25) * (u * u - Rational(3) * v * v) / Rational(3);
  if (Rational(5) * a - Ap == Rational(0)) throw Error(Errc::DegenerateParameters, "5a - A_p = 0 in the T denominator");
  if (Rational(5) * a + Ap == Rational(0)) throw Error(Errc::DegenerateParameters, "5a + A_p = 0 in the T denominator");
  Thm1Trace tr;
  tr.ansatz = ansatz_generic(a, b, u, v);
  auto E = ansatz_point(tr.ansatz, b, u, v);
  tr.X = E.X;
  tr.Y = E.Y;
  tr.t = E.t;
  if ((E.X + Rational(5) * a).is_zero()) throw Error(Errc::DegenerateParameters, "X + 5a = 0 in the map to the surface");
  auto S = surface_from_curve(a, b, E.X, E.t, E.Y);
  tr.x = S.x;
  tr.y = S.y;
  tr.w = S.w;
  auto P = r1_point(S.x, S.y, S.w, branch);
  InputList in{{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"c", f.c.get_str()},
               {"u", u.to_string()}, {"v", v.to_string()},
               {"branch", branch == ZBranch::Plus ? "+" : "-"}};
  return {certify_quintic("thm1", std::move(in), f, P), tr};
}

}  // namespace quintic
