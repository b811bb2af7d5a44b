#pragma once

// f(p, q) = f(r, s) for a symmetric quintic
// f(x,y) = sum a_i (x^i + y^i) + xy sum b_i (x^i + y^i) + x^2 y^2 (c0 (x+y) + c1).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quintic/certificate.hpp"
#include "quintic/hypersurface.hpp"
#include "quintic/mixed.hpp"
#include "quintic/poly.hpp"

namespace quintic {

struct SymmetricQuinticCoeffs {
  std::array<Integer, 5> a{};  // a1..a5
  std::array<Integer, 3> b{};  // b1..b3
  Integer c0 = 0, c1 = 0;

  std::string to_string() const {
    std::string out = "a=(";
    for (std::size_t i = 0; i < 5; ++i) out += (i ? "," : "") + a[i].get_str();
    out += ") b=(";
    for (std::size_t i = 0; i < 3; ++i) out += (i ? "," : "") + b[i].get_str();
    return out + ") c0=" + c0.get_str() + " c1=" + c1.get_str();
  }
};

/// a5=1, b2=-5, b1=5, a2=5, a1=-5: x^5+y^5-5xy(x^2+y^2)+5xy(x+y)+5(x^2+y^2)-5(x+y).
inline SymmetricQuinticCoeffs consani_scholten() {
  SymmetricQuinticCoeffs s;
  s.a = {-5, 5, 0, 0, 1};
  s.b = {5, -5, 0};
  return s;
}

/// c1 = 29 and every other coefficient 1.
inline SymmetricQuinticCoeffs c1_29_example() {
  SymmetricQuinticCoeffs s;
  s.a = {1, 1, 1, 1, 1};
  s.b = {1, 1, 1};
  s.c0 = 1;
  s.c1 = 29;
  return s;
}

/// The ten coefficients a1..a5, b1..b3, c0, c1 in one generic scalar type.
template <class S>
struct SymmetricCoeffsT {
  std::array<S, 5> a;
  std::array<S, 3> b;
  S c0, c1;
};

template <class S>
SymmetricCoeffsT<S> lift_coeffs(const SymmetricQuinticCoeffs& k) {
  SymmetricCoeffsT<S> s;
  for (std::size_t i = 0; i < 5; ++i) s.a[i] = S(Rational(k.a[i]));
  for (std::size_t i = 0; i < 3; ++i) s.b[i] = S(Rational(k.b[i]));
  s.c0 = S(Rational(k.c0));
  s.c1 = S(Rational(k.c1));
  return s;
}

inline SymmetricCoeffsT<PolyQ> symbolic_symmetric_coeffs() {
  SymmetricCoeffsT<PolyQ> s;
  for (std::size_t i = 0; i < 5; ++i) s.a[i] = PolyQ::variable("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < 3; ++i) s.b[i] = PolyQ::variable("b" + std::to_string(i + 1));
  s.c0 = PolyQ::variable("c0");
  s.c1 = PolyQ::variable("c1");
  return s;
}

template <class S>
S symmetric_eval(const SymmetricCoeffsT<S>& k, const S& x, const S& y) {
  S total(0), xi = x, yi = y;
  std::array<S, 5> sums;
  for (std::size_t i = 0; i < 5; ++i) {
    sums[i] = xi + yi;
    xi = xi * x;
    yi = yi * y;
  }
  for (std::size_t i = 0; i < 5; ++i) total = total + k.a[i] * sums[i];
  S xy = x * y;
  for (std::size_t i = 0; i < 3; ++i) total = total + xy * k.b[i] * sums[i];
  return total + xy * xy * (k.c0 * sums[0] + k.c1);
}

/// Conic coefficients b_{i,j}(t) of G(U, V, t) = sum_{i+j<=2} b_{i,j} U^i V^j.
template <class S>
struct ConicCoeffs {
  S b20, b11, b02, b10, b01, b00;

  template <class T>
  T eval(const T& U, const T& V) const {
    return T(b20) * U * U + T(b11) * U * V + T(b02) * V * V + T(b10) * U + T(b01) * V + T(b00);
  }
};

template <class S>
ConicCoeffs<S> symmetric_conic(const SymmetricCoeffsT<S>& k, const S& t) {
  const auto& a = k.a;
  const auto& b = k.b;
  ConicCoeffs<S> c;
  c.b20 = S(2) * a[3] - S(2) * b[1] + k.c1 + t * (S(5) * a[4] - S(3) * b[2] + k.c0);
  c.b10 = S(0);
  c.b00 = c.b20;
  c.b02 = S(2) * a[1] + t * (S(3) * a[2] - b[0]) + t * t * (S(4) * a[3] - b[1]) + t * t * t * (S(5) * a[4] - b[2]);
  c.b11 = -t * c.b20;
  c.b01 = c.b11;
  return c;
}

/// G(U, V, t) as a polynomial; coefficients symbolic when none are given.
inline PolyQ symmetric_G(const std::optional<SymmetricQuinticCoeffs>& k = std::nullopt) {
  auto co = k ? lift_coeffs<PolyQ>(*k) : symbolic_symmetric_coeffs();
  auto C = symmetric_conic(co, PolyQ::variable("t"));
  return C.eval(PolyQ::variable("U"), PolyQ::variable("V"));
}

/// V^4 (f(p,q) - f(r,s)) + (U - 1)(tV - U - 1) G under the substitution.
inline RatFunQ symmetric_identity_defect(const SymmetricCoeffsT<PolyQ>& k) {
  auto U = RatFunQ::variable("U"), V = RatFunQ::variable("V"), t = RatFunQ::variable("t");
  auto P = sub_point(U, V, t);
  SymmetricCoeffsT<RatFunQ> kr;
  for (std::size_t i = 0; i < 5; ++i) kr.a[i] = RatFunQ(k.a[i]);
  for (std::size_t i = 0; i < 3; ++i) kr.b[i] = RatFunQ(k.b[i]);
  kr.c0 = RatFunQ(k.c0);
  kr.c1 = RatFunQ(k.c1);
  RatFunQ diff = symmetric_eval(kr, P.p, P.q) - symmetric_eval(kr, P.r, P.s);
  auto C = symmetric_conic(k, PolyQ::variable("t"));
  RatFunQ G(C.eval(PolyQ::variable("U"), PolyQ::variable("V")));
  return V.pow(4) * diff + (U - RatFunQ(1)) * (t * V - U - RatFunQ(1)) * G;
}

/// b_{2,0} vanishes identically in t: the open degenerate family.
inline bool question4_degenerate(const SymmetricQuinticCoeffs& k) {
  return 2 * k.a[3] - 2 * k.b[1] + k.c1 == 0 && 5 * k.a[4] - 3 * k.b[2] + k.c0 == 0;
}

/// Point order used by the worked examples: (t - U/V, U/V, t - 1/V, 1/V). For
/// symmetric f this is the substitution with r and s exchanged.
template <class S>
Point4<S> symmetric_point(const S& U, const S& V, const S& t) {
  return {t - U / V, U / V, t - S(1) / V, S(1) / V};
}

/// The line U = i + uV through (i, 0) meets G(U, V, t) = 0 again at this point.
template <class S>
UVPoint<S> symmetric_gaussian_uv(const ConicCoeffs<S>& C, const S& u) {
  S i = S(GaussianRational::i());
  S V = -(S(2) * i * u * C.b20 + i * C.b11 + C.b10 * u + C.b01) / (C.b20 * u * u + C.b11 * u + C.b02);
  return {i + u * V, V};
}

/// Symbolic Q(i) parametrization in (t, u).
inline Point4<RatFunQi> symmetric_gaussian_family(const SymmetricQuinticCoeffs& k) {
  if (question4_degenerate(k)) throw Error(Errc::DegenerateConic, "b_{2,0} vanishes identically in t");
  auto t = RatFunQi::variable("t"), u = RatFunQi::variable("u");
  auto C = symmetric_conic(lift_coeffs<RatFunQi>(k), t);
  auto uv = symmetric_gaussian_uv(C, u);
  return symmetric_point(uv.U, uv.V, t);
}

template <class K>
TrivialityReport classify_symmetric(const SymmetricQuinticCoeffs& k, const Point4<K>& P) {
  auto co = lift_coeffs<K>(k);
  TrivialityReport rep;
  rep.on_hypersurface = (symmetric_eval(co, P.p, P.q) - symmetric_eval(co, P.r, P.s)).is_zero();
  rep.coordinate_overlap = detail::sets_intersect(P.p, P.q, P.r, P.s);
  rep.nontrivial = rep.on_hypersurface && !rep.coordinate_overlap;
  return rep;
}

template <class K>
Certificate<K> certify_symmetric(std::string construction, InputList in, const SymmetricQuinticCoeffs& k,
                                 Point4<K> P, std::vector<std::string> notes) {
  auto co = lift_coeffs<K>(k);
  K res = symmetric_eval(co, P.p, P.q) - symmetric_eval(co, P.r, P.s);
  auto tr = classify_symmetric(k, P);
  notes.push_back("residual is f(p,q) - f(r,s)");
  return certify(std::move(construction), std::move(in), std::move(P), std::move(res), tr, std::move(notes));
}

inline Certificate<GaussianRational> symmetric_gaussian_point(const SymmetricQuinticCoeffs& k, const Rational& t,
                                                              const GaussianRational& u) {
  if (question4_degenerate(k)) throw Error(Errc::DegenerateConic, "b_{2,0} vanishes identically in t");
  auto C = symmetric_conic(lift_coeffs<GaussianRational>(k), GaussianRational(t));
  if (C.b20.is_zero()) throw Error(Errc::DegenerateConic, "b_{2,0} vanishes at t = " + t.to_string());
  GaussianRational den = C.b20 * u * u + C.b11 * u + C.b02;
  if (den.is_zero()) throw Error(Errc::PoleAtPoint, "the line through (i,0) is tangent to the conic");
  auto uv = symmetric_gaussian_uv(C, u);
  if (uv.V.is_zero()) throw Error(Errc::PoleAtPoint, "V = 0 at this parameter");
  auto P = symmetric_point(uv.U, uv.V, GaussianRational(t));
  InputList in{{"coeffs", k.to_string()}, {"t", t.to_string()}, {"u", u.to_string()}};
  return certify_symmetric("symmetric-gaussian", std::move(in), k, P,
                           {"(U,V) = (" + uv.U.to_string() + "," + uv.V.to_string() + ")"});
}

inline Rational conic_determinant(const ConicCoeffs<Rational>& C) {
  // 2 x the symmetric matrix [[b20, b11/2, b10/2], [b11/2, b02, b01/2], [b10/2, b01/2, b00]]
  Rational A = Rational(2) * C.b20, B = C.b11, D = C.b10, Cc = Rational(2) * C.b02, E = C.b01, F = Rational(2) * C.b00;
  return A * (Cc * F - E * E) - B * (B * F - E * D) + D * (B * E - Cc * D);
}

/// The line U - U0 = w (V - V0) through the seed meets the conic again here.
template <class S>
UVPoint<S> conic_line_point(const ConicCoeffs<Rational>& C, const Rational& U0, const Rational& V0, const S& w) {
  Rational gU = Rational(2) * C.b20 * U0 + C.b11 * V0 + C.b10;
  Rational gV = C.b11 * U0 + Rational(2) * C.b02 * V0 + C.b01;
  S h = -(S(gU) * w + S(gV)) / (S(C.b20) * w * w + S(C.b11) * w + S(C.b02));
  return {S(U0) + w * h, S(V0) + h};
}

struct RationalConicData {
  ConicCoeffs<Rational> conic;
  Rational U0, V0;
};

inline RationalConicData symmetric_rational_conic(const SymmetricQuinticCoeffs& k, const Rational& t0,
                                                  const Rational& U0, const Rational& V0) {
  auto C = symmetric_conic(lift_coeffs<Rational>(k), t0);
  if (!C.eval(U0, V0).is_zero()) {
    throw Error(Errc::SeedNotOnConic, "(" + U0.to_string() + "," + V0.to_string() + ") is not on C_t0");
  }
  if (conic_determinant(C).is_zero()) throw Error(Errc::DegenerateConic, "C_t0 is degenerate at t0 = " + t0.to_string());
  return {C, U0, V0};
}

/// Symbolic rational curve in w.
inline Point4<RatFunQ> symmetric_rational_family(const SymmetricQuinticCoeffs& k, const Rational& t0,
                                                 const Rational& U0, const Rational& V0) {
  auto d = symmetric_rational_conic(k, t0, U0, V0);
  auto uv = conic_line_point(d.conic, U0, V0, RatFunQ::variable("w"));
  return symmetric_point(uv.U, uv.V, RatFunQ(t0));
}

inline Certificate<Rational> symmetric_rational_point(const SymmetricQuinticCoeffs& k, const Rational& t0,
                                                      const Rational& U0, const Rational& V0, const Rational& w) {
  auto d = symmetric_rational_conic(k, t0, U0, V0);
  const auto& C = d.conic;
  Rational den = C.b20 * w * w + C.b11 * w + C.b02;
  if (den.is_zero()) throw Error(Errc::PoleAtPoint, "the line with slope parameter w is tangent at the seed");
  auto uv = conic_line_point(C, U0, V0, w);
  if (uv.V.is_zero()) throw Error(Errc::PoleAtPoint, "V = 0 at this parameter");
  auto P = symmetric_point(uv.U, uv.V, t0);
  InputList in{{"coeffs", k.to_string()}, {"t0", t0.to_string()},
               {"seed", "(" + U0.to_string() + "," + V0.to_string() + ")"}, {"w", w.to_string()}};
  return certify_symmetric("symmetric-rational", std::move(in), k, P,
                           {"(U,V) = (" + uv.U.to_string() + "," + uv.V.to_string() + ")"});
}

}  // namespace quintic
