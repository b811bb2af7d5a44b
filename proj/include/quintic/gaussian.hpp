#pragma once

// Q(i)-rational points on V_f and the homogeneous solution of p^5+q^5 = r^5+s^5.

#include <string>
#include <vector>

#include "quintic/certificate.hpp"
#include "quintic/exact.hpp"
#include "quintic/hypersurface.hpp"
#include "quintic/poly.hpp"

namespace quintic {

template <class S>
S imag_unit() {
  return S(GaussianRational::i());
}

/// The four closed formulas in (y, u), common denominator 20y(u - 5iy^2).
template <class S>
Point4<S> gaussian_formulas(const S& a, const S& b, const S& y, const S& u) {
  S i = imag_unit<S>();
  S y2 = y * y, y4 = y2 * y2, u2 = u * u;
  S tail = S(60) * a * y2 + S(40) * b * y;
  S den = S(20) * y * (u - S(5) * i * y2);
  S p = -i * (u2 + S(75) * y4 + tail) / den;
  S q = i * (u2 - S(20) * i * y2 * u - S(25) * y4 + tail) / den;
  S r = (u2 + S(10) * (S(1) - i) * y2 * u - S(25) * (S(3) + S(2) * i) * y4 - tail) / den;
  S s = -(u2 - S(10) * (S(1) + i) * y2 * u - S(25) * (S(3) - S(2) * i) * y4 - tail) / den;
  return {p, q, r, s};
}

/// The conic route: [x:v:w] = [i:10y:0] at infinity, x = iP, w = 10yP + u.
template <class S>
struct GaussianConicPoint {
  S x, w;
};

template <class S>
GaussianConicPoint<S> gaussian_conic(const S& a, const S& b, const S& y, const S& u) {
  S i = imag_unit<S>();
  S P = -(u * u + S(75) * y * y * y * y + S(60) * a * y * y + S(40) * b * y) / (S(20) * y * (u - S(5) * i * y * y));
  return {i * P, S(10) * y * P + u};
}

inline Certificate<GaussianRational> gaussian_point(const QuinticCoeffs& f, const Rational& y,
                                                    const GaussianRational& u) {
  if (y.is_zero()) throw Error(Errc::PoleAtPoint, "y = 0: the denominator 20y(u-5iy^2) vanishes");
  GaussianRational Y(y);
  if (u == GaussianRational(5) * GaussianRational::i() * Y * Y) {
    throw Error(Errc::PoleAtPoint, "u = 5iy^2: the denominator 20y(u-5iy^2) vanishes");
  }
  auto P = gaussian_formulas(GaussianRational(Rational(f.a)), GaussianRational(Rational(f.b)), Y, u);
  std::vector<std::string> notes;
  if (f.a == 0 && f.b == 0) notes.push_back("a = b = 0: the formulas parametrize a curve, not a surface");
  InputList in{{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"c", f.c.get_str()}, {"y", y.to_string()},
               {"u", u.to_string()}};
  return certify_quintic("gaussian", std::move(in), f, P, std::move(notes));
}

template <class S>
Point4<S> fifth_power_generic(const S& u, const S& v) {
  S i = imag_unit<S>();
  S u2 = u * u, uv = u * v, v2 = v * v;
  return {u2 + S(75) * v2, -u2 + S(20) * i * uv + S(25) * v2,
          i * u2 + S(10) * (S(1) + i) * uv + S(25) * (S(2) - S(3) * i) * v2,
          -i * u2 - S(10) * (S(1) - i) * uv + S(25) * (S(2) + S(3) * i) * v2};
}

inline Certificate<GaussianRational> fifth_power_solution(const GaussianRational& u, const GaussianRational& v) {
  auto P = fifth_power_generic(u, v);
  InputList in{{"u", u.to_string()}, {"v", v.to_string()}};
  return certify_quintic("fifth-power", std::move(in), QuinticCoeffs{}, P);
}

template <class S>
struct NormLift {
  S u, v, X;
};

/// u + sqrt(-75) v = (t1 + sqrt(-75) t2)^n, so that u^2 + 75v^2 = (t1^2 + 75t2^2)^n.
template <class S>
NormLift<S> norm_lift_generic(unsigned n, const S& t1, const S& t2) {
  if (n == 0) throw Error(Errc::InvalidInput, "norm_lift needs n >= 1");
  NormLift<S> out{S(0), S(0), t1 * t1 + S(75) * t2 * t2};
  for (unsigned k = 0; k <= n; ++k) {
    Integer m = binomial(n, k);
    Integer m75 = 1;
    for (unsigned j = 0; j < k / 2; ++j) m75 *= -75;
    S term = S(Rational(Integer(m * m75)));
    for (unsigned j = 0; j < n - k; ++j) term = term * t1;
    for (unsigned j = 0; j < k; ++j) term = term * t2;
    if (k % 2 == 0) out.u = out.u + term;
    else out.v = out.v + term;
  }
  return out;
}

inline NormLift<Rational> norm_lift(unsigned n, const Rational& t1, const Rational& t2) {
  return norm_lift_generic(n, t1, t2);
}

/// p^(5n) + q^5 = r^5 + s^5: the fifth-power solution at (u, v) from norm_lift,
/// whose first coordinate u^2 + 75v^2 equals X^n.
struct FifthPowerTower {
  unsigned n;
  GaussianRational X;
  Point4<GaussianRational> point;  // point.p = X^n
};

inline FifthPowerTower fifth_power_tower(unsigned n, const Rational& t1, const Rational& t2) {
  auto L = norm_lift(n, t1, t2);
  auto P = fifth_power_generic(GaussianRational(L.u), GaussianRational(L.v));
  return {n, GaussianRational(L.X), P};
}

}  // namespace quintic
