#pragma once

// Plane cubic with a rational point -> long Weierstrass model, with both maps.
//
// The point is moved to the origin. Lines y = m x through it cut the cubic
// g1 + g2 + g3 = 0 once more where h3(m) x^2 + h2(m) x + h1(m) = 0, so
// s = 2 h3(m) x + h2(m) satisfies s^2 = h2^2 - 4 h1 h3, a quartic in m with the
// rational point at the tangent slope m0. That quartic goes to Weierstrass form
// through the standard transformation for v^2 = quartic with square constant
// term, or through n -> 1/n when the point is a flex.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "quintic/elliptic.hpp"
#include "quintic/errors.hpp"
#include "quintic/mixed.hpp"
#include "quintic/poly.hpp"

namespace quintic {

struct ProjectivePoint {
  Rational U, V, W = 1;
};

namespace detail {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

inline Mat3 inverse3(const Mat3& m) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      c[j][i] = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
    }
  Rational det = m[0][0] * c[0][0] + m[0][1] * c[1][0] + m[0][2] * c[2][0];
  if (det.is_zero()) throw Error(Errc::InvalidInput, "singular coordinate change");
  for (auto& row : c)
    for (auto& x : row) x = x / det;
  return c;
}

template <class S>
S horner(const std::vector<Rational>& coeffs, const S& x) {
  S acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + S(*it);
  return acc;
}

inline std::vector<Rational> univariate(const PolyQ& p, const std::string& var) {
  std::vector<Rational> out(p.degree_in(var) + 1);
  for (unsigned k = 0; k < out.size(); ++k) {
    auto c = p.coefficient(var, k);
    out[k] = c.is_zero() ? Rational(0) : c.constant_value();
  }
  return out;
}

}  // namespace detail

/// All numeric data of the reduction; forward/inverse are templated so the same
/// steps give exact evaluation (S = Rational) and the rational maps (S = RatFunQ).
struct CubicChart {
  detail::Mat3 M, Minv;   // (U,V,W)^T = M (x,y,z)^T
  Rational m0;
  std::vector<Rational> h2, h3;  // in m
  bool flex = false;
  Rational q, a, b, c, d;  // quartic v^2 = a n^4 + b n^3 + c n^2 + d n + q^2 (non-flex)
  std::array<Rational, 5> e;  // quartic coefficients in n, e[0] = q^2

  template <class S>
  std::array<S, 2> forward(const S& U, const S& V) const {
    std::array<S, 3> xyz;
    for (int i = 0; i < 3; ++i) xyz[i] = S(Minv[i][0]) * U + S(Minv[i][1]) * V + S(Minv[i][2]);
    S xa = xyz[0] / xyz[2];
    S m = xyz[1] / xyz[0];
    S s = S(2) * detail::horner(h3, m) * xa + detail::horner(h2, m);
    S n = m - S(m0);
    if (flex) return {S(e[1]) / n, S(e[1]) * s / (n * n)};
    S X = (S(2) * S(q) * (s + S(q)) + S(d) * n) / (n * n);
    S Y = (S(4) * S(q * q) * (s + S(q)) + S(2) * S(q) * (S(d) * n + S(c) * n * n) -
           S(d * d / (Rational(2) * q)) * n * n) / (n * n * n);
    return {X, Y};
  }

  template <class S>
  std::array<S, 2> inverse(const S& X, const S& Y) const {
    S n, v;
    if (flex) {
      n = S(e[1]) / X;
      v = Y * n * n / S(e[1]);
    } else {
      n = (S(Rational(2) * q) * (X + S(c)) - S(d * d / (Rational(2) * q))) / Y;
      v = -S(q) + n * (n * X - S(d)) / S(Rational(2) * q);
    }
    S m = S(m0) + n;
    S xa = (v - detail::horner(h2, m)) / (S(2) * detail::horner(h3, m));
    S ya = m * xa;
    std::array<S, 3> UVW;
    for (int i = 0; i < 3; ++i) UVW[i] = S(M[i][0]) * xa + S(M[i][1]) * ya + S(M[i][2]);
    return {UVW[0] / UVW[2], UVW[1] / UVW[2]};
  }
};

struct CubicModel {
  PolyQ cubic;  // in U, V
  CubicChart chart;
  WeierstrassCurve curve;
  BirationalMapPair maps;  // (U, V) <-> (X, Y); third entries are constant 0
  bool image_on_curve = false;  // curve(forward(U,V)) vanishes modulo the cubic
  MapCheck check;
};

namespace detail {

inline PolyQ homogenize(const PolyQ& f, const std::string& N = "U", const std::string& M = "V") {
  PolyQ out;
  PolyQ W = PolyQ::variable("W");
  PolyQ Up = PolyQ::variable(N), Vp = PolyQ::variable(M);
  const auto& vars = f.vars();
  for (auto& [ex, co] : f.terms()) {
    unsigned i = 0, j = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (vars[k] == N) i = ex[k];
      else if (vars[k] == M) j = ex[k];
    }
    out += PolyQ(co) * Up.pow(i) * Vp.pow(j) * W.pow(3 - i - j);
  }
  return out;
}

inline PolyQ homogeneous_part(const PolyQ& g, unsigned deg) {
  PolyQ out;
  const auto& vars = g.vars();
  for (auto& [ex, co] : g.terms()) {
    unsigned s = 0;
    for (auto e : ex) s += e;
    if (s != deg) continue;
    PolyQ mono(co);
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (ex[k]) mono *= PolyQ::variable(vars[k]).pow(ex[k]);
    out += mono;
  }
  return out;
}

}  // namespace detail

/// Sample points on the model from a small search, mapped back to the cubic and
/// round-tripped exactly.
inline MapCheck check_cubic_model(const CubicModel& m, const std::vector<CurvePoint>& pts) {
  MapCheck out;
  for (auto& P : pts) {
    if (P.infinity) continue;
    std::array<Rational, 2> uv;
    try {
      uv = m.chart.inverse(P.x, P.y);
    } catch (const Error&) {
      continue;  // pole of the inverse map
    }
    std::array<Rational, 2> back;
    try {
      back = m.chart.forward(uv[0], uv[1]);
    } catch (const Error&) {
      continue;
    }
    ++out.points;
    bool ok = m.cubic.eval({{"U", uv[0]}, {"V", uv[1]}}).is_zero() && back[0] == P.x && back[1] == P.y;
    if (!ok) ++out.failures;
  }
  return out;
}

inline CubicModel cubic_to_weierstrass(const PolyQ& cubic, const ProjectivePoint& P,
                                       const SearchBounds& sample = SearchBounds{Integer(60), 2}) {
  for (auto& v : cubic.vars()) {
    if (v != "U" && v != "V") throw Error(Errc::InvalidInput, "cubic must be in U, V; found '" + v + "'");
  }
  if (cubic.total_degree() != 3) throw Error(Errc::SingularCubic, "not a cubic: total degree " + std::to_string(cubic.total_degree()));
  PolyQ F = detail::homogenize(cubic);
  if (!F.eval({{"U", P.U}, {"V", P.V}, {"W", P.W}}).is_zero()) {
    throw Error(Errc::PointNotOnCubic, "supplied point does not lie on the cubic");
  }
  std::array<Rational, 3> pt{P.U, P.V, P.W};
  int k = !pt[2].is_zero() ? 2 : !pt[1].is_zero() ? 1 : 0;
  if (pt[k].is_zero()) throw Error(Errc::InvalidInput, "[0:0:0] is not a projective point");
  std::array<int, 2> others;
  for (int i = 0, n = 0; i < 3; ++i)
    if (i != k) others[n++] = i;

  PolyQ x = PolyQ::variable("x"), y = PolyQ::variable("y");
  CubicChart ch;
  PolyQ g, g1;
  for (int attempt = 0; attempt < 2; ++attempt) {
    for (int i = 0; i < 3; ++i) {
      ch.M[i][0] = i == others[attempt] ? Rational(1) : Rational(0);
      ch.M[i][1] = i == others[1 - attempt] ? Rational(1) : Rational(0);
      ch.M[i][2] = pt[i];
    }
    std::array<PolyQ, 3> img;
    for (int i = 0; i < 3; ++i) img[i] = PolyQ(ch.M[i][0]) * x + PolyQ(ch.M[i][1]) * y + PolyQ(ch.M[i][2]);
    g = F.substitute({{"U", img[0]}, {"V", img[1]}, {"W", img[2]}});
    g1 = detail::homogeneous_part(g, 1);
    if (g1.is_zero()) throw Error(Errc::SingularCubic, "the supplied point is a singular point of the cubic");
    if (!g1.coefficient("y", 1).is_zero()) break;
  }
  ch.Minv = detail::inverse3(ch.M);
  Rational alpha = g1.coefficient("x", 1).is_zero() ? Rational(0) : g1.coefficient("x", 1).constant_value();
  Rational beta = g1.coefficient("y", 1).constant_value();
  ch.m0 = -alpha / beta;

  PolyQ m = PolyQ::variable("m");
  auto along = [&](unsigned deg) { return detail::homogeneous_part(g, deg).substitute({{"x", PolyQ(1)}, {"y", m}}); };
  PolyQ h1 = along(1), h2 = along(2), h3 = along(3);
  if (h3.is_zero()) throw Error(Errc::SingularCubic, "cubic is reducible (no cubic part after the coordinate change)");
  ch.h2 = detail::univariate(h2, "m");
  ch.h3 = detail::univariate(h3, "m");
  PolyQ quartic = (h2 * h2 - PolyQ(4) * h1 * h3).substitute({{"m", PolyQ(ch.m0) + PolyQ::variable("n")}});
  auto ecoef = detail::univariate(quartic, "n");
  for (std::size_t i = 0; i < 5; ++i) ch.e[i] = i < ecoef.size() ? ecoef[i] : Rational(0);

  WeierstrassCurve W;
  if (!ch.e[0].is_zero()) {
    ch.q = detail::horner(ch.h2, ch.m0);
    ch.a = ch.e[4];
    ch.b = ch.e[3];
    ch.c = ch.e[2];
    ch.d = ch.e[1];
    Rational a1 = ch.d / ch.q;
    Rational a2 = ch.c - ch.d * ch.d / (Rational(4) * ch.q * ch.q);
    Rational a3 = Rational(2) * ch.q * ch.b;
    Rational a4 = -Rational(4) * ch.q * ch.q * ch.a;
    W = WeierstrassCurve{a1, a2, a3, a4, a2 * a4};
  } else {
    ch.flex = true;
    if (ch.e[1].is_zero()) throw Error(Errc::SingularCubic, "quartic has a double root at the base point");
    W = WeierstrassCurve{0, ch.e[2], 0, ch.e[1] * ch.e[3], ch.e[1] * ch.e[1] * ch.e[4]};
  }
  if (W.is_singular()) throw Error(Errc::SingularCubic, "the cubic is singular (Weierstrass discriminant 0)");

  CubicModel out;
  out.cubic = cubic;
  out.chart = ch;
  out.curve = W;
  auto U = RatFunQ::variable("U"), V = RatFunQ::variable("V");
  auto X = RatFunQ::variable("X"), Y = RatFunQ::variable("Y");
  auto fw = ch.forward(U, V);
  auto inv = ch.inverse(X, Y);
  out.maps = {{"U", "V", ""}, {"X", "Y", ""}, {fw[0], fw[1], RatFunQ()}, {inv[0], inv[1], RatFunQ()}};

  PolyQ Xp = PolyQ::variable("X"), Yp = PolyQ::variable("Y");
  PolyQ weq = Yp * Yp + PolyQ(W.a1) * Xp * Yp + PolyQ(W.a3) * Yp - Xp.pow(3) - PolyQ(W.a2) * Xp * Xp -
              PolyQ(W.a4) * Xp - PolyQ(W.a6);
  RatFunQ image = substitute(weq, std::map<std::string, RatFunQ>{{"X", fw[0]}, {"Y", fw[1]}});
  out.image_on_curve = image.num().divide_exact(cubic).has_value();

  std::vector<CurvePoint> pts;
  for (auto& Q : search_points(W, sample)) {
    pts.push_back(Q);
    if (pts.size() >= 12) break;
  }
  std::size_t base = pts.size();
  for (std::size_t i = 0; i < base; ++i)
    for (long j = 2; j <= 3; ++j) pts.push_back(mul(W, j, pts[i]));
  out.check = check_cubic_model(out, pts);
  return out;
}

}  // namespace quintic
