#pragma once

// F(p)+G(q) = F(r)+G(s) with F = x^5+ax^3+bx^2+cx, G = x^5+dx^3+ex^2+fx, through
// p = t - U/V, q = U/V, r = 1/V, s = t - 1/V.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quintic/certificate.hpp"
#include "quintic/elliptic.hpp"
#include "quintic/hypersurface.hpp"
#include "quintic/poly.hpp"

namespace quintic {

struct MixedPair {
  Integer a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  QuinticCoeffs F() const { return {a, b, c}; }
  QuinticCoeffs G() const { return {d, e, f}; }
  /// F(x) - F(0) = G(x) - G(0) identically.
  bool degenerate() const { return a == d && b == e && c == f; }
};

/// The six coefficients as polynomials: constants, or symbols a..f.
inline std::array<PolyQ, 6> mixed_coefficients(const std::optional<MixedPair>& m = std::nullopt) {
  if (!m) {
    return {PolyQ::variable("a"), PolyQ::variable("b"), PolyQ::variable("c"),
            PolyQ::variable("d"), PolyQ::variable("e"), PolyQ::variable("f")};
  }
  return {PolyQ(Rational(m->a)), PolyQ(Rational(m->b)), PolyQ(Rational(m->c)),
          PolyQ(Rational(m->d)), PolyQ(Rational(m->e)), PolyQ(Rational(m->f))};
}

/// H(U, V, t) = sum_{i+j<=3} a_{i,j} U^i V^j.
inline PolyQ mixed_H(const std::array<PolyQ, 6>& k) {
  const auto& [a, b, c, d, e, f] = k;
  PolyQ U = PolyQ::variable("U"), V = PolyQ::variable("V"), t = PolyQ::variable("t");
  PolyQ t2 = t * t, t3 = t2 * t;
  PolyQ a30 = PolyQ(5) * t, a20 = -a30, a10 = a30, a00 = -a30;
  PolyQ a21 = -a + d - PolyQ(5) * t2;
  PolyQ a11 = a - d;
  PolyQ a01 = -a + d + PolyQ(5) * t2;
  PolyQ a12 = b + e + (PolyQ(2) * a + d) * t + PolyQ(5) * t3;
  PolyQ a02 = -b - e - (a + PolyQ(2) * d) * t - PolyQ(5) * t3;
  PolyQ a03 = f - c + (e - b) * t + (d - a) * t2;
  return a30 * U.pow(3) + a20 * U * U + a10 * U + a00 + a21 * U * U * V + a11 * U * V + a01 * V +
         a12 * U * V * V + a02 * V * V + a03 * V.pow(3);
}

inline PolyQ mixed_H(const std::optional<MixedPair>& m = std::nullopt) { return mixed_H(mixed_coefficients(m)); }

/// F(p) + G(q) - F(r) - G(s) in the coordinates p, q, r, s.
inline PolyQ mixed_residual_poly(const std::array<PolyQ, 6>& k) {
  auto quintic = [](const PolyQ& A, const PolyQ& B, const PolyQ& C, const PolyQ& x) {
    PolyQ x2 = x * x;
    return x2 * x2 * x + A * x2 * x + B * x2 + C * x;
  };
  PolyQ p = PolyQ::variable("p"), q = PolyQ::variable("q"), r = PolyQ::variable("r"), s = PolyQ::variable("s");
  return quintic(k[0], k[1], k[2], p) + quintic(k[3], k[4], k[5], q) - quintic(k[0], k[1], k[2], r) -
         quintic(k[3], k[4], k[5], s);
}

template <class S>
Point4<S> sub_point(const S& U, const S& V, const S& t) {
  return {t - U / V, U / V, S(1) / V, t - S(1) / V};
}

/// V^4 (F(p)+G(q)-F(r)-G(s)) + (tV - U - 1) H(U, V, t), which must vanish.
inline RatFunQ mixed_identity_defect(const std::array<PolyQ, 6>& k) {
  auto U = RatFunQ::variable("U"), V = RatFunQ::variable("V"), t = RatFunQ::variable("t");
  auto P = sub_point(U, V, t);
  RatFunQ R = substitute(mixed_residual_poly(k), std::map<std::string, RatFunQ>{{"p", P.p}, {"q", P.q}, {"r", P.r}, {"s", P.s}});
  return V.pow(4) * R + (t * V - U - RatFunQ(1)) * RatFunQ(mixed_H(k));
}

/// S_{F,G} for F = x^5 + cx, G = x^5 + fx, with D = c - f.
inline PolyQ special_cubic(const PolyQ& D) {
  PolyQ U = PolyQ::variable("U"), V = PolyQ::variable("V"), t = PolyQ::variable("t");
  PolyQ t2 = t * t, t3 = t2 * t;
  return PolyQ(5) * t * U.pow(3) - PolyQ(5) * t2 * U * U * V + PolyQ(5) * t3 * U * V * V - D * V.pow(3) -
         PolyQ(5) * t * U * U - PolyQ(5) * t3 * V * V + PolyQ(5) * t * U + PolyQ(5) * t2 * V - PolyQ(5) * t;
}

/// Y^2 - (X^3 - 25t^4 X^2 - 2500 D^2 t^4).
inline PolyQ special_curve_poly(const PolyQ& D) {
  PolyQ X = PolyQ::variable("X"), Y = PolyQ::variable("Y"), t = PolyQ::variable("t");
  PolyQ t4 = t.pow(4);
  return Y * Y - X.pow(3) + PolyQ(25) * t4 * X * X + PolyQ(2500) * D * D * t4;
}

template <class S>
struct UVPoint {
  S U, V;
};

template <class S>
struct XYPoint {
  S X, Y;
};

/// E_t -> S_{F,G}. The denominator carries -X^3 (printed as -x^3 in the source
/// formula); only that reading makes the maps mutually inverse.
template <class S>
S special_forward_den(const S& D, const S& t, const S& X) {
  S t4 = t * t * t * t;
  return S(50) * t4 * (S(100) * D * D - S(10) * X * D + X * X) - X * X * X;
}

template <class S>
UVPoint<S> special_forward(const S& D, const S& t, const S& X, const S& Y) {
  S t2 = t * t, t4 = t2 * t2;
  S den = special_forward_den(D, t, X);
  S U = (S(50) * t4 * X * X + S(100) * t2 * Y * D - X * X * X) / den;
  S V = S(10) * t * X * (Y - S(5) * t2 * (S(10) * D - X)) / den;
  return {U, V};
}

/// S_{F,G} -> E_t, with a pole along U = 1.
template <class S>
XYPoint<S> special_inverse(const S& D, const S& t, const S& U, const S& V) {
  S Um = U - S(1);
  S X = S(10) * D * t * V / Um;
  S Y = -(S(10) * D * t * (D * V * V * V - S(5) * t * t * Um * V * (t * V - U) - S(5) * t * Um * Um * U)) / (Um * Um);
  return {X, Y};
}

/// Coordinate maps as rational-function triples; the third entry carries t.
struct BirationalMapPair {
  std::array<std::string, 3> source_vars, target_vars;
  std::array<RatFunQ, 3> forward;  // in source_vars
  std::array<RatFunQ, 3> inverse;  // in target_vars
};

struct MapCheck {
  std::size_t points = 0;
  std::size_t failures = 0;
  bool pass() const { return points > 0 && failures == 0; }
};

struct SpecialMaps {
  Integer D;
  PolyQ cubic;  // S_{F,G}(U, V, t)
  PolyQ curve;  // E_t relation in X, Y, t
  BirationalMapPair maps;  // E_t (X, Y, t) <-> S_{F,G} (U, V, t)
  MapCheck check;
};

inline BirationalMapPair special_map_pair(const PolyQ& D) {
  RatFunQ Dq(D);
  auto X = RatFunQ::variable("X"), Y = RatFunQ::variable("Y"), t = RatFunQ::variable("t");
  auto U = RatFunQ::variable("U"), V = RatFunQ::variable("V");
  auto fw = special_forward(Dq, t, X, Y);
  auto inv = special_inverse(Dq, t, U, V);
  return {{"X", "Y", "t"}, {"U", "V", "t"}, {fw.U, fw.V, t}, {inv.X, inv.Y, t}};
}

/// Exact round trips at curve points of E_t: inverse(forward(P)) = P and
/// forward(P) lies on S_{F,G}; points where a map has a pole are skipped.
inline MapCheck check_special_maps(const Integer& c, const Integer& f, const Rational& t,
                                   const std::vector<CurvePoint>& points) {
  Rational D{Integer(c - f)};
  auto E = specialization_curve(c, f, t);
  PolyQ cubic = special_cubic(PolyQ(D));
  MapCheck out;
  for (auto& P : points) {
    if (P.infinity || !E.on_curve(P)) { ++out.failures; continue; }
    if (special_forward_den(D, t, P.x).is_zero()) continue;
    auto uv = special_forward(D, t, P.x, P.y);
    if ((uv.U - Rational(1)).is_zero()) continue;
    ++out.points;
    bool ok = cubic.eval({{"U", uv.U}, {"V", uv.V}, {"t", t}}).is_zero();
    auto back = special_inverse(D, t, uv.U, uv.V);
    ok = ok && back.X == P.x && back.Y == P.y;
    if (!ok) ++out.failures;
  }
  return out;
}

/// Multiples k*P for k = +-1..n, as the random source of curve points.
inline std::vector<CurvePoint> curve_sample(const WeierstrassCurve& E, const CurvePoint& P, long n) {
  std::vector<CurvePoint> out;
  for (long k = 1; k <= n; ++k) {
    auto Q = mul(E, k, P);
    out.push_back(Q);
    out.push_back(E.neg(Q));
  }
  return out;
}

/// A nontorsion point on E_t: the table row when (|c-f|, t) matches, otherwise
/// the first nontorsion point of a bounded search.
inline CurvePoint special_base_point(const Integer& c, const Integer& f, const Rational& t,
                                     const SearchBounds& bounds = {}, unsigned jobs = 1) {
  auto E = specialization_curve(c, f, t);
  Integer D = abs(Integer(c - f));
  for (auto& row : shipped_table()) {
    if (row.D == D && row.t * row.t == t * t) return row.P;
  }
  for (auto& P : search_points(E, bounds, jobs)) {
    if (is_nontorsion(E, P)) return P;
  }
  throw Error(Errc::NoBasePointFound, "no nontorsion point found on E_t within the search bounds");
}

inline SpecialMaps mixed_special_maps(const Integer& c, const Integer& f, const Rational& t, const CurvePoint& P,
                                      long samples = 25) {
  if (c == f) throw Error(Errc::DegenerateSpecialization, "c = f: the special family needs c != f");
  auto E = specialization_curve(c, f, t);
  SpecialMaps out;
  out.D = c - f;
  PolyQ D{Rational(out.D)};
  out.cubic = special_cubic(D);
  out.curve = special_curve_poly(D);
  out.maps = special_map_pair(D);
  out.check = check_special_maps(c, f, t, curve_sample(E, P, samples));
  return out;
}

struct MixedPointResult {
  Certificate<Rational> certificate;
  CurvePoint curve_point;  // k*P on E_t
  Rational U, V;
};

inline MixedPointResult mixed_point(const Integer& c, const Integer& f, const Rational& t, long k,
                                    const CurvePoint& P) {
  if (k < 1) throw Error(Errc::InvalidInput, "k must be positive");
  auto E = specialization_curve(c, f, t);
  if (!E.on_curve(P)) throw Error(Errc::PointNotOnCurve, "base point is not on E_t");
  Rational D{Integer(c - f)};
  auto Q = mul(E, k, P);
  std::string at = "k = " + std::to_string(k);
  if (Q.infinity) throw Error(Errc::MapPole, at + ": k*P is the point at infinity");
  if (special_forward_den(D, t, Q.x).is_zero()) throw Error(Errc::MapPole, at + ": forward map denominator vanishes");
  auto uv = special_forward(D, t, Q.x, Q.y);
  if (uv.V.is_zero()) throw Error(Errc::MapPole, at + ": V = 0");
  if ((uv.U - Rational(1)).is_zero()) throw Error(Errc::MapPole, at + ": U = 1");
  auto pt = sub_point(uv.U, uv.V, t);
  QuinticCoeffs F{0, 0, c}, G{0, 0, f};
  Rational fp = F.eval(pt.p), gq = G.eval(pt.q), fr = F.eval(pt.r), gs = G.eval(pt.s);
  auto tr = classify_values(pt, fp, gq, fr, gs);
  InputList in{{"c", c.get_str()}, {"f", f.get_str()}, {"t", t.to_string()}, {"k", std::to_string(k)},
               {"P", P.to_string()}};
  std::vector<std::string> notes{"point on F(p)+G(q) = F(r)+G(s) with F = X^5 + c*X, G = X^5 + f*X",
                                 "(U,V) = (" + uv.U.to_string() + "," + uv.V.to_string() + ")"};
  auto cert = certify("mixed", std::move(in), pt, fp + gq - fr - gs, tr, std::move(notes));
  return {std::move(cert), Q, uv.U, uv.V};
}

}  // namespace quintic
