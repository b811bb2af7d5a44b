#pragma once

// The threefold f(p)+f(q) = f(r)+f(s) for f(X) = X^5 + aX^3 + bX^2 + cX.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quintic/exact.hpp"
#include "quintic/poly.hpp"

namespace quintic {

struct QuinticCoeffs {
  Integer a = 0;
  Integer b = 0;
  Integer c = 0;

  bool all_zero() const { return a == 0 && b == 0 && c == 0; }

  /// The threefold degenerates when a = b = c = 0; only the Q(i) fifth-power
  /// constructions accept that case.
  void require_nondegenerate() const {
    if (all_zero()) throw Error(Errc::InvalidInput, "at least one of a, b, c must be nonzero");
  }

  template <class T>
  T eval(const T& x) const {
    T x2 = x * x;
    return x2 * x2 * x + T(Rational(a)) * x2 * x + T(Rational(b)) * x2 + T(Rational(c)) * x;
  }

  std::string to_string() const {
    return "X^5 + " + a.get_str() + "*X^3 + " + b.get_str() + "*X^2 + " + c.get_str() + "*X";
  }
};

template <class K>
struct Point4 {
  K p, q, r, s;

  std::array<K, 4> coords() const { return {p, q, r, s}; }
  friend bool operator==(const Point4&, const Point4&) = default;
};

struct TrivialityReport {
  bool on_hypersurface = false;
  bool coordinate_overlap = false;
  bool value_overlap = false;
  bool nontrivial = false;
};

template <class K>
K residual(const QuinticCoeffs& f, const Point4<K>& P) {
  return f.eval(P.p) + f.eval(P.q) - f.eval(P.r) - f.eval(P.s);
}

namespace detail {

template <class K>
bool sets_intersect(const K& x1, const K& x2, const K& y1, const K& y2) {
  return x1 == y1 || x1 == y2 || x2 == y1 || x2 == y2;
}

}  // namespace detail

/// Generic classification given the two side values, shared by every family.
template <class K>
TrivialityReport classify_values(const Point4<K>& P, const K& fp, const K& fq, const K& fr, const K& fs) {
  TrivialityReport rep;
  rep.on_hypersurface = (fp + fq - fr - fs).is_zero();
  rep.coordinate_overlap = detail::sets_intersect(P.p, P.q, P.r, P.s);
  rep.value_overlap = detail::sets_intersect(fp, fq, fr, fs);
  rep.nontrivial = rep.on_hypersurface && !rep.coordinate_overlap && !rep.value_overlap;
  return rep;
}

template <class K>
TrivialityReport classify(const QuinticCoeffs& f, const Point4<K>& P) {
  return classify_values(P, f.eval(P.p), f.eval(P.q), f.eval(P.r), f.eval(P.s));
}

struct ScaledPoints {
  Integer d = 1;
  QuinticCoeffs F;
  std::vector<Point4<Rational>> points;
};

/// Clears denominators: with d the LCM of all coordinate denominators,
/// F(X) = X^5 + a d^2 X^3 + b d^3 X^2 + c d^4 X satisfies F(d x) = d^5 f(x),
/// so d*P lies on V_F for every input point P on V_f.
inline ScaledPoints scale_to_integers(const QuinticCoeffs& f, const std::vector<Point4<Rational>>& points) {
  if (points.empty()) throw Error(Errc::EmptyList, "scale_to_integers needs at least one point");
  std::vector<Rational> coords;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!residual(f, points[k]).is_zero()) {
      throw Error(Errc::PointNotOnHypersurface, "point #" + std::to_string(k) + " is not on V_f");
    }
    for (auto& x : points[k].coords()) coords.push_back(x);
  }
  ScaledPoints out;
  out.d = lcm_of_denominators(coords);
  const Integer& d = out.d;
  out.F = QuinticCoeffs{f.a * d * d, f.b * d * d * d, f.c * d * d * d * d};
  Rational dq(d);
  for (auto& P : points) {
    out.points.push_back({P.p * dq, P.q * dq, P.r * dq, P.s * dq});
  }
  return out;
}

/// f(p)+f(q)-f(r)-f(s) in Q[p,q,r,s]; with no coefficients given the
/// polynomial also carries symbolic a, b, c.
inline PolyQ residual_symbolic(const std::optional<QuinticCoeffs>& f = std::nullopt) {
  PolyQ a, b, c;
  if (f) {
    a = PolyQ(Rational(f->a));
    b = PolyQ(Rational(f->b));
    c = PolyQ(Rational(f->c));
  } else {
    a = PolyQ::variable("a");
    b = PolyQ::variable("b");
    c = PolyQ::variable("c");
  }
  auto ev = [&](const PolyQ& x) {
    PolyQ x2 = x * x;
    return x2 * x2 * x + a * x2 * x + b * x2 + c * x;
  };
  return ev(PolyQ::variable("p")) + ev(PolyQ::variable("q")) - ev(PolyQ::variable("r")) -
         ev(PolyQ::variable("s"));
}

}  // namespace quintic
