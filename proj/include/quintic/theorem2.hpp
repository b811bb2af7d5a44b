#pragma once

// Two-parameter rational points on V_f for f = X^5 + aX^3 + cX, a < 0, through
// the conic x^2 + 2y^2 + 3z^2 + 5a = 0.

#include <map>
#include <string>

#include "quintic/certificate.hpp"
#include "quintic/hypersurface.hpp"
#include "quintic/quadform.hpp"

namespace quintic {

template <class S>
Point4<S> r4_point(const S& x, const S& y, const S& z) {
  S five(5);
  return {(-x + y + S(3) * z) / five, (S(2) * x + y) / five, S(3) * y / five, (x - y + S(3) * z) / five};
}

struct Thm2Parametrization {
  Integer a;
  ConicParametrization conic;
  Point4<RatFunQ> point;  // in u, v
  RatFunQ residual;       // for symbolic c
};

/// Substitutes rational functions of (u, v) into the fully symbolic residual
/// with a fixed and b = 0, leaving c symbolic.
inline RatFunQ thm2_symbolic_residual(const Integer& a, const Point4<RatFunQ>& P) {
  PolyQ R = residual_symbolic().substitute({{"a", PolyQ(Rational(a))}, {"b", PolyQ()}});
  return substitute(R, std::map<std::string, RatFunQ>{{"p", P.p}, {"q", P.q}, {"r", P.r}, {"s", P.s}});
}

inline Thm2Parametrization thm2_parametrize(const Integer& a, long bound = 200) {
  if (!ternary_solvable(a)) {
    throw Error(Errc::NotSolvable, "x^2+2y^2+3z^2+5a = 0 has no rational point for a = " + a.get_str());
  }
  auto base = ternary_base_point(a, bound);
  if (!base) {
    throw Error(Errc::NoBasePointFound, "no base point with entries up to " + std::to_string(bound));
  }
  Thm2Parametrization out;
  out.a = a;
  out.conic = parametrize_conic(a, *base);
  out.point = r4_point(out.conic.x, out.conic.y, out.conic.z);
  out.residual = thm2_symbolic_residual(a, out.point);
  return out;
}

inline Certificate<Rational> thm2_point_from(const Thm2Parametrization& par, const Integer& c, const Rational& u,
                                             const Rational& v) {
  std::map<std::string, Rational> at{{"u", u}, {"v", v}};
  Point4<Rational> P{par.point.p.eval(at), par.point.q.eval(at), par.point.r.eval(at), par.point.s.eval(at)};
  QuinticCoeffs f{par.a, 0, c};
  const auto& B = par.conic.base;
  InputList in{{"a", par.a.get_str()}, {"c", c.get_str()}, {"u", u.to_string()}, {"v", v.to_string()},
               {"base", "(" + B.x.to_string() + "," + B.y.to_string() + "," + B.z.to_string() + ")"}};
  return certify_quintic("thm2", std::move(in), f, P);
}

inline Certificate<Rational> thm2_point(const Integer& a, const Integer& c, const Rational& u, const Rational& v,
                                        long bound = 200) {
  return thm2_point_from(thm2_parametrize(a, bound), c, u, v);
}

struct Question3Points {
  QuinticCoeffs f;
  std::vector<Certificate<Rational>> points;
};

/// f = X^5 + a_N X^3 + c X with the N integer points from the family through (R4).
inline Question3Points question3_points(unsigned N, const Integer& c) {
  auto fam = question3_family(N);
  Question3Points out{QuinticCoeffs{fam.a, 0, c}, {}};
  for (std::size_t k = 0; k < fam.solutions.size(); ++k) {
    auto& s = fam.solutions[k];
    auto P = r4_point(Rational(s[0]), Rational(s[1]), Rational(s[2]));
    for (auto& x : P.coords())
      if (!x.is_integer()) throw std::logic_error("question3: non-integral coordinate " + x.to_string());
    InputList in{{"N", std::to_string(N)}, {"k", std::to_string(k + 1)}, {"a", fam.a.get_str()}, {"c", c.get_str()}};
    out.points.push_back(certify_quintic("question3", std::move(in), out.f, P));
  }
  return out;
}

}  // namespace quintic
