#pragma once

// Long-form Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over Q: group law, torsion test by bounded multiples, integral models and a
// naive point search on X = m/e^2.

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/exact.hpp"
#include "quintic/parallel.hpp"
#include "quintic/table_data.hpp"

namespace quintic {

struct CurvePoint {
  bool infinity = true;
  Rational x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
  bool is_identity() const { return infinity; }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }

  std::string to_string() const {
    if (infinity) return "O";
    return "(" + x.to_string() + ", " + y.to_string() + ")";
  }
};

struct WeierstrassCurve {
  Rational a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  static WeierstrassCurve short_form(Rational a4, Rational a6) { return {0, 0, 0, std::move(a4), std::move(a6)}; }

  Rational b2() const { return a1 * a1 + Rational(4) * a2; }
  Rational b4() const { return Rational(2) * a4 + a1 * a3; }
  Rational b6() const { return a3 * a3 + Rational(4) * a6; }
  Rational b8() const {
    return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  Rational c4() const { return b2() * b2() - Rational(24) * b4(); }

  Rational discriminant() const {
    Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - Rational(8) * B4 * B4 * B4 - Rational(27) * B6 * B6 + Rational(9) * B2 * B4 * B6;
  }

  bool is_singular() const { return discriminant().is_zero(); }

  Rational j_invariant() const {
    Rational d = discriminant();
    if (d.is_zero()) throw Error(Errc::SingularCurve, "j-invariant of a singular curve");
    Rational c = c4();
    return c * c * c / d;
  }

  /// Right side minus left side at (x, y); zero iff on the curve.
  Rational equation(const Rational& x, const Rational& y) const {
    return x * x * x + a2 * x * x + a4 * x + a6 - y * y - a1 * x * y - a3 * y;
  }

  bool on_curve(const CurvePoint& P) const { return P.infinity || equation(P.x, P.y).is_zero(); }

  CurvePoint neg(const CurvePoint& P) const {
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, -P.y - a1 * P.x - a3);
  }

  std::string to_string() const {
    return "[" + a1.to_string() + "," + a2.to_string() + "," + a3.to_string() + "," + a4.to_string() + "," +
           a6.to_string() + "]";
  }

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

inline Rational discriminant(const WeierstrassCurve& E) { return E.discriminant(); }
inline bool on_curve(const WeierstrassCurve& E, const CurvePoint& P) { return E.on_curve(P); }

namespace detail {

inline CurvePoint add_unchecked(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  Rational lambda, nu;
  if (P.x == Q.x) {
    if (P.y + Q.y + E.a1 * Q.x + E.a3 == Rational(0)) return CurvePoint::at_infinity();
    Rational num = Rational(3) * P.x * P.x + Rational(2) * E.a2 * P.x + E.a4 - E.a1 * P.y;
    Rational den = Rational(2) * P.y + E.a1 * P.x + E.a3;
    lambda = num / den;
    nu = (-P.x * P.x * P.x + E.a4 * P.x + Rational(2) * E.a6 - E.a3 * P.y) / den;
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
    nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
  }
  Rational x3 = lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x;
  Rational y3 = -(lambda + E.a1) * x3 - nu - E.a3;
  return CurvePoint::affine(x3, y3);
}

inline void require_group(const WeierstrassCurve& E, std::initializer_list<const CurvePoint*> pts) {
  if (E.is_singular()) throw Error(Errc::SingularCurve, "curve " + E.to_string() + " is singular");
  for (auto* P : pts)
    if (!E.on_curve(*P)) throw Error(Errc::PointNotOnCurve, P->to_string() + " is not on " + E.to_string());
}

inline CurvePoint mul_unchecked(const WeierstrassCurve& E, long n, CurvePoint P) {
  if (n < 0) {
    P = E.neg(P);
    n = -n;
  }
  CurvePoint R = CurvePoint::at_infinity();
  while (n > 0) {
    if (n & 1) R = add_unchecked(E, R, P);
    n >>= 1;
    if (n > 0) P = add_unchecked(E, P, P);
  }
  return R;
}

}  // namespace detail

inline CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  detail::require_group(E, {&P, &Q});
  return detail::add_unchecked(E, P, Q);
}

inline CurvePoint mul(const WeierstrassCurve& E, long n, const CurvePoint& P) {
  detail::require_group(E, {&P});
  return detail::mul_unchecked(E, n, P);
}

/// n P != O for 1 <= n <= 16; rational torsion orders never exceed 12.
inline bool is_nontorsion(const WeierstrassCurve& E, const CurvePoint& P) {
  detail::require_group(E, {&P});
  if (P.infinity) return false;
  CurvePoint Q = P;
  for (int n = 1; n <= 16; ++n) {
    if (Q.infinity) return false;
    Q = detail::add_unchecked(E, Q, P);
  }
  return true;
}

/// (X, Y) -> (u^2 X, u^3 Y) with the least positive integer u making every a_i integral.
struct IntegralModel {
  WeierstrassCurve original;
  WeierstrassCurve model;
  Integer u = 1;

  CurvePoint to_model(const CurvePoint& P) const {
    if (P.infinity) return P;
    Rational u2{Integer(u * u)};
    return CurvePoint::affine(u2 * P.x, u2 * Rational(u) * P.y);
  }
  CurvePoint from_model(const CurvePoint& P) const {
    if (P.infinity) return P;
    Rational u2{Integer(u * u)};
    return CurvePoint::affine(P.x / u2, P.y / (u2 * Rational(u)));
  }
};

inline IntegralModel integral_model(const WeierstrassCurve& E) {
  const std::pair<const Rational*, unsigned> coeffs[] = {{&E.a1, 1}, {&E.a2, 2}, {&E.a3, 3}, {&E.a4, 4}, {&E.a6, 6}};
  std::map<Integer, unsigned long> need;  // prime -> exponent of u
  for (auto& [c, w] : coeffs) {
    if (c->is_integer()) continue;
    auto tf = trial_factor(c->den());
    if (tf.cofactor > 1) tf.factors.emplace_back(tf.cofactor, 1);  // treat as prime; over-scaling stays valid
    for (auto& [p, e] : tf.factors) {
      unsigned long k = (e + w - 1) / w;
      need[p] = std::max(need[p], k);
    }
  }
  IntegralModel m;
  m.original = E;
  for (auto& [p, k] : need) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    m.u *= pk;
  }
  Rational u(m.u);
  m.model = {E.a1 * u, E.a2 * u.pow(2), E.a3 * u.pow(3), E.a4 * u.pow(4), E.a6 * u.pow(6)};
  return m;
}

/// X = m/e^2 with 1 <= e <= max_e, gcd(m, e) = 1 and |m| <= max_x * e^2,
/// i.e. |X| <= max_x on the integral model.
struct SearchBounds {
  Integer max_x = 1000;
  long max_e = 1;
};

namespace detail {

// Points of the integral model with X = m/e^2 for m in [lo, hi].
inline std::vector<CurvePoint> search_range(const WeierstrassCurve& M, long e, const Integer& lo, const Integer& hi) {
  std::vector<CurvePoint> out;
  Integer a1 = M.a1.num(), a2 = M.a2.num(), a3 = M.a3.num(), a4 = M.a4.num(), a6 = M.a6.num();
  Integer E(e), e2 = E * E, e3 = e2 * E, e4 = e2 * e2, e6 = e3 * e3;
  Integer c2 = a2 * e2, c4 = a4 * e4, c6 = a6 * e6, ce = a1 * E, c3 = a3 * e3;
  Integer R, B, disc, s, n;
  for (Integer m = lo; m <= hi; ++m) {
    if (e > 1 && gcd(m, E) != 1) continue;
    // n^2 + B n - R = 0 with Y = n/e^3
    R = ((m + c2) * m + c4) * m + c6;
    B = ce * m + c3;
    disc = B * B + 4 * R;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    Integer n1 = -B - s, n2 = -B + s;
    if (mpz_odd_p(n1.get_mpz_t())) continue;
    Rational X(m, e2);
    out.push_back(CurvePoint::affine(X, Rational(Integer(n1 / 2), e3)));
    if (s != 0) out.push_back(CurvePoint::affine(X, Rational(Integer(n2 / 2), e3)));
  }
  return out;
}

}  // namespace detail

/// Points found on the integral model, mapped back to E; ordered by e, then
/// m, then Y. Output is independent of `jobs`.
inline std::vector<CurvePoint> search_points(const WeierstrassCurve& E, const SearchBounds& bounds, unsigned jobs = 1) {
  if (E.is_singular()) throw Error(Errc::SingularCurve, "search on a singular curve");
  IntegralModel im = integral_model(E);
  struct Task {
    long e;
    Integer lo, hi;
  };
  std::vector<Task> tasks;
  const Integer chunk = 4096;
  for (long e = 1; e <= bounds.max_e; ++e) {
    Integer lim = bounds.max_x * e * e;
    for (Integer lo = -lim; lo <= lim; lo += chunk) {
      Integer hi = lo + chunk - 1;
      if (hi > lim) hi = lim;
      tasks.push_back({e, lo, hi});
    }
  }
  auto parts = parallel_map<std::vector<CurvePoint>>(tasks.size(), jobs, [&](std::size_t k) {
    return detail::search_range(im.model, tasks[k].e, tasks[k].lo, tasks[k].hi);
  });
  std::vector<CurvePoint> out;
  for (auto& part : parts)
    for (auto& P : part) out.push_back(im.from_model(P));
  return out;
}

// ---------------------------------------------------------------------------
// The family E_t : Y^2 = X^3 - 25 t^4 X^2 - 2500 D^2 t^4 behind the F(x), G(x) pair.

inline WeierstrassCurve specialization_curve(const Integer& c, const Integer& f, const Rational& t) {
  if (c == f) throw Error(Errc::DegenerateSpecialization, "c = f");
  if (t.is_zero()) throw Error(Errc::DegenerateSpecialization, "t = 0");
  Rational t4 = t.pow(4);
  Rational D{Integer(c - f)};
  return {0, Rational(-25) * t4, 0, 0, Rational(-2500) * D * D * t4};
}

struct TableRow {
  Integer D;
  Rational t;
  CurvePoint P;
};

inline std::vector<TableRow> shipped_table() {
  std::vector<TableRow> rows;
  for (auto& r : kSpecializationTable) {
    rows.push_back({Integer(r.D), Rational::parse(r.t), CurvePoint::affine(Rational::parse(r.X), Rational::parse(r.Y))});
  }
  return rows;
}

struct TableRowReport {
  TableRow row;
  bool on_curve = false;
  bool nontorsion = false;
  bool pass = false;
  std::string error;
};

inline TableRowReport verify_row(const TableRow& row) {
  TableRowReport rep;
  rep.row = row;
  try {
    auto E = specialization_curve(row.D, Integer(0), row.t);
    rep.on_curve = E.on_curve(row.P);
    rep.nontorsion = rep.on_curve && !E.is_singular() && is_nontorsion(E, row.P);
  } catch (const Error& e) {
    rep.error = e.what();
  }
  rep.pass = rep.on_curve && rep.nontorsion;
  return rep;
}

inline std::vector<TableRowReport> table_verify(const std::vector<TableRow>& rows, unsigned jobs = 1) {
  return parallel_map<TableRowReport>(rows.size(), jobs, [&](std::size_t k) { return verify_row(rows[k]); });
}

inline void write_table_csv(std::ostream& os, const std::vector<TableRowReport>& rows) {
  os << "D,t,X,Y,status\n";
  for (auto& r : rows) {
    os << r.row.D.get_str() << ',' << r.row.t.to_string() << ',';
    if (r.row.P.infinity) os << ",";
    else os << r.row.P.x.to_string() << ',' << r.row.P.y.to_string();
    os << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
}

/// Reads "D,t,X,Y" rows (a trailing status column is ignored).
inline std::vector<TableRow> read_table_csv(std::istream& is) {
  std::vector<TableRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("D,", 0) == 0) continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() < 4) throw Error(Errc::ParseError, "table row needs D,t,X,Y: '" + line + "'");
    rows.push_back({parse_integer(cells[0]), Rational::parse(cells[1]),
                    CurvePoint::affine(Rational::parse(cells[2]), Rational::parse(cells[3]))});
  }
  return rows;
}

/// Positive rationals with max(num, den) <= max_height, ordered by height,
/// then denominator, then numerator. E_t depends on t only through t^4.
inline std::vector<Rational> t_candidates(long max_height) {
  std::vector<Rational> out;
  for (long h = 1; h <= max_height; ++h) {
    for (long d = 1; d <= h; ++d) {
      for (long n = 1; n <= h; ++n) {
        if (std::max(n, d) != h || std::gcd(n, d) != 1) continue;
        out.emplace_back(Integer(n), Integer(d));
      }
    }
  }
  return out;
}

struct SpecializationHit {
  Rational t;
  CurvePoint P;
};

/// First nontorsion point found on E_t for a nonsingular specialization, with
/// t scanned in `candidates` order. Candidates are tried in parallel batches;
/// the earliest hit in order wins.
inline std::optional<SpecializationHit> conjecture2_search(const Integer& c, const Integer& f,
                                                           const std::vector<Rational>& candidates,
                                                           const SearchBounds& bounds, unsigned jobs = 1) {
  if (c == f) throw Error(Errc::DegenerateSpecialization, "c = f");
  std::size_t batch = std::max<std::size_t>(1, 2 * static_cast<std::size_t>(jobs));
  for (std::size_t start = 0; start < candidates.size(); start += batch) {
    std::size_t count = std::min(batch, candidates.size() - start);
    auto hits = parallel_map<std::optional<SpecializationHit>>(count, jobs, [&](std::size_t k) {
      const Rational& t = candidates[start + k];
      auto E = specialization_curve(c, f, t);
      if (E.is_singular()) return std::optional<SpecializationHit>{};
      for (auto& P : search_points(E, bounds, 1)) {
        if (is_nontorsion(E, P)) return std::optional<SpecializationHit>{SpecializationHit{t, P}};
      }
      return std::optional<SpecializationHit>{};
    });
    for (auto& h : hits)
      if (h) return h;
  }
  return std::nullopt;
}

}  // namespace quintic
