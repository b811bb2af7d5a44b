#pragma once

// Diagonal quaternary forms a1 X1^2 + a2 X2^2 + a3 X3^2 + a4 X4^2: Jones'
// solvability criterion, a brute-force local oracle, witness search, and the
// ternary x^2 + 2y^2 + 3z^2 = -5a used for the b = 0 family.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/exact.hpp"
#include "quintic/parallel.hpp"
#include "quintic/poly.hpp"

namespace quintic {

using Coeffs4 = std::array<Integer, 4>;

struct DiagonalForm {
  Coeffs4 a;

  Integer discriminant() const { return a[0] * a[1] * a[2] * a[3]; }

  Integer eval(const std::array<Integer, 4>& x) const {
    Integer s = 0;
    for (int i = 0; i < 4; ++i) s += a[i] * x[i] * x[i];
    return s;
  }

  /// Squarefree coefficients, no prime dividing three of them.
  bool is_normalized() const {
    for (auto& c : a) {
      if (c == 0) return false;
      if (squarefree_decompose(c).square_root_cofactor != 1) return false;
    }
    for (int skip = 0; skip < 4; ++skip) {
      Integer g = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) g = gcd(g, a[i]);
      if (g != 1) return false;
    }
    return true;
  }
};

/// Result of normalize: sum g_i (k_i X_i)^2 = multiplier * sum a_i X_i^2.
struct Normalization {
  DiagonalForm raw;
  DiagonalForm form;
  std::array<Integer, 4> scale{1, 1, 1, 1};
  Rational multiplier = 1;
  std::vector<std::string> trace;
};

inline Normalization normalize(const Coeffs4& raw) {
  for (auto& c : raw)
    if (c == 0) throw Error(Errc::ZeroCoefficient, "form coefficients must be nonzero");
  Normalization n;
  n.raw.a = raw;
  Coeffs4 g = raw;
  auto absorb_squares = [&] {
    for (int i = 0; i < 4; ++i) {
      auto sd = squarefree_decompose(g[i]);
      if (sd.square_root_cofactor != 1) {
        n.trace.push_back("X" + std::to_string(i + 1) + " scaled by " + sd.square_root_cofactor.get_str());
        n.scale[i] *= sd.square_root_cofactor;
        g[i] = sd.squarefree_part;
      }
    }
  };
  absorb_squares();
  for (bool changed = true; changed;) {
    changed = false;
    Integer all = gcd(gcd(g[0], g[1]), gcd(g[2], g[3]));
    if (all != 1) {
      for (auto& c : g) c /= all;
      n.multiplier /= Rational(all);
      n.trace.push_back("form divided by " + all.get_str());
      changed = true;
      continue;
    }
    for (int skip = 0; skip < 4 && !changed; ++skip) {
      Integer c3 = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) c3 = gcd(c3, g[i]);
      if (c3 == 1) continue;
      // multiply by c3 and move it from three coefficients into their variables
      for (int i = 0; i < 4; ++i) {
        if (i == skip) {
          g[i] *= c3;
        } else {
          g[i] /= c3;
          n.scale[i] *= c3;
        }
      }
      n.multiplier *= Rational(c3);
      n.trace.push_back("common factor " + c3.get_str() + " of three coefficients moved to X" +
                        std::to_string(skip + 1));
      changed = true;
    }
    if (changed) absorb_squares();
  }
  n.form.a = g;
  return n;
}

struct OddPrimeCondition {
  Integer p;
  bool applies = false;  // (d/p^2 | p) = 1
  bool ok = true;
};

struct JonesReport {
  bool signs = false;
  std::vector<OddPrimeCondition> odd_primes;
  bool two_adic_applies = false;
  bool two_adic = true;
  bool solvable = false;
};

namespace detail {

inline std::vector<Integer> prime_divisors(const Integer& n) {
  auto tf = trial_factor(n);
  if (tf.cofactor > 1) throw Error(Errc::InvalidInput, "coefficient too large to factor: " + n.get_str());
  std::vector<Integer> out;
  for (auto& [p, e] : tf.factors) out.push_back(p);
  return out;
}

inline bool mixed_signs(const DiagonalForm& f) {
  bool pos = false, neg = false;
  for (auto& c : f.a) (c > 0 ? pos : neg) = true;
  return pos && neg;
}

}  // namespace detail

/// Jones' three conditions for a normalized form.
inline JonesReport represents_zero_report(const DiagonalForm& f) {
  if (!f.is_normalized()) throw Error(Errc::NotNormalized, "represents_zero needs a normalized form");
  JonesReport rep;
  rep.signs = detail::mixed_signs(f);
  Integer d = f.discriminant();
  std::set<Integer> seen;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Integer g = gcd(f.a[i], f.a[j]);
      if (g == 1) continue;
      for (auto& p : detail::prime_divisors(g)) {
        if (p == 2 || !seen.insert(p).second) continue;
        OddPrimeCondition c;
        c.p = p;
        c.applies = legendre(d / (p * p), p) == 1;
        if (c.applies) {
          Integer rest = 1;
          for (int k = 0; k < 4; ++k)
            if (k != i && k != j) rest *= f.a[k];
          c.ok = legendre(-rest, p) == 1;
        }
        rep.odd_primes.push_back(c);
      }
    }
  }
  std::sort(rep.odd_primes.begin(), rep.odd_primes.end(),
            [](auto& x, auto& y) { return x.p < y.p; });
  bool d1 = mod_floor(d, 8) == 1;
  bool d4 = mod_floor(d, 4) == 0 && mod_floor(d / 4, 8) == 1;
  rep.two_adic_applies = d1 || d4;
  if (rep.two_adic_applies) {
    rep.two_adic = hilbert2(-f.a[0] * f.a[1], -f.a[1] * f.a[2]) == 1;
  }
  rep.solvable = rep.signs && rep.two_adic &&
                 std::all_of(rep.odd_primes.begin(), rep.odd_primes.end(), [](auto& c) { return c.ok; });
  return rep;
}

inline bool represents_zero(const DiagonalForm& f) { return represents_zero_report(f).solvable; }

// ---------------------------------------------------------------------------
// Brute-force local oracle.
//
// A primitive residue solution whose best partial derivative 2 a_i x_i has
// p-adic valuation delta, taken modulo p^(2 delta + 1), lifts to Z_p. For a
// normalized form delta <= 1 at odd p (checked modulo p^3) and delta <= 2 at
// p = 2 (checked modulo 2^6).

namespace detail {

inline long vp_long(long x, long p) {
  if (x == 0) return 1000;
  long v = 0;
  while (x % p == 0) { x /= p; ++v; }
  return v;
}

inline long mod_long(const Integer& a, long m) { return mod_floor(a, Integer(m)).get_si(); }

// Moves of one variable: distinct (contribution mod m, flag) pairs.
using Moves = std::vector<std::pair<long, int>>;

inline Moves dedupe(Moves mv) {
  std::sort(mv.begin(), mv.end());
  mv.erase(std::unique(mv.begin(), mv.end()), mv.end());
  return mv;
}

// Reachable (residue, flag) states after summing one move per variable.
template <class Combine>
std::vector<char> reach_states(long m, int nflags, int init_flag, const std::vector<Moves>& vars, Combine comb) {
  std::vector<char> seen(static_cast<std::size_t>(m * nflags), 0);
  std::vector<long> cur{init_flag};
  for (const auto& mv : vars) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<long> next;
    for (long st : cur) {
      long r = st / nflags;
      int fl = static_cast<int>(st % nflags);
      for (auto& [c, f] : mv) {
        long id = ((r + c) % m) * nflags + comb(fl, f);
        if (!seen[id]) {
          seen[id] = 1;
          next.push_back(id);
        }
      }
    }
    cur.swap(next);
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (long st : cur) seen[st] = 1;
  return seen;
}

// Odd p, at most two coefficients divisible by p (each exactly once).
inline bool oracle_odd_prime(const DiagonalForm& f, long p) {
  auto either = [](int a, int b) { return a | b; };
  // delta = 0: a unit-coefficient variable with unit value, form = 0 mod p.
  {
    std::vector<Moves> vars;
    for (int i = 0; i < 4; ++i) {
      long ai = mod_long(f.a[i], p);
      Moves mv;
      for (long x = 0; x < p; ++x) mv.emplace_back(ai * x % p * x % p, ai != 0 && x != 0);
      vars.push_back(dedupe(std::move(mv)));
    }
    if (reach_states(p, 2, 0, vars, either)[1]) return true;
  }
  // delta = 1: unit-coefficient variables are p*y, a p-coefficient variable is
  // a unit; after dividing by p the condition is modulo p^2.
  long m = p * p;
  std::vector<Moves> vars;
  for (int i = 0; i < 4; ++i) {
    Moves mv;
    if (mod_long(f.a[i], p) == 0) {
      long b = mod_long(f.a[i] / p, m);
      for (long x = 0; x < m; ++x) mv.emplace_back(b * (x * x % m) % m, x % p != 0);
    } else {
      long ai = mod_long(f.a[i], m);
      for (long y = 0; y < p; ++y) mv.emplace_back(p * (ai * (y * y % m) % m) % m, 0);
    }
    vars.push_back(dedupe(std::move(mv)));
  }
  return reach_states(m, 2, 0, vars, either)[1];
}

inline bool oracle_two(const DiagonalForm& f) {
  const long m = 64;
  // flag = primitive bit + 2 * (min delta, 7 = none yet)
  auto comb = [](int a, int b) { return (a & 1) | (b & 1) | (2 * std::min(a >> 1, b >> 1)); };
  std::vector<Moves> vars;
  for (int i = 0; i < 4; ++i) {
    long ai = mod_long(f.a[i], m);
    long va = static_cast<long>(split_prime_power(f.a[i], Integer(2)).first);
    Moves mv;
    for (long x = 0; x < m; ++x) {
      long delta = x == 0 ? 7 : std::min<long>(7, 1 + va + vp_long(x, 2));
      mv.emplace_back(ai * (x * x % m) % m, static_cast<int>((x % 2) | (2 * delta)));
    }
    vars.push_back(dedupe(std::move(mv)));
  }
  auto seen = reach_states(m, 16, 2 * 7, vars, comb);
  for (int d = 0; d <= 2; ++d)
    if (seen[1 + 2 * d]) return true;
  return false;
}

}  // namespace detail

struct LocalReport {
  bool real = false;
  std::vector<std::pair<Integer, bool>> primes;  // p | 2d with verdict
  bool solvable = false;
};

inline LocalReport local_oracle_report(const DiagonalForm& f) {
  if (!f.is_normalized()) throw Error(Errc::NotNormalized, "local_oracle needs a normalized form");
  LocalReport rep;
  rep.real = detail::mixed_signs(f);
  std::set<Integer> primes{Integer(2)};
  for (auto& c : f.a) {
    Integer m = c < 0 ? Integer(-c) : c;
    if (m > 1)
      for (auto& p : detail::prime_divisors(m)) primes.insert(p);
  }
  bool all = rep.real;
  for (auto& p : primes) {
    if (!p.fits_slong_p() || p > 2000) throw Error(Errc::InvalidInput, "local_oracle prime too large");
    bool ok = p == 2 ? detail::oracle_two(f) : detail::oracle_odd_prime(f, p.get_si());
    rep.primes.emplace_back(p, ok);
    all = all && ok;
  }
  rep.solvable = all;
  return rep;
}

inline bool local_oracle(const DiagonalForm& f) { return local_oracle_report(f).solvable; }

/// Primitive zero with all |X_i| <= bound: shells of increasing max-norm,
/// lexicographic inside a shell, nonnegative coordinates.
inline std::optional<std::array<Integer, 4>> find_zero(const DiagonalForm& f, long bound) {
  bool small = bound < (1L << 20);
  for (auto& c : f.a) small = small && c.fits_slong_p() && abs(c) < (1L << 20);
  if (small) {
    // every partial sum stays below 4 * 2^20 * 2^40 in magnitude
    long a[4];
    for (int i = 0; i < 4; ++i) a[i] = f.a[i].get_si();
    for (long n = 1; n <= bound; ++n)
      for (long x1 = 0; x1 <= n; ++x1)
        for (long x2 = 0; x2 <= n; ++x2)
          for (long x3 = 0; x3 <= n; ++x3) {
            long q = -(a[0] * x1 * x1 + a[1] * x2 * x2 + a[2] * x3 * x3);
            if (q % a[3] != 0) continue;
            q /= a[3];
            if (q < 0) continue;
            long r = static_cast<long>(std::sqrt(static_cast<double>(q)));
            while (r * r > q) --r;
            while ((r + 1) * (r + 1) <= q) ++r;
            if (r * r != q || r > n) continue;
            if (std::max({x1, x2, x3, r}) != n) continue;
            if (std::gcd(std::gcd(x1, x2), std::gcd(x3, r)) != 1) continue;
            return std::array<Integer, 4>{x1, x2, x3, r};
          }
    return std::nullopt;
  }
  for (long n = 1; n <= bound; ++n) {
    for (long x1 = 0; x1 <= n; ++x1)
      for (long x2 = 0; x2 <= n; ++x2)
        for (long x3 = 0; x3 <= n; ++x3) {
          Integer q = -(f.a[0] * x1 * x1 + f.a[1] * x2 * x2 + f.a[2] * x3 * x3);
          if (!mpz_divisible_p(q.get_mpz_t(), f.a[3].get_mpz_t())) continue;
          q /= f.a[3];
          auto r = integer_square_root(q);
          if (!r || *r > n) continue;
          if (std::max({x1, x2, x3}) != n && *r != n) continue;
          if (gcd(gcd(Integer(x1), Integer(x2)), gcd(Integer(x3), *r)) != 1) continue;
          return std::array<Integer, 4>{x1, x2, x3, *r};
        }
  }
  return std::nullopt;
}

struct AgreementSweep {
  long limit = 0;
  std::size_t forms = 0;
  std::size_t solvable = 0;
  std::vector<Coeffs4> disagreements;
};

/// Jones versus the local oracle on every normalized form a1 <= a2 <= a3 <= a4
/// with |a_i| <= limit; work is split on a1 and merged in order.
inline AgreementSweep agreement_sweep(long limit, unsigned jobs = 1) {
  std::vector<long> vals;
  for (long v = -limit; v <= limit; ++v)
    if (v != 0 && squarefree_decompose(v).square_root_cofactor == 1) vals.push_back(v);
  struct Chunk {
    std::size_t forms = 0, solvable = 0;
    std::vector<Coeffs4> bad;
  };
  auto chunks = parallel_map<Chunk>(vals.size(), jobs, [&](std::size_t i0) {
    Chunk c;
    for (std::size_t i1 = i0; i1 < vals.size(); ++i1)
      for (std::size_t i2 = i1; i2 < vals.size(); ++i2)
        for (std::size_t i3 = i2; i3 < vals.size(); ++i3) {
          DiagonalForm f{{Integer(vals[i0]), Integer(vals[i1]), Integer(vals[i2]), Integer(vals[i3])}};
          if (!f.is_normalized()) continue;
          ++c.forms;
          bool j = represents_zero(f);
          if (j) ++c.solvable;
          if (j != local_oracle(f)) c.bad.push_back(f.a);
        }
    return c;
  });
  AgreementSweep out;
  out.limit = limit;
  for (auto& c : chunks) {
    out.forms += c.forms;
    out.solvable += c.solvable;
    out.disagreements.insert(out.disagreements.end(), c.bad.begin(), c.bad.end());
  }
  return out;
}

struct FormReport {
  Normalization normalization;
  JonesReport jones;
  std::optional<std::array<Integer, 4>> witness;
};

/// Full decision for a raw form; the witness is searched on the raw form.
inline FormReport solve_form(const Coeffs4& raw, long bound) {
  FormReport rep;
  rep.normalization = normalize(raw);
  rep.jones = represents_zero_report(rep.normalization.form);
  if (rep.jones.solvable) rep.witness = find_zero(rep.normalization.raw, bound);
  return rep;
}

// ---------------------------------------------------------------------------
// The ternary x^2 + 2y^2 + 3z^2 = -5a.

struct TernarySolution {
  Rational x, y, z;
};

inline Rational ternary_value(const TernarySolution& s) {
  return s.x * s.x + Rational(2) * s.y * s.y + Rational(3) * s.z * s.z;
}

/// Solvable over Q with a < 0 only; a = 0 has just the zero solution.
inline bool ternary_solvable(const Integer& a) {
  if (a >= 0) return false;
  return represents_zero(normalize({Integer(1), Integer(2), Integer(3), Integer(5 * a)}).form);
}

inline bool ternary_local_oracle(const Integer& a) {
  if (a >= 0) return false;
  return local_oracle(normalize({Integer(1), Integer(2), Integer(3), Integer(5 * a)}).form);
}

/// A rational solution from a witness of x1^2 + 2x2^2 + 3x3^2 + 5a x4^2 = 0.
inline std::optional<TernarySolution> ternary_base_point(const Integer& a, long bound) {
  if (a >= 0) return std::nullopt;
  DiagonalForm raw{{Integer(1), Integer(2), Integer(3), Integer(5 * a)}};
  auto w = find_zero(raw, bound);
  if (!w || (*w)[3] == 0) return std::nullopt;
  Rational d((*w)[3]);
  return TernarySolution{Rational((*w)[0]) / d, Rational((*w)[1]) / d, Rational((*w)[2]) / d};
}

struct ConicParametrization {
  Integer a;
  TernarySolution base;
  RatFunQ x, y, z;
};

/// Lines through the base point with direction (u, v, 1).
inline ConicParametrization parametrize_conic(const Integer& a, const TernarySolution& base) {
  if (ternary_value(base) != Rational(Integer(-5 * a))) {
    throw Error(Errc::BaseNotOnConic, "base point does not satisfy x^2+2y^2+3z^2 = " + Integer(-5 * a).get_str());
  }
  PolyQ u = PolyQ::variable("u"), v = PolyQ::variable("v");
  PolyQ den = u * u + PolyQ(2) * v * v + PolyQ(3);
  PolyQ lin = u * PolyQ(base.x) + PolyQ(2) * v * PolyQ(base.y) + PolyQ(3) * PolyQ(base.z);
  RatFunQ T(PolyQ(-2) * lin, den);
  ConicParametrization c;
  c.a = a;
  c.base = base;
  c.x = RatFunQ(u) * T + RatFunQ(base.x);
  c.y = RatFunQ(v) * T + RatFunQ(base.y);
  c.z = T + RatFunQ(base.z);
  return c;
}

inline RatFunQ conic_residual(const ConicParametrization& c) {
  return c.x * c.x + RatFunQ(2) * c.y * c.y + RatFunQ(3) * c.z * c.z + RatFunQ(Rational(Integer(5 * c.a)));
}

struct Question3Family {
  Integer g;
  Integer a;
  std::vector<std::array<Integer, 3>> solutions;
};

inline Question3Family question3_family(unsigned N) {
  if (N < 1) throw Error(Errc::InvalidInput, "N must be positive");
  Question3Family fam;
  fam.g = 1;
  for (unsigned k = 1; k <= N; ++k) fam.g *= Integer(k * k + 2);
  Integer five_g = 5 * fam.g;
  fam.a = -five_g * five_g;
  for (long k = 1; k <= static_cast<long>(N); ++k) {
    Integer m = five_g / Integer(k * k + 2);
    fam.solutions.push_back({m * (2 * k + 3), m * (k * k + 3 * k - 2), m * (k * k - 2 * k - 1)});
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Which -a in a range make the ternary insolvable, read modulo 48.

struct CongruenceSweep {
  long lo = 1, hi = 200;                  // range of N = -a
  std::vector<long> insolvable;           // N with no rational solution
  std::set<long> residues;                // N mod 48 over insolvable N
  std::vector<long> mixed_residues;       // residues containing both outcomes
  std::vector<long> disagreements;        // Jones vs oracle
  bool matches_abstract = false;          // residues == {2, 18, 34} and residue-determined
  bool statement_literal_fails = false;   // the a (not -a) reading misclassifies some a < 0
};

inline CongruenceSweep theorem2_congruence_sweep(long lo = 1, long hi = 200) {
  CongruenceSweep s;
  s.lo = lo;
  s.hi = hi;
  std::set<long> solvable_res;
  for (long N = lo; N <= hi; ++N) {
    Integer a(-N);
    bool jones = ternary_solvable(a);
    bool oracle = ternary_local_oracle(a);
    if (jones != oracle) s.disagreements.push_back(N);
    if (!jones) {
      s.insolvable.push_back(N);
      s.residues.insert(N % 48);
    } else {
      solvable_res.insert(N % 48);
    }
    long a_mod = mod_floor(a, Integer(48)).get_si();
    bool literal = a_mod != 2 && a_mod != 18 && a_mod != 34;  // "a < 0 and a not in {2,18,34} mod 48"
    if (literal && !jones) s.statement_literal_fails = true;
  }
  for (long r : s.residues)
    if (solvable_res.count(r)) s.mixed_residues.push_back(r);
  s.matches_abstract = s.residues == std::set<long>{2, 18, 34} && s.mixed_residues.empty();
  return s;
}

}  // namespace quintic
