#pragma once

// Sparse multivariate polynomials and rational functions over Q or Q(i).
// Variables are identified by (case-sensitive) name and kept in sorted order;
// terms are keyed by exponent vectors in graded-lexicographic order.

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/exact.hpp"

namespace quintic {

using Exponents = std::vector<unsigned>;

struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

template <ExactField K>
class MultiPoly {
 public:
  using Terms = std::map<Exponents, K, GradedLex>;

  MultiPoly() = default;
  MultiPoly(const K& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(K(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c) requires(!std::same_as<K, Rational>)  // NOLINT
      : MultiPoly(K(c)) {}

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, K(1));
    return p;
  }

  /// Several variables at once: auto [x, y] = MultiPoly::variables<2>({"x","y"}).
  template <std::size_t N>
  static std::array<MultiPoly, N> variables(const std::array<const char*, N>& names) {
    std::array<MultiPoly, N> out;
    for (std::size_t k = 0; k < N; ++k) out[k] = variable(names[k]);
    return out;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }

  K constant_value() const {
    if (!is_constant()) throw Error(Errc::InvalidInput, "polynomial is not constant");
    return terms_.empty() ? K(0) : terms_.begin()->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) {
      unsigned s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  unsigned degree_in(const std::string& var) const {
    auto idx = index_of(var);
    if (!idx) return 0;
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[*idx]);
    return d;
  }

  bool has_variable(const std::string& var) const { return index_of(var).has_value(); }

  /// Coefficient of var^k, a polynomial in the remaining variables.
  MultiPoly coefficient(const std::string& var, unsigned k) const {
    auto idx = index_of(var);
    if (!idx) return k == 0 ? *this : MultiPoly();
    MultiPoly out;
    out.vars_ = vars_;
    for (auto& [e, c] : terms_) {
      if (e[*idx] != k) continue;
      Exponents ne = e;
      ne[*idx] = 0;
      out.terms_.emplace(std::move(ne), c);
    }
    out.trim();
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, true); }
  MultiPoly& operator*=(const MultiPoly& o) { *this = multiply(*this, o); return *this; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b); }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result(K(1)), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  MultiPoly scaled(const K& s) const {
    if (s.is_zero()) return MultiPoly();
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c *= s;
    return out;
  }

  /// The highest term in graded-lex order.
  std::pair<Exponents, K> leading_term() const {
    if (is_zero()) throw Error(Errc::InvalidInput, "leading term of zero polynomial");
    auto it = std::prev(terms_.end());
    return *it;
  }

  K eval(const std::map<std::string, K>& point) const {
    std::vector<K> values;
    values.reserve(vars_.size());
    for (auto& v : vars_) {
      auto it = point.find(v);
      if (it == point.end()) throw Error(Errc::InvalidInput, "no value bound for variable '" + v + "'");
      values.push_back(it->second);
    }
    std::vector<std::vector<K>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) powers[i].push_back(K(1));
    K total(0);
    for (auto& [e, c] : terms_) {
      K term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * values[i]);
        if (e[i]) term *= powers[i][e[i]];
      }
      total += term;
    }
    return total;
  }

  /// Polynomial composition; unbound variables stay symbolic.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
    std::vector<MultiPoly> images;
    for (auto& v : vars_) {
      auto it = bindings.find(v);
      images.push_back(it == bindings.end() ? variable(v) : it->second);
    }
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) powers[i].push_back(MultiPoly(K(1)));
    MultiPoly total;
    for (auto& [e, c] : terms_) {
      MultiPoly term(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
        if (e[i]) term *= powers[i][e[i]];
      }
      total += term;
    }
    return total;
  }

  /// Exact quotient when `d` divides this polynomial, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    MultiPoly rem = *this, quot;
    auto [dlead_e, dlead_c] = d.leading_term();
    std::vector<std::string> all = merge_vars(vars_, d.vars_);
    MultiPoly dd = d.with_vars(all);
    Exponents dle = dd.leading_term().first;
    while (!rem.is_zero()) {
      MultiPoly r = rem.with_vars(all);
      auto [re, rc] = r.leading_term();
      Exponents qe(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (re[i] < dle[i]) return std::nullopt;
        qe[i] = re[i] - dle[i];
      }
      MultiPoly mono;
      mono.vars_ = all;
      mono.terms_.emplace(qe, rc / dlead_c);
      mono.trim();
      quot += mono;
      rem -= mono * d;
    }
    return quot;
  }

  /// Replace var^2 by `square` repeatedly so that the result has degree <= 1 in var.
  MultiPoly reduce_square(const std::string& var, const MultiPoly& square) const {
    unsigned deg = degree_in(var);
    if (deg < 2) return *this;
    std::vector<MultiPoly> coeffs(deg + 1);
    for (unsigned k = 0; k <= deg; ++k) coeffs[k] = coefficient(var, k);
    for (unsigned k = deg; k >= 2; --k) {
      if (coeffs[k].is_zero()) continue;
      coeffs[k - 2] += coeffs[k] * square;
      coeffs[k] = MultiPoly();
    }
    return coeffs[0] + coeffs[1] * variable(var);
  }

  template <class F>
  auto map_coefficients(F&& fn) const {
    using K2 = std::decay_t<decltype(fn(std::declval<K>()))>;
    MultiPoly<K2> out;
    for (auto& [e, c] : terms_) {
      K2 v = fn(c);
      if (v.is_zero()) continue;
      MultiPoly<K2> mono(v);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) mono *= MultiPoly<K2>::variable(vars_[i]).pow(e[i]);
      out += mono;
    }
    return out;
  }

  /// "coeff*x^e*y^f" terms, highest graded-lex term first, joined by " + ".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const auto& [e, c] = *it;
      std::string cs = FieldTraits<K>::to_string(c);
      if constexpr (FieldTraits<K>::gaussian) {
        if (!c.is_rational() && !c.re().is_zero()) cs = "(" + cs + ")";
      }
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) out += cs;
      else if (c == K(1)) out += mono;
      else if (c == K(-1)) out += "-" + mono;
      else out += cs + "*" + mono;
    }
    return out;
  }

  // Internal representation change; exposed for the rational-function layer.
  MultiPoly with_vars(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
      where[i] = static_cast<std::size_t>(it - target.begin());
    }
    MultiPoly out;
    out.vars_ = target;
    for (auto& [e, c] : terms_) {
      Exponents ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

 private:
  std::optional<std::size_t> index_of(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  // Drop variables that no longer occur; keeps equality structural.
  void trim() {
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) nv.push_back(vars_[i]);
    Terms nt;
    for (auto& [e, c] : terms_) {
      Exponents ne;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (used[i]) ne.push_back(e[i]);
      nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }

  MultiPoly& accumulate(const MultiPoly& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (vars_ != o.vars_) {
      auto all = merge_vars(vars_, o.vars_);
      *this = with_vars(all);
      return accumulate_same(o.with_vars(all), subtract);
    }
    return accumulate_same(o, subtract);
  }

  MultiPoly& accumulate_same(const MultiPoly& o, bool subtract) {
    for (auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, subtract ? -c : c);
      } else {
        if (subtract) it->second -= c;
        else it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    trim();
    return *this;
  }

  static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    auto all = merge_vars(a.vars_, b.vars_);
    MultiPoly x = a.with_vars(all), y = b.with_vars(all);
    MultiPoly out;
    out.vars_ = all;
    Exponents e(all.size());
    K prod;
    for (auto& [ea, ca] : x.terms_) {
      for (auto& [eb, cb] : y.terms_) {
        for (std::size_t i = 0; i < all.size(); ++i) e[i] = ea[i] + eb[i];
        prod = ca;
        prod *= cb;
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) out.terms_.emplace(e, prod);
        else it->second += prod;
      }
    }
    for (auto it = out.terms_.begin(); it != out.terms_.end();) {
      if (it->second.is_zero()) it = out.terms_.erase(it);
      else ++it;
    }
    out.trim();
    return out;
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

using PolyQ = MultiPoly<Rational>;
using PolyQi = MultiPoly<GaussianRational>;

/// Embed a Q-polynomial into Q(i)[vars].
inline PolyQi lift(const PolyQ& p) {
  return p.map_coefficients([](const Rational& c) { return GaussianRational(c); });
}

/// b^2 - 4ac for p = a*var^2 + b*var + c.
template <ExactField K>
MultiPoly<K> discriminant_quadratic(const MultiPoly<K>& p, const std::string& var) {
  if (p.degree_in(var) != 2) {
    throw Error(Errc::NotQuadratic, "degree in '" + var + "' is " + std::to_string(p.degree_in(var)));
  }
  auto a = p.coefficient(var, 2), b = p.coefficient(var, 1), c = p.coefficient(var, 0);
  return b * b - MultiPoly<K>(K(4)) * a * c;
}

template <ExactField K>
class RationalFunction {
 public:
  using Poly = MultiPoly<K>;

  RationalFunction() : num_(), den_(K(1)) {}
  RationalFunction(Poly num) : num_(std::move(num)), den_(K(1)) {}  // NOLINT
  RationalFunction(const K& c) : num_(c), den_(K(1)) {}            // NOLINT
  template <std::integral I>
  RationalFunction(I c) : num_(K(c)), den_(K(1)) {}  // NOLINT
  RationalFunction(const Rational& c) requires(!std::same_as<K, Rational>)  // NOLINT
      : num_(K(c)), den_(K(1)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::DivisionByZeroPoly, "rational function with zero denominator");
    normalize();
  }

  static RationalFunction variable(const std::string& name) { return RationalFunction(Poly::variable(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_identically_zero() const { return num_.is_zero(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, raw_tag{}); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = add(*this, o, false); }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = add(*this, o, true); }
  RationalFunction& operator*=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    if (o.num_.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero rational function");
    return *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b, false); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, b, true); }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  /// Semantic equality by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }

  RationalFunction pow(int e) const {
    if (e < 0) return RationalFunction(den_, num_).pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  K eval(const std::map<std::string, K>& point) const {
    K d = den_.eval(point);
    if (d.is_zero()) throw Error(Errc::PoleAtPoint, "denominator " + den_.to_string() + " vanishes");
    return num_.eval(point) / d;
  }

  /// Scale numerator and denominator so the leading denominator coefficient is 1.
  RationalFunction monic_denominator() const {
    K lead = den_.leading_term().second;
    K inv = K(1) / lead;
    return RationalFunction(num_.scaled(inv), den_.scaled(inv), raw_tag{});
  }

  /// Cancel `factor` from numerator and denominator when it divides both exactly.
  RationalFunction cancel(const Poly& factor) const {
    auto n = num_.divide_exact(factor);
    auto d = den_.divide_exact(factor);
    if (!n || !d) return *this;
    return RationalFunction(*n, *d);
  }

  std::string to_string() const {
    if (den_ == Poly(K(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  struct raw_tag {};
  RationalFunction(Poly n, Poly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (num_.is_zero()) { den_ = Poly(K(1)); return; }
    if (den_.is_constant()) {
      K inv = K(1) / den_.constant_value();
      num_ = num_.scaled(inv);
      den_ = Poly(K(1));
      return;
    }
    if (num_ == den_) { num_ = Poly(K(1)); den_ = Poly(K(1)); }
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
    if (a.den_ == b.den_) {
      return RationalFunction(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
    }
    Poly cross = subtract ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
    return RationalFunction(cross, a.den_ * b.den_);
  }

  Poly num_;
  Poly den_;
};

using RatFunQ = RationalFunction<Rational>;
using RatFunQi = RationalFunction<GaussianRational>;

inline RatFunQi lift(const RatFunQ& f) { return RatFunQi(lift(f.num()), lift(f.den())); }

/// Substitute rational functions for variables of a polynomial. Bindings that
/// share a denominator are grouped so the result carries the smallest power of
/// it that each group needs.
template <ExactField K>
RationalFunction<K> substitute(const MultiPoly<K>& target,
                               const std::map<std::string, RationalFunction<K>>& bindings) {
  using Poly = MultiPoly<K>;
  const auto& vars = target.vars();
  std::vector<Poly> nums, dens;
  std::vector<int> group(vars.size(), -1);
  std::vector<Poly> group_den;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    if (it == bindings.end()) {
      nums.push_back(Poly::variable(vars[i]));
      dens.push_back(Poly(K(1)));
    } else {
      if (it->second.den().is_zero()) throw Error(Errc::DivisionByZeroPoly, "binding denominator is zero");
      nums.push_back(it->second.num());
      dens.push_back(it->second.den());
    }
    if (dens.back().is_constant()) continue;
    for (std::size_t g = 0; g < group_den.size(); ++g) {
      if (group_den[g] == dens.back()) { group[i] = static_cast<int>(g); break; }
    }
    if (group[i] < 0) {
      group[i] = static_cast<int>(group_den.size());
      group_den.push_back(dens.back());
    }
  }
  // needed power of each group's denominator
  std::vector<unsigned> need(group_den.size(), 0);
  for (auto& [e, c] : target.terms()) {
    std::vector<unsigned> s(group_den.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (group[i] >= 0) s[group[i]] += e[i];
    for (std::size_t g = 0; g < s.size(); ++g) need[g] = std::max(need[g], s[g]);
  }
  std::vector<std::vector<Poly>> npow(vars.size(), std::vector<Poly>{Poly(K(1))});
  std::vector<std::vector<Poly>> gpow(group_den.size(), std::vector<Poly>{Poly(K(1))});
  auto get = [](std::vector<Poly>& cache, const Poly& base, unsigned e) -> const Poly& {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  Poly numerator;
  for (auto& [e, c] : target.terms()) {
    Poly term(c);
    std::vector<unsigned> s(group_den.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      term *= get(npow[i], nums[i], e[i]);
      if (group[i] >= 0) {
        s[group[i]] += e[i];
      } else if (!dens[i].is_constant() || dens[i].constant_value() != K(1)) {
        term = term.scaled(K(1) / dens[i].constant_value().pow(static_cast<long>(e[i])));
      }
    }
    for (std::size_t g = 0; g < group_den.size(); ++g) {
      if (need[g] > s[g]) term *= get(gpow[g], group_den[g], need[g] - s[g]);
    }
    numerator += term;
  }
  Poly denominator(K(1));
  for (std::size_t g = 0; g < group_den.size(); ++g)
    denominator *= get(gpow[g], group_den[g], need[g]);
  return RationalFunction<K>(numerator, denominator);
}

template <ExactField K>
RationalFunction<K> substitute(const RationalFunction<K>& target,
                               const std::map<std::string, RationalFunction<K>>& bindings) {
  return substitute(target.num(), bindings) / substitute(target.den(), bindings);
}

template <ExactField K>
bool is_identically_zero(const RationalFunction<K>& f) {
  return f.is_identically_zero();
}

}  // namespace quintic
