#pragma once

// Exact scalars: arbitrary-precision integers, rationals, Gaussian rationals,
// and the quadratic-residue symbols used by the solvability criteria.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic {

using Integer = mpz_class;

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return out;
}

/// Canonical rational number: gcd(|num|, den) = 1 and den >= 1.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}         // NOLINT(google-explicit-constructor)
  Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw Error(Errc::ZeroArgument, "rational with zero denominator");
    value_.get_num() = n;
    value_.get_den() = d;
    value_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Accepts "n", "n/d", with optional sign.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer n = parse_integer(text.substr(0, slash));
    Integer d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::ZeroArgument, "rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::ZeroArgument, "inverse of zero");
    return Rational(value_.get_den(), value_.get_num());
  }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.value_.get_num() = n;
    r.value_.get_den() = d;
    return r;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  mpq_class value_;
};

/// Element x + y*i of Q(i), stored as two independent canonical rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I v) : re_(v) {}                     // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& re) : re_(re) {}     // NOLINT(google-explicit-constructor)
  GaussianRational(const Integer& re) : re_(re) {}      // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "3", "-1/2", "2i", "i", "-i", "1/2+3/4i", "1-i"; "re,im" is also accepted.
  static GaussianRational parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw Error(Errc::ParseError, "empty Gaussian rational");
    if (auto comma = s.find(','); comma != std::string::npos) {
      return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
    }
    if (s.back() != 'i') return {Rational::parse(s), Rational(0)};
    s.pop_back();
    // split at the last sign that is not in leading position
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') { split = k; break; }
    }
    auto imag_of = [](const std::string& t) {
      if (t.empty() || t == "+") return Rational(1);
      if (t == "-") return Rational(-1);
      return Rational::parse(t);
    };
    if (split == std::string::npos) return {Rational(0), imag_of(s)};
    return {Rational::parse(s.substr(0, split)), imag_of(s.substr(split))};
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_rational() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw Error(Errc::ZeroArgument, "inverse of zero");
    return {re_ / n, -im_ / n};
  }

  GaussianRational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im_part;
    if (im_ == Rational(1)) im_part = "i";
    else if (im_ == Rational(-1)) im_part = "-i";
    else im_part = im_.to_string() + "i";
    if (re_.is_zero()) return im_part;
    return re_.to_string() + (im_.sign() > 0 ? "+" : "") + im_part;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  Rational re_;
  Rational im_;
};

// Ordering of field elements, used where exact scalar sets need a canonical order.
inline bool scalar_less(const Rational& a, const Rational& b) { return a < b; }
inline bool scalar_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool gaussian = false;
  static constexpr const char* tag = "Q";
  static std::string to_string(const Rational& q) { return q.to_string(); }
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct FieldTraits<GaussianRational> {
  static constexpr bool gaussian = true;
  static constexpr const char* tag = "Qi";
  static std::string to_string(const GaussianRational& z) { return z.to_string(); }
  static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
};

template <class K>
concept ExactField = requires { FieldTraits<K>::gaussian; };

// ---------------------------------------------------------------------------
// Number theory on Integer

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Miller-Rabin with the first twelve prime bases is exact for n < 3.3e24.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (auto a : small) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

/// Deterministic below 2^64, strong probabilistic test above.
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    return detail::is_prime_u64(v);
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Legendre symbol (a|p) by Euler's criterion.
inline int legendre(const Integer& a, const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw Error(Errc::NotOddPrime, "legendre modulus " + p.get_str() + " is not an odd prime");
  }
  Integer r = mod_floor(a, p);
  if (r == 0) return 0;
  Integer e = (p - 1) / 2;
  Integer out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out == 1 ? 1 : -1;
}

/// v_p(n) for n != 0, and n with all factors p removed.
inline std::pair<unsigned long, Integer> split_prime_power(const Integer& n, const Integer& p) {
  Integer rest;
  unsigned long v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return {v, rest};
}

/// 2-adic Hilbert symbol (alpha, beta)_2 via the closed formula with
/// alpha = 2^u a1, beta = 2^v b1 (a1, b1 odd):
///   (2|a1)^v (2|b1)^u (-1)^((a1-1)(b1-1)/4), where (2|x) = (-1)^((x^2-1)/8).
inline int hilbert2(const Integer& alpha, const Integer& beta) {
  if (alpha == 0 || beta == 0) throw Error(Errc::ZeroArgument, "hilbert2 needs nonzero arguments");
  auto [u, a1] = split_prime_power(alpha, Integer(2));
  auto [v, b1] = split_prime_power(beta, Integer(2));
  auto two_char_odd = [](const Integer& x) {  // parity of (x^2-1)/8
    Integer r = mod_floor(x, Integer(8));
    return (r == 3 || r == 5) ? 1 : 0;
  };
  auto eps = [](const Integer& x) {  // parity of (x-1)/2
    return mod_floor(x, Integer(4)) == 3 ? 1 : 0;
  };
  unsigned long exponent = (v % 2) * two_char_odd(a1) + (u % 2) * two_char_odd(b1) + eps(a1) * eps(b1);
  return exponent % 2 == 0 ? 1 : -1;
}

struct SquarefreeDecomposition {
  Integer squarefree_part;       // sign carried here
  Integer square_root_cofactor;  // positive
};

/// Prime factorization by trial division up to `limit`; the unfactored
/// cofactor (> 1 when not fully factored) is returned separately.
struct TrialFactorization {
  std::vector<std::pair<Integer, unsigned long>> factors;
  Integer cofactor = 1;
};

inline TrialFactorization trial_factor(Integer n, unsigned long limit = 1000000) {
  TrialFactorization out;
  if (n < 0) n = -n;
  if (n == 0) throw Error(Errc::ZeroArgument, "cannot factor zero");
  for (unsigned long p = 2; p <= limit; p += (p == 2 ? 1 : 2)) {
    Integer pp(p);
    if (pp * pp > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
      out.factors.emplace_back(pp, e);
    }
  }
  if (n > 1) {
    Integer l(limit);
    if (n <= l * l || is_prime(n)) {
      out.factors.emplace_back(n, 1);
    } else {
      out.cofactor = n;
    }
  }
  return out;
}

inline SquarefreeDecomposition squarefree_decompose(const Integer& n) {
  if (n == 0) throw Error(Errc::ZeroArgument, "squarefree_decompose(0)");
  TrialFactorization tf = trial_factor(n);
  Integer s = n < 0 ? Integer(-1) : Integer(1);
  Integer k = 1;
  for (auto& [p, e] : tf.factors) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
    k *= pk;
    if (e % 2) s *= p;
  }
  if (tf.cofactor > 1) {
    Integer c = tf.cofactor;
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
      k *= r;
    } else {
      s *= c;
    }
  }
  return {s, k};
}

inline std::optional<Integer> integer_square_root(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Nonnegative rational square root when one exists.
inline std::optional<Rational> rational_square_root(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  auto n = integer_square_root(q.num());
  if (!n) return std::nullopt;
  auto d = integer_square_root(q.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

inline Integer lcm_of_denominators(std::span<const Rational> values) {
  if (values.empty()) throw Error(Errc::EmptyList, "lcm_of_denominators of an empty list");
  Integer l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  }
  return l;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace quintic

template <>
struct std::hash<quintic::Rational> {
  std::size_t operator()(const quintic::Rational& q) const noexcept {
    return std::hash<std::string>{}(q.to_string());
  }
};
