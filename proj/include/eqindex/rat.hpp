#pragma once

/**
 * @file rat.hpp
 * @brief Exact rational coefficients backed by GMP.
 *
 * Rat is a thin value type over mpq_class. Every public constructor and
 * operator leaves the value canonical: lowest terms, positive denominator,
 * zero stored as 0/1. There is no conversion from floating point.
 */

#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "eqindex/error.hpp"

namespace eqindex {

using Integer = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rat(const Integer& v) : q_(v) {}
  Rat(const Integer& num, const Integer& den) {
    if (den == 0) throw error(errc::parse_error, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q" (no whitespace, no decimal point).
  static Rat parse(std::string_view text) {
    std::string s(text);
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos ||
        s.find('/') != s.rfind('/'))
      throw error(errc::parse_error, "not an exact rational: '" + s + "'");
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Integer(strip_plus(s)));
      return Rat(Integer(strip_plus(s.substr(0, slash))), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw error(errc::parse_error, "not an exact rational: '" + s + "'");
    }
  }

  const mpq_class& raw() const { return q_; }
  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Integer value; the caller must have checked is_integer().
  Integer to_integer() const {
    assert(is_integer());
    return q_.get_num();
  }

  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  Integer ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  std::string str() const { return q_.get_str(); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return check(); }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return check(); }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return check(); }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat division by zero");
    q_ /= o.q_;
    return check();
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(Rat a) { a.q_ = -a.q_; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  /// Lowest terms with positive denominator.
  bool is_canonical() const {
    if (q_.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return g == 1 || (q_.get_num() == 0 && q_.get_den() == 1);
  }

 private:
  static std::string strip_plus(std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("empty");
    return s;
  }

  Rat& check() {
    assert(is_canonical());
    return *this;
  }

  mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace eqindex
