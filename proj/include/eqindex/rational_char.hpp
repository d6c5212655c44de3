#pragma once

/**
 * @file rational_char.hpp
 * @brief Quotients of half-integer Laurent polynomials, exact division and
 *        one-sided series expansion.
 *
 * A RationalChar holds num/den with den kept primitive: integer coefficients,
 * coprime, positive leading coefficient. No polynomial gcd is taken; sums use
 * the shared denominator when both sides agree and cross-multiply otherwise.
 */

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "eqindex/error.hpp"
#include "eqindex/half_laurent.hpp"

namespace eqindex {

enum class Direction { AtInfinity, AtZero };

inline const char* to_string(Direction d) { return d == Direction::AtInfinity ? "at-infinity" : "at-zero"; }

class RationalChar {
 public:
  RationalChar() : den_(1) {}
  RationalChar(HalfLaurent num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalChar(HalfLaurent num, HalfLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalChar with zero denominator");
    normalize();
  }

  const HalfLaurent& num() const { return num_; }
  const HalfLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalChar operator+(const RationalChar& a, const RationalChar& b) {
    if (a.den_ == b.den_) return RationalChar(a.num_ + b.num_, a.den_);
    return RationalChar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalChar operator-(const RationalChar& a) { return RationalChar(-a.num_, a.den_); }
  friend RationalChar operator-(const RationalChar& a, const RationalChar& b) { return a + (-b); }
  friend RationalChar operator*(const RationalChar& a, const RationalChar& b) {
    return RationalChar(a.num_ * b.num_, a.den_ * b.den_);
  }
  RationalChar& operator+=(const RationalChar& o) { return *this = *this + o; }

  std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

 private:
  // Divide num and den by the content of den so den is primitive with a
  // positive leading coefficient.
  void normalize() {
    if (num_.is_zero()) {
      den_ = HalfLaurent(1);
      return;
    }
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& [e, c] : den_.terms()) {
      Integer d = c.den();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& [e, c] : den_.terms()) {
      Integer scaled = (c * Rat(lcm_den)).to_integer();
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat content(gcd_num, lcm_den);
    if (den_.leading_coeff().sign() < 0) content = -content;
    if (content == Rat(1)) return;
    Rat inv = Rat(1) / content;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  HalfLaurent num_;
  HalfLaurent den_;
};

namespace detail {

// Dense coefficients of p * z^{-min}, indexed by doubled exponent.
inline std::vector<Rat> dense_from_bottom(const HalfLaurent& p) {
  std::int64_t lo = p.min_exp().twice;
  std::vector<Rat> v(static_cast<std::size_t>(p.max_exp().twice - lo + 1));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e.twice - lo)] = c;
  return v;
}

}  // namespace detail

/// Exact quotient num/den as a Laurent polynomial; NonPolynomial if the
/// division leaves a remainder.
inline HalfLaurent to_laurent(const RationalChar& f) {
  if (f.is_zero()) return {};
  const HalfLaurent& num = f.num();
  const HalfLaurent& den = f.den();
  // Both sides are units times polynomials in w = z^{1/2} with nonzero
  // constant term, so Laurent divisibility is ordinary divisibility.
  std::vector<Rat> n = detail::dense_from_bottom(num);
  std::vector<Rat> d = detail::dense_from_bottom(den);
  if (n.size() < d.size()) throw error(errc::non_polynomial, "quotient " + f.str() + " has a pole");
  std::size_t qlen = n.size() - d.size() + 1;
  std::vector<Rat> q(qlen);
  const Rat& lead = d.back();
  for (std::size_t k = qlen; k-- > 0;) {
    Rat top = n[k + d.size() - 1];
    if (top.is_zero()) continue;
    Rat c = top / lead;
    q[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (!d[j].is_zero()) n[k + j] -= c * d[j];
  }
  for (const Rat& r : n)
    if (!r.is_zero()) throw error(errc::non_polynomial, "quotient " + f.str() + " leaves a remainder");
  HalfLaurent out;
  std::int64_t base = num.min_exp().twice - den.min_exp().twice;
  for (std::size_t k = 0; k < qlen; ++k) out.add_term(HalfExp{base + static_cast<std::int64_t>(k)}, q[k]);
  return out;
}

/// Truncated one-sided Laurent expansion. coeffs[k] multiplies
/// z^{leading - k*step} (AtInfinity) or z^{leading + k*step} (AtZero).
struct TailSeries {
  Direction direction = Direction::AtInfinity;
  HalfExp leading;
  HalfExp step{2};
  std::vector<Rat> coeffs;

  std::size_t order() const { return coeffs.size(); }

  HalfExp exponent(std::size_t k) const {
    auto off = static_cast<std::int64_t>(k) * step.twice;
    return direction == Direction::AtInfinity ? HalfExp{leading.twice - off} : HalfExp{leading.twice + off};
  }

  /// Coefficient of z^e when e lies inside the computed prefix; zero
  /// off-lattice or beyond the leading term.
  Rat coeff_at(HalfExp e) const {
    std::int64_t dist = direction == Direction::AtInfinity ? leading.twice - e.twice : e.twice - leading.twice;
    if (dist < 0 || dist % step.twice != 0) return Rat(0);
    auto k = static_cast<std::size_t>(dist / step.twice);
    if (k >= coeffs.size()) throw std::out_of_range("exponent beyond computed prefix");
    return coeffs[k];
  }

  HalfLaurent truncated() const {
    HalfLaurent p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(exponent(k), coeffs[k]);
    return p;
  }
};

/// Lattice spacing of the expansion: 1 when num and den each sit in a single
/// coset of Z, otherwise 1/2.
inline HalfExp expansion_step(const RationalChar& f) {
  return f.num().single_coset() && f.den().single_coset() ? HalfExp{2} : HalfExp{1};
}

inline TailSeries expand(const RationalChar& f, Direction dir, std::size_t order) {
  if (order == 0) throw std::invalid_argument("expand: order must be at least 1");
  TailSeries s;
  s.direction = dir;
  s.step = expansion_step(f);
  s.coeffs.assign(order, Rat(0));
  if (f.is_zero()) return s;

  const HalfLaurent& num = f.num();
  const HalfLaurent& den = f.den();
  bool inf = dir == Direction::AtInfinity;
  HalfExp n0 = inf ? num.max_exp() : num.min_exp();
  HalfExp d0 = inf ? den.max_exp() : den.min_exp();
  s.leading = n0 - d0;

  auto nth = [&](const HalfLaurent& p, HalfExp start, std::size_t k) {
    auto off = static_cast<std::int64_t>(k) * s.step.twice;
    return p.coeff(inf ? HalfExp{start.twice - off} : HalfExp{start.twice + off});
  };
  std::vector<Rat> dk(order);
  for (std::size_t k = 0; k < order; ++k) dk[k] = nth(den, d0, k);
  for (std::size_t k = 0; k < order; ++k) {
    Rat acc = nth(num, n0, k);
    for (std::size_t j = 1; j <= k; ++j)
      if (!dk[j].is_zero()) acc -= dk[j] * s.coeffs[k - j];
    s.coeffs[k] = acc / dk[0];
  }
  return s;
}

/// Number of expansion terms needed so that z^0 falls inside the prefix
/// (0 when z^0 cannot occur in that direction).
inline std::size_t terms_to_reach_zero(const RationalChar& f, Direction dir) {
  if (f.is_zero()) return 0;
  HalfExp step = expansion_step(f);
  HalfExp lead = dir == Direction::AtInfinity ? f.num().max_exp() - f.den().max_exp()
                                              : f.num().min_exp() - f.den().min_exp();
  std::int64_t dist = dir == Direction::AtInfinity ? lead.twice : -lead.twice;
  if (dist < 0 || dist % step.twice != 0) return 0;
  return static_cast<std::size_t>(dist / step.twice) + 1;
}

/// Coefficient of z^0 in the expansion of f in the given direction.
inline Rat zero_coefficient(const RationalChar& f, Direction dir) {
  std::size_t n = terms_to_reach_zero(f, dir);
  if (n == 0) return Rat(0);
  return expand(f, dir, n).coeffs.back();
}

}  // namespace eqindex
