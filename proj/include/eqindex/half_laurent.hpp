#pragma once

/**
 * @file half_laurent.hpp
 * @brief Laurent polynomials in z with exponents on the half-integer lattice.
 *
 * Exponents are stored doubled (HalfExp{3} is z^{3/2}) so that the factors
 * z^{a/2} produced by fixed-point contributions need no symbolic roots.
 * Terms live in an ordered map and zero coefficients are never stored.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "eqindex/rat.hpp"

namespace eqindex {

/// Exponent k/2, stored as k.
struct HalfExp {
  std::int64_t twice = 0;

  static constexpr HalfExp whole(std::int64_t n) { return HalfExp{2 * n}; }
  static constexpr HalfExp half(std::int64_t k) { return HalfExp{k}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr std::int64_t whole_value() const { return twice / 2; }
  Rat value() const { return Rat(Integer(static_cast<long>(twice)), Integer(2)); }

  friend constexpr HalfExp operator+(HalfExp a, HalfExp b) { return {a.twice + b.twice}; }
  friend constexpr HalfExp operator-(HalfExp a, HalfExp b) { return {a.twice - b.twice}; }
  friend constexpr HalfExp operator-(HalfExp a) { return {-a.twice}; }
  friend constexpr auto operator<=>(HalfExp, HalfExp) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(whole_value());
    return std::to_string(twice) + "/2";
  }
};

class HalfLaurent {
 public:
  using term_map = std::map<HalfExp, Rat>;

  HalfLaurent() = default;
  HalfLaurent(const Rat& c) { add_term(HalfExp{0}, c); }  // NOLINT(google-explicit-constructor)
  HalfLaurent(int c) : HalfLaurent(Rat(c)) {}             // NOLINT(google-explicit-constructor)

  static HalfLaurent monomial(HalfExp e, const Rat& c = Rat(1)) {
    HalfLaurent p;
    p.add_term(e, c);
    return p;
  }

  /// z^{k/2} - z^{-k/2}
  static HalfLaurent half_difference(std::int64_t k) {
    return monomial(HalfExp::half(k)) - monomial(HalfExp::half(-k));
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  HalfExp min_exp() const { return terms_.begin()->first; }
  HalfExp max_exp() const { return terms_.rbegin()->first; }
  const Rat& lowest_coeff() const { return terms_.begin()->second; }
  const Rat& leading_coeff() const { return terms_.rbegin()->second; }

  Rat coeff(HalfExp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(HalfExp e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool all_exponents_integral() const {
    for (const auto& [e, c] : terms_)
      if (!e.is_integer()) return false;
    return true;
  }

  bool all_coefficients_integral() const {
    for (const auto& [e, c] : terms_)
      if (!c.is_integer()) return false;
    return true;
  }

  /// True when every exponent lies in one coset of Z inside (1/2)Z.
  bool single_coset() const {
    if (terms_.empty()) return true;
    bool parity = terms_.begin()->first.is_integer();
    for (const auto& [e, c] : terms_)
      if (e.is_integer() != parity) return false;
    return true;
  }

  HalfLaurent shifted(HalfExp by) const {
    HalfLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
  }

  HalfLaurent scaled(const Rat& s) const {
    if (s.is_zero()) return {};
    HalfLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
  }

  HalfLaurent& operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  HalfLaurent& operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator-(const HalfLaurent& a) { return a.scaled(Rat(-1)); }

  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

  /// Human form, ascending exponents: "1 + z + z^2", "-z^-2 - z^-1", "z^{1/2}".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat mag = abs(c);
      if (first) {
        if (c.sign() < 0) os << '-';
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = mag == Rat(1);
      if (e.twice == 0) {
        os << mag;
        continue;
      }
      if (!unit) os << mag << ' ';
      os << 'z';
      if (e.twice == 2) continue;
      if (e.is_integer())
        os << '^' << e.whole_value();
      else
        os << "^{" << e.twice << "/2}";
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const HalfLaurent& p) { return os << p.str(); }

 private:
  term_map terms_;
};

/// Exact coefficient of z^e, zero when absent.
inline Rat coeff(const HalfLaurent& p, HalfExp e) { return p.coeff(e); }

}  // namespace eqindex
