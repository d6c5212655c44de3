#pragma once

/**
 * @file localization.hpp
 * @brief Equivariant index characters by summation over isolated fixed points.
 *
 * A spin-c fixed point with fiber weight f, auxiliary tangent weights a_i and
 * orientation sign s contributes
 *
 *     s * z^{f/2} / prod_i (z^{a_i/2} - z^{-a_i/2}).
 *
 * The overall sign is +1 in every dimension. It was calibrated once against
 * O(m) on CP^1 (character 1 + z + ... + z^m) and checked against O(k) on CP^2
 * (the complete homogeneous polynomial h_k(1, z, z^2)); golden tests guard it.
 * Complex flavors are converted to spin-c point by point before evaluation.
 */

#include <string>
#include <vector>

#include "eqindex/half_laurent.hpp"
#include "eqindex/model.hpp"
#include "eqindex/rational_char.hpp"

namespace eqindex {

struct Character {
  HalfLaurent poly;
  std::string spec_name;

  Integer multiplicity(std::int64_t a) const { return poly.coeff(HalfExp::whole(a)).to_integer(); }
};

inline FixedPoint spinc_point(const FixedPoint& p, Flavor flavor) {
  if (flavor == Flavor::SpinC) return p;
  FixedPoint q = p;
  q.fiber_weight = 2 * p.fiber_weight + p.sum_weights();
  if (q.moment) *q.moment = *q.moment + Rat(Integer(static_cast<long>(p.sum_weights())), Integer(2));
  return q;
}

/// Atiyah-Segal-Singer contribution of one isolated fixed point.
inline RationalChar contribution(const FixedPoint& point, int dim, Flavor flavor) {
  FixedPoint p = spinc_point(point, flavor);
  if (p.tangent_weights.size() * 2 != static_cast<std::size_t>(dim))
    throw error(errc::invalid_spec, "point '" + p.label + "' has the wrong number of tangent weights");
  Rat sign = p.orientation_matches ? Rat(1) : Rat(-1);
  HalfLaurent num = HalfLaurent::monomial(HalfExp::half(p.fiber_weight), sign);
  HalfLaurent den(1);
  for (auto w : p.tangent_weights) den *= HalfLaurent::half_difference(w);
  return RationalChar(std::move(num), std::move(den));
}

/// Sum of the contributions as a rational function (no division performed).
inline RationalChar contribution_sum(const ManifoldSpec& spec) {
  RationalChar total;
  for (const auto& p : spec.points) total += contribution(p, spec.dim, spec.flavor);
  return total;
}

inline void require_integral(const HalfLaurent& poly, const std::string& name) {
  if (!poly.all_exponents_integral())
    throw error(errc::non_integral, "character of '" + name + "' has half-integer exponents: " + poly.str());
  if (!poly.all_coefficients_integral())
    throw error(errc::non_integral, "character of '" + name + "' has non-integer multiplicities: " + poly.str());
}

/// Character of the virtual representation. NonPolynomial when the fixed
/// point data is inconsistent.
inline Character character(const ManifoldSpec& spec) {
  require_valid(spec);
  HalfLaurent poly = to_laurent(contribution_sum(spec));
  require_integral(poly, spec.name);
  return Character{std::move(poly), spec.name};
}

inline Integer multiplicity(const ManifoldSpec& spec, std::int64_t a) { return character(spec).multiplicity(a); }

/// Sum over fixed points of the z^0 coefficient of each contribution
/// expanded in the given direction.
inline Rat expansion_zero_sum(const ManifoldSpec& spec, Direction dir) {
  Rat total;
  for (const auto& p : spec.points) total += zero_coefficient(contribution(p, spec.dim, spec.flavor), dir);
  return total;
}

/// Whether the point's contribution has no z^0 term when expanded in `dir`:
/// in powers of z when fiber > -sum|a_i|, in powers of 1/z when
/// fiber < sum|a_i|. The predicate is checked against the actual expansion.
inline bool vanishes_in_expansion(const FixedPoint& point, Flavor flavor, Direction dir) {
  FixedPoint p = spinc_point(point, flavor);
  std::int64_t total = p.sum_abs();
  bool vanishes = dir == Direction::AtZero ? p.fiber_weight > -total : p.fiber_weight < total;
  if (vanishes) {
    int dim = static_cast<int>(p.tangent_weights.size() * 2);
    Rat c = zero_coefficient(contribution(p, dim, Flavor::SpinC), dir);
    if (!c.is_zero()) throw std::logic_error("vanishing predicate contradicted by expansion at '" + p.label + "'");
  }
  return vanishes;
}

/// Replace Phi by Phi - a: complex fibers drop by a, spin-c fibers by 2a.
inline ManifoldSpec shift(const ManifoldSpec& spec, std::int64_t a) {
  ManifoldSpec out = spec;
  std::int64_t df = is_complex(spec.flavor) ? a : 2 * a;
  for (auto& p : out.points) {
    p.fiber_weight -= df;
    if (p.moment) *p.moment -= Rat(static_cast<long>(a));
  }
  return out;
}

}  // namespace eqindex
