#pragma once

/**
 * @file cutting.hpp
 * @brief Lerman cut on fixed-point data and the two index identities used to
 *        prove quantization commutes with reduction.
 *
 * The fixed set of the cut space is the fixed set of M+ together with a copy
 * of the reduced space, whose normal bundle N = Z x_{S^1} C has weight +1 and
 * on which the cut spin-c bundle restricts to L_red (x) N (fiber weight 1).
 * The plus side is carried over untouched.
 *
 * Orientation of a reduced point: with the sign table of localization.hpp a
 * reduced component of sign s must contribute -s times its index to the z^0
 * coefficient of the expansion in 1/z, so reduced points are stored with
 * weight +1 and orientation_matches = (s < 0).
 */

#include <optional>
#include <string>
#include <vector>

#include "eqindex/localization.hpp"
#include "eqindex/model.hpp"
#include "eqindex/reduction.hpp"

namespace eqindex {

struct CutSpec {
  ManifoldSpec base;
  std::vector<std::string> reduced_labels;
};

namespace detail {

inline std::string fresh_label(const ManifoldSpec& spec, std::size_t index) {
  std::string base = "red" + std::to_string(index);
  std::string label = base;
  for (int k = 1; spec.find(label); ++k) label = base + "_" + std::to_string(k);
  return label;
}

}  // namespace detail

/// Spin-c degree of a reduced surface: complex flavors twist L_red twice and
/// add c1 of the reduced complex structure, 2 - 2g.
inline Integer spinc_surface_degree(const SurfaceComp& s, Flavor flavor) {
  return is_complex(flavor) ? 2 * s.degree + 2 - 2 * s.genus : s.degree;
}

/// Contribution of a reduced surface X inside the cut space:
///   -sign * Int_X exp(c1(L_red)/2) Ahat(X) / (1 - e^{-(omega + u)}),
/// with omega = c1(N). On a surface omega^2 = 0 and Ahat(X) = 1, leaving
///   -sign * [ (d/2) / (1 - 1/z)  -  e * (1/z) / (1 - 1/z)^2 ].
inline RationalChar reduced_surface_contribution(const SurfaceComp& s, Flavor flavor) {
  if (!s.normal_degree)
    throw error(errc::invalid_spec, "surface component needs normal_degree (Euler number of Z x_{S^1} C) for the cut");
  Rat d(spinc_surface_degree(s, flavor));
  Rat e(*s.normal_degree);
  Rat sign(s.sign);
  HalfLaurent z = HalfLaurent::monomial(HalfExp::whole(1));
  HalfLaurent zm1 = z - HalfLaurent(1);
  // (d/2) z/(z-1) - e z/(z-1)^2 over the common denominator (z-1)^2.
  HalfLaurent num = (z * zm1).scaled(d / Rat(2)) - z.scaled(e);
  return RationalChar(num.scaled(-sign), zm1 * zm1);
}

/// Cut of a two-dimensional spec along a splitting at which the reduced space
/// is a set of signed points. Complex flavors are converted to spin-c first.
inline CutSpec cut(const ManifoldSpec& spec, const Partition& part, const ReducedSpace& red) {
  if (spec.dim != 2)
    throw error(errc::unsupported_dimension, "automatic cutting needs dimension 2; use verify_cut_identities with declared surfaces");
  require_valid(spec);
  require_partition_covers(spec, part);
  require_splitting(spec, part, red);
  require_parity(red, spec.flavor);

  ManifoldSpec s = as_spinc(spec);
  CutSpec out;
  out.base.name = spec.name + "/cut";
  out.base.dim = spec.dim;
  out.base.flavor = Flavor::SpinC;
  for (const auto& p : s.points)
    if (part.in_plus(p.label)) out.base.points.push_back(p);
  bool moments = s.has_moments();
  std::size_t index = 0;
  for (const auto& c : red.components) {
    const auto* pt = std::get_if<PointComp>(&c);
    if (!pt) throw error(errc::unsupported_dimension, "a two-dimensional spec reduces to points, not surfaces");
    FixedPoint q;
    q.label = detail::fresh_label(spec, ++index);
    q.tangent_weights = {1};
    q.fiber_weight = 1;
    q.orientation_matches = pt->sign < 0;
    if (moments) q.moment = Rat(Integer(1), Integer(2));
    out.reduced_labels.push_back(q.label);
    out.base.points.push_back(std::move(q));
  }
  return out;
}

struct CutReport {
  Integer cut_multiplicity = 0;      // A = dim Q(M_cut)^{S^1}
  Integer multiplicity = 0;          // B = dim Q(M)^{S^1}
  Integer reduced = 0;               // C = Q(M_red)
  Rat cut_at_infinity;               // A via expansions in 1/z
  Rat cut_at_zero;                   // A via expansions in z
  bool left_holds = false;           // A == B - C
  bool right_holds = false;          // A == 0
  std::optional<CutSpec> cut;        // present in dimension 2
  HalfLaurent cut_character;

  bool holds() const { return left_holds && right_holds; }
};

/// Computes A, B, C for the cut at `part` and checks A = B - C and A = 0.
/// ConditionsViolated when the compatibility conditions fail.
inline CutReport verify_cut_identities(const ManifoldSpec& spec, const Partition& part, const ReducedSpace& red) {
  require_valid(spec);
  auto verdicts = check_conditions(spec, part);
  if (!all_pass(verdicts)) throw error(errc::conditions_violated, "'" + spec.name + "': " + describe_failures(verdicts));
  require_splitting(spec, part, red);

  CutReport r;
  r.multiplicity = multiplicity(spec, 0);
  r.reduced = quantize(red, spec.flavor);

  if (spec.dim == 2) {
    r.cut = cut(spec, part, red);
    r.cut_character = character(r.cut->base).poly;
    r.cut_at_infinity = expansion_zero_sum(r.cut->base, Direction::AtInfinity);
    r.cut_at_zero = expansion_zero_sum(r.cut->base, Direction::AtZero);
  } else if (spec.dim == 4) {
    ManifoldSpec s = as_spinc(spec);
    RationalChar total;
    Rat at_inf, at_zero;
    auto add = [&](const RationalChar& c) {
      total += c;
      at_inf += zero_coefficient(c, Direction::AtInfinity);
      at_zero += zero_coefficient(c, Direction::AtZero);
    };
    for (const auto& p : s.points)
      if (part.in_plus(p.label)) add(contribution(p, s.dim, Flavor::SpinC));
    for (const auto& c : red.components) {
      const auto* surf = std::get_if<SurfaceComp>(&c);
      if (!surf) throw error(errc::unsupported_dimension, "a four-dimensional spec reduces to surfaces, not points");
      add(reduced_surface_contribution(*surf, spec.flavor));
    }
    r.cut_character = to_laurent(total);
    require_integral(r.cut_character, spec.name + "/cut");
    r.cut_at_infinity = at_inf;
    r.cut_at_zero = at_zero;
  } else {
    throw error(errc::unsupported_dimension, "cut identities are implemented for dimensions 2 and 4");
  }
  r.cut_multiplicity = r.cut_character.coeff(HalfExp{0}).to_integer();
  r.left_holds = r.cut_multiplicity == r.multiplicity - r.reduced;
  r.right_holds = r.cut_multiplicity == 0;
  return r;
}

}  // namespace eqindex
