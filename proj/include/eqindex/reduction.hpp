#pragma once

/**
 * @file reduction.hpp
 * @brief Quantization of reduced spaces and the quantization-commutes-with-
 *        reduction check.
 *
 * Reduced spaces are declared, not derived: fixed-point data does not see the
 * topology of a level set. Each component is a signed point or a signed
 * surface. The sign is sigma_J for almost complex data and the reduced
 * orientation otherwise.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqindex/localization.hpp"
#include "eqindex/model.hpp"

namespace eqindex {

struct PointComp {
  int sign = 1;

  friend bool operator==(const PointComp&, const PointComp&) = default;
};

struct SurfaceComp {
  int genus = 0;
  // deg L_red for complex flavors, degree of the associated line bundle for
  // spin-c; measured in the same reference orientation as normal_degree.
  Integer degree = 0;
  int sign = 1;
  // Euler number of N = Z x_{S^1} C; only the cut needs it.
  std::optional<Integer> normal_degree;

  friend bool operator==(const SurfaceComp&, const SurfaceComp&) = default;
};

using ReducedComponent = std::variant<PointComp, SurfaceComp>;

struct ReducedSpace {
  std::vector<ReducedComponent> components;

  bool empty() const { return components.empty(); }
  friend bool operator==(const ReducedSpace&, const ReducedSpace&) = default;
};

inline int component_sign(const ReducedComponent& c) {
  return std::visit([](const auto& x) { return x.sign; }, c);
}

inline void require_parity(const ReducedSpace& red, Flavor flavor) {
  for (const auto& c : red.components) {
    int s = component_sign(c);
    if (s != 1 && s != -1) throw error(errc::invalid_spec, "component sign must be +1 or -1");
    const auto* surf = std::get_if<SurfaceComp>(&c);
    if (!surf) continue;
    if (surf->genus < 0) throw error(errc::invalid_spec, "negative genus");
    if (flavor == Flavor::SpinC && mpz_odd_p(surf->degree.get_mpz_t()))
      throw error(errc::parity_violation, "spin-c surface degree " + surf->degree.get_str() + " is not congruent to 2-2g mod 2");
  }
}

/// Index of one component before its sign is applied.
inline Integer component_index(const ReducedComponent& c, Flavor flavor) {
  if (std::holds_alternative<PointComp>(c)) return 1;
  const auto& s = std::get<SurfaceComp>(c);
  if (is_complex(flavor)) return s.degree + 1 - s.genus;
  return s.degree / 2;
}

inline Integer quantize(const ReducedSpace& red, Flavor flavor) {
  require_parity(red, flavor);
  Integer total = 0;
  for (const auto& c : red.components) total += component_sign(c) * component_index(c, flavor);
  return total;
}

/// If one side of the partition holds no fixed points, the hypersurface
/// bounds a free piece, so the reduced space is an oriented boundary: its
/// signed point count and signed surface degree vanish. A declared reduced
/// space violating this cannot come from a splitting hypersurface.
inline void require_splitting(const ManifoldSpec& spec, const Partition& part, const ReducedSpace& red) {
  if (!part.plus.empty() && !part.minus.empty()) return;
  Integer points = 0, degree = 0;
  for (const auto& c : red.components) {
    if (std::holds_alternative<PointComp>(c))
      points += component_sign(c);
    else
      degree += component_sign(c) * std::get<SurfaceComp>(c).degree;
  }
  if (points != 0 || degree != 0)
    throw error(errc::not_splitting, "'" + spec.name + "': " + std::string(part.plus.empty() ? "M+" : "M-") +
                                         " contains no fixed points, yet the declared reduced space does not bound; "
                                         "the hypersurface cannot be splitting");
}

struct QRReport {
  std::int64_t level = 0;
  Integer lhs = 0;
  Integer rhs = 0;
  std::vector<PointVerdict> conditions;
  bool conditions_hold = true;
  bool equal = false;
  std::vector<std::string> warnings;
};

/// Compares the multiplicity of `a` in Q(M) with the quantization of the
/// reduced space at `a`. With moments present the partition is the sign of
/// Phi - a; otherwise `part` is required. Conditions are evaluated on
/// shift(spec, a). When they fail the comparison is still reported, with a
/// warning, since the theorem makes no claim.
inline QRReport verify_qr(const ManifoldSpec& spec, const std::optional<Partition>& part, const ReducedSpace& red, std::int64_t a) {
  require_valid(spec);
  Partition p;
  if (spec.has_moments()) {
    Rat level(static_cast<long>(a));
    if (!is_regular_level(spec, level)) throw error(errc::irregular_level, "level " + level.str() + " is a moment value of '" + spec.name + "'");
    p = partition_at(spec, level);
  } else {
    if (!part) throw error(errc::invalid_spec, "'" + spec.name + "' has no moments; a partition must be declared for level " + std::to_string(a));
    p = *part;
  }
  require_splitting(spec, p, red);

  QRReport r;
  r.level = a;
  r.lhs = multiplicity(spec, a);
  r.rhs = quantize(red, spec.flavor);
  r.conditions = check_conditions(shift(spec, a), p);
  r.conditions_hold = all_pass(r.conditions);
  r.equal = r.lhs == r.rhs;
  if (!r.conditions_hold) r.warnings.push_back("compatibility conditions fail (" + describe_failures(r.conditions) + "); the theorem does not apply");
  return r;
}

// ---------------------------------------------------------------------------

/// Open interval (lo, hi) of levels t (nullopt = unbounded) for which the
/// sign-of-(Phi - t) partition satisfies the conditions of shift(spec, a),
/// minus the interior singular values in `excluded`.
struct LevelWindow {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  std::vector<Rat> excluded;
  bool empty = false;

  bool contains(const Rat& t) const {
    if (empty) return false;
    if (lo && !(t > *lo)) return false;
    if (hi && !(t < *hi)) return false;
    return std::find(excluded.begin(), excluded.end(), t) == excluded.end();
  }

  /// Whether the open interval (a, b) minus `excluded` lies in the window.
  bool contains_interval(const Rat& a, const Rat& b) const {
    if (empty) return false;
    if (lo && a < *lo) return false;
    if (hi && b > *hi) return false;
    return true;
  }
};

/// A point whose shifted fiber reaches the upper threshold must sit in M+,
/// forcing t < Phi(F); one reaching the lower threshold forces t > Phi(F).
/// Points forced neither way only exclude t = Phi(F).
inline LevelWindow condition_window(const ManifoldSpec& spec, std::int64_t a) {
  if (!spec.has_moments()) throw error(errc::invalid_spec, "'" + spec.name + "' has no moment values");
  ManifoldSpec shifted = shift(spec, a);
  LevelWindow w;
  std::vector<Rat> free_values;
  for (const auto& p : shifted.points) {
    auto [up, down] = condition_thresholds(p, spec.flavor);
    Rat phi = *spec.find(p.label)->moment;
    bool must_plus = p.fiber_weight >= up;
    bool must_minus = p.fiber_weight <= down;
    if (must_plus && must_minus) {
      w.empty = true;
      return w;
    }
    if (must_plus) {
      if (!w.hi || phi < *w.hi) w.hi = phi;
    } else if (must_minus) {
      if (!w.lo || phi > *w.lo) w.lo = phi;
    } else {
      free_values.push_back(phi);
    }
  }
  if (w.lo && w.hi && !(*w.lo < *w.hi)) {
    w.empty = true;
    return w;
  }
  std::sort(free_values.begin(), free_values.end());
  free_values.erase(std::unique(free_values.begin(), free_values.end()), free_values.end());
  for (const auto& v : free_values)
    if ((!w.lo || v > *w.lo) && (!w.hi || v < *w.hi)) w.excluded.push_back(v);
  return w;
}

}  // namespace eqindex
