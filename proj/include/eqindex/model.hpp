#pragma once

/**
 * @file model.hpp
 * @brief Manifolds presented by isolated fixed-point data.
 *
 * A fixed point carries signed tangent weights, the fiber weight of the
 * quantizing line bundle, whether the complex orientation induced by the
 * weights agrees with the manifold orientation, and optionally the moment
 * value there. For the complex flavors the weights are those of the (stable)
 * complex structure; for SpinC they are the weights of an auxiliary complex
 * structure and only their absolute values together with the orientation flag
 * carry information.
 *
 * Weight convention: the tangent weight of S^2 at the minimum of the moment
 * map is -1 and at the maximum +1, so O(m) on CP^1 has character
 * 1 + z + ... + z^m.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "eqindex/error.hpp"
#include "eqindex/rat.hpp"

namespace eqindex {

enum class Flavor { AlmostComplex, StableComplex, SpinC };

inline const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::AlmostComplex: return "almost-complex";
    case Flavor::StableComplex: return "stable-complex";
    case Flavor::SpinC: return "spinc";
  }
  return "?";
}

inline bool is_complex(Flavor f) { return f != Flavor::SpinC; }

struct FixedPoint {
  std::string label;
  std::vector<std::int64_t> tangent_weights;
  std::int64_t fiber_weight = 0;
  bool orientation_matches = true;
  std::optional<Rat> moment;

  std::int64_t sum_weights() const { return std::accumulate(tangent_weights.begin(), tangent_weights.end(), std::int64_t{0}); }
  std::int64_t sum_positive() const {
    std::int64_t s = 0;
    for (auto w : tangent_weights) s += w > 0 ? w : 0;
    return s;
  }
  std::int64_t sum_negative() const {
    std::int64_t s = 0;
    for (auto w : tangent_weights) s += w < 0 ? w : 0;
    return s;
  }
  std::int64_t sum_abs() const { return sum_positive() - sum_negative(); }

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct ManifoldSpec {
  std::string name;
  int dim = 0;
  Flavor flavor = Flavor::AlmostComplex;
  std::vector<FixedPoint> points;
  std::string notes;

  bool has_moments() const {
    return !points.empty() && std::all_of(points.begin(), points.end(), [](const FixedPoint& p) { return p.moment.has_value(); });
  }

  const FixedPoint* find(const std::string& label) const {
    for (const auto& p : points)
      if (p.label == label) return &p;
    return nullptr;
  }

  friend bool operator==(const ManifoldSpec&, const ManifoldSpec&) = default;
};

/// Which side of a splitting hypersurface each fixed point lies on.
struct Partition {
  std::set<std::string> plus;
  std::set<std::string> minus;

  bool in_plus(const std::string& label) const { return plus.count(label) != 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct Diagnostic {
  std::string label;  // empty for spec-level findings
  std::string message;

  std::string str() const { return label.empty() ? message : "point '" + label + "': " + message; }
};

/// Structural checks plus, when moments are present, the fiber/moment
/// identity (fiber = Phi for complex flavors, 2*Phi for SpinC).
inline std::vector<Diagnostic> validate(const ManifoldSpec& spec) {
  std::vector<Diagnostic> out;
  if (spec.dim < 0 || spec.dim % 2 != 0) out.push_back({"", "dimension must be even and nonnegative, got " + std::to_string(spec.dim)});
  std::set<std::string> seen;
  std::size_t with_moment = 0;
  const auto half_dim = static_cast<std::size_t>(std::max(spec.dim, 0) / 2);
  for (const auto& p : spec.points) {
    if (p.label.empty()) out.push_back({"", "fixed point with empty label"});
    if (!seen.insert(p.label).second) out.push_back({p.label, "duplicate label"});
    if (p.moment) ++with_moment;
    if (std::find(p.tangent_weights.begin(), p.tangent_weights.end(), 0) != p.tangent_weights.end())
      out.push_back({p.label, "zero tangent weight (fixed points must be isolated)"});
    if (p.tangent_weights.size() != half_dim)
      out.push_back({p.label, "expected " + std::to_string(half_dim) + " tangent weights, got " + std::to_string(p.tangent_weights.size())});
    if (spec.flavor == Flavor::AlmostComplex && !p.orientation_matches)
      out.push_back({p.label, "almost complex orientation always agrees with the complex one"});
    if (spec.flavor == Flavor::SpinC) {
      std::int64_t diff = p.fiber_weight - p.sum_weights();
      if (diff % 2 != 0)
        out.push_back({p.label, "spin-c parity: fiber weight " + std::to_string(p.fiber_weight) + " differs in parity from tangent weight sum " +
                                     std::to_string(p.sum_weights())});
    }
  }
  if (with_moment != 0 && with_moment != spec.points.size())
    out.push_back({"", "moment values must be given at every fixed point or at none"});
  if (with_moment == spec.points.size()) {
    for (const auto& p : spec.points) {
      if (!p.moment) continue;
      Rat expected = is_complex(spec.flavor) ? *p.moment : Rat(2) * *p.moment;
      if (expected != Rat(static_cast<long>(p.fiber_weight)))
        out.push_back({p.label, std::string("fiber weight ") + std::to_string(p.fiber_weight) + " does not equal " +
                                    (is_complex(spec.flavor) ? "Phi" : "2*Phi") + " = " + expected.str()});
    }
  }
  return out;
}

inline void require_valid(const ManifoldSpec& spec) {
  auto diags = validate(spec);
  if (diags.empty()) return;
  std::string msg = "'" + spec.name + "' is not a consistent spec";
  for (const auto& d : diags) msg += "; " + d.str();
  throw error(errc::invalid_spec, msg);
}

/// Complex flavor -> SpinC via L (x) L (x) K*: fiber 2*mu + sum(weights).
/// Moments become fiber/2, the moment of c1(L) + c1(K*)/2.
inline ManifoldSpec convert_to_spinc(const ManifoldSpec& spec) {
  if (spec.flavor == Flavor::SpinC) throw error(errc::already_spinc, "'" + spec.name + "' is already spin-c");
  ManifoldSpec out = spec;
  out.flavor = Flavor::SpinC;
  for (auto& p : out.points) {
    p.fiber_weight = 2 * p.fiber_weight + p.sum_weights();
    if (p.moment) *p.moment = *p.moment + Rat(Integer(static_cast<long>(p.sum_weights())), Integer(2));
  }
  return out;
}

inline ManifoldSpec as_spinc(const ManifoldSpec& spec) {
  return spec.flavor == Flavor::SpinC ? spec : convert_to_spinc(spec);
}

// ---------------------------------------------------------------------------
// Compatibility conditions between fixed points and a splitting.

struct PointVerdict {
  std::string label;
  bool in_plus = false;
  bool plus_fires = false;   // fiber weight reaches the upper threshold
  bool minus_fires = false;  // fiber weight reaches the lower threshold
  bool plus_ok = true;       // plus_fires => in_plus
  bool minus_ok = true;      // minus_fires => in_minus

  bool ok() const { return plus_ok && minus_ok; }
};

/// Threshold t_+ with "fiber >= t_+ => F in M_+" and t_- with
/// "fiber <= t_- => F in M_-" for the given flavor.
inline std::pair<std::int64_t, std::int64_t> condition_thresholds(const FixedPoint& p, Flavor f) {
  if (is_complex(f)) return {-p.sum_negative(), -p.sum_positive()};
  return {p.sum_abs(), -p.sum_abs()};
}

inline void require_partition_covers(const ManifoldSpec& spec, const Partition& part) {
  for (const auto& l : part.plus)
    if (part.minus.count(l)) throw error(errc::invalid_spec, "label '" + l + "' on both sides of the partition");
  for (const auto& l : part.plus)
    if (!spec.find(l)) throw error(errc::invalid_spec, "partition names unknown label '" + l + "'");
  for (const auto& l : part.minus)
    if (!spec.find(l)) throw error(errc::invalid_spec, "partition names unknown label '" + l + "'");
  for (const auto& p : spec.points)
    if (!part.plus.count(p.label) && !part.minus.count(p.label))
      throw error(errc::invalid_spec, "partition omits label '" + p.label + "'");
}

inline std::vector<PointVerdict> check_conditions(const ManifoldSpec& spec, const Partition& part) {
  require_partition_covers(spec, part);
  std::vector<PointVerdict> out;
  for (const auto& p : spec.points) {
    auto [up, down] = condition_thresholds(p, spec.flavor);
    PointVerdict v;
    v.label = p.label;
    v.in_plus = part.in_plus(p.label);
    v.plus_fires = p.fiber_weight >= up;
    v.minus_fires = p.fiber_weight <= down;
    v.plus_ok = !v.plus_fires || v.in_plus;
    v.minus_ok = !v.minus_fires || !v.in_plus;
    out.push_back(v);
  }
  return out;
}

inline bool all_pass(const std::vector<PointVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const PointVerdict& v) { return v.ok(); });
}

inline std::string describe_failures(const std::vector<PointVerdict>& verdicts) {
  std::string msg;
  for (const auto& v : verdicts) {
    if (!v.plus_ok) msg += (msg.empty() ? "" : "; ") + ("point '" + v.label + "': fiber weight reaches the upper threshold but the point is in M-");
    if (!v.minus_ok) msg += (msg.empty() ? "" : "; ") + ("point '" + v.label + "': fiber weight reaches the lower threshold but the point is in M+");
  }
  return msg;
}

/// A rational t is regular when no fixed point has moment t.
inline bool is_regular_level(const ManifoldSpec& spec, const Rat& t) {
  return std::none_of(spec.points.begin(), spec.points.end(), [&](const FixedPoint& p) { return p.moment && *p.moment == t; });
}

/// Split by the sign of Phi - t.
inline Partition partition_at(const ManifoldSpec& spec, const Rat& t) {
  if (!spec.has_moments()) throw error(errc::invalid_spec, "'" + spec.name + "' has no moment values to split by");
  Partition part;
  for (const auto& p : spec.points) {
    if (*p.moment == t) throw error(errc::irregular_level, "level " + t.str() + " equals the moment value at '" + p.label + "'");
    (*p.moment > t ? part.plus : part.minus).insert(p.label);
  }
  return part;
}

// ---------------------------------------------------------------------------
// Prequantizability.

/// Class of omega on a surface of the given genus.
struct SurfaceClass {
  Rat degree;
  int genus = 0;
};

/// Class coefficient on the generator of H^2 (b_2 = 1) together with an
/// integer lift of w_2 on that generator; CP^2 has w2 = 3.
struct GeneratorClass {
  Rat coefficient;
  Integer w2 = 0;
};

using ClassData = std::variant<std::monostate, SurfaceClass, GeneratorClass>;

struct PrequantReport {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

inline PrequantReport prequantizable(const ManifoldSpec& spec, const ClassData& cls) {
  PrequantReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.diagnostics.push_back(std::move(msg));
  };
  bool spinc = spec.flavor == Flavor::SpinC;
  // The class integer that must be integral (and, for spin-c, have the
  // parity of w2).
  std::optional<Rat> scaled;
  Integer w2 = 0;
  if (spec.dim == 0) {
    if (!std::holds_alternative<std::monostate>(cls)) throw error(errc::unsupported_dimension, "a point carries no degree-two class");
  } else if (spec.dim == 2) {
    const auto* s = std::get_if<SurfaceClass>(&cls);
    if (!s) throw error(errc::unsupported_dimension, "dimension 2 expects surface class data (degree, genus)");
    if (s->genus < 0) throw error(errc::invalid_spec, "negative genus");
    scaled = spinc ? Rat(2) * s->degree : s->degree;
    w2 = 2 - 2 * s->genus;
  } else if (spec.dim == 4) {
    const auto* g = std::get_if<GeneratorClass>(&cls);
    if (!g) throw error(errc::unsupported_dimension, "dimension 4 expects a single-generator class (coefficient, w2)");
    scaled = spinc ? Rat(2) * g->coefficient : g->coefficient;
    w2 = g->w2;
  } else {
    throw error(errc::unsupported_dimension, "class data for dimension " + std::to_string(spec.dim) + " needs more than a degree");
  }
  if (scaled) {
    if (!scaled->is_integer()) {
      fail(spinc ? "2[omega] = " + scaled->str() + " is not integral" : "[omega] = " + scaled->str() + " is not integral");
    } else if (spinc) {
      Integer diff = scaled->to_integer() - w2;
      if (mpz_odd_p(diff.get_mpz_t())) fail("2[omega] = " + scaled->str() + " does not reduce to w2 = " + w2.get_str() + " mod 2");
    }
  }
  for (const auto& p : spec.points) {
    if (!p.moment) continue;
    Rat v = spinc ? Rat(2) * *p.moment : *p.moment;
    if (!v.is_integer()) fail("point '" + p.label + "': " + std::string(spinc ? "2*Phi" : "Phi") + " = " + v.str() + " is not integral");
  }
  return r;
}

}  // namespace eqindex
