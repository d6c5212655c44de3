#pragma once

// Random generators of consistent fixed-point data for the property tests.
//
// Building blocks are rotations of spheres (two fixed points) and of CP^2
// (three), combined by disjoint union and products. Every generated spec
// satisfies validate() and has a polynomial character.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eqindex/eqindex.hpp"

namespace eqindex::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::int64_t nonzero(std::int64_t bound) {
    std::int64_t v = uniform(1, bound);
    return coin() ? v : -v;
  }

  /// Almost complex sphere rotated with speed k: fibers mu_low and
  /// mu_low + j*k (any sign of j, so reversed moments are presymplectic).
  ManifoldSpec sphere(std::int64_t max_speed = 3, std::int64_t span = 6) {
    std::int64_t k = uniform(1, max_speed);
    std::int64_t mu = uniform(-span, span);
    std::int64_t j = uniform(-span / k - 1, span / k + 1);
    ManifoldSpec s;
    s.name = "sphere";
    s.dim = 2;
    s.flavor = Flavor::AlmostComplex;
    s.points = {make("p", {-k}, mu, true, Rat(mu)), make("q", {k}, mu + j * k, true, Rat(mu + j * k))};
    return s;
  }

  /// Almost complex CP^2 with distinct integer weights w and fibers k*w_i + c.
  ManifoldSpec cp2() {
    std::int64_t w[3];
    do {
      for (auto& x : w) x = uniform(-3, 3);
    } while (w[0] == w[1] || w[1] == w[2] || w[0] == w[2]);
    std::int64_t k = uniform(-3, 4), c = uniform(-3, 3);
    ManifoldSpec s;
    s.name = "cp2";
    s.dim = 4;
    s.flavor = Flavor::AlmostComplex;
    for (int i = 0; i < 3; ++i) {
      std::vector<std::int64_t> ws;
      for (int j = 0; j < 3; ++j)
        if (j != i) ws.push_back(w[i] - w[j]);
      s.points.push_back(make("c" + std::to_string(i), ws, k * w[i] + c, true, Rat(k * w[i] + c)));
    }
    return s;
  }

  /// Disjoint union of 1..max_blocks spheres.
  ManifoldSpec surface_union(std::int64_t max_blocks = 3, std::int64_t max_speed = 3) {
    ManifoldSpec out = sphere(max_speed);
    out.name = "union";
    std::int64_t n = uniform(1, max_blocks);
    for (std::int64_t b = 1; b < n; ++b) append(out, sphere(max_speed), "b" + std::to_string(b));
    return out;
  }

  static void append(ManifoldSpec& out, const ManifoldSpec& block, const std::string& prefix) {
    for (auto p : block.points) {
      p.label = prefix + p.label;
      out.points.push_back(std::move(p));
    }
  }

  /// Product of two specs of the same flavor: points pair up, weights
  /// concatenate, fibers and moments add, orientations multiply.
  static ManifoldSpec product(const ManifoldSpec& a, const ManifoldSpec& b) {
    ManifoldSpec out;
    out.name = a.name + "x" + b.name;
    out.dim = a.dim + b.dim;
    out.flavor = a.flavor;
    for (const auto& p : a.points)
      for (const auto& q : b.points) {
        FixedPoint r;
        r.label = p.label + "." + q.label;
        r.tangent_weights = p.tangent_weights;
        r.tangent_weights.insert(r.tangent_weights.end(), q.tangent_weights.begin(), q.tangent_weights.end());
        r.fiber_weight = p.fiber_weight + q.fiber_weight;
        r.orientation_matches = p.orientation_matches == q.orientation_matches;
        if (p.moment && q.moment) r.moment = *p.moment + *q.moment;
        out.points.push_back(std::move(r));
      }
    return out;
  }

  /// Flip (weight i, orientation) at random points of a spin-c spec.
  ManifoldSpec gauge_flip(ManifoldSpec s) {
    for (auto& p : s.points) {
      if (!coin()) continue;
      auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(p.tangent_weights.size()) - 1));
      p.tangent_weights[i] = -p.tangent_weights[i];
      p.orientation_matches = !p.orientation_matches;
    }
    return s;
  }

  /// Stable complex variant of an almost complex spec: flip a weight and the
  /// orientation, compensating mu and Phi so the spin-c data is unchanged.
  ManifoldSpec stable_variant(ManifoldSpec s) {
    s.flavor = Flavor::StableComplex;
    for (auto& p : s.points) {
      if (!coin()) continue;
      auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(p.tangent_weights.size()) - 1));
      std::int64_t a = p.tangent_weights[i];
      p.tangent_weights[i] = -a;
      p.orientation_matches = !p.orientation_matches;
      p.fiber_weight += a;
      if (p.moment) *p.moment += Rat(static_cast<long>(a));
    }
    return s;
  }

  /// Any valid spec of dimension 2 or 4 and any flavor.
  ManifoldSpec any() {
    ManifoldSpec s;
    switch (uniform(0, 3)) {
      case 0: s = surface_union(); break;
      case 1: s = cp2(); break;
      case 2: s = product(sphere(2, 4), sphere(2, 4)); break;
      default: s = sphere(); break;
    }
    switch (uniform(0, 2)) {
      case 0: return s;
      case 1: return stable_variant(s);
      default: return gauge_flip(convert_to_spinc(s));
    }
  }

  HalfLaurent laurent(int max_terms = 5, std::int64_t span = 6, bool halves = true) {
    HalfLaurent p;
    int n = static_cast<int>(uniform(0, max_terms));
    for (int i = 0; i < n; ++i) {
      std::int64_t twice = halves ? uniform(-2 * span, 2 * span) : 2 * uniform(-span, span);
      p.add_term(HalfExp{twice}, rational());
    }
    return p;
  }

  Rat rational() { return Rat(Integer(static_cast<long>(uniform(-9, 9))), Integer(static_cast<long>(uniform(1, 4)))); }

  std::mt19937_64& engine() { return rng_; }

 private:
  static FixedPoint make(std::string label, std::vector<std::int64_t> w, std::int64_t fiber, bool orient, std::optional<Rat> moment) {
    FixedPoint p;
    p.label = std::move(label);
    p.tangent_weights = std::move(w);
    p.fiber_weight = fiber;
    p.orientation_matches = orient;
    p.moment = std::move(moment);
    return p;
  }

  std::mt19937_64 rng_;
};

/// Reduced space of a union of speed-one spheres at a regular level t: one
/// point per sphere whose moment values straddle t, signed by the sign of
/// e = orientation * weight at the higher point.
inline ReducedSpace sphere_union_reduced(const ManifoldSpec& spec, const Rat& t) {
  ReducedSpace red;
  for (std::size_t i = 0; i + 1 < spec.points.size(); i += 2) {
    const FixedPoint& p = spec.points[i];
    const FixedPoint& q = spec.points[i + 1];
    const FixedPoint& lo = *p.moment < *q.moment ? p : q;
    const FixedPoint& hi = *p.moment < *q.moment ? q : p;
    if (*lo.moment < t && t < *hi.moment) {
      std::int64_t e = (hi.orientation_matches ? 1 : -1) * hi.tangent_weights[0];
      red.components.push_back(PointComp{e > 0 ? 1 : -1});
    }
  }
  return red;
}

}  // namespace eqindex::testing
