#pragma once

/**
 * @file fixtures.hpp
 * @brief Built-in example documents, some with integer parameters.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eqindex/io.hpp"

namespace eqindex {

using FixtureParams = std::map<std::string, std::string>;

struct FixtureInfo {
  std::string name;
  std::string summary;
  FixtureParams defaults;
  std::function<SpecDocument(const FixtureParams&)> build;
};

namespace detail {

inline std::int64_t int_param(const FixtureParams& params, const FixtureParams& defaults, const std::string& key) {
  auto it = params.find(key);
  const std::string& text = it != params.end() ? it->second : defaults.at(key);
  Rat v = Rat::parse(text);
  if (!v.is_integer() || !v.num().fits_slong_p()) throw error(errc::invalid_spec, "parameter " + key + " must be a machine integer, got '" + text + "'");
  return v.num().get_si();
}

inline FixedPoint point(std::string label, std::vector<std::int64_t> weights, std::int64_t fiber, bool orient, std::optional<Rat> moment) {
  FixedPoint p;
  p.label = std::move(label);
  p.tangent_weights = std::move(weights);
  p.fiber_weight = fiber;
  p.orientation_matches = orient;
  p.moment = std::move(moment);
  return p;
}

inline ReducedSpace points_of(std::initializer_list<int> signs) {
  ReducedSpace r;
  for (int s : signs) r.components.push_back(PointComp{s});
  return r;
}

/// Two-point sphere with the poles at moment values lo < hi. Integer levels
/// strictly between carry one reduced point of sign `sign`; one level beyond
/// each end is declared empty. Half-integer levels between are declared too,
/// for cutting.
inline void declare_sphere_levels(SpecDocument& doc, const Rat& lo, const Rat& hi, int sign) {
  for (Integer a = lo.floor() - 1; a <= hi.ceil() + 1; ++a) {
    for (int half = 0; half < 2; ++half) {
      Rat t = Rat(a) + Rat(half, 2);
      if (t == lo || t == hi) continue;
      if (lo < t && t < hi)
        doc.reduced[t] = points_of({sign});
      else if (half == 0)
        doc.reduced[t] = ReducedSpace{};
    }
  }
}

}  // namespace detail

/// S^2 rotated with weight one, L = O(m) linearized so the south pole has
/// fiber weight 0 and the north pole m. For m < 0 the data is presymplectic.
inline SpecDocument fixture_s2_complex(std::int64_t m) {
  SpecDocument doc;
  doc.manifold.name = "s2_complex_m" + std::to_string(m);
  doc.manifold.dim = 2;
  doc.manifold.flavor = Flavor::AlmostComplex;
  doc.manifold.notes = "Rotation of the sphere, line bundle of degree m. The character is 1 + ... + z^m for m >= 0, "
                       "-(z^{m+1} + ... + z^-1) for m < -1 and 0 for m = -1. For negative m the reduced points carry "
                       "sign -1.";
  doc.manifold.points = {detail::point("S", {-1}, 0, true, Rat(0)), detail::point("N", {1}, m, true, Rat(m))};
  if (m == 0) return doc;
  Rat lo = std::min(Rat(0), Rat(m)), hi = std::max(Rat(0), Rat(m));
  detail::declare_sphere_levels(doc, lo, hi, m > 0 ? 1 : -1);
  return doc;
}

/// Spin-c sphere with moment values -1/2 and m - 1/2.
inline SpecDocument fixture_s2_spinc(std::int64_t m) {
  SpecDocument doc;
  doc.manifold.name = "s2_spinc_m" + std::to_string(m);
  doc.manifold.dim = 2;
  doc.manifold.flavor = Flavor::SpinC;
  doc.manifold.notes = "Spin-c structure on the sphere with determinant line of degree 2m; moment values -1/2 and "
                       "m - 1/2. Multiplicity +1 for 0 <= a < m.";
  Rat lo(Integer(-1), Integer(2)), hi = Rat(m) - Rat(Integer(1), Integer(2));
  doc.manifold.points = {detail::point("S", {-1}, -1, true, lo), detail::point("N", {1}, 2 * m - 1, true, hi)};
  if (m <= 0) return doc;
  for (std::int64_t a = -1; a <= m; ++a) doc.reduced[Rat(a)] = (a >= 0 && a < m) ? detail::points_of({1}) : ReducedSpace{};
  return doc;
}

/// Sphere with moment values 1 and 11 but a presymplectic form whose level
/// set at 0 is two circles of opposite orientation.
inline SpecDocument fixture_o10_presymplectic() {
  SpecDocument doc;
  doc.manifold.name = "o10_presymplectic";
  doc.manifold.dim = 2;
  doc.manifold.flavor = Flavor::AlmostComplex;
  doc.manifold.notes = "Sphere with the line bundle O(10) and a presymplectic form whose moment map is 5h^2 + 5h + 1 "
                       "in the height h; the poles have moment values 1 and 11. The level set at 0 is two circles "
                       "with opposite orientations, so the reduced space is two points of signs +1 and -1.";
  doc.manifold.points = {detail::point("S", {-1}, 1, true, Rat(1)), detail::point("N", {1}, 11, true, Rat(11))};
  doc.reduced[Rat(0)] = detail::points_of({1, -1});
  for (std::int64_t a = 2; a <= 10; ++a) doc.reduced[Rat(a)] = detail::points_of({1});
  return doc;
}

/// S^4 with the stable complex structure from C^2 on both hemispheres; no
/// moment values, the equator is the declared splitting.
inline SpecDocument fixture_s4_stable(std::int64_t m) {
  SpecDocument doc;
  doc.manifold.name = "s4_stable_m" + std::to_string(m);
  doc.manifold.dim = 4;
  doc.manifold.flavor = Flavor::StableComplex;
  doc.manifold.notes = "S^4 with the circle acting on both poles with weights (1, 1); the south pole orientation "
                       "disagrees with the stable complex one. The character vanishes for every m, while the reduced "
                       "space at the equator is a sphere of degree m with index m + 1. The conditions hold only for "
                       "m = -1.";
  doc.manifold.points = {detail::point("N", {1, 1}, m, true, std::nullopt), detail::point("S", {1, 1}, m, false, std::nullopt)};
  doc.partitions[Rat(0)] = Partition{{"N"}, {"S"}};
  SurfaceComp s;
  s.genus = 0;
  s.degree = m;
  s.sign = 1;
  s.normal_degree = -1;
  doc.reduced[Rat(0)].components.push_back(s);
  return doc;
}

/// Free rotation of one factor of T^2.
inline SpecDocument fixture_torus() {
  SpecDocument doc;
  doc.manifold.name = "torus";
  doc.manifold.dim = 2;
  doc.manifold.flavor = Flavor::AlmostComplex;
  doc.manifold.notes = "The circle rotates one factor of T^2 freely, so there are no fixed points and the character "
                       "is 0. A circle-valued moment map has a single orbit as level set; the reduced space is one "
                       "point of index 1, but that orbit does not separate the torus. No splitting hypersurface "
                       "exists, and the declared reduced space at 0 is refused with NotSplitting.";
  doc.partitions[Rat(0)] = Partition{};
  doc.reduced[Rat(0)] = detail::points_of({1});
  return doc;
}

/// CP^2 with the circle acting through weights (0, 1, 2) and L = O(k).
inline SpecDocument fixture_cp2_complex(std::int64_t k) {
  SpecDocument doc;
  doc.manifold.name = "cp2_complex_k" + std::to_string(k);
  doc.manifold.dim = 4;
  doc.manifold.flavor = Flavor::AlmostComplex;
  doc.manifold.notes = "CP^2 with [x0:x1:x2] -> [x0:z x1:z^2 x2] and L = O(k). The character is the complete "
                       "homogeneous polynomial h_k(1, z, z^2).";
  const std::int64_t w[3] = {0, 1, 2};
  for (int i = 0; i < 3; ++i) {
    std::vector<std::int64_t> weights;
    for (int j = 0; j < 3; ++j)
      if (j != i) weights.push_back(w[i] - w[j]);
    doc.manifold.points.push_back(detail::point("P" + std::to_string(i), weights, k * w[i], true, Rat(k * w[i])));
  }
  return doc;
}

inline const std::vector<FixtureInfo>& fixtures() {
  static const std::vector<FixtureInfo> all = {
      {"s2_complex_m5", "almost complex S^2, degree m (default 5)", {{"m", "5"}},
       [](const FixtureParams& p) { return fixture_s2_complex(detail::int_param(p, {{"m", "5"}}, "m")); }},
      {"s2_spinc_m4", "spin-c S^2 with moment values -1/2 and m - 1/2 (default m = 4)", {{"m", "4"}},
       [](const FixtureParams& p) { return fixture_s2_spinc(detail::int_param(p, {{"m", "4"}}, "m")); }},
      {"o10_presymplectic", "presymplectic S^2 with O(10), disconnected reduced space at 0", {},
       [](const FixtureParams&) { return fixture_o10_presymplectic(); }},
      {"s4_stable_m", "stable complex S^4 family (default m = 0)", {{"m", "0"}},
       [](const FixtureParams& p) { return fixture_s4_stable(detail::int_param(p, {{"m", "0"}}, "m")); }},
      {"torus", "free circle action on T^2, no splitting hypersurface", {},
       [](const FixtureParams&) { return fixture_torus(); }},
      {"cp2_complex_k", "CP^2 with weights (0, 1, 2) and O(k) (default k = 1)", {{"k", "1"}},
       [](const FixtureParams& p) { return fixture_cp2_complex(detail::int_param(p, {{"k", "1"}}, "k")); }},
  };
  return all;
}

inline const FixtureInfo* find_fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

inline SpecDocument load_fixture(const std::string& name, const FixtureParams& params = {}) {
  const FixtureInfo* f = find_fixture(name);
  if (!f) throw error(errc::unknown_fixture, "no fixture named '" + name + "'");
  for (const auto& [key, value] : params)
    if (!f->defaults.count(key)) throw error(errc::invalid_spec, "fixture '" + name + "' has no parameter '" + key + "'");
  return f->build(params);
}

}  // namespace eqindex
