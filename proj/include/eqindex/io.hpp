#pragma once

/**
 * @file io.hpp
 * @brief Spec documents (format 1) and JSON renderings of reports.
 *
 * A spec document is JSON; line and block comments are accepted. Rationals are
 * written as "p/q" strings (integers may also be bare numbers), never as
 * floating point. Partitions and reduced spaces are keyed by level.
 *
 *   {
 *     "format": 1,
 *     "manifold": {"name": "s2", "dim": 2, "flavor": "almost-complex", "notes": "..."},
 *     "points": [{"label": "S", "weights": [-1], "fiber": 0,
 *                 "orientation_matches": true, "moment": "0"}],
 *     "partitions": {"0": {"plus": ["N"], "minus": ["S"]}},
 *     "reduced": {"2": [{"kind": "point", "sign": 1}],
 *                 "0": [{"kind": "surface", "genus": 0, "degree": 3,
 *                        "sign": 1, "normal_degree": -1}]}
 *   }
 */

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

#include "eqindex/cutting.hpp"
#include "eqindex/localization.hpp"
#include "eqindex/model.hpp"
#include "eqindex/reduction.hpp"

namespace eqindex {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

struct SpecDocument {
  ManifoldSpec manifold;
  std::map<Rat, Partition> partitions;
  std::map<Rat, ReducedSpace> reduced;

  const Partition* partition_at_level(const Rat& t) const {
    auto it = partitions.find(t);
    return it == partitions.end() ? nullptr : &it->second;
  }
  const ReducedSpace* reduced_at_level(const Rat& t) const {
    auto it = reduced.find(t);
    return it == reduced.end() ? nullptr : &it->second;
  }

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

namespace detail {

[[noreturn]] inline void bad(const std::string& msg) { throw error(errc::parse_error, msg); }

inline const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + ": missing key '" + key + "'");
  return j.at(key);
}

inline std::int64_t get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer");
  return j.get<std::int64_t>();
}

inline Rat get_rat(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  bad(where + ": expected an exact rational (\"p/q\" string or integer)");
}

inline Integer get_integer(const json& j, const std::string& where) {
  Rat r = get_rat(j, where);
  if (!r.is_integer()) bad(where + ": expected an integer, got " + r.str());
  return r.to_integer();
}

inline json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline Flavor parse_flavor(const std::string& s) {
  if (s == "almost-complex") return Flavor::AlmostComplex;
  if (s == "stable-complex") return Flavor::StableComplex;
  if (s == "spinc" || s == "spin-c") return Flavor::SpinC;
  bad("unknown flavor '" + s + "'");
}

inline ReducedComponent parse_component(const json& j, const std::string& where) {
  std::string kind = need(j, "kind", where).get<std::string>();
  int sign = static_cast<int>(get_int(need(j, "sign", where), where + ".sign"));
  if (kind == "point") return PointComp{sign};
  if (kind == "surface") {
    SurfaceComp s;
    s.sign = sign;
    s.genus = static_cast<int>(get_int(need(j, "genus", where), where + ".genus"));
    s.degree = get_integer(need(j, "degree", where), where + ".degree");
    if (j.contains("normal_degree")) s.normal_degree = get_integer(j.at("normal_degree"), where + ".normal_degree");
    return s;
  }
  bad(where + ": unknown component kind '" + kind + "'");
}

}  // namespace detail

inline SpecDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, e.what());
  }
  try {
    SpecDocument doc;
    if (!j.is_object()) detail::bad("document must be a JSON object");
    auto fmt = detail::get_int(detail::need(j, "format", "document"), "format");
    if (fmt != kFormatVersion) detail::bad("unsupported format " + std::to_string(fmt));
    const json& m = detail::need(j, "manifold", "document");
    doc.manifold.name = detail::need(m, "name", "manifold").get<std::string>();
    doc.manifold.dim = static_cast<int>(detail::get_int(detail::need(m, "dim", "manifold"), "manifold.dim"));
    doc.manifold.flavor = detail::parse_flavor(detail::need(m, "flavor", "manifold").get<std::string>());
    if (m.contains("notes")) doc.manifold.notes = m.at("notes").get<std::string>();

    if (j.contains("points")) {
      for (const auto& pj : j.at("points")) {
        FixedPoint p;
        p.label = detail::need(pj, "label", "point").get<std::string>();
        std::string where = "point '" + p.label + "'";
        for (const auto& w : detail::need(pj, "weights", where)) p.tangent_weights.push_back(detail::get_int(w, where + ".weights"));
        p.fiber_weight = detail::get_int(detail::need(pj, "fiber", where), where + ".fiber");
        if (pj.contains("orientation_matches")) p.orientation_matches = pj.at("orientation_matches").get<bool>();
        if (pj.contains("moment")) p.moment = detail::get_rat(pj.at("moment"), where + ".moment");
        doc.manifold.points.push_back(std::move(p));
      }
    }
    if (j.contains("partitions")) {
      for (const auto& [key, pj] : j.at("partitions").items()) {
        Partition part;
        for (const auto& l : detail::need(pj, "plus", "partition " + key)) part.plus.insert(l.get<std::string>());
        for (const auto& l : detail::need(pj, "minus", "partition " + key)) part.minus.insert(l.get<std::string>());
        doc.partitions.emplace(Rat::parse(key), std::move(part));
      }
    }
    if (j.contains("reduced")) {
      for (const auto& [key, rj] : j.at("reduced").items()) {
        ReducedSpace red;
        std::size_t i = 0;
        for (const auto& cj : rj) red.components.push_back(detail::parse_component(cj, "reduced[" + key + "][" + std::to_string(i++) + "]"));
        doc.reduced.emplace(Rat::parse(key), std::move(red));
      }
    }
    return doc;
  } catch (const json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
}

inline SpecDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

inline json to_json(const ReducedComponent& c) {
  json j;
  if (const auto* p = std::get_if<PointComp>(&c)) {
    j["kind"] = "point";
    j["sign"] = p->sign;
    return j;
  }
  const auto& s = std::get<SurfaceComp>(c);
  j["kind"] = "surface";
  j["genus"] = s.genus;
  j["degree"] = detail::integer_json(s.degree);
  j["sign"] = s.sign;
  if (s.normal_degree) j["normal_degree"] = detail::integer_json(*s.normal_degree);
  return j;
}

inline json to_json(const FixedPoint& p) {
  json j;
  j["label"] = p.label;
  j["weights"] = p.tangent_weights;
  j["fiber"] = p.fiber_weight;
  j["orientation_matches"] = p.orientation_matches;
  if (p.moment) j["moment"] = p.moment->str();
  return j;
}

/// Canonical form: fixed key order, levels ascending, moments as strings.
inline json to_json(const SpecDocument& doc) {
  json j;
  j["format"] = kFormatVersion;
  j["manifold"]["name"] = doc.manifold.name;
  j["manifold"]["dim"] = doc.manifold.dim;
  j["manifold"]["flavor"] = to_string(doc.manifold.flavor);
  if (!doc.manifold.notes.empty()) j["manifold"]["notes"] = doc.manifold.notes;
  j["points"] = json::array();
  for (const auto& p : doc.manifold.points) j["points"].push_back(to_json(p));
  if (!doc.partitions.empty()) {
    j["partitions"] = json::object();
    for (const auto& [t, part] : doc.partitions) {
      json pj;
      pj["plus"] = json(std::vector<std::string>(part.plus.begin(), part.plus.end()));
      pj["minus"] = json(std::vector<std::string>(part.minus.begin(), part.minus.end()));
      j["partitions"][t.str()] = pj;
    }
  }
  if (!doc.reduced.empty()) {
    j["reduced"] = json::object();
    for (const auto& [t, red] : doc.reduced) {
      json arr = json::array();
      for (const auto& c : red.components) arr.push_back(to_json(c));
      j["reduced"][t.str()] = arr;
    }
  }
  return j;
}

inline std::string serialize(const SpecDocument& doc) { return to_json(doc).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Report renderings.

inline json to_json(const HalfLaurent& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e.value().str()}, {"coefficient", c.str()}});
  return json{{"text", p.str()}, {"terms", terms}};
}

inline json to_json(const std::vector<PointVerdict>& verdicts) {
  json arr = json::array();
  for (const auto& v : verdicts)
    arr.push_back({{"label", v.label},
                   {"side", v.in_plus ? "plus" : "minus"},
                   {"upper_fires", v.plus_fires},
                   {"lower_fires", v.minus_fires},
                   {"ok", v.ok()}});
  return arr;
}

inline json to_json(const QRReport& r) {
  json j;
  j["level"] = r.level;
  j["lhs"] = detail::integer_json(r.lhs);
  j["rhs"] = detail::integer_json(r.rhs);
  j["equal"] = r.equal;
  j["conditions_hold"] = r.conditions_hold;
  j["conditions"] = to_json(r.conditions);
  j["warnings"] = r.warnings;
  return j;
}

inline json to_json(const CutReport& r) {
  json j;
  j["A"] = detail::integer_json(r.cut_multiplicity);
  j["B"] = detail::integer_json(r.multiplicity);
  j["C"] = detail::integer_json(r.reduced);
  j["A_at_infinity"] = r.cut_at_infinity.str();
  j["A_at_zero"] = r.cut_at_zero.str();
  j["left_holds"] = r.left_holds;
  j["right_holds"] = r.right_holds;
  j["cut_character"] = to_json(r.cut_character);
  if (r.cut) {
    SpecDocument d;
    d.manifold = r.cut->base;
    j["cut_spec"] = to_json(d);
    j["reduced_labels"] = r.cut->reduced_labels;
  }
  return j;
}

inline json to_json(const LevelWindow& w) {
  json j;
  j["empty"] = w.empty;
  j["lo"] = w.lo ? json(w.lo->str()) : json(nullptr);
  j["hi"] = w.hi ? json(w.hi->str()) : json(nullptr);
  json ex = json::array();
  for (const auto& v : w.excluded) ex.push_back(v.str());
  j["excluded"] = ex;
  return j;
}

}  // namespace eqindex
