// eqindex: command-line front end for the index library.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqindex/eqindex.hpp"

namespace {

using namespace eqindex;

struct Options {
  std::string target;
  std::string format = "text";
  std::vector<std::string> params;
  std::string level;
  std::string range;
};

struct Style {
  bool on = false;
  std::string good(const std::string& s) const { return on ? "\033[32m" + s + "\033[0m" : s; }
  std::string bad(const std::string& s) const { return on ? "\033[31m" + s + "\033[0m" : s; }
  std::string warn(const std::string& s) const { return on ? "\033[33m" + s + "\033[0m" : s; }
};

Style make_style() {
  const char* env = std::getenv("EQINDEX_COLOR");
  if (env && std::string(env) == "0") return {false};
  if (env && std::string(env) == "1") return {true};
  return {isatty(STDOUT_FILENO) != 0};
}

FixtureParams parse_params(const std::vector<std::string>& raw) {
  FixtureParams out;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw error(errc::parse_error, "--param expects key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

// Accepts "p", "p/q" and terminating decimals such as "2.5" or "-0.25".
Rat parse_level(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rat::parse(text);
  std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
    throw error(errc::parse_error, "not an exact level: '" + text + "'");
  bool neg = !whole.empty() && whole[0] == '-';
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  Rat w = Rat::parse(whole);
  Rat f(Integer(frac), scale);
  return neg ? w - f : w + f;
}

std::int64_t integer_level(const std::string& text) {
  Rat t = parse_level(text);
  if (!t.is_integer() || !t.num().fits_slong_p()) throw error(errc::invalid_spec, "--level must be an integer here, got " + t.str());
  return t.num().get_si();
}

SpecDocument load(const Options& o) {
  if (o.target.empty()) throw error(errc::invalid_spec, "missing spec path or fixture name");
  std::error_code ec;
  if (std::filesystem::exists(o.target, ec)) {
    if (!o.params.empty()) throw error(errc::invalid_spec, "--param applies to built-in fixtures only");
    return load_document(o.target);
  }
  if (find_fixture(o.target)) return load_fixture(o.target, parse_params(o.params));
  throw error(errc::io_error, "cannot open '" + o.target + "' (no such file or fixture)");
}

bool json_out(const Options& o) {
  if (o.format == "json") return true;
  if (o.format == "text") return false;
  throw error(errc::parse_error, "--format must be text or json");
}

std::string side(bool plus) { return plus ? "plus" : "minus"; }

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  SpecDocument doc = load(o);
  std::vector<Diagnostic> diags = validate(doc.manifold);
  for (const auto& [t, part] : doc.partitions) {
    try {
      require_partition_covers(doc.manifold, part);
    } catch (const error& e) {
      diags.push_back({"", "partition at " + t.str() + ": " + e.what()});
    }
  }
  for (const auto& [t, red] : doc.reduced) {
    try {
      require_parity(red, doc.manifold.flavor);
    } catch (const error& e) {
      diags.push_back({"", "reduced space at " + t.str() + ": " + e.what()});
    }
  }
  if (json_out(o)) {
    json j;
    j["name"] = doc.manifold.name;
    j["valid"] = diags.empty();
    j["diagnostics"] = json::array();
    for (const auto& d : diags) j["diagnostics"].push_back({{"label", d.label}, {"message", d.message}});
    std::cout << j.dump(2) << "\n";
  } else if (diags.empty()) {
    std::cout << doc.manifold.name << ": valid\n";
  }
  for (const auto& d : diags) std::cerr << doc.manifold.name << ": " << d.str() << "\n";
  return diags.empty() ? 0 : 1;
}

int cmd_character(const Options& o) {
  SpecDocument doc = load(o);
  Character c = character(doc.manifold);
  if (json_out(o)) {
    json j;
    j["name"] = doc.manifold.name;
    j["character"] = to_json(c.poly);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c.poly.str() << "\n";
  }
  return 0;
}

int cmd_multiplicities(const Options& o) {
  SpecDocument doc = load(o);
  Character c = character(doc.manifold);
  std::int64_t lo = 0, hi = 0;
  if (!o.range.empty()) {
    auto dots = o.range.find("..");
    if (dots == std::string::npos) throw error(errc::parse_error, "--range expects lo..hi, got '" + o.range + "'");
    lo = integer_level(o.range.substr(0, dots));
    hi = integer_level(o.range.substr(dots + 2));
  } else if (!c.poly.is_zero()) {
    lo = c.poly.min_exp().value().floor().get_si();
    hi = c.poly.max_exp().value().ceil().get_si();
  }
  if (json_out(o)) {
    json j;
    j["name"] = doc.manifold.name;
    j["rows"] = json::array();
    for (std::int64_t a = lo; a <= hi; ++a) j["rows"].push_back({{"a", a}, {"multiplicity", detail::integer_json(c.multiplicity(a))}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << std::setw(6) << "a" << "  multiplicity\n";
    for (std::int64_t a = lo; a <= hi; ++a) std::cout << std::setw(6) << a << "  " << c.multiplicity(a).get_str() << "\n";
  }
  return 0;
}

void print_conditions(const std::vector<PointVerdict>& verdicts, const Style& st) {
  std::cout << "conditions:\n";
  for (const auto& v : verdicts)
    std::cout << "  " << std::left << std::setw(8) << v.label << std::setw(6) << side(v.in_plus) << (v.ok() ? st.good("ok") : st.bad("fails"))
              << std::right << "\n";
}

int cmd_check_qr(const Options& o, const Style& st) {
  SpecDocument doc = load(o);
  if (o.level.empty()) throw error(errc::invalid_spec, "check-qr needs --level");
  std::int64_t a = integer_level(o.level);
  Rat t(static_cast<long>(a));
  if (doc.manifold.has_moments() && !is_regular_level(doc.manifold, t))
    throw error(errc::irregular_level, "level " + t.str() + " is a moment value of '" + doc.manifold.name + "'");
  const ReducedSpace* red = doc.reduced_at_level(t);
  if (!red) throw error(errc::invalid_spec, "'" + doc.manifold.name + "' declares no reduced space at level " + t.str());
  std::optional<Partition> part;
  if (const Partition* p = doc.partition_at_level(t)) part = *p;
  QRReport r = verify_qr(doc.manifold, part, *red, a);
  if (json_out(o)) {
    json j = to_json(r);
    j["name"] = doc.manifold.name;
    if (doc.manifold.has_moments()) j["window"] = to_json(condition_window(doc.manifold, a));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "level: " << a << "\n";
    std::cout << "multiplicity: " << r.lhs.get_str() << "\n";
    std::cout << "reduced index: " << r.rhs.get_str() << "\n";
    std::cout << "result: " << (r.equal ? st.good("EQUAL") : st.bad("NOT EQUAL")) << " (" << r.lhs.get_str() << (r.equal ? " = " : " != ")
              << r.rhs.get_str() << ")\n";
    print_conditions(r.conditions, st);
    for (const auto& w : r.warnings) std::cout << st.warn("warning: " + w) << "\n";
  }
  return r.equal ? 0 : 1;
}

int cmd_cut(const Options& o, const Style& st) {
  SpecDocument doc = load(o);
  if (o.level.empty()) throw error(errc::invalid_spec, "cut needs --level");
  Rat t = parse_level(o.level);
  Partition part;
  if (doc.manifold.has_moments()) {
    part = partition_at(doc.manifold, t);
  } else if (const Partition* p = doc.partition_at_level(t)) {
    part = *p;
  } else {
    throw error(errc::invalid_spec, "'" + doc.manifold.name + "' has no moments and declares no partition at level " + t.str());
  }
  const ReducedSpace* red = doc.reduced_at_level(t);
  if (!red) throw error(errc::invalid_spec, "'" + doc.manifold.name + "' declares no reduced space at level " + t.str());
  CutReport r = verify_cut_identities(doc.manifold, part, *red);
  if (json_out(o)) {
    json j = to_json(r);
    j["name"] = doc.manifold.name;
    j["level"] = t.str();
    std::cout << j.dump(2) << "\n";
  } else {
    if (r.cut) {
      SpecDocument d;
      d.manifold = r.cut->base;
      std::cout << serialize(d);
    }
    std::cout << "cut character: " << r.cut_character.str() << "\n";
    std::cout << "A: " << r.cut_multiplicity.get_str() << " (at infinity " << r.cut_at_infinity.str() << ", at zero " << r.cut_at_zero.str() << ")\n";
    std::cout << "B: " << r.multiplicity.get_str() << "\n";
    std::cout << "C: " << r.reduced.get_str() << "\n";
    std::cout << "A = B - C: " << (r.left_holds ? st.good("holds") : st.bad("fails")) << "\n";
    std::cout << "A = 0: " << (r.right_holds ? st.good("holds") : st.bad("fails")) << "\n";
  }
  return r.holds() ? 0 : 1;
}

int cmd_convert(const Options& o) {
  SpecDocument doc = load(o);
  require_valid(doc.manifold);
  SpecDocument out;
  out.manifold = convert_to_spinc(doc.manifold);
  out.partitions = doc.partitions;
  for (const auto& [t, red] : doc.reduced) {
    ReducedSpace r;
    for (const auto& c : red.components) {
      if (const auto* s = std::get_if<SurfaceComp>(&c)) {
        SurfaceComp s2 = *s;
        s2.degree = spinc_surface_degree(*s, doc.manifold.flavor);
        r.components.push_back(s2);
      } else {
        r.components.push_back(c);
      }
    }
    out.reduced[t] = r;
  }
  std::cout << serialize(out);
  return 0;
}

int cmd_examples(const Options& o) {
  if (o.target.empty()) {
    if (json_out(o)) {
      json j = json::array();
      for (const auto& f : fixtures()) j.push_back({{"name", f.name}, {"summary", f.summary}, {"params", f.defaults}});
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& f : fixtures()) std::cout << std::left << std::setw(20) << f.name << std::right << f.summary << "\n";
    }
    return 0;
  }
  std::cout << serialize(load_fixture(o.target, parse_params(o.params)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant index characters by fixed-point localization"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_path = true) {
    if (with_path) sub->add_option("path", o.target, "spec file or built-in fixture name");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--param", o.params, "fixture parameter key=value");
    return sub;
  };
  auto* validate_cmd = common(app.add_subcommand("validate", "check a spec"));
  auto* character_cmd = common(app.add_subcommand("character", "print the character"));
  auto* mult_cmd = common(app.add_subcommand("multiplicities", "tabulate multiplicities"));
  mult_cmd->add_option("--range", o.range, "lo..hi");
  auto* qr_cmd = common(app.add_subcommand("check-qr", "compare a multiplicity with the reduced index"));
  qr_cmd->add_option("--level", o.level, "integer level")->required();
  auto* cut_cmd = common(app.add_subcommand("cut", "cut at a level and check the index identities"));
  cut_cmd->add_option("--level", o.level, "rational level")->required();
  auto* convert_cmd = common(app.add_subcommand("convert", "emit the spin-c version of a complex spec"));
  auto* examples_cmd = common(app.add_subcommand("examples", "list fixtures or emit one"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Style st = make_style();
  try {
    if (validate_cmd->parsed()) return cmd_validate(o);
    if (character_cmd->parsed()) return cmd_character(o);
    if (mult_cmd->parsed()) return cmd_multiplicities(o);
    if (qr_cmd->parsed()) return cmd_check_qr(o, st);
    if (cut_cmd->parsed()) return cmd_cut(o, st);
    if (convert_cmd->parsed()) return cmd_convert(o);
    if (examples_cmd->parsed()) return cmd_examples(o);
  } catch (const error& e) {
    std::cerr << "eqindex: " << e.what() << "\n";
    return (e.code() == errc::io_error || e.code() == errc::parse_error) ? 2 : 1;
  }
  return 1;
}
