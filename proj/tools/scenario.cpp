#include "scenario.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>

#include "bwave/errors.hpp"

namespace bwave::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
}

double get_number(const json& obj, const std::string& key, const std::string& where, double fallback,
                  bool required = false) {
  const std::string name = where.empty() ? key : where + "." + key;
  if (!obj.contains(key)) {
    if (required) throw ConfigError(name, "missing");
    return fallback;
  }
  if (!obj[key].is_number()) throw ConfigError(name, "expected a number");
  return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& key, const std::string& where, int fallback,
            bool required = false) {
  const std::string name = where.empty() ? key : where + "." + key;
  if (!obj.contains(key)) {
    if (required) throw ConfigError(name, "missing");
    return fallback;
  }
  if (!obj[key].is_number_integer()) throw ConfigError(name, "expected an integer");
  return obj[key].get<int>();
}

Point get_point(const json& obj, const std::string& key, const std::string& where) {
  const std::string name = where + "." + key;
  if (!obj.contains(key)) return {0.0, 0.0, 0.0};
  const json& a = obj[key];
  if (!a.is_array() || a.size() < 2 || a.size() > 3) throw ConfigError(name, "expected 2 or 3 numbers");
  Point p{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) throw ConfigError(name, "expected 2 or 3 numbers");
    p[i] = a[i].get<double>();
  }
  return p;
}

void check_source_keys(const json& spec, const std::string& where) {
  if (!spec.is_object()) throw ConfigError(where, "expected an object");
  if (!spec.contains("kind") || !spec["kind"].is_string()) throw ConfigError(where + ".kind", "missing");
  const std::string kind = spec["kind"];
  std::set<std::string> keys{"kind", "scale"};
  if (kind == "gaussian")
    keys.insert({"center", "sigma", "amplitude"});
  else if (kind == "bump_operator")
    keys.insert({"center", "rho", "amplitude"});
  else if (kind == "bessel3d")
    keys.insert({"m1", "m2"});
  else if (kind == "mode")
    keys.insert({"n", "m"});
  else if (kind != "zero" && kind != "bessel2d")
    throw ConfigError(where + ".kind", "unknown source kind '" + kind + "'");
  reject_unknown(spec, keys, where);
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Scenario parse_scenario(json doc, const Overrides& over) {
  reject_unknown(doc,
                 {"dimension", "R", "kappa", "root_index", "source", "perturbation", "truncation",
                  "tolerance", "resolution", "directions", "field"},
                 "");
  if (over.truncation) doc["truncation"] = *over.truncation;
  if (over.tolerance) doc["tolerance"] = *over.tolerance;
  if (over.resolution) doc["resolution"] = *over.resolution;
  if (over.dimension) doc["dimension"] = *over.dimension;

  Scenario s;
  const int dim = get_int(doc, "dimension", "", 0, true);
  if (dim != 2 && dim != 3) throw ConfigError("dimension", "must be 2 or 3");
  const double R = get_number(doc, "R", "", 0.0, true);
  if (!(R > 0.0) || !std::isfinite(R)) throw ConfigError("R", "must be positive");
  const bool has_kappa = doc.contains("kappa"), has_root = doc.contains("root_index");
  if (has_kappa == has_root) throw ConfigError("kappa", "give exactly one of kappa and root_index");
  if (has_kappa) {
    const double k = get_number(doc, "kappa", "", 0.0);
    if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("kappa", "must be positive");
    s.ctx = WaveContext(dim, k, R);
  } else {
    const int k = get_int(doc, "root_index", "", 0);
    if (k < 1) throw ConfigError("root_index", "must be at least 1");
    s.ctx = WaveContext::at_bessel_root(dim, R, k);
  }

  if (!doc.contains("source")) throw ConfigError("source", "missing");
  check_source_keys(doc["source"], "source");
  s.source = doc["source"];
  if (doc.contains("perturbation")) {
    check_source_keys(doc["perturbation"], "perturbation");
    s.perturbation = doc["perturbation"];
  }

  s.truncation = get_int(doc, "truncation", "", -1);
  if (doc.contains("truncation") && s.truncation < 0) throw ConfigError("truncation", "must be >= 0");
  s.tolerance = get_number(doc, "tolerance", "", 1e-6);
  if (!(s.tolerance > 0.0)) throw ConfigError("tolerance", "must be positive");
  s.resolution = get_int(doc, "resolution", "", 64);
  if (s.resolution < 8) throw ConfigError("resolution", "must be at least 8");
  s.directions = get_int(doc, "directions", "", 64);
  if (s.directions < 1) throw ConfigError("directions", "must be positive");

  if (doc.contains("field")) {
    const json& f = doc["field"];
    reject_unknown(f, {"radii", "directions"}, "field");
    if (f.contains("radii")) {
      if (!f["radii"].is_array() || f["radii"].empty()) throw ConfigError("field.radii", "expected numbers");
      for (const json& r : f["radii"]) {
        if (!r.is_number() || !(r.get<double>() >= R)) throw ConfigError("field.radii", "each radius must be >= R");
        s.field_radii.push_back(r.get<double>());
      }
    }
    s.field_directions = get_int(f, "directions", "field", 16);
    if (s.field_directions < 1) throw ConfigError("field.directions", "must be positive");
  }
  if (s.field_radii.empty()) s.field_radii = {1.5 * R, 3.0 * R};

  s.hash = fnv1a_hex(doc.dump());
  return s;
}

Scenario load_scenario(const std::string& path, const Overrides& over) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(std::move(doc), over);
}

SourceField build_source(const WaveContext& ctx, const json& spec, const std::string& where) {
  check_source_keys(spec, where);
  const std::string kind = spec["kind"];
  const double scale = get_number(spec, "scale", where, 1.0);
  try {
    SourceField f = SourceField::zero(ctx);
    if (kind == "gaussian") {
      const double sigma = get_number(spec, "sigma", where, 0.0, true);
      if (!(sigma > 0.0)) throw ConfigError(where + ".sigma", "must be positive");
      f = make_gaussian(ctx, get_point(spec, "center", where), sigma,
                        get_number(spec, "amplitude", where, 1.0));
    } else if (kind == "bump_operator") {
      BumpSpec b;
      b.rho = get_number(spec, "rho", where, 0.0);
      b.center = get_point(spec, "center", where);
      b.amplitude = get_number(spec, "amplitude", where, 1.0);
      f = make_bump_nonradiating(ctx, b);
    } else if (kind == "bessel2d") {
      if (ctx.dimension() != 2) throw ConfigError(where + ".kind", "bessel2d needs dimension 2");
      f = make_2d_bessel_nonradiating(ctx);
    } else if (kind == "bessel3d") {
      if (ctx.dimension() != 3) throw ConfigError(where + ".kind", "bessel3d needs dimension 3");
      f = make_3d_bessel_nonradiating(ctx, get_int(spec, "m1", where, 3), get_int(spec, "m2", where, 4));
    } else if (kind == "mode") {
      f = make_bessel_mode(ctx, {get_int(spec, "n", where, 0, true), get_int(spec, "m", where, 0)});
    }
    return scale == 1.0 ? f : cplx(scale) * f;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(where, e.what());
  }
}

}  // namespace bwave::cli
