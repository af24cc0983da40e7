#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "commands.hpp"

using namespace bwave;
using namespace bwave::cli;
using nlohmann::json;

namespace {

json base_2d() {
  return {{"dimension", 2}, {"R", 1.0}, {"kappa", 2.0},
          {"source", {{"kind", "gaussian"}, {"center", {0.2, -0.15}}, {"sigma", 0.3}}}};
}

json bessel_2d() {
  return {{"dimension", 2}, {"R", 1.0}, {"root_index", 1}, {"source", {{"kind", "bessel2d"}}}};
}

std::string config_key(const json& doc) {
  try {
    parse_scenario(doc);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

// Data rows of a CSV as numbers; comment and header lines dropped.
std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<double> r;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

std::string run(int (*cmd)(const Scenario&, std::ostream&), const Scenario& s, int expect = kOk) {
  std::ostringstream out;
  EXPECT_EQ(cmd(s, out), expect);
  return out.str();
}

}  // namespace

TEST(Scenario, RejectsUnknownKeysByName) {
  json d = base_2d();
  d["resoluton"] = 64;
  EXPECT_EQ(config_key(d), "resoluton");
  d = base_2d();
  d["source"]["width"] = 1.0;
  EXPECT_EQ(config_key(d), "source.width");
  d = base_2d();
  d["field"] = {{"radius", 2.0}};
  EXPECT_EQ(config_key(d), "field.radius");
}

TEST(Scenario, ValidatesValues) {
  json d = base_2d();
  d["R"] = -1.0;
  EXPECT_EQ(config_key(d), "R");
  d = base_2d();
  d["root_index"] = 1;
  EXPECT_EQ(config_key(d), "kappa");
  d = base_2d();
  d["dimension"] = 4;
  EXPECT_EQ(config_key(d), "dimension");
  d = base_2d();
  d["source"]["kind"] = "laser";
  EXPECT_EQ(config_key(d), "source.kind");
  d = base_2d();
  d["field"] = {{"radii", {0.5}}};
  EXPECT_EQ(config_key(d), "field.radii");
  d = base_2d();
  d.erase("source");
  EXPECT_EQ(config_key(d), "source");
}

TEST(Scenario, HashTracksOverrides) {
  const Scenario a = parse_scenario(base_2d());
  const Scenario b = parse_scenario(base_2d());
  EXPECT_EQ(a.hash, b.hash);
  EXPECT_EQ(a.hash.size(), 16u);
  Overrides o;
  o.resolution = 32;
  const Scenario c = parse_scenario(base_2d(), o);
  EXPECT_NE(a.hash, c.hash);
  EXPECT_EQ(c.resolution, 32);
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
}

TEST(Scenario, SourceConstructionErrorsAreConfigErrors) {
  json d = bessel_2d();
  d.erase("root_index");
  d["kappa"] = 2.0;  // not a root
  const Scenario s = parse_scenario(d);
  EXPECT_THROW(build_source(s.ctx, s.source, "source"), ConfigError);
  json e = base_2d();
  e["source"] = {{"kind", "bessel3d"}};
  const Scenario t = parse_scenario(e);
  EXPECT_THROW(build_source(t.ctx, t.source, "source"), ConfigError);
}

TEST(Command, VerdictReports) {
  const json a = json::parse(run(cmd_verdict, parse_scenario(bessel_2d())));
  EXPECT_TRUE(a["is_nonradiating"].get<bool>());
  for (const char* k : {"residual_modal", "residual_spectral", "residual_field", "N", "tolerance",
                        "config_hash", "version"})
    EXPECT_TRUE(a.contains(k)) << k;
  const json b = json::parse(run(cmd_verdict, parse_scenario(base_2d())));
  EXPECT_FALSE(b["is_nonradiating"].get<bool>());
}

TEST(Command, TraceOfZeroAndNonradiatingSources) {
  json z = base_2d();
  z["source"] = {{"kind", "zero"}};
  z["resolution"] = 48;
  const auto rows = csv_rows(run(cmd_trace, parse_scenario(z)));
  ASSERT_EQ(rows.size(), 48u);
  for (const auto& r : rows)
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_EQ(r[i], 0.0);

  json b = base_2d();
  b["source"] = {{"kind", "bump_operator"}};
  b["kappa"] = 3.0;
  for (const auto& r : csv_rows(run(cmd_trace, parse_scenario(b))))
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(std::abs(r[i]), 1e-8);
}

TEST(Command, SpectralIdentityColumn) {
  const Scenario s = parse_scenario(base_2d());
  const std::string text = run(cmd_spectral, s);
  const double nf = make_gaussian(s.ctx, {0.2, -0.15, 0}, 0.3).l2_norm();
  const auto rows = csv_rows(text);
  ASSERT_EQ(rows.size(), 64u);
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 10u);
    EXPECT_LT(r.back(), 1e-6 * nf);
  }

  const Scenario g = parse_scenario(bessel_2d());
  const double ng = make_2d_bessel_nonradiating(g.ctx).l2_norm();
  for (const auto& r : csv_rows(run(cmd_spectral, g)))
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(std::abs(r[i]), 1e-8 * ng);
}

TEST(Command, SpectralColumnsIn3D) {
  json d = base_2d();
  d["dimension"] = 3;
  d["directions"] = 36;
  d["resolution"] = 16;
  const auto rows = csv_rows(run(cmd_spectral, parse_scenario(d)));
  ASSERT_EQ(rows.size(), 36u);
  EXPECT_EQ(rows[0].size(), 11u);
}

TEST(Command, Nonuniqueness) {
  json d = bessel_2d();
  d["source"] = {{"kind", "gaussian"}, {"center", {0.2, -0.15}}, {"sigma", 0.3}};
  d["perturbation"] = {{"kind", "bessel2d"}};
  const json a = json::parse(run(cmd_nonuniqueness, parse_scenario(d)));
  const double nf = a["norm_f"], ng = a["norm_g"];
  EXPECT_LT(a["max_trace_discrepancy"].get<double>(), 1e-8 * (nf + ng));
  EXPECT_TRUE(a["verdict_g"]["is_nonradiating"].get<bool>());

  d["perturbation"]["scale"] = 1e3;
  const json b = json::parse(run(cmd_nonuniqueness, parse_scenario(d)));
  EXPECT_LT(b["max_trace_discrepancy"].get<double>(), 1e-5 * b["norm_g"].get<double>());

  // f = g: the trace of 2g vanishes.
  d["source"] = {{"kind", "bessel2d"}};
  d["perturbation"] = {{"kind", "bessel2d"}};
  const Scenario s = parse_scenario(d);
  const json c = json::parse(run(cmd_nonuniqueness, s));
  EXPECT_TRUE(c["verdict_g"]["is_nonradiating"].get<bool>());
  const auto rows = csv_rows(run(cmd_trace, s));
  for (const auto& r : rows)
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(std::abs(r[i]), 1e-8 * c["norm_g"].get<double>());

  // A radiating perturbation is refused.
  d["perturbation"] = {{"kind", "gaussian"}, {"sigma", 0.3}};
  run(cmd_nonuniqueness, parse_scenario(d), kConfigError);
}

TEST(Command, FieldRows) {
  json d = base_2d();
  d["field"] = {{"radii", {1.5, 3.0}}, {"directions", 8}};
  const auto rows = csv_rows(run(cmd_field, parse_scenario(d)));
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_NEAR(std::hypot(rows[0][0], rows[0][1]), 1.5, 1e-14);
}

TEST(Command, OutputIsDeterministicAndTagged) {
  const Scenario s = parse_scenario(base_2d());
  const std::string a = run(cmd_spectral, s), b = run(cmd_spectral, s);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("# config_hash " + s.hash), std::string::npos);
  EXPECT_NE(a.find("# bwave "), std::string::npos);
  EXPECT_EQ(run(cmd_verdict, s), run(cmd_verdict, s));
}
