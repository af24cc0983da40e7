#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bwave/errors.hpp"
#include "bwave/version.hpp"
#include "commands.hpp"

using namespace bwave;
using namespace bwave::cli;

namespace {

using Command = int (*)(const Scenario&, std::ostream&);

struct Options {
  std::string config;
  std::string out;
  Overrides over;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", o.out, "Output file (default: stdout)");
  sub->add_option("--truncation", o.over.truncation, "Modal truncation N");
  sub->add_option("--tolerance", o.over.tolerance, "Verdict tolerance relative to the source norm");
  sub->add_option("--resolution", o.over.resolution, "Boundary grid resolution");
  sub->add_option("--dimension", o.over.dimension, "Override the dimension")->check(CLI::IsMember({2, 3}));
}

int run(Command cmd, const Options& o) {
  try {
    const Scenario s = load_scenario(o.config, o.over);
    // Buffer so that a failing command leaves no partial file behind.
    std::ostringstream buf;
    const int rc = cmd(s, buf);
    if (rc != kOk) return rc;
    if (o.out.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw ConfigError("out", "cannot write '" + o.out + "'");
      file << buf.str();
    }
    return kOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistent verdict: " << e.what() << '\n';
    return kInconsistent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sources of the biharmonic wave equation: verdicts, traces and spectra"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const std::map<std::string, std::pair<Command, const char*>> commands{
      {"verdict", {cmd_verdict, "Decide whether the source is nonradiating (JSON)"}},
      {"trace", {cmd_trace, "Boundary data on the circle or sphere of radius R (CSV)"}},
      {"spectral", {cmd_spectral, "Transforms and near-field functionals on |xi| = kappa (CSV)"}},
      {"nonuniqueness", {cmd_nonuniqueness, "Compare traces of source and source + perturbation (JSON)"}},
      {"field", {cmd_field, "Exterior field at the configured radii (CSV)"}},
  };
  Options opts;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    subs[name] = app.add_subcommand(name, entry.second);
    add_common(subs[name], opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) return run(commands.at(name).first, opts);
  return kConfigError;
}
