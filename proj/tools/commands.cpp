#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>

#include "bwave/errors.hpp"
#include "bwave/fields.hpp"
#include "bwave/spectral.hpp"
#include "bwave/version.hpp"

namespace bwave::cli {

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void header(std::ostream& out, const Scenario& s, const char* command) {
  out << "# bwave " << kVersion << '\n'
      << "# command " << command << '\n'
      << "# config_hash " << s.hash << '\n';
}

void row(std::ostream& out, const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << g17(v[i]);
  out << '\n';
}

void push(std::vector<double>& v, cplx z) {
  v.push_back(z.real());
  v.push_back(z.imag());
}

json verdict_json(const NonradiatingVerdict& v) {
  return {{"residual_modal", v.residual_modal},       {"residual_spectral", v.residual_spectral},
          {"residual_field", v.residual_field},       {"interior_scale", v.interior_scale},
          {"norm_f", v.norm_f},                       {"N", v.N},
          {"tolerance", v.tolerance},                 {"is_nonradiating", v.is_nonradiating}};
}

VerdictConfig verdict_config(const Scenario& s) {
  VerdictConfig c;
  c.truncation = s.truncation;
  c.tolerance = s.tolerance;
  c.direction_count = s.directions;
  return c;
}

BoundaryGrid grid_of(const Scenario& s) { return boundary_grid(s.ctx, s.resolution); }

}  // namespace

int cmd_verdict(const Scenario& s, std::ostream& out) {
  const SourceField f = build_source(s.ctx, s.source, "source");
  json j = verdict_json(verdict(f, verdict_config(s)));
  j["config_hash"] = s.hash;
  j["version"] = kVersion;
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_trace(const Scenario& s, std::ostream& out) {
  const SourceField f = build_source(s.ctx, s.source, "source");
  const BoundaryTrace t = boundary_trace(f, grid_of(s), s.truncation);
  const bool d3 = s.ctx.dimension() == 3;
  header(out, s, "trace");
  out << (d3 ? "theta,phi," : "theta,")
      << "u_re,u_im,dnu_u_re,dnu_u_im,lap_u_re,lap_u_im,dnu_lap_u_re,dnu_lap_u_im\n";
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    std::vector<double> v;
    const Point& y = t.grid.points[i];
    if (d3) {
      const auto a = spherical_angles(y);
      v = {a.theta, a.phi};
    } else {
      v = {polar_angle(y)};
    }
    push(v, t.u[i]);
    push(v, t.du_dnu[i]);
    push(v, t.lap_u[i]);
    push(v, t.dlap_u_dnu[i]);
    row(out, v);
  }
  return kOk;
}

int cmd_spectral(const Scenario& s, std::ostream& out) {
  const SourceField f = build_source(s.ctx, s.source, "source");
  const int N = s.truncation < 0 ? default_truncation(s.ctx) : s.truncation;
  const ModalCoefficients c = modal_coefficients(f, N);
  const ExteriorExpansion ex(s.ctx, c, f.support_radius());
  const BoundaryTrace t = boundary_trace(ex, grid_of(s));
  const auto dirs = direction_grid(s.ctx.dimension(), s.directions);
  const auto samples = spectral_samples(c, dirs);
  const auto uh = u_hat_from_trace(s.ctx, t, dirs);
  const auto vc = v_check_from_trace(s.ctx, t, dirs);
  const bool d3 = s.ctx.dimension() == 3;
  header(out, s, "spectral");
  out << "# norm_f " << g17(c.norm_f) << '\n';
  out << (d3 ? "dir_angle,dir_polar," : "dir_angle,")
      << "fhat_re,fhat_im,fcheck_re,fcheck_im,uhat_re,uhat_im,vcheck_re,vcheck_im,fhat_minus_uhat_abs\n";
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    std::vector<double> v;
    if (d3) {
      const auto a = spherical_angles(dirs[i]);
      v = {a.phi, a.theta};
    } else {
      v = {polar_angle(dirs[i])};
    }
    push(v, samples[i].f_hat);
    push(v, samples[i].f_check);
    push(v, uh[i]);
    push(v, vc[i]);
    v.push_back(std::abs(samples[i].f_hat - uh[i]));
    row(out, v);
  }
  return kOk;
}

int cmd_nonuniqueness(const Scenario& s, std::ostream& out) {
  if (!s.perturbation) throw ConfigError("perturbation", "missing");
  const SourceField f = build_source(s.ctx, s.source, "source");
  const SourceField g = build_source(s.ctx, *s.perturbation, "perturbation");
  const NonradiatingVerdict vg = verdict(g, verdict_config(s));
  if (!vg.is_nonradiating) {
    std::cerr << "perturbation: not nonradiating at tolerance " << g17(s.tolerance) << '\n';
    return kConfigError;
  }
  const BoundaryGrid grid = grid_of(s);
  const BoundaryTrace a = boundary_trace(f, grid, s.truncation);
  const BoundaryTrace b = boundary_trace(f + g, grid, s.truncation);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    worst = std::max({worst, std::abs(a.u[i] - b.u[i]), std::abs(a.du_dnu[i] - b.du_dnu[i]),
                      std::abs(a.lap_u[i] - b.lap_u[i]), std::abs(a.dlap_u_dnu[i] - b.dlap_u_dnu[i])});
  const double nf = f.l2_norm(), ng = g.l2_norm();
  json j{{"max_trace_discrepancy", worst},
         {"relative_discrepancy", nf + ng > 0.0 ? worst / (nf + ng) : 0.0},
         {"norm_f", nf},
         {"norm_g", ng},
         {"verdict_g", verdict_json(vg)},
         {"config_hash", s.hash},
         {"version", kVersion}};
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_field(const Scenario& s, std::ostream& out) {
  const SourceField f = build_source(s.ctx, s.source, "source");
  const ExteriorExpansion ex = ExteriorExpansion::from_source(f, s.truncation);
  const bool d3 = s.ctx.dimension() == 3;
  const auto dirs = direction_grid(s.ctx.dimension(), s.field_directions);
  header(out, s, "field");
  out << (d3 ? "x,y,z," : "x,y,") << "u_re,u_im,fh_re,fh_im,fm_re,fm_im\n";
  for (double rho : s.field_radii)
    for (const Point& d : dirs) {
      const FieldSample fs = ex.sample(rho * d);
      std::vector<double> v{fs.point[0], fs.point[1]};
      if (d3) v.push_back(fs.point[2]);
      push(v, fs.u);
      push(v, fs.f_h);
      push(v, fs.f_m);
      row(out, v);
    }
  return kOk;
}

}  // namespace bwave::cli
