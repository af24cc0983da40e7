#include "bwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bwave/errors.hpp"
#include "bwave/kernels.hpp"
#include "bwave/specfun.hpp"

namespace bwave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExpLimit = 700.0;

void guard_exponent(const WaveContext& ctx, double radius) {
  if (ctx.kappa() * radius > kExpLimit) {
    const double thr = specfun::bessel_i_overflow_threshold(0);
    throw OverflowError("exponential weight e^{kappa R} exceeds the floating-point range", thr);
  }
}

Point scaled(double s, const Point& p) { return s * p; }

}  // namespace

std::vector<Point> direction_grid(int dimension, int count) {
  if (count < 1) throw ParameterError("direction count must be positive");
  if (dimension == 2) {
    const AngularRule a = angular_rule_2d(count);
    std::vector<Point> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.direction(i);
    return out;
  }
  const int np = std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(count)))));
  const AngularRule a = angular_rule_3d(np, std::max(1, count / np));
  std::vector<Point> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.direction(i);
  return out;
}

std::vector<SpectralSample> fourier_on_circle(const ModalCoefficients& c,
                                              const std::vector<Point>& directions) {
  std::vector<SpectralSample> out(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i)
    out[i] = {directions[i], transform_from_alpha(c, directions[i]), 0.0};
  return out;
}

std::vector<SpectralSample> laplace_on_circle(const ModalCoefficients& c,
                                              const std::vector<Point>& directions) {
  std::vector<SpectralSample> out(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i)
    out[i] = {directions[i], 0.0, transform_from_beta(c, directions[i])};
  return out;
}

std::vector<SpectralSample> spectral_samples(const ModalCoefficients& c,
                                             const std::vector<Point>& directions) {
  std::vector<SpectralSample> out(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i)
    out[i] = {directions[i], transform_from_alpha(c, directions[i]),
              transform_from_beta(c, directions[i])};
  return out;
}

std::vector<cplx> fourier_on_circle_direct(const SourceField& src,
                                           const std::vector<Point>& directions) {
  const double k = src.context().kappa();
  std::vector<cplx> out(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const Point xi = scaled(k, directions[i]);
    out[i] = src.integrate([&](const Point& x) { return std::polar(1.0, -dot(xi, x)); });
  }
  return out;
}

std::vector<cplx> laplace_on_circle_direct(const SourceField& src,
                                           const std::vector<Point>& directions) {
  guard_exponent(src.context(), src.support_radius());
  const double k = src.context().kappa();
  std::vector<cplx> out(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const Point s = scaled(k, directions[i]);
    out[i] = src.integrate([&](const Point& x) { return cplx(std::exp(-dot(s, x))); });
  }
  return out;
}

std::vector<cplx> u_hat_from_trace(const WaveContext& ctx, const BoundaryTrace& trace,
                                   const std::vector<Point>& directions) {
  const double k = ctx.kappa(), k2 = k * k;
  const BoundaryGrid& g = trace.grid;
  std::vector<cplx> out(directions.size());
  for (std::size_t j = 0; j < directions.size(); ++j) {
    const Point xi = scaled(k, directions[j]);
    cplx s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const cplx ixn(0.0, dot(xi, g.normals[i]));
      const cplx bracket = trace.dlap_u_dnu[i] - k2 * trace.du_dnu[i] +
                           ixn * (trace.lap_u[i] - k2 * trace.u[i]);
      s += g.weights[i] * bracket * std::polar(1.0, -dot(xi, g.points[i]));
    }
    out[j] = -s;
  }
  return out;
}

std::vector<cplx> v_check_from_trace(const WaveContext& ctx, const BoundaryTrace& trace,
                                     const std::vector<Point>& directions) {
  guard_exponent(ctx, trace.grid.radius);
  const double k = ctx.kappa(), k2 = k * k;
  const BoundaryGrid& g = trace.grid;
  std::vector<cplx> out(directions.size());
  for (std::size_t j = 0; j < directions.size(); ++j) {
    const Point sv = scaled(k, directions[j]);
    cplx s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double sn = dot(sv, g.normals[i]);
      const cplx bracket = trace.dlap_u_dnu[i] + k2 * trace.du_dnu[i] +
                           sn * (trace.lap_u[i] + k2 * trace.u[i]);
      s += g.weights[i] * bracket * std::exp(-dot(sv, g.points[i]));
    }
    out[j] = -s;
  }
  return out;
}

double nullspace_residual(const ExteriorExpansion& expansion, const std::vector<double>& probe_radii,
                          int directions_per_radius) {
  const WaveContext& ctx = expansion.context();
  const ModalCoefficients& c = expansion.coefficients();
  const auto dirs = direction_grid(ctx.dimension(), directions_per_radius);
  const double k = ctx.kappa();
  double worst = 0.0;
  for (double rho : probe_radii) {
    if (!(rho > ctx.radius())) throw PreconditionError("probe radii must exceed R");
    const double z = k * rho;
    for (const Point& d : dirs) {
      const Point x = rho * d;
      cplx jsum = 0.0;
      if (ctx.dimension() == 2) {
        const auto j = specfun::bessel_j_seq(c.N, z);
        const double phi = polar_angle(d);
        for (int n = -c.N; n <= c.N; ++n) {
          const int a = std::abs(n);
          const double jn = (n < 0 && (a & 1)) ? -j[a] : j[a];
          jsum += c.alpha[n + c.N] * jn * std::polar(1.0, n * phi);
        }
        jsum *= 2.0 * kPi;
      } else {
        const auto j = specfun::sph_bessel_j_seq(c.N, z);
        const auto ang = spherical_angles(d);
        const auto y = specfun::sph_harmonics(c.N, ang.theta, ang.phi);
        for (std::size_t s = 0; s < c.size(); ++s) jsum += c.alpha[s] * j[c.degree(s)] * y[s];
        jsum *= 4.0 * kPi;
      }
      // int Phi_M(x, y) f(y) dy = -f_m(x).
      const cplx pm = -expansion.sample(x).f_m;
      worst = std::max(worst, std::abs(jsum) + std::abs(pm));
    }
  }
  return worst;
}

double nullspace_residual(const SourceField& src, const std::vector<double>& probe_radii, int N) {
  return nullspace_residual(ExteriorExpansion::from_source(src, N), probe_radii);
}

double interior_reference(const WaveContext& ctx, const std::vector<double>& probe_radii,
                          double norm_f) {
  // G(x, .) is bounded and smooth on B_R for |x| > R, so a coarse rule is
  // enough for a scale.
  const QuadratureOptions coarse{32, 64, 12, 24};
  const ProductGrid g = product_grid(ctx.dimension(), radial_rule(ctx, coarse.radial_order),
                                     angular_rule(ctx.dimension(), coarse));
  double best = 0.0;
  for (double rho : probe_radii) {
    const Point x{rho, 0.0, 0.0};
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      acc += g.weight(i) * std::norm(green_biharmonic(ctx, x, g.point(i)));
    best = std::max(best, std::sqrt(acc));
  }
  return best * norm_f;
}

namespace {

double modal_residual(const ModalCoefficients& c) {
  double worst = 0.0;
  for (std::size_t s = 0; s < c.size(); ++s)
    worst = std::max(worst, std::abs(c.alpha[s]) + std::abs(c.beta[s]));
  return worst / c.norm_f;
}

}  // namespace

NonradiatingVerdict verdict(const SourceField& src, const VerdictConfig& config) {
  const WaveContext& ctx = src.context();
  if (!(config.tolerance > 0.0)) throw ParameterError("tolerance must be positive");
  NonradiatingVerdict v;
  v.tolerance = config.tolerance;
  v.N = config.truncation < 0 ? default_truncation(ctx) : config.truncation;

  ModalCoefficients coeffs = modal_coefficients(src, v.N);
  v.norm_f = coeffs.norm_f;
  if (v.norm_f == 0.0) {
    v.is_nonradiating = true;
    return v;
  }

  v.residual_modal = modal_residual(coeffs);

  double spec = 0.0;
  for (const auto& s : spectral_samples(coeffs, direction_grid(ctx.dimension(), config.direction_count)))
    spec = std::max(spec, std::abs(s.f_hat) + std::abs(s.f_check));
  v.residual_spectral = spec / v.norm_f;

  std::vector<double> radii;
  for (double f : config.probe_factors) radii.push_back(f * ctx.radius());
  v.interior_scale = interior_reference(ctx, radii, v.norm_f);
  const ExteriorExpansion ext(ctx, coeffs, src.support_radius());
  const auto dirs = direction_grid(ctx.dimension(), config.probe_directions);
  double field = 0.0;
  for (double rho : radii)
    for (const Point& d : dirs) field = std::max(field, std::abs(ext.sample(rho * d).u));
  v.residual_field = field / v.interior_scale;

  const double tol = config.tolerance;
  const double r[3] = {v.residual_modal, v.residual_spectral, v.residual_field};
  const bool any_small = std::any_of(r, r + 3, [&](double x) { return x <= tol; });
  const bool any_large = std::any_of(r, r + 3, [&](double x) { return x > 100.0 * tol; });
  if (any_small && any_large) {
    std::ostringstream msg;
    msg << "residual families disagree (modal " << r[0] << ", spectral " << r[1] << ", field "
        << r[2] << " at tolerance " << tol << "); raise the truncation N = " << v.N;
    throw InconsistencyError(msg.str());
  }
  v.is_nonradiating = std::all_of(r, r + 3, [&](double x) { return x <= tol; });

  if (config.stability_check && v.residual_modal <= tol) {
    const double again = modal_residual(modal_coefficients(src, v.N + 8));
    if (again > tol) {
      std::ostringstream msg;
      msg << "modal residual " << v.residual_modal << " at N = " << v.N << " grows to " << again
          << " at N = " << v.N + 8 << "; the truncation is too low";
      throw InconsistencyError(msg.str());
    }
  }
  return v;
}

}  // namespace bwave
