#include "bwave/fields.hpp"

#include <cmath>
#include <numbers>

#include "bwave/errors.hpp"
#include "bwave/kernels.hpp"
#include "bwave/specfun.hpp"

namespace bwave {

namespace {

constexpr double kPi = std::numbers::pi;

bool usable(cplx coef, cplx basis) {
  return coef != 0.0 && std::isfinite(basis.real()) && std::isfinite(basis.imag());
}

}  // namespace

ExteriorExpansion::ExteriorExpansion(const WaveContext& ctx, ModalCoefficients coeffs,
                                     double support_radius)
    : ctx_(ctx), coeffs_(std::move(coeffs)), support_(support_radius) {
  if (coeffs_.dimension != ctx.dimension())
    throw ParameterError("coefficient dimension does not match the context");
}

ExteriorExpansion ExteriorExpansion::from_source(const SourceField& src, int N) {
  const int n = N < 0 ? default_truncation(src.context()) : N;
  return ExteriorExpansion(src.context(), modal_coefficients(src, n), src.support_radius());
}

ExteriorValues ExteriorExpansion::values(const Point& x) const {
  const double rho = norm(x);
  if (rho < support_ * (1.0 - 1e-12) || rho == 0.0)
    throw PreconditionError("exterior expansion needs |x| >= support radius");
  const double k = ctx_.kappa();
  const double z = k * rho;
  const int N = coeffs_.N;
  const int top = std::max(N, 1);
  cplx fh = 0.0, dfh = 0.0, fm = 0.0, dfm = 0.0;

  if (ctx_.dimension() == 2) {
    const auto h = specfun::hankel1_seq(top, z);
    const auto ks = specfun::bessel_k_scaled_seq(top, z);
    const double e = std::exp(-z);
    const double phi = polar_angle(x);
    for (int n = -N; n <= N; ++n) {
      const int a = std::abs(n);
      const double sg = (n < 0 && (a & 1)) ? -1.0 : 1.0;
      const cplx hn = sg * h[a];
      const cplx dh = sg * (a == 0 ? -h[1] : h[a - 1] - (a / z) * h[a]);
      const double kn = ks[a] * e;
      const double dk = (a == 0 ? -ks[1] : -ks[a - 1] - (a / z) * ks[a]) * e;
      const cplx ph = std::polar(1.0, n * phi);
      const cplx al = coeffs_.alpha[n + N];
      const cplx be = coeffs_.beta_real_phase[n + N];
      if (usable(al, hn) && usable(al, dh)) {
        fh += al * hn * ph;
        dfh += al * k * dh * ph;
      }
      if (usable(be, kn) && usable(be, dk)) {
        fm += be * kn * ph;
        dfm += be * k * dk * ph;
      }
    }
    const cplx c = cplx(0.0, -kPi / 2.0);
    fh *= c;
    dfh *= c;
    fm = -fm;
    dfm = -dfm;
  } else {
    const auto h = specfun::sph_hankel1_seq(top, z);
    const auto ks = specfun::sph_bessel_k_scaled_seq(top, z);
    const double e = std::exp(-z);
    const auto ang = spherical_angles(x);
    const auto y = specfun::sph_harmonics(N, ang.theta, ang.phi);
    for (int n = 0; n <= N; ++n) {
      const cplx hn = h[n];
      const cplx dh = n == 0 ? -h[1] : h[n - 1] - ((n + 1.0) / z) * h[n];
      const double kn = ks[n] * e;
      const double dk = (n == 0 ? -ks[1] : -ks[n - 1] - ((n + 1.0) / z) * ks[n]) * e;
      for (int m = -n; m <= n; ++m) {
        const int s = specfun::sph_index(n, m);
        const cplx al = coeffs_.alpha[s];
        const cplx be = coeffs_.beta_real_phase[s];
        if (usable(al, hn) && usable(al, dh)) {
          fh += al * hn * y[s];
          dfh += al * k * dh * y[s];
        }
        if (usable(be, kn) && usable(be, dk)) {
          fm += be * kn * y[s];
          dfm += be * k * dk * y[s];
        }
      }
    }
    const cplx c = cplx(0.0, -k);
    fh *= c;
    dfh *= c;
    fm *= -k;
    dfm *= -k;
  }

  const double inv = 1.0 / (2.0 * k * k);
  ExteriorValues v;
  v.sample = {x, (fh - fm) * inv, fh, fm};
  v.du_dr = (dfh - dfm) * inv;
  v.lap_u = -0.5 * (fh + fm);
  v.dlap_u_dr = -0.5 * (dfh + dfm);
  return v;
}

FieldSample ExteriorExpansion::sample(const Point& x) const { return values(x).sample; }

FieldSample eval_field(const SourceField& src, const Point& x, FieldPath path, int N) {
  if (src.is_zero()) return {x, 0.0, 0.0, 0.0};
  if (path == FieldPath::Modal) return ExteriorExpansion::from_source(src, N).sample(x);
  const WaveContext& ctx = src.context();
  if (!(norm(x) > src.support_radius()))
    throw PreconditionError("direct field evaluation needs |x| > support radius");
  const cplx fh = -src.integrate([&](const Point& y) { return phi_helmholtz(ctx, x, y); });
  const cplx fm = -src.integrate([&](const Point& y) { return phi_modified(ctx, x, y); });
  const double k = ctx.kappa();
  return {x, (fh - fm) / (2.0 * k * k), fh, fm};
}

BoundaryTrace boundary_trace(const ExteriorExpansion& expansion, const BoundaryGrid& grid) {
  if (grid.dimension != expansion.context().dimension())
    throw ParameterError("grid dimension does not match the context");
  if (grid.radius < expansion.support_radius() * (1.0 - 1e-12))
    throw SupportError("boundary grid lies inside the source support");
  BoundaryTrace t;
  t.grid = grid;
  const std::size_t n = grid.size();
  t.u.resize(n);
  t.du_dnu.resize(n);
  t.lap_u.resize(n);
  t.dlap_u_dnu.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ExteriorValues v = expansion.values(grid.points[i]);
    t.u[i] = v.sample.u;
    t.du_dnu[i] = v.du_dr;
    t.lap_u[i] = v.lap_u;
    t.dlap_u_dnu[i] = v.dlap_u_dr;
  }
  return t;
}

BoundaryTrace boundary_trace(const SourceField& src, const BoundaryGrid& grid, int N) {
  return boundary_trace(ExteriorExpansion::from_source(src, N), grid);
}

FarFieldSample far_field(const ModalCoefficients& coeffs, const Point& direction) {
  return {direction, transform_from_alpha(coeffs, direction)};
}

FarFieldSample far_field(const SourceField& src, const Point& direction, int N) {
  const int n = N < 0 ? default_truncation(src.context()) : N;
  return far_field(modal_coefficients(src, n), direction);
}

cplx far_field_estimate(const WaveContext& ctx, const FieldSample& s) {
  const double r = norm(s.point);
  const double k = ctx.kappa();
  const double spread = ctx.dimension() == 2 ? std::sqrt(kPi * r) : kPi * r;
  const cplx mu = FarFieldConvention::for_context(ctx).mu;
  return -8.0 * k * k * s.u * std::polar(1.0, -k * r) * spread / mu;
}

}  // namespace bwave
