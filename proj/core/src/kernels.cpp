#include "bwave/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bwave/errors.hpp"
#include "bwave/specfun.hpp"

namespace bwave {

namespace {

constexpr double kPi = std::numbers::pi;
// Below this value of kappa |x - y| the kernel difference uses its series.
constexpr double kNearSeries = 0.1;

double separation(const Point& x, const Point& y) {
  const double r = norm(x - y);
  return r;
}

void require_distinct(double r, const char* what) {
  if (r == 0.0) throw PreconditionError(std::string(what) + ": coincident points x = y");
}

void require_2d(const WaveContext& ctx, const char* what) {
  if (ctx.dimension() != 2) throw PreconditionError(std::string(what) + " is defined in 2D only");
}

// Phi_H - Phi_M for kappa r <= kNearSeries, without the singular parts.
cplx difference_series(const WaveContext& ctx, double r) {
  const double z = ctx.kappa() * r;
  if (ctx.dimension() == 2) {
    const double q = 0.25 * z * z;
    const double lg = z > 0.0 ? std::log(0.5 * z) + std::numbers::egamma : 0.0;
    double term = 1.0, harm = 0.0, odd = 0.0;
    for (int k = 1; k < 14; ++k) {
      term *= q / (static_cast<double>(k) * k);
      harm += 1.0 / k;
      if (k & 1) odd += (lg - harm) * term;
    }
    // z log z -> 0, so the z = 0 limit drops the logarithm.
    if (z == 0.0) odd = 0.0;
    return cplx(odd / kPi, 0.25 * specfun::bessel_j(0, z));
  }
  // (e^{iz} - e^{-z}) / z = sum_{k>=1} (i^k - (-1)^k) z^{k-1} / k!.
  cplx sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 24; ++k) {
    term /= k;
    sum += (specfun::ipow(k) - ((k & 1) ? -1.0 : 1.0)) * term;
    term *= z;
  }
  return sum * ctx.kappa() / (4.0 * kPi);
}

}  // namespace

cplx phi_helmholtz(const WaveContext& ctx, const Point& x, const Point& y) {
  const double r = separation(x, y);
  require_distinct(r, "phi_helmholtz");
  if (ctx.dimension() == 2) return cplx(0.0, 0.25) * specfun::hankel1(0, ctx.kappa() * r);
  return std::polar(1.0 / (4.0 * kPi * r), ctx.kappa() * r);
}

cplx phi_modified(const WaveContext& ctx, const Point& x, const Point& y) {
  const double r = separation(x, y);
  require_distinct(r, "phi_modified");
  if (ctx.dimension() == 2) return specfun::bessel_k(0, ctx.kappa() * r) / (2.0 * kPi);
  return std::exp(-ctx.kappa() * r) / (4.0 * kPi * r);
}

cplx green_biharmonic(const WaveContext& ctx, const Point& x, const Point& y) {
  const double r = separation(x, y);
  const double k2 = ctx.kappa() * ctx.kappa();
  if (ctx.kappa() * r <= kNearSeries) return -difference_series(ctx, r) / (2.0 * k2);
  return -(phi_helmholtz(ctx, x, y) - phi_modified(ctx, x, y)) / (2.0 * k2);
}

cplx green_star(const WaveContext& ctx, const Point& x, const Point& y) {
  require_2d(ctx, "green_star");
  const double r = separation(x, y);
  const double k2 = ctx.kappa() * ctx.kappa();
  if (ctx.kappa() * r <= kNearSeries) {
    // Phi_H* - Phi_M differs from Phi_H - Phi_M only in the sign of the
    // (i/4) J_0 part.
    const cplx d = difference_series(ctx, r);
    return -cplx(d.real(), -d.imag()) / (2.0 * k2);
  }
  const cplx phs = cplx(0.0, -0.25) * specfun::hankel2(0, ctx.kappa() * r);
  return -(phs - phi_modified(ctx, x, y)) / (2.0 * k2);
}

cplx psi_kernel(const WaveContext& ctx, const Point& x, const Point& y) {
  require_2d(ctx, "psi_kernel");
  const double k2 = ctx.kappa() * ctx.kappa();
  return cplx(0.0, -0.25 / k2) * specfun::bessel_j(0, ctx.kappa() * separation(x, y));
}

KernelValue kernel_value(const WaveContext& ctx, const Point& x, const Point& y) {
  KernelValue v;
  v.phi_h = phi_helmholtz(ctx, x, y);
  v.phi_m = phi_modified(ctx, x, y);
  v.green = -(v.phi_h - v.phi_m) / (2.0 * ctx.kappa() * ctx.kappa());
  return v;
}

int default_multipole_order(const WaveContext& ctx, double y_norm) {
  return static_cast<int>(std::ceil(std::numbers::e * ctx.kappa() * y_norm / 2.0)) + 16;
}

namespace {

void require_ordered(const Point& x, const Point& y) {
  if (!(norm(x) > norm(y)))
    throw PreconditionError("addition theorem needs |x| > |y|");
}

}  // namespace

cplx phi_h_series(const WaveContext& ctx, const Point& x, const Point& y, int N) {
  require_ordered(x, y);
  const double k = ctx.kappa();
  const double rx = norm(x), ry = norm(y);
  if (ctx.dimension() == 2) {
    const auto h = specfun::hankel1_seq(N, k * rx);
    const auto j = specfun::bessel_j_seq(N, k * ry);
    const double d = polar_angle(x) - polar_angle(y);
    cplx sum = h[0] * j[0];
    for (int n = 1; n <= N; ++n) sum += 2.0 * h[n] * j[n] * std::cos(n * d);
    return cplx(0.0, 0.25) * sum;
  }
  const auto h = specfun::sph_hankel1_seq(N, k * rx);
  const auto j = specfun::sph_bessel_j_seq(N, k * ry);
  const auto ax = spherical_angles(x), ay = spherical_angles(y);
  const auto yx = specfun::sph_harmonics(N, ax.theta, ax.phi);
  const auto yy = specfun::sph_harmonics(N, ay.theta, ay.phi);
  cplx sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    cplx s = 0.0;
    for (int m = -n; m <= n; ++m) s += yx[specfun::sph_index(n, m)] * std::conj(yy[specfun::sph_index(n, m)]);
    sum += h[n] * j[n] * s;
  }
  return cplx(0.0, k) * sum;
}

cplx phi_m_series(const WaveContext& ctx, const Point& x, const Point& y, int N) {
  require_ordered(x, y);
  const double k = ctx.kappa();
  const double rx = norm(x), ry = norm(y);
  const double damp = std::exp(k * (ry - rx));
  if (ctx.dimension() == 2) {
    const auto kk = specfun::bessel_k_scaled_seq(N, k * rx);
    const auto ii = specfun::bessel_i_scaled_seq(N, k * ry);
    const double d = polar_angle(x) - polar_angle(y);
    double sum = kk[0] * ii[0];
    for (int n = 1; n <= N; ++n) {
      const double t = kk[n] * ii[n];
      if (!std::isfinite(t)) break;
      sum += 2.0 * t * std::cos(n * d);
    }
    return damp * sum / (2.0 * kPi);
  }
  const auto kk = specfun::sph_bessel_k_scaled_seq(N, k * rx);
  const auto ii = specfun::sph_bessel_i_scaled_seq(N, k * ry);
  const auto ax = spherical_angles(x), ay = spherical_angles(y);
  const auto yx = specfun::sph_harmonics(N, ax.theta, ax.phi);
  const auto yy = specfun::sph_harmonics(N, ay.theta, ay.phi);
  cplx sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    const double t = kk[n] * ii[n];
    if (!std::isfinite(t)) break;
    cplx s = 0.0;
    for (int m = -n; m <= n; ++m) s += yx[specfun::sph_index(n, m)] * std::conj(yy[specfun::sph_index(n, m)]);
    sum += t * s;
  }
  return k * damp * sum;
}

cplx green_far_asymptote(const WaveContext& ctx, const Point& x, const Point& y) {
  const double rx = norm(x);
  if (rx == 0.0) throw PreconditionError("green_far_asymptote: x must be nonzero");
  const Point xhat = (1.0 / rx) * x;
  const double k = ctx.kappa();
  const cplx mu = FarFieldConvention::for_context(ctx).mu;
  const double spread = ctx.dimension() == 2 ? std::sqrt(kPi * rx) : kPi * rx;
  return -(mu / (8.0 * k * k)) * std::polar(1.0, k * rx - k * dot(xhat, y)) / spread;
}

}  // namespace bwave
