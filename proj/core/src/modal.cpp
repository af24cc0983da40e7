#include "bwave/modal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bwave/errors.hpp"
#include "bwave/specfun.hpp"

namespace bwave {

namespace {
// e^t stays finite below this; beyond it the beta weights overflow.
constexpr double kExpLimit = 700.0;
}  // namespace

std::size_t ModalCoefficients::slot(int n, int m) const {
  if (dimension == 2) {
    if (std::abs(n) > N) throw IndexError("order outside the truncation");
    return static_cast<std::size_t>(n + N);
  }
  if (n < 0 || n > N || std::abs(m) > n) throw IndexError("mode outside the truncation");
  return static_cast<std::size_t>(specfun::sph_index(n, m));
}

int ModalCoefficients::degree(std::size_t s) const {
  if (dimension == 2) return static_cast<int>(s) - N;
  return static_cast<int>(std::floor(std::sqrt(static_cast<double>(s))));
}

int ModalCoefficients::order(std::size_t s) const {
  if (dimension == 2) return 0;
  const int n = degree(s);
  return static_cast<int>(s) - n * n - n;
}

int default_truncation(const WaveContext& ctx) {
  return 2 * static_cast<int>(std::ceil(ctx.kappa() * ctx.radius())) + 16;
}

ModalCoefficients modal_coefficients(const SourceField& src, int N) {
  const WaveContext& ctx = src.context();
  const int d = ctx.dimension();
  if (ctx.kappa() * src.support_radius() > kExpLimit) {
    const double thr = specfun::bessel_i_overflow_threshold(0);
    throw OverflowError("kappa * R = " + std::to_string(ctx.kappa() * src.support_radius()) +
                            " exceeds the floating-point range of the beta weights",
                        thr);
  }
  ModalCoefficients c;
  c.dimension = d;
  c.N = N;
  const std::size_t slots = d == 2 ? 2 * N + 1 : (N + 1) * (N + 1);
  c.alpha.assign(slots, 0.0);
  c.beta_real_phase.assign(slots, 0.0);

  const double k = ctx.kappa();
  for (const auto& term : src.mode_tables(N)) {
    const ModeTable& t = term.table;
    std::vector<cplx> a(slots, 0.0), b(slots, 0.0);
    for (std::size_t i = 0; i < t.rule.size(); ++i) {
      const double r = t.rule.nodes[i];
      const double kr = k * r;
      const double e = std::exp(kr);
      if (d == 2) {
        const double w = t.rule.weights[i] * r;
        const auto j = specfun::bessel_j_seq(N, kr);
        const auto is = specfun::bessel_i_scaled_seq(N, kr);
        for (int n = -N; n <= N; ++n) {
          const int an = std::abs(n);
          const double jn = (n < 0 && (an & 1)) ? -j[an] : j[an];
          const cplx f = t.values[n + N][i];
          a[n + N] += w * jn * f;
          b[n + N] += w * is[an] * e * f;
        }
      } else {
        const double w = t.rule.weights[i] * r * r;
        const auto j = specfun::sph_bessel_j_seq(N, kr);
        const auto is = specfun::sph_bessel_i_scaled_seq(N, kr);
        for (int n = 0; n <= N; ++n)
          for (int m = -n; m <= n; ++m) {
            const int s = specfun::sph_index(n, m);
            const cplx f = t.values[s][i];
            a[s] += w * j[n] * f;
            b[s] += w * is[n] * e * f;
          }
      }
    }
    for (std::size_t s = 0; s < slots; ++s) {
      c.alpha[s] += term.coefficient * a[s];
      c.beta_real_phase[s] += term.coefficient * b[s];
    }
  }
  c.beta.resize(slots);
  for (std::size_t s = 0; s < slots; ++s) c.beta[s] = specfun::ipow(c.degree(s)) * c.beta_real_phase[s];
  c.norm_f = src.l2_norm();
  return c;
}

namespace {

cplx synthesize(const ModalCoefficients& c, const std::vector<cplx>& coef, const Point& dir,
                int phase_sign) {
  const double len = norm(dir);
  if (!(std::abs(len - 1.0) < 1e-12)) throw PreconditionError("direction must be a unit vector");
  cplx s = 0.0;
  if (c.dimension == 2) {
    const double phi = polar_angle(dir);
    for (int n = -c.N; n <= c.N; ++n)
      s += specfun::ipow(phase_sign * n) * coef[n + c.N] * std::polar(1.0, n * phi);
    return 2.0 * std::numbers::pi * s;
  }
  const auto a = spherical_angles(dir);
  const auto y = specfun::sph_harmonics(c.N, a.theta, a.phi);
  for (std::size_t k = 0; k < coef.size(); ++k)
    s += specfun::ipow(phase_sign * c.degree(k)) * coef[k] * y[k];
  return 4.0 * std::numbers::pi * s;
}

}  // namespace

cplx transform_from_alpha(const ModalCoefficients& c, const Point& direction) {
  return synthesize(c, c.alpha, direction, -1);
}

cplx transform_from_beta(const ModalCoefficients& c, const Point& direction) {
  return synthesize(c, c.beta, direction, 1);
}

}  // namespace bwave
