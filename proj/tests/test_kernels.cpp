#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <random>

#include "bwave/errors.hpp"
#include "bwave/kernels.hpp"
#include "oracles.hpp"

using namespace bwave;
using oracle::kPi;

namespace {

Point polar_point(double r, double a) { return {r * std::cos(a), r * std::sin(a), 0.0}; }

// Fourth-order-accurate Laplacian by the sixth-order stencil along each axis.
template <class F>
cplx laplacian(F f, const Point& x, double h, int d) {
  cplx s = 0.0;
  for (int a = 0; a < d; ++a)
    s += oracle::second_difference(
        [&](int k) {
          Point p = x;
          p[a] += k * h;
          return f(p);
        },
        h);
  return s;
}

}  // namespace

TEST(PhiHelmholtz, ClosedForms) {
  const WaveContext c3(3, 2.0, 1.0);
  const cplx v = phi_helmholtz(c3, {0, 0, 0}, {1, 0, 0});
  EXPECT_LT(std::abs(v - std::polar(1.0, 2.0) / (4 * kPi)), 1e-16);

  const WaveContext c2(2, 1.0, 1.0);
  const Point x{0.3, -0.2, 0}, y{-0.5, 0.4, 0};
  EXPECT_EQ(phi_helmholtz(c2, x, y), phi_helmholtz(c2, y, x));
  const Point a{0.2, 0.1, 0}, b = a + Point{0.6, 0.8, 0};
  const cplx ref = cplx(0, 0.25) * cplx(oracle::bessel_j(0, 1.0), oracle::bessel_y0(1.0));
  EXPECT_LT(std::abs(phi_helmholtz(c2, a, b) - ref), 1e-15);
  EXPECT_THROW(phi_helmholtz(c2, a, a), PreconditionError);
}

TEST(PhiModified, ClosedForms) {
  const WaveContext c3(3, 1.0, 1.0);
  EXPECT_NEAR(phi_modified(c3, {0, 0, 0}, {0, 1, 0}).real(), std::exp(-1.0) / (4 * kPi), 1e-16);
  const WaveContext c2(2, 1.0, 1.0);
  const cplx v = phi_modified(c2, {0, 0, 0}, {0.6, 0.8, 0});
  EXPECT_EQ(v.imag(), 0.0);
  EXPECT_GT(v.real(), 0.0);
  EXPECT_NEAR(v.real(), oracle::bessel_k0(1.0) / (2 * kPi), 1e-15);
  EXPECT_THROW(phi_modified(c3, {1, 1, 1}, {1, 1, 1}), PreconditionError);
}

TEST(Green, SymmetricAndFiniteAtCoincidence) {
  for (int d : {2, 3}) {
    const WaveContext ctx(d, 1.7, 1.0);
    const Point x{0.1, 0.4, d == 3 ? -0.3 : 0.0}, y{-0.6, 0.2, 0.0};
    EXPECT_EQ(green_biharmonic(ctx, x, y), green_biharmonic(ctx, y, x));
    const cplx g0 = green_biharmonic(ctx, x, x);
    EXPECT_TRUE(std::isfinite(g0.real()) && std::isfinite(g0.imag()));
    // The near-coincidence branch joins the closed form continuously.
    const double r_switch = 0.1 / ctx.kappa();
    const Point below = x + Point{r_switch * (1 - 1e-13), 0, 0};
    const Point above = x + Point{r_switch * (1 + 1e-13), 0, 0};
    EXPECT_LT(std::abs(green_biharmonic(ctx, x, below) - green_biharmonic(ctx, x, above)),
              1e-13 * std::abs(g0));
  }
}

TEST(Green, NearSeriesMatchesExtendedPrecision) {
  // 2D: G = -[(i/4)(J0 + iY0) - K0/(2pi)] / (2 kappa^2), evaluated in Boost long double.
  const WaveContext ctx(2, 1.0, 1.0);
  for (double r : {1e-6, 1e-3, 0.05, 0.0999}) {
    using L = long double;
    const L j0 = boost::math::cyl_bessel_j(0, static_cast<L>(r));
    const L y0 = boost::math::cyl_neumann(0, static_cast<L>(r));
    const L k0 = boost::math::cyl_bessel_k(0, static_cast<L>(r));
    const double re = static_cast<double>((y0 / 4 + k0 / (2 * std::numbers::pi_v<L>)) / 2);
    const double im = static_cast<double>(-j0 / 8);
    const cplx g = green_biharmonic(ctx, {0, 0, 0}, {r, 0, 0});
    EXPECT_LT(std::abs(g - cplx(re, im)), 1e-13) << r;
  }
  // 3D: G = -(e^{ikr} - e^{-kr}) / (8 pi kappa^2 r) in long double.
  const WaveContext c3(3, 1.0, 1.0);
  for (double r : {1e-3, 1e-2, 0.05, 0.0999}) {
    using L = long double;
    const L pi = std::numbers::pi_v<L>;
    const L lr = r;
    const double re = static_cast<double>(-(std::cos(lr) - std::exp(-lr)) / (8 * pi * lr));
    const double im = static_cast<double>(-std::sin(lr) / (8 * pi * lr));
    const cplx g = green_biharmonic(c3, {0, 0, 0}, {0, 0, r});
    EXPECT_LT(std::abs(g - cplx(re, im)), 1e-13) << r;
  }
}

TEST(Green, SatisfiesHomogeneousEquationAwayFromSource) {
  // (Delta^2 - kappa^4) G at |x - y| = 1.3, kappa = 2, via a nested stencil.
  for (int d : {2, 3}) {
    const WaveContext ctx(d, 2.0, 1.0);
    const Point y{0, 0, 0};
    const Point x{1.3 * 0.6, 1.3 * 0.8, 0.0};
    const double h = 1e-2;
    auto g = [&](const Point& p) { return green_biharmonic(ctx, p, y); };
    auto lap = [&](const Point& p) { return laplacian(g, p, h, d); };
    const cplx bih = laplacian(lap, x, h, d);
    const cplx res = bih - std::pow(ctx.kappa(), 4) * g(x);
    EXPECT_LT(std::abs(res), 1e-4) << d;
  }
}

TEST(GreenStar, PsiIdentity) {
  const WaveContext ctx(2, 1.3, 1.0);
  const double k2 = 1.3 * 1.3;
  for (double r : {0.05, 0.5, 2.0, 9.0}) {
    const Point x{0.1, 0.2, 0}, y = x + polar_point(r, 0.7);
    const cplx psi = green_biharmonic(ctx, x, y) - green_star(ctx, x, y);
    const cplx ref = cplx(0, -0.25 / k2) * oracle::bessel_j(0, 1.3 * r);
    EXPECT_LT(std::abs(psi - ref), 1e-12 * std::abs(ref)) << r;
    EXPECT_LT(std::abs(psi_kernel(ctx, x, y) - ref), 1e-14);
    EXPECT_EQ(psi_kernel(ctx, x, y).real(), 0.0);
  }
  EXPECT_EQ(psi_kernel(ctx, {0.3, 0.3, 0}, {0.3, 0.3, 0}), cplx(0, -0.25 / k2));
  EXPECT_THROW(green_star(WaveContext(3, 1, 1), {0, 0, 0}, {1, 0, 0}), PreconditionError);
}

TEST(Psi, SolvesHelmholtz) {
  const WaveContext ctx(2, 2.0, 1.0);
  const Point y{0.1, -0.3, 0}, x{0.9, 0.4, 0};
  const double h = 1e-3;
  auto psi = [&](const Point& p) { return psi_kernel(ctx, p, y); };
  const cplx res = laplacian(psi, x, h, 2) + 4.0 * psi(x);
  EXPECT_LT(std::abs(res), 1e-6);
}

TEST(Multipole, MatchesClosedForm) {
  for (int d : {2, 3}) {
    const WaveContext ctx(d, 2.0, 1.0);
    const Point x{3 * 0.48, 3 * 0.64, d == 3 ? 3 * 0.6 : 0.0};
    const Point y = d == 2 ? polar_point(1.0, 2.2) : Point{0.0, 0.6, -0.8};
    const cplx h = phi_helmholtz(ctx, x, y), m = phi_modified(ctx, x, y);
    EXPECT_LT(std::abs(phi_h_series(ctx, x, y, 40) - h), 1e-10 * std::abs(h)) << d;
    EXPECT_LT(std::abs(phi_m_series(ctx, x, y, 40) - m), 1e-10 * std::abs(m)) << d;
    EXPECT_THROW(phi_h_series(ctx, y, x, 10), PreconditionError);
  }
}

TEST(Multipole, OriginSourceKeepsOnlyMonopole) {
  for (int d : {2, 3}) {
    const WaveContext ctx(d, 1.5, 1.0);
    const Point x{1.1, -0.4, d == 3 ? 0.5 : 0.0};
    const Point o{0, 0, 0};
    EXPECT_LT(std::abs(phi_h_series(ctx, x, o, 0) - phi_helmholtz(ctx, x, o)), 1e-14);
    EXPECT_LT(std::abs(phi_h_series(ctx, x, o, 12) - phi_h_series(ctx, x, o, 0)), 1e-16);
  }
}

TEST(Multipole, GeometricDecayPastOnset) {
  for (int d : {2, 3}) {
    const WaveContext ctx(d, 2.0, 1.0);
    const Point y = d == 2 ? polar_point(1.2, 0.4) : Point{0.0, 0.72, 0.96};
    const Point x = d == 2 ? polar_point(2.0, 2.0) : Point{1.2, -1.6, 0.0};
    const cplx h = phi_helmholtz(ctx, x, y);
    const int onset = static_cast<int>(std::ceil(std::numbers::e * 2.0 * 1.2 / 2.0));
    for (int N = onset + 1; N <= onset + 10; N += 3) {
      const double e0 = std::abs(phi_h_series(ctx, x, y, N) - h);
      const double e5 = std::abs(phi_h_series(ctx, x, y, N + 5) - h);
      if (e0 < 1e-14 * std::abs(h)) break;
      EXPECT_LT(e5 / e0, 0.5) << d << " N=" << N;
    }
    EXPECT_EQ(default_multipole_order(ctx, 1.2), onset + 16);
  }
}

TEST(KernelValue, Decomposition) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int d : {2, 3}) {
    const WaveContext ctx(d, 2.3, 1.0);
    for (int i = 0; i < 200; ++i) {
      const Point x{u(rng), u(rng), d == 3 ? u(rng) : 0.0};
      const Point y{3 * u(rng), 3 * u(rng), d == 3 ? 3 * u(rng) : 0.0};
      if (norm(x - y) < 0.05) continue;
      const KernelValue k = kernel_value(ctx, x, y);
      EXPECT_LT(std::abs(k.green + (k.phi_h - k.phi_m) / (2 * 2.3 * 2.3)),
                1e-13 * std::abs(k.green) + 1e-300);
    }
  }
}

TEST(FarAsymptote, LinearErrorDecay) {
  for (int d : {2, 3}) {
    const WaveContext ctx(d, 2.0, 1.0);
    const Point y{0.3, -0.2, d == 3 ? 0.4 : 0.0};
    const Point dir = d == 2 ? Point{0.6, 0.8, 0} : Point{0.48, 0.64, 0.6};
    double prev = 0;
    for (double r : {1e3, 2e3, 4e3}) {
      const Point x = r * dir;
      const cplx g = green_biharmonic(ctx, x, y), a = green_far_asymptote(ctx, x, y);
      const double err = std::abs(g - a) / std::abs(a);
      EXPECT_LT(err, 1e-2);
      if (prev > 0) EXPECT_NEAR(err / prev, 0.5, 0.05) << d << " r=" << r;
      prev = err;
    }
  }
}
