#pragma once

#include "bwave/context.hpp"

namespace bwave {

/// Helmholtz, modified-Helmholtz and biharmonic Green's functions at one
/// point pair.
struct KernelValue {
  cplx phi_h;
  cplx phi_m;
  cplx green;
};

/// 2D: (i/4) H_0^(1)(kappa r). 3D: e^{i kappa r} / (4 pi r).
cplx phi_helmholtz(const WaveContext& ctx, const Point& x, const Point& y);

/// 2D: K_0(kappa r) / (2 pi). 3D: e^{-kappa r} / (4 pi r).
cplx phi_modified(const WaveContext& ctx, const Point& x, const Point& y);

/// G = -(Phi_H - Phi_M) / (2 kappa^2). Bounded at x = y; for
/// kappa |x - y| <= 0.1 the difference is summed as a series so the
/// logarithmic (2D) or 1/r (3D) singularities cancel exactly.
cplx green_biharmonic(const WaveContext& ctx, const Point& x, const Point& y);

/// G* = -(Phi_H* - Phi_M) / (2 kappa^2) with Phi_H* = -(i/4) H_0^(2). 2D only.
cplx green_star(const WaveContext& ctx, const Point& x, const Point& y);

/// Psi = G - G* = -(i / (4 kappa^2)) J_0(kappa |x - y|). 2D only.
cplx psi_kernel(const WaveContext& ctx, const Point& x, const Point& y);

KernelValue kernel_value(const WaveContext& ctx, const Point& x, const Point& y);

/// Default multipole truncation ceil(e kappa |y| / 2) + 16.
int default_multipole_order(const WaveContext& ctx, double y_norm);

/// Truncated addition-theorem expansion of Phi_H, valid for |x| > |y|.
/// 2D sums orders -N..N, 3D degrees 0..N.
cplx phi_h_series(const WaveContext& ctx, const Point& x, const Point& y, int N);

/// Same for Phi_M, through I_n/K_n (2D) or their spherical analogues (3D).
cplx phi_m_series(const WaveContext& ctx, const Point& x, const Point& y, int N);

/// Leading far-field term of G for |x| -> infinity:
/// -(mu_d / (8 kappa^2)) e^{i kappa |x|} / (pi |x|)^{(d-1)/2} e^{-i kappa xhat.y}.
cplx green_far_asymptote(const WaveContext& ctx, const Point& x, const Point& y);

}  // namespace bwave
